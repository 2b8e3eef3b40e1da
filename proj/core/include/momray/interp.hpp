#pragma once

#include <cstdint>

#include "momray/sinogram.hpp"

namespace momray {

/// Catmull-Rom value at fraction s in [0, 1] between f1 and f2.
inline Complex catmull_rom(Complex f0, Complex f1, Complex f2, Complex f3, double s) {
    const Complex a = 2.0 * f1;
    const Complex b = f2 - f0;
    const Complex c = 2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3;
    const Complex d = -f0 + 3.0 * f1 - 3.0 * f2 + f3;
    return 0.5 * (a + s * (b + s * (c + s * d)));
}

/// Cubic interpolation of one theta row in p. Points beyond the sampled
/// interval evaluate to zero; when `clamped` is set it counts them.
Complex interp_p(const SinogramGrid& g, int it, double p, std::int64_t* clamped = nullptr);

/// Bicubic interpolation, periodic in theta, zero beyond the p range.
Complex interp_p_theta(const SinogramGrid& g, double p, double theta,
                       std::int64_t* clamped = nullptr);

} // namespace momray
