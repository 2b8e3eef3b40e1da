#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "momray/tensor.hpp"

namespace momray {

/// Sampling of the (p, theta) chart on TS^1: p uniform on [-p_max, p_max)
/// with a power-of-two count, theta uniform on [0, 2 pi).
struct GridSpec {
    int p_count = 1024;
    double p_max = 12.0;
    int theta_count = 256;

    void validate() const;
    double dp() const { return 2.0 * p_max / p_count; }
    double dtheta() const;
    double p(int ip) const { return -p_max + ip * dp(); }
    double theta(int it) const;
    bool operator==(const GridSpec&) const = default;
};

/// Complex samples on a GridSpec, theta-major.
struct SinogramGrid {
    GridSpec spec;
    std::vector<Complex> v;

    SinogramGrid() = default;
    explicit SinogramGrid(const GridSpec& s);

    Complex& at(int it, int ip) { return v[static_cast<std::size_t>(it) * spec.p_count + ip]; }
    Complex at(int it, int ip) const { return v[static_cast<std::size_t>(it) * spec.p_count + ip]; }
};

/// Fourier coefficients in p per theta row. Bin r carries the physical
/// frequency q(r) = (pi / p_max) * (r < N/2 ? r : r - N), the discretization
/// of qhat(q, t) = (2 pi)^{-1/2} int e^{-iqp} phi(p, t) dp.
struct SpectralSinogram {
    GridSpec spec;
    std::vector<Complex> c;

    Complex& at(int it, int ir) { return c[static_cast<std::size_t>(it) * spec.p_count + ir]; }
    Complex at(int it, int ir) const { return c[static_cast<std::size_t>(it) * spec.p_count + ir]; }
    double dq() const { return M_PI / spec.p_max; }
    double q(int ir) const {
        const int n = spec.p_count;
        return dq() * (ir < n / 2 ? ir : ir - n);
    }
};

SpectralSinogram fft_p(const SinogramGrid& g);
SinogramGrid ifft_p(const SpectralSinogram& s);

/// Spectral derivative in p (multiplier i q).
SinogramGrid d_p(const SinogramGrid& g);
/// Spectral derivative in theta (periodic; Nyquist bin annihilated).
SinogramGrid d_theta(const SinogramGrid& g);
/// Hilbert transform in p: multiplier sgn(q) with sgn(0) = 0.
SinogramGrid hilbert_p(const SinogramGrid& g);

/// Intrinsic vector field X_i (i in {1, 2}); X_1 = -sin t d/dp, X_2 = cos t d/dp.
SinogramGrid field_X(const SinogramGrid& g, int i);
/// Intrinsic vector field Xi_i; Xi_1 = -sin t d/dtheta, Xi_2 = cos t d/dtheta.
SinogramGrid field_Xi(const SinogramGrid& g, int i);

/// Pointwise multiplication by p.
SinogramGrid mul_p(const SinogramGrid& g);
/// Pointwise multiplication by xi_i(theta) = (cos t, sin t)_i.
SinogramGrid mul_xi(const SinogramGrid& g, int i);
/// Pointwise multiplication by x_i = p * (-sin t, cos t)_i.
SinogramGrid mul_x(const SinogramGrid& g, int i);

SinogramGrid add(const SinogramGrid& a, const SinogramGrid& b);
SinogramGrid sub(const SinogramGrid& a, const SinogramGrid& b);
SinogramGrid scale(const SinogramGrid& g, Complex s);

double max_abs(const SinogramGrid& g);
double max_abs_diff(const SinogramGrid& a, const SinogramGrid& b);

/// First order operator Z via its chart form H d/dtheta.
SinogramGrid z_op(const SinogramGrid& g);
/// Z via the spectral-side contraction (y^i/|y|) Xi_i phihat; the q = 0
/// mode is annihilated. Agrees with z_op off that mode.
SinogramGrid z_op_spectral_route(const SinogramGrid& g);
/// Max abs difference between the two Z routes, excluding the q = 0 mode.
double z_route_equivalence(const SinogramGrid& g);

/// Labeled max-abs residuals of an operator identity suite.
struct ResidualReport {
    std::vector<std::pair<std::string, double>> entries;
    double max() const;
};

/// Commutator identities of the intrinsic fields: [X_i, X_j] = 0,
/// [Xi_i, Xi_j] = x_i X_j - x_j X_i + xi_i Xi_j - xi_j Xi_i,
/// [X_i, Xi_j] = xi_i X_j, evaluated in the chart.
ResidualReport commutator_residuals(const SinogramGrid& g);

/// Commutation of the p-Fourier transform with the intrinsic operators:
/// (X_i phi)^ = i y_i phihat, (Xi_i phi)^ = Xi_i phihat, (x_i phi)^ = i X_i phihat.
ResidualReport fourier_commutation_residuals(const SinogramGrid& g);

/// Max over theta rows of | ||phi||_p^2 - ||phihat||_q^2 |.
double parseval_residual(const SinogramGrid& g);

} // namespace momray
