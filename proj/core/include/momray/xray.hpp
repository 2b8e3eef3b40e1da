#pragma once

#include <complex>
#include <span>
#include <vector>

#include "momray/geometry.hpp"
#include "momray/phantom.hpp"
#include "momray/sinogram.hpp"

namespace momray {

enum class TransformMode { analytic, quadrature };

/// Momentum ray transform int t^k <f(x + t xi), xi^m> dt for any nonzero
/// direction. Analytic mode integrates the Gaussian moments in closed form;
/// quadrature mode uses adaptive Gauss-Legendre on a certified truncation
/// interval. Both agree to 1e-8 on Schwartz-class phantoms.
Complex moment_transform_J(const Phantom& f, int k, const FreeLinePoint& pt,
                           TransformMode mode = TransformMode::analytic);

/// Restriction of the momentum transform to unit, orthogonal line data.
Complex moment_transform_I(const Phantom& f, int k, const LinePoint& pt,
                           TransformMode mode = TransformMode::analytic);

/// Sinogram of I^k f on the (p, theta) chart; requires dim == 2.
SinogramGrid forward_sinogram(const Phantom& f, int k, const GridSpec& grid,
                              TransformMode mode = TransformMode::analytic);

/// Sinograms (I^0 f, ..., I^kmax f).
std::vector<SinogramGrid> forward_sinograms(const Phantom& f, int k_max, const GridSpec& grid,
                                            TransformMode mode = TransformMode::analytic);

/// Rebuild J^k f(x, xi) from the values (I^0 f, ..., I^k f) taken at the
/// projected point (x - <xi,x> xi / |xi|^2, xi / |xi|).
Complex j_from_i(std::span<const Complex> i_values, const FreeLinePoint& pt, int k, int m);

/// Residual |J^k f(x, t xi) - t^{m-k} / |t| * J^k f(x, xi)|.
double check_homogeneity(const Phantom& f, int k, const FreeLinePoint& pt, double t);

/// Residual of J^k f(x + t xi, xi) = sum_l C(k,l) (-t)^{k-l} J^l f(x, xi).
double check_shift_law(const Phantom& f, int k, const FreeLinePoint& pt, double t);

/// Residual of the origin-shift law relating I^k of f(. + a) to the momenta
/// of f at the shifted-projected line point.
double check_origin_shift(const Phantom& f, const Vec3& a, int k, const LinePoint& pt);

/// Residual of the projection-slice relation: the Fourier transform of
/// I^k f(., xi) over xi-perp at y against (2 pi)^{1/2} i^k <xi, d/dy>^k of
/// the phantom spectrum contracted with xi^m. Requires <y, xi> = 0, |xi| = 1.
double fourier_slice_check(const Phantom& f, int k, const Vec3& y, const Vec3& xi,
                           int p_samples = 1024);

} // namespace momray
