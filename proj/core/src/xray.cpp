#include "momray/xray.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "momray/errors.hpp"
#include "momray/quadrature.hpp"

namespace momray {

namespace {

const Complex kImag(0.0, 1.0);

/// Moments G_e = int u^e exp(-alpha u^2) du, e = 0..e_max.
std::vector<double> gaussian_moments(double alpha, int e_max) {
    std::vector<double> g(static_cast<std::size_t>(e_max) + 1, 0.0);
    g[0] = std::sqrt(M_PI / alpha);
    if (e_max >= 2)
        for (int e = 2; e <= e_max; e += 2) g[static_cast<std::size_t>(e)] = g[static_cast<std::size_t>(e - 2)] * (e - 1) / (2.0 * alpha);
    return g;
}

/// int t^j exp(-alpha (t - t0)^2) dt for j = 0..j_max via the shift t = t0 + u.
std::vector<double> shifted_power_moments(double alpha, double t0, int j_max) {
    const std::vector<double> g = gaussian_moments(alpha, j_max);
    std::vector<double> m(static_cast<std::size_t>(j_max) + 1, 0.0);
    for (int j = 0; j <= j_max; ++j) {
        double acc = 0.0;
        for (int e = 0; e <= j; e += 2) {
            double t0pow = 1.0;
            for (int r = 0; r < j - e; ++r) t0pow *= t0;
            acc += binomial(j, e) * t0pow * g[static_cast<std::size_t>(e)];
        }
        m[static_cast<std::size_t>(j)] = acc;
    }
    return m;
}

Complex analytic_moment(const Phantom& f, int k, const FreeLinePoint& pt) {
    Complex acc(0.0, 0.0);
    const double xi_sq = norm_sq(pt.xi);
    const auto& indices = f.component_indices();
    for (const auto& lump : f.lumps()) {
        const Vec3 u0 = pt.x - lump.center;
        const double alpha = lump.width * xi_sq;
        const double proj = dot(u0, pt.xi);
        const double t0 = -proj / xi_sq;
        const double dist_sq = norm_sq(u0) - proj * proj / xi_sq;
        const double envelope = std::exp(-lump.width * dist_sq);
        if (envelope == 0.0) continue;

        // scalarize <f, xi^m> along the line before integrating
        std::vector<Complex> tpoly{Complex(0.0, 0.0)};
        for (std::size_t c = 0; c < indices.size(); ++c) {
            double w = static_cast<double>(index_multiplicity(indices[c]));
            for (int ax : indices[c]) w *= pt.xi[ax];
            if (w == 0.0) continue;
            const auto coeffs = lump.comp_polys[c].restrict_to_line(u0, pt.xi);
            if (coeffs.size() > tpoly.size()) tpoly.resize(coeffs.size(), Complex(0.0, 0.0));
            for (std::size_t j = 0; j < coeffs.size(); ++j) tpoly[j] += w * coeffs[j];
        }

        const int j_max = k + static_cast<int>(tpoly.size()) - 1;
        const auto moments = shifted_power_moments(alpha, t0, j_max);
        Complex lump_acc(0.0, 0.0);
        for (std::size_t j = 0; j < tpoly.size(); ++j)
            lump_acc += tpoly[j] * moments[static_cast<std::size_t>(k) + j];
        acc += envelope * lump_acc;
    }
    return acc;
}

Complex quadrature_moment(const Phantom& f, int k, const FreeLinePoint& pt) {
    if (f.lumps().empty()) return Complex(0.0, 0.0);
    const double xi_sq = norm_sq(pt.xi);
    double half_width = 0.0;
    for (const auto& lump : f.lumps()) {
        const Vec3 u0 = pt.x - lump.center;
        const double t0 = -dot(u0, pt.xi) / xi_sq;
        half_width = std::max(half_width, std::abs(t0) + 6.5 / std::sqrt(lump.width * xi_sq));
    }

    auto integrate = [&](int nodes) {
        const GaussLegendre& rule = gauss_legendre(nodes);
        Complex acc(0.0, 0.0);
        for (int i = 0; i < nodes; ++i) {
            const double t = half_width * rule.nodes[static_cast<std::size_t>(i)];
            double tk = 1.0;
            for (int j = 0; j < k; ++j) tk *= t;
            acc += rule.weights[static_cast<std::size_t>(i)] * tk *
                   f.eval_contract(pt.x + t * pt.xi, pt.xi);
        }
        return half_width * acc;
    };

    constexpr double kTol = 1e-10;
    constexpr int kMaxNodes = 4097;
    int nodes = 129;
    Complex prev = integrate(nodes);
    while (nodes < kMaxNodes) {
        nodes = 2 * nodes - 1;
        const Complex cur = integrate(nodes);
        if (std::abs(cur - prev) < kTol) return cur;
        prev = cur;
    }
    std::ostringstream msg;
    msg << "quadrature_moment: no convergence at " << kMaxNodes << " nodes, k=" << k
        << ", half_width=" << half_width << ", last value=" << std::abs(prev);
    throw NumericalError(msg.str());
}

} // namespace

Complex moment_transform_J(const Phantom& f, int k, const FreeLinePoint& pt, TransformMode mode) {
    if (k < 0) throw std::invalid_argument("moment_transform_J: k must be >= 0");
    return mode == TransformMode::analytic ? analytic_moment(f, k, pt) : quadrature_moment(f, k, pt);
}

Complex moment_transform_I(const Phantom& f, int k, const LinePoint& pt, TransformMode mode) {
    return moment_transform_J(f, k, FreeLinePoint(pt), mode);
}

SinogramGrid forward_sinogram(const Phantom& f, int k, const GridSpec& grid, TransformMode mode) {
    if (f.dim() != 2) throw std::invalid_argument("forward_sinogram: phantom must be 2-D");
    SinogramGrid out(grid);
    for (int it = 0; it < grid.theta_count; ++it) {
        const double theta = grid.theta(it);
        for (int ip = 0; ip < grid.p_count; ++ip)
            out.at(it, ip) = moment_transform_I(f, k, line_from_chart(grid.p(ip), theta), mode);
    }
    return out;
}

std::vector<SinogramGrid> forward_sinograms(const Phantom& f, int k_max, const GridSpec& grid,
                                            TransformMode mode) {
    std::vector<SinogramGrid> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) out.push_back(forward_sinogram(f, k, grid, mode));
    return out;
}

Complex j_from_i(std::span<const Complex> i_values, const FreeLinePoint& pt, int k, int m) {
    if (k < 0) throw std::invalid_argument("j_from_i: k must be >= 0");
    if (static_cast<int>(i_values.size()) < k + 1)
        throw std::invalid_argument("j_from_i: need momenta 0..k");
    const double xi_norm = norm(pt.xi);
    const double proj = dot(pt.xi, pt.x);
    Complex acc(0.0, 0.0);
    for (int l = 0; l <= k; ++l) {
        double w = binomial(k, l) * ((k - l) % 2 == 0 ? 1.0 : -1.0);
        for (int r = 0; r < l; ++r) w *= xi_norm;
        for (int r = 0; r < k - l; ++r) w *= proj;
        acc += w * i_values[static_cast<std::size_t>(l)];
    }
    return std::pow(xi_norm, m - 2 * k - 1) * acc;
}

double check_homogeneity(const Phantom& f, int k, const FreeLinePoint& pt, double t) {
    if (t == 0.0) throw std::invalid_argument("check_homogeneity: t must be nonzero");
    const Complex lhs = moment_transform_J(f, k, FreeLinePoint(pt.x, t * pt.xi));
    double factor = 1.0 / std::abs(t);
    const int e = f.rank() - k;
    for (int r = 0; r < std::abs(e); ++r) factor = e > 0 ? factor * t : factor / t;
    const Complex rhs = factor * moment_transform_J(f, k, pt);
    return std::abs(lhs - rhs);
}

double check_shift_law(const Phantom& f, int k, const FreeLinePoint& pt, double t) {
    const Complex lhs = moment_transform_J(f, k, FreeLinePoint(pt.x + t * pt.xi, pt.xi));
    Complex rhs(0.0, 0.0);
    for (int l = 0; l <= k; ++l) {
        double w = binomial(k, l);
        for (int r = 0; r < k - l; ++r) w *= -t;
        rhs += w * moment_transform_J(f, l, pt);
    }
    return std::abs(lhs - rhs);
}

double check_origin_shift(const Phantom& f, const Vec3& a, int k, const LinePoint& pt) {
    const Complex lhs = moment_transform_I(f.shifted(a), k, pt);
    const double proj = dot(a, pt.xi);
    const Vec3 x_new = pt.x + a - proj * pt.xi;
    Complex rhs(0.0, 0.0);
    for (int l = 0; l <= k; ++l) {
        double w = binomial(k, l) * ((k - l) % 2 == 0 ? 1.0 : -1.0);
        for (int r = 0; r < k - l; ++r) w *= proj;
        rhs += w * moment_transform_I(f, l, LinePoint(x_new, pt.xi));
    }
    return std::abs(lhs - rhs);
}

double fourier_slice_check(const Phantom& f, int k, const Vec3& y, const Vec3& xi, int p_samples) {
    if (std::abs(norm(xi) - 1.0) > 1e-10)
        throw std::invalid_argument("fourier_slice_check: |xi| must be 1");
    if (std::abs(dot(y, xi)) > 1e-10)
        throw std::invalid_argument("fourier_slice_check: <y, xi> must vanish");

    double reach = 1.0;
    for (const auto& lump : f.lumps())
        reach = std::max(reach, norm(lump.center) + 7.0 / std::sqrt(lump.width));

    Complex lhs(0.0, 0.0);
    if (f.dim() == 2) {
        const Vec3 eta{-xi.y, xi.x, 0.0};
        const double q = dot(y, eta);
        const double h = 2.0 * reach / p_samples;
        for (int i = 0; i < p_samples; ++i) {
            const double p = -reach + (i + 0.5) * h;
            lhs += std::polar(1.0, -q * p) * moment_transform_I(f, k, LinePoint(p * eta, xi));
        }
        lhs *= h / std::sqrt(2.0 * M_PI);
    } else {
        // orthonormal basis of the plane xi-perp
        Vec3 e1 = std::abs(xi.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
        e1 = e1 - dot(e1, xi) * xi;
        e1 = (1.0 / norm(e1)) * e1;
        const Vec3 e2{xi.y * e1.z - xi.z * e1.y, xi.z * e1.x - xi.x * e1.z,
                      xi.x * e1.y - xi.y * e1.x};
        const double q1 = dot(y, e1), q2 = dot(y, e2);
        const int n = p_samples;
        const double h = 2.0 * reach / n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double s = -reach + (i + 0.5) * h;
                const double u = -reach + (j + 0.5) * h;
                const Vec3 x = s * e1 + u * e2;
                lhs += std::polar(1.0, -(q1 * s + q2 * u)) * moment_transform_I(f, k, LinePoint(x, xi));
            }
        lhs *= h * h / (2.0 * M_PI);
    }

    Complex ipow(1.0, 0.0);
    for (int j = 0; j < k; ++j) ipow *= kImag;
    const Complex rhs =
        std::sqrt(2.0 * M_PI) * ipow * f.fourier_dir_derivative(y, xi, k).contract_pow(xi);
    return std::abs(lhs - rhs);
}

} // namespace momray
