#include "momray/sinogram.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "momray/fft.hpp"

namespace momray {

namespace {

const Complex kImag(0.0, 1.0);

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// eta(theta) = (-sin t, cos t); the chart base point is x = p * eta and the
/// intrinsic fields are X_i = eta_i d/dp, Xi_i = eta_i d/dtheta.
double eta_i(double theta, int i) {
    if (i == 1) return -std::sin(theta);
    if (i == 2) return std::cos(theta);
    throw std::invalid_argument("field index must be 1 or 2");
}

double xi_i(double theta, int i) {
    if (i == 1) return std::cos(theta);
    if (i == 2) return std::sin(theta);
    throw std::invalid_argument("field index must be 1 or 2");
}

/// Periodic spectral derivative along the theta axis of theta-major data.
/// The Nyquist bin (even counts) is annihilated.
void theta_derivative_inplace(std::vector<Complex>& data, int theta_count, int cols) {
    Fft1d fft(theta_count);
    std::vector<Complex> col(static_cast<std::size_t>(theta_count));
    for (int ic = 0; ic < cols; ++ic) {
        for (int it = 0; it < theta_count; ++it)
            col[static_cast<std::size_t>(it)] = data[static_cast<std::size_t>(it) * cols + ic];
        fft.forward(col);
        for (int r = 0; r < theta_count; ++r) {
            int l = r <= theta_count / 2 ? r : r - theta_count;
            if (2 * r == theta_count) l = 0;
            col[static_cast<std::size_t>(r)] *= kImag * static_cast<double>(l);
        }
        fft.backward(col);
        const double inv = 1.0 / theta_count;
        for (int it = 0; it < theta_count; ++it)
            data[static_cast<std::size_t>(it) * cols + ic] = col[static_cast<std::size_t>(it)] * inv;
    }
}

SinogramGrid p_multiplier(const SinogramGrid& g, const std::function<Complex(double)>& mult) {
    SpectralSinogram s = fft_p(g);
    for (int it = 0; it < s.spec.theta_count; ++it)
        for (int ir = 0; ir < s.spec.p_count; ++ir) s.at(it, ir) *= mult(s.q(ir));
    return ifft_p(s);
}

SinogramGrid pointwise_theta(const SinogramGrid& g, const std::function<double(double)>& w) {
    SinogramGrid out = g;
    for (int it = 0; it < g.spec.theta_count; ++it) {
        const double wt = w(g.spec.theta(it));
        for (int ip = 0; ip < g.spec.p_count; ++ip) out.at(it, ip) *= wt;
    }
    return out;
}

} // namespace

void GridSpec::validate() const {
    if (!is_pow2(p_count) || p_count < 64)
        throw std::invalid_argument("GridSpec: p_count must be a power of two >= 64");
    if (!(p_max > 0.0)) throw std::invalid_argument("GridSpec: p_max must be positive");
    if (theta_count < 4) throw std::invalid_argument("GridSpec: theta_count must be >= 4");
}

double GridSpec::dtheta() const { return 2.0 * M_PI / theta_count; }
double GridSpec::theta(int it) const { return it * dtheta(); }

SinogramGrid::SinogramGrid(const GridSpec& s) : spec(s) {
    spec.validate();
    v.assign(static_cast<std::size_t>(spec.p_count) * spec.theta_count, Complex(0.0, 0.0));
}

SpectralSinogram fft_p(const SinogramGrid& g) {
    g.spec.validate();
    SpectralSinogram out;
    out.spec = g.spec;
    out.c.assign(g.v.size(), Complex(0.0, 0.0));
    const int n = g.spec.p_count;
    const double dp = g.spec.dp();
    const double scale = dp / std::sqrt(2.0 * M_PI);
    Fft1d fft(n);
    std::vector<Complex> row(static_cast<std::size_t>(n));
    for (int it = 0; it < g.spec.theta_count; ++it) {
        for (int ip = 0; ip < n; ++ip) row[static_cast<std::size_t>(ip)] = g.at(it, ip);
        fft.forward(row);
        for (int ir = 0; ir < n; ++ir) {
            // phase restores the p = -p_max grid origin
            const double q = out.q(ir);
            out.at(it, ir) = scale * std::polar(1.0, q * g.spec.p_max) * row[static_cast<std::size_t>(ir)];
        }
    }
    return out;
}

SinogramGrid ifft_p(const SpectralSinogram& s) {
    SinogramGrid out(s.spec);
    const int n = s.spec.p_count;
    const double dp = s.spec.dp();
    const double scale = std::sqrt(2.0 * M_PI) / dp;
    Fft1d fft(n);
    std::vector<Complex> row(static_cast<std::size_t>(n));
    for (int it = 0; it < s.spec.theta_count; ++it) {
        for (int ir = 0; ir < n; ++ir) {
            const double q = s.q(ir);
            row[static_cast<std::size_t>(ir)] = scale * std::polar(1.0, -q * s.spec.p_max) * s.at(it, ir);
        }
        fft.backward(row);
        const double inv = 1.0 / n;
        for (int ip = 0; ip < n; ++ip) out.at(it, ip) = row[static_cast<std::size_t>(ip)] * inv;
    }
    return out;
}

SinogramGrid d_p(const SinogramGrid& g) {
    return p_multiplier(g, [](double q) { return kImag * q; });
}

SinogramGrid d_theta(const SinogramGrid& g) {
    SinogramGrid out = g;
    theta_derivative_inplace(out.v, g.spec.theta_count, g.spec.p_count);
    return out;
}

SinogramGrid hilbert_p(const SinogramGrid& g) {
    return p_multiplier(g, [](double q) {
        return Complex(q > 0.0 ? 1.0 : (q < 0.0 ? -1.0 : 0.0), 0.0);
    });
}

SinogramGrid field_X(const SinogramGrid& g, int i) {
    return pointwise_theta(d_p(g), [i](double t) { return eta_i(t, i); });
}

SinogramGrid field_Xi(const SinogramGrid& g, int i) {
    return pointwise_theta(d_theta(g), [i](double t) { return eta_i(t, i); });
}

SinogramGrid mul_p(const SinogramGrid& g) {
    SinogramGrid out = g;
    for (int it = 0; it < g.spec.theta_count; ++it)
        for (int ip = 0; ip < g.spec.p_count; ++ip) out.at(it, ip) *= g.spec.p(ip);
    return out;
}

SinogramGrid mul_xi(const SinogramGrid& g, int i) {
    return pointwise_theta(g, [i](double t) { return xi_i(t, i); });
}

SinogramGrid mul_x(const SinogramGrid& g, int i) {
    return pointwise_theta(mul_p(g), [i](double t) { return eta_i(t, i); });
}

SinogramGrid add(const SinogramGrid& a, const SinogramGrid& b) {
    if (!(a.spec == b.spec)) throw std::invalid_argument("sinogram add: grid mismatch");
    SinogramGrid out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
    return out;
}

SinogramGrid sub(const SinogramGrid& a, const SinogramGrid& b) {
    if (!(a.spec == b.spec)) throw std::invalid_argument("sinogram sub: grid mismatch");
    SinogramGrid out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] -= b.v[i];
    return out;
}

SinogramGrid scale(const SinogramGrid& g, Complex s) {
    SinogramGrid out = g;
    for (auto& x : out.v) x *= s;
    return out;
}

double max_abs(const SinogramGrid& g) {
    double m = 0.0;
    for (const auto& x : g.v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const SinogramGrid& a, const SinogramGrid& b) {
    if (!(a.spec == b.spec)) throw std::invalid_argument("max_abs_diff: grid mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

SinogramGrid z_op(const SinogramGrid& g) { return hilbert_p(d_theta(g)); }

SinogramGrid z_op_spectral_route(const SinogramGrid& g) {
    SpectralSinogram s = fft_p(g);
    const int n = s.spec.p_count;
    const int m = s.spec.theta_count;
    // Xi_i phihat = eta_i(theta) d/dtheta phihat on the (q, theta) grid
    std::vector<Complex> dth = s.c;
    theta_derivative_inplace(dth, m, n);
    SpectralSinogram out;
    out.spec = s.spec;
    out.c.assign(s.c.size(), Complex(0.0, 0.0));
    for (int it = 0; it < m; ++it) {
        const double t = s.spec.theta(it);
        const double e1 = eta_i(t, 1), e2 = eta_i(t, 2);
        for (int ir = 0; ir < n; ++ir) {
            const double q = s.q(ir);
            const double sgn = q > 0.0 ? 1.0 : (q < 0.0 ? -1.0 : 0.0);
            const Complex d = dth[static_cast<std::size_t>(it) * n + ir];
            // (y^i / |y|) Xi_i phihat with y = q eta(theta)
            out.at(it, ir) = sgn * (e1 * (e1 * d) + e2 * (e2 * d));
        }
    }
    return ifft_p(out);
}

double z_route_equivalence(const SinogramGrid& g) {
    // both routes annihilate the q = 0 mode, so a plain grid difference is
    // already the off-DC comparison
    return max_abs_diff(z_op(g), z_op_spectral_route(g));
}

double ResidualReport::max() const {
    double m = 0.0;
    for (const auto& [label, r] : entries) m = std::max(m, r);
    return m;
}

ResidualReport commutator_residuals(const SinogramGrid& g) {
    ResidualReport rep;

    const double c_xx = max_abs_diff(field_X(field_X(g, 2), 1), field_X(field_X(g, 1), 2));
    rep.entries.emplace_back("[X1,X2] = 0", c_xx);

    SinogramGrid lhs = sub(field_Xi(field_Xi(g, 2), 1), field_Xi(field_Xi(g, 1), 2));
    SinogramGrid rhs = sub(mul_x(field_X(g, 2), 1), mul_x(field_X(g, 1), 2));
    rhs = add(rhs, sub(mul_xi(field_Xi(g, 2), 1), mul_xi(field_Xi(g, 1), 2)));
    rep.entries.emplace_back("[Xi1,Xi2] = x1 X2 - x2 X1 + xi1 Xi2 - xi2 Xi1", max_abs_diff(lhs, rhs));

    double c_xxi = 0.0;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            SinogramGrid comm = sub(field_X(field_Xi(g, j), i), field_Xi(field_X(g, i), j));
            c_xxi = std::max(c_xxi, max_abs_diff(comm, mul_xi(field_X(g, j), i)));
        }
    rep.entries.emplace_back("[Xi,Xij] = xi_i X_j", c_xxi);
    return rep;
}

namespace {

/// Spectral derivative in q of a spectral sinogram (periodic after fftshift;
/// valid for coefficients decaying well inside the q window).
SpectralSinogram q_derivative(const SpectralSinogram& s) {
    const int n = s.spec.p_count;
    const int m = s.spec.theta_count;
    SpectralSinogram out;
    out.spec = s.spec;
    out.c.assign(s.c.size(), Complex(0.0, 0.0));
    Fft1d fft(n);
    std::vector<Complex> row(static_cast<std::size_t>(n));
    const double dq = s.dq();
    const double period = n * dq;
    for (int it = 0; it < m; ++it) {
        // monotone-q (fftshifted) ordering
        for (int u = 0; u < n; ++u) {
            const int ir = (u + n / 2) % n;
            row[static_cast<std::size_t>(u)] = s.at(it, ir);
        }
        fft.forward(row);
        for (int r = 0; r < n; ++r) {
            int l = r < n / 2 ? r : r - n;
            if (2 * r == n) l = 0;
            row[static_cast<std::size_t>(r)] *= kImag * (2.0 * M_PI * l / period);
        }
        fft.backward(row);
        const double inv = 1.0 / n;
        for (int u = 0; u < n; ++u) {
            const int ir = (u + n / 2) % n;
            out.at(it, ir) = row[static_cast<std::size_t>(u)] * inv;
        }
    }
    return out;
}

double spectral_max_abs_diff(const SpectralSinogram& a, const SpectralSinogram& b) {
    double mx = 0.0;
    for (std::size_t i = 0; i < a.c.size(); ++i) mx = std::max(mx, std::abs(a.c[i] - b.c[i]));
    return mx;
}

} // namespace

ResidualReport fourier_commutation_residuals(const SinogramGrid& g) {
    ResidualReport rep;
    const SpectralSinogram ghat = fft_p(g);
    const int n = g.spec.p_count;
    const int m = g.spec.theta_count;

    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    for (int i = 1; i <= 2; ++i) {
        // (X_i phi)^ = i y_i phihat
        SpectralSinogram lhs1 = fft_p(field_X(g, i));
        SpectralSinogram rhs1 = ghat;
        for (int it = 0; it < m; ++it) {
            const double e = eta_i(g.spec.theta(it), i);
            for (int ir = 0; ir < n; ++ir) rhs1.at(it, ir) *= kImag * (ghat.q(ir) * e);
        }
        r1 = std::max(r1, spectral_max_abs_diff(lhs1, rhs1));

        // (Xi_i phi)^ = Xi_i phihat
        SpectralSinogram lhs2 = fft_p(field_Xi(g, i));
        SpectralSinogram rhs2 = ghat;
        theta_derivative_inplace(rhs2.c, m, n);
        for (int it = 0; it < m; ++it) {
            const double e = eta_i(g.spec.theta(it), i);
            for (int ir = 0; ir < n; ++ir) rhs2.at(it, ir) *= e;
        }
        r2 = std::max(r2, spectral_max_abs_diff(lhs2, rhs2));

        // (x_i phi)^ = i X_i phihat
        SpectralSinogram lhs3 = fft_p(mul_x(g, i));
        SpectralSinogram rhs3 = q_derivative(ghat);
        for (int it = 0; it < m; ++it) {
            const double e = eta_i(g.spec.theta(it), i);
            for (int ir = 0; ir < n; ++ir) rhs3.at(it, ir) *= kImag * e;
        }
        r3 = std::max(r3, spectral_max_abs_diff(lhs3, rhs3));
    }
    rep.entries.emplace_back("(X_i phi)^ = i y_i phihat", r1);
    rep.entries.emplace_back("(Xi_i phi)^ = Xi_i phihat", r2);
    rep.entries.emplace_back("(x_i phi)^ = i X_i phihat", r3);
    return rep;
}

double parseval_residual(const SinogramGrid& g) {
    const SpectralSinogram s = fft_p(g);
    const double dp = g.spec.dp();
    const double dq = s.dq();
    double worst = 0.0;
    for (int it = 0; it < g.spec.theta_count; ++it) {
        double np = 0.0, nq = 0.0;
        for (int ip = 0; ip < g.spec.p_count; ++ip) np += std::norm(g.at(it, ip)) * dp;
        for (int ir = 0; ir < g.spec.p_count; ++ir) nq += std::norm(s.at(it, ir)) * dq;
        worst = std::max(worst, std::abs(np - nq));
    }
    return worst;
}

} // namespace momray
