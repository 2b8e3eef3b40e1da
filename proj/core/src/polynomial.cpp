#include "momray/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "momray/multi_index.hpp"

namespace momray {

namespace {
constexpr double kDropTol = 0.0; // keep exact zeros out, nothing else
}

Polynomial Polynomial::constant(std::complex<double> c) {
    Polynomial p;
    p.add_term({0, 0, 0}, c);
    return p;
}

Polynomial Polynomial::monomial(int axis, int power, std::complex<double> c) {
    if (axis < 0 || axis > 2 || power < 0)
        throw std::invalid_argument("Polynomial::monomial: bad axis or power");
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(axis)] = power;
    Polynomial p;
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Exponent& e, std::complex<double> c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (std::abs(c) > kDropTol) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (std::abs(it->second) <= kDropTol) terms_.erase(it);
    }
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(std::complex<double> s) {
    if (s == std::complex<double>(0.0, 0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

Polynomial Polynomial::derivative(int axis) const {
    if (axis < 0 || axis > 2) throw std::invalid_argument("Polynomial::derivative: bad axis");
    Polynomial out;
    const auto a = static_cast<std::size_t>(axis);
    for (const auto& [e, c] : terms_) {
        if (e[a] == 0) continue;
        Exponent d = e;
        d[a] -= 1;
        out.add_term(d, c * static_cast<double>(e[a]));
    }
    return out;
}

Polynomial Polynomial::mul_coord(int axis) const {
    if (axis < 0 || axis > 2) throw std::invalid_argument("Polynomial::mul_coord: bad axis");
    Polynomial out;
    const auto a = static_cast<std::size_t>(axis);
    for (const auto& [e, c] : terms_) {
        Exponent d = e;
        d[a] += 1;
        out.add_term(d, c);
    }
    return out;
}

std::complex<double> Polynomial::evaluate(const Vec3& u) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        double mono = 1.0;
        for (int a = 0; a < 3; ++a)
            for (int j = 0; j < e[static_cast<std::size_t>(a)]; ++j) mono *= u[a];
        acc += c * mono;
    }
    return acc;
}

std::vector<std::complex<double>> Polynomial::restrict_to_line(const Vec3& u0, const Vec3& xi) const {
    std::vector<std::complex<double>> coeff(static_cast<std::size_t>(degree()) + 1,
                                            std::complex<double>(0.0, 0.0));
    // expand prod_a (u0_a + t xi_a)^{e_a} via per-axis binomials
    for (const auto& [e, c] : terms_) {
        std::vector<std::complex<double>> acc{c};
        for (int a = 0; a < 3; ++a) {
            const int p = e[static_cast<std::size_t>(a)];
            if (p == 0) continue;
            std::vector<std::complex<double>> axis_poly(static_cast<std::size_t>(p) + 1);
            for (int j = 0; j <= p; ++j) {
                double pw = binomial(p, j);
                for (int r = 0; r < j; ++r) pw *= xi[a];
                for (int r = 0; r < p - j; ++r) pw *= u0[a];
                axis_poly[static_cast<std::size_t>(j)] = pw;
            }
            std::vector<std::complex<double>> next(acc.size() + axis_poly.size() - 1,
                                                   std::complex<double>(0.0, 0.0));
            for (std::size_t i = 0; i < acc.size(); ++i)
                for (std::size_t j = 0; j < axis_poly.size(); ++j) next[i + j] += acc[i] * axis_poly[j];
            acc.swap(next);
        }
        for (std::size_t i = 0; i < acc.size(); ++i) coeff[i] += acc[i];
    }
    return coeff;
}

} // namespace momray
