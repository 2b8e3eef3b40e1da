#pragma once

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "momray/geometry.hpp"

namespace momray {

/// Sparse multivariate polynomial over C in up to three variables.
/// Exponent triples map to coefficients; unused trailing variables keep
/// exponent zero, so the same representation serves n = 2 and n = 3.
class Polynomial {
public:
    using Exponent = std::array<int, 3>;
    using Terms = std::map<Exponent, std::complex<double>>;

    Polynomial() = default;

    static Polynomial constant(std::complex<double> c);
    /// Monomial c * u_axis^power.
    static Polynomial monomial(int axis, int power, std::complex<double> c);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(std::complex<double> s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(std::complex<double> s, Polynomial p) { return p *= s; }
    Polynomial operator*(const Polynomial& o) const;

    Polynomial derivative(int axis) const;
    /// Multiplication by the coordinate u_axis.
    Polynomial mul_coord(int axis) const;

    std::complex<double> evaluate(const Vec3& u) const;

    /// Coefficients in t of P(u0 + t * xi), lowest degree first.
    std::vector<std::complex<double>> restrict_to_line(const Vec3& u0, const Vec3& xi) const;

    void add_term(const Exponent& e, std::complex<double> c);

private:
    Terms terms_;
};

} // namespace momray
