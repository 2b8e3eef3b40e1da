#pragma once

#include <cmath>
#include <stdexcept>

namespace momray {

/// Point or direction in R^n for n <= 3. Two-dimensional data leaves z = 0,
/// so dot products and norms are valid for both n = 2 and n = 3.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_ = 0.0) : x(x_), y(y_), z(z_) {}

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm_sq(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm_sq(a)); }

/// Oriented line given by a point of the tangent bundle of the unit sphere:
/// |xi| = 1 and <x, xi> = 0, both enforced to 1e-12 at construction.
struct LinePoint {
    Vec3 x;
    Vec3 xi;

    LinePoint(const Vec3& x_, const Vec3& xi_) : x(x_), xi(xi_) {
        if (std::abs(norm(xi) - 1.0) > 1e-12)
            throw std::invalid_argument("LinePoint: |xi| must be 1");
        if (std::abs(dot(x, xi)) > 1e-12)
            throw std::invalid_argument("LinePoint: <x, xi> must vanish");
    }
};

/// Line parameterization off the manifold: any nonzero direction is allowed
/// and the base point need not be orthogonal to it.
struct FreeLinePoint {
    Vec3 x;
    Vec3 xi;

    FreeLinePoint(const Vec3& x_, const Vec3& xi_) : x(x_), xi(xi_) {
        if (norm_sq(xi) == 0.0)
            throw std::invalid_argument("FreeLinePoint: xi must be nonzero");
    }
    FreeLinePoint(const LinePoint& pt) : x(pt.x), xi(pt.xi) {}
};

/// Direction xi(theta) = (cos t, sin t) of the line chart on TS^1.
inline Vec3 chart_xi(double theta) { return {std::cos(theta), std::sin(theta), 0.0}; }

/// Normal eta(theta) = (-sin t, cos t); the chart base point is x = p * eta.
inline Vec3 chart_eta(double theta) { return {-std::sin(theta), std::cos(theta), 0.0}; }

/// Line through p * eta(theta) with direction xi(theta).
inline LinePoint line_from_chart(double p, double theta) {
    return LinePoint(p * chart_eta(theta), chart_xi(theta));
}

} // namespace momray
