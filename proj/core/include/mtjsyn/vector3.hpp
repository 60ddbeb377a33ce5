#pragma once

#include <cmath>

namespace mtjsyn {

struct Vector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vector3 &operator+=(const Vector3 &o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vector3 &operator-=(const Vector3 &o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vector3 &operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend constexpr Vector3 operator+(Vector3 a, const Vector3 &b) { return a += b; }
    friend constexpr Vector3 operator-(Vector3 a, const Vector3 &b) { return a -= b; }
    friend constexpr Vector3 operator-(const Vector3 &a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr Vector3 operator*(Vector3 a, double s) { return a *= s; }
    friend constexpr Vector3 operator*(double s, Vector3 a) { return a *= s; }
    friend constexpr Vector3 operator/(const Vector3 &a, double s) { return {a.x / s, a.y / s, a.z / s}; }
    friend constexpr bool operator==(const Vector3 &, const Vector3 &) = default;
};

constexpr double dot(const Vector3 &a, const Vector3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vector3 cross(const Vector3 &a, const Vector3 &b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vector3 &a) { return std::sqrt(dot(a, a)); }

inline Vector3 normalized(const Vector3 &a) { return a / norm(a); }

/// Unit vector at polar angle theta from +x; phi rotates about x starting in the x-y plane.
inline Vector3 unit_vector_from_angles(double theta, double phi) {
    const double s = std::sin(theta);
    return {std::cos(theta), s * std::cos(phi), s * std::sin(phi)};
}

/// Angle between a and b in radians, robust near 0 and pi.
inline double angle_between(const Vector3 &a, const Vector3 &b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

} // namespace mtjsyn
