#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

namespace transbend {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](std::size_t i) { return (&x)[i]; }
    double operator[](std::size_t i) const { return (&x)[i]; }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
    Vec3& operator/=(double s) { x /= s; y /= s; z /= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator/(Vec3 a, double s) { return a /= s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

// sin of the angle between the lines spanned by a and b.
inline double sin_angle(const Vec3& a, const Vec3& b) {
    const double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return norm(cross(a, b)) / (na * nb);
}

// Angle between the lines spanned by a and b, in [0, pi/2].
inline double line_angle(const Vec3& a, const Vec3& b) {
    const double c = std::abs(dot(a, b)) / (norm(a) * norm(b));
    return std::acos(std::min(1.0, c));
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

// Row-major 3x3 matrix; enough linear algebra for frames and tiny solves.
struct Mat3 {
    std::array<Vec3, 3> row{};  // row[i] is the i-th row

    static Mat3 identity() { return {{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}}; }

    static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) { return {{r0, r1, r2}}; }

    static Mat3 from_cols(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        return {{Vec3{c0.x, c1.x, c2.x}, Vec3{c0.y, c1.y, c2.y}, Vec3{c0.z, c1.z, c2.z}}};
    }

    double operator()(std::size_t i, std::size_t j) const { return row[i][j]; }
    double& operator()(std::size_t i, std::size_t j) { return row[i][j]; }

    Vec3 col(std::size_t j) const { return {row[0][j], row[1][j], row[2][j]}; }
};

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {dot(m.row[0], v), dot(m.row[1], v), dot(m.row[2], v)};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
}

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) r.row[i] = a.row[i] + b.row[i];
    return r;
}

inline Mat3 operator*(double s, const Mat3& a) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) r.row[i] = s * a.row[i];
    return r;
}

inline Mat3 transpose(const Mat3& m) {
    return Mat3::from_rows(m.col(0), m.col(1), m.col(2));
}

inline Mat3 outer(const Vec3& a, const Vec3& b) {
    return Mat3::from_rows(a.x * b, a.y * b, a.z * b);
}

inline double det(const Mat3& m) { return triple(m.row[0], m.row[1], m.row[2]); }

inline Mat3 inverse(const Mat3& m) {
    const double d = det(m);
    const Vec3 c0 = cross(m.row[1], m.row[2]);
    const Vec3 c1 = cross(m.row[2], m.row[0]);
    const Vec3 c2 = cross(m.row[0], m.row[1]);
    // adj(m)^T rows are the cross products of m's rows
    return (1.0 / d) * Mat3::from_cols(c0, c1, c2);
}

// Solves m * x = b for a well-conditioned 3x3 system (Cramer).
inline Vec3 solve3(const Mat3& m, const Vec3& b) {
    const double d = det(m);
    const double dx = triple(b, m.col(1), m.col(2));
    const double dy = triple(m.col(0), b, m.col(2));
    const double dz = triple(m.col(0), m.col(1), b);
    return {dx / d, dy / d, dz / d};
}

}  // namespace transbend
