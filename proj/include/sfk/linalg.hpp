#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace sfk {

/// Plain 2-vector used for moment coordinates, facet normals and
/// harmonic-pair components.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    double norm_sq() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// det(a,b) = a.x*b.y - a.y*b.x, the orientation of the pair (a,b).
inline double det(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Clockwise quarter turn, (x,y) -> (y,-x).
inline Vec2 rot_cw(const Vec2& v) { return {v.y, -v.x}; }

/// Counterclockwise quarter turn, (x,y) -> (-y,x).
inline Vec2 rot_ccw(const Vec2& v) { return {-v.y, v.x}; }

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << "(" << v.x << ", " << v.y << ")";
}

/// General 2x2 matrix, row-major.
struct Mat2 {
    double a = 0.0, b = 0.0;  // row 0
    double c = 0.0, d = 0.0;  // row 1

    Mat2() = default;
    Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 from_rows(const Vec2& r0, const Vec2& r1) {
        return {r0.x, r0.y, r1.x, r1.y};
    }
    /// Outer product u v^t.
    static Mat2 outer(const Vec2& u, const Vec2& v) {
        return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y};
    }

    double det() const { return a * d - b * c; }
    Mat2 transpose() const { return {a, c, b, d}; }

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2& operator+=(const Mat2& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    Mat2 inverse() const {
        const double dd = det();
        return {d / dd, -b / dd, -c / dd, a / dd};
    }

    double frobenius_norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }
};

inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

/// Symmetric 2x2 matrix (Hessians, metric blocks).
struct Sym2 {
    double xx = 0.0, xy = 0.0, yy = 0.0;

    Sym2() = default;
    Sym2(double xx_, double xy_, double yy_) : xx(xx_), xy(xy_), yy(yy_) {}

    static Sym2 outer(const Vec2& v) { return {v.x * v.x, v.x * v.y, v.y * v.y}; }
    static Sym2 diag(double a, double b) { return {a, 0.0, b}; }

    double det() const { return xx * yy - xy * xy; }
    double trace() const { return xx + yy; }

    Sym2 operator+(const Sym2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
    Sym2 operator-(const Sym2& o) const { return {xx - o.xx, xy - o.xy, yy - o.yy}; }
    Sym2 operator*(double s) const { return {xx * s, xy * s, yy * s}; }
    Sym2& operator+=(const Sym2& o) { xx += o.xx; xy += o.xy; yy += o.yy; return *this; }

    Vec2 operator*(const Vec2& v) const {
        return {xx * v.x + xy * v.y, xy * v.x + yy * v.y};
    }

    Sym2 inverse() const {
        const double dd = det();
        return {yy / dd, -xy / dd, xx / dd};
    }

    Mat2 as_mat() const { return {xx, xy, xy, yy}; }

    double frobenius_norm() const {
        return std::sqrt(xx * xx + 2.0 * xy * xy + yy * yy);
    }

    bool positive_definite() const { return xx > 0.0 && det() > 0.0; }
};

inline Sym2 operator*(double s, const Sym2& m) { return m * s; }

/// Symmetrize A A^t of a general matrix.
inline Sym2 gram(const Mat2& m) {
    return {m.a * m.a + m.b * m.b, m.a * m.c + m.b * m.d, m.c * m.c + m.d * m.d};
}

struct EigenSym2 {
    double lambda1 = 0.0;  // larger eigenvalue
    double lambda2 = 0.0;
    Vec2 v1;               // unit eigenvector for lambda1
    Vec2 v2;
};

/// Closed-form eigendecomposition of a symmetric 2x2 matrix.
/// Eigenvalues ordered lambda1 >= lambda2.
inline EigenSym2 eigen_sym2(const Sym2& m) {
    EigenSym2 e;
    const double tr = m.trace();
    const double diff = m.xx - m.yy;
    const double disc = std::sqrt(diff * diff + 4.0 * m.xy * m.xy);
    e.lambda1 = 0.5 * (tr + disc);
    e.lambda2 = 0.5 * (tr - disc);
    // Eigenvector for lambda1; pick the better-conditioned expression.
    Vec2 v;
    if (std::abs(m.xy) > 1e-300) {
        v = {m.xy, e.lambda1 - m.xx};
        if (v.norm() < 1e-300) v = {e.lambda1 - m.yy, m.xy};
    } else {
        v = (m.xx >= m.yy) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
    }
    const double n = v.norm();
    e.v1 = v / n;
    e.v2 = rot_ccw(e.v1);
    return e;
}

/// Solve the 2x2 system M s = rhs. Caller guarantees det(M) != 0.
inline Vec2 solve2x2(const Mat2& m, const Vec2& rhs) {
    const double dd = m.det();
    return {(rhs.x * m.d - rhs.y * m.b) / dd, (m.a * rhs.y - m.c * rhs.x) / dd};
}

}  // namespace sfk
