#pragma once

#include <cmath>
#include <complex>
#include <string_view>

namespace rcanon {

using Complex = std::complex<double>;

/// Quaternion a + bi + cj + dk with i^2 = j^2 = k^2 = ijk = -1.
///
/// Real and complex scalars are stored in the same type (c = d = 0 for C,
/// b = c = d = 0 for R). The complex split is q = (a + bi) + (c + di) j.
struct Quaternion {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_ = 0.0, double c_ = 0.0, double d_ = 0.0)
        : a(a_), b(b_), c(c_), d(d_) {}
    constexpr Quaternion(Complex z) : a(z.real()), b(z.imag()) {}

    static constexpr Quaternion from_split(Complex z1, Complex z2) {
        return {z1.real(), z1.imag(), z2.real(), z2.imag()};
    }

    constexpr Complex z1() const { return {a, b}; }
    constexpr Complex z2() const { return {c, d}; }

    constexpr double norm2() const { return a * a + b * b + c * c + d * d; }
    double abs() const { return std::sqrt(norm2()); }

    constexpr bool is_complex() const { return c == 0.0 && d == 0.0; }
    constexpr bool is_real() const { return b == 0.0 && c == 0.0 && d == 0.0; }

    constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
    Quaternion inverse() const;

    constexpr Quaternion& operator+=(const Quaternion& o) {
        a += o.a; b += o.b; c += o.c; d += o.d;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        a -= o.a; b -= o.b; c -= o.c; d -= o.d;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        a *= s; b *= s; c *= s; d *= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
constexpr Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
constexpr Quaternion operator-(const Quaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }
constexpr Quaternion operator*(Quaternion x, double s) { return x *= s; }
constexpr Quaternion operator*(double s, Quaternion x) { return x *= s; }

constexpr Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

inline Quaternion Quaternion::inverse() const {
    const double n = norm2();
    return conj() * (1.0 / n);
}

/// Right division x * y^{-1}.
inline Quaternion operator/(const Quaternion& x, const Quaternion& y) { return x * y.inverse(); }

inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

using Scalar = Quaternion;

enum class FieldTag { R, C, H };

enum class InvolutionTag { Identity, ComplexConj, QuatConj, QuatSemiconj };

std::string_view to_string(FieldTag f);
std::string_view to_string(InvolutionTag t);

/// Whether `tag` is an involution of `field`. R: Identity; C: Identity or
/// ComplexConj; H: QuatConj or QuatSemiconj.
bool legal(FieldTag field, InvolutionTag tag);

/// Throws ContextError when the combination is not legal.
void require_legal(FieldTag field, InvolutionTag tag);

/// Whether x lies in the field (zero imaginary parts where required).
bool in_field(const Scalar& x, FieldTag field);

/// Applies the involution. Throws ContextError if x is outside the subring
/// on which `tag` is an involution (Identity and ComplexConj are only
/// involutions of C).
Scalar involve(const Scalar& x, InvolutionTag tag);

} // namespace rcanon
