#pragma once

#include <array>
#include <cmath>

#include "bq/errors.hpp"

namespace bq {

/// Absolute tolerance used by predicates (perpendicular, parallel, degenerate axis, ...).
inline constexpr double kDefaultTol = 1e-9;

using Vec3 = std::array<double, 3>;

namespace detail {

// Hamilton product on raw coefficient tuples, shared by the real and
// complexified algebras so both evaluate the same expression tree.
template <typename T>
constexpr std::array<T, 4> hamilton(const T& a1, const T& a2, const T& a3, const T& a4,
                                    const T& b1, const T& b2, const T& b3, const T& b4) {
    return {a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4,
            a1 * b2 + a2 * b1 + a3 * b4 - a4 * b3,
            a1 * b3 - a2 * b4 + a3 * b1 + a4 * b2,
            a1 * b4 + a2 * b3 - a3 * b2 + a4 * b1};
}

} // namespace detail

/**
 * Real quaternion c1 + c2 î + c3 ĵ + c4 k̂.
 *
 * Coefficients are numbered from 1 so that c1 is the scalar part S(q) and
 * (c2, c3, c4) the vector part V(q). Multiplication follows the right-handed
 * Hamilton convention îĵ = k̂, ĵk̂ = î, k̂î = ĵ.
 */
struct Quat {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;

    constexpr Quat() = default;
    constexpr Quat(double a1, double a2, double a3, double a4) : c1(a1), c2(a2), c3(a3), c4(a4) {}
    constexpr Quat(double scalar, const Vec3& v) : c1(scalar), c2(v[0]), c3(v[1]), c4(v[2]) {}

    constexpr double scalar() const { return c1; }
    constexpr Vec3 vec() const { return {c2, c3, c4}; }
    constexpr std::array<double, 4> coeffs() const { return {c1, c2, c3, c4}; }

    /// 1-based coefficient access.
    constexpr double operator[](int k) const {
        switch (k) {
        case 1: return c1;
        case 2: return c2;
        case 3: return c3;
        default: return c4;
        }
    }

    constexpr Quat& operator+=(const Quat& o) {
        c1 += o.c1; c2 += o.c2; c3 += o.c3; c4 += o.c4;
        return *this;
    }
    constexpr Quat& operator-=(const Quat& o) {
        c1 -= o.c1; c2 -= o.c2; c3 -= o.c3; c4 -= o.c4;
        return *this;
    }
    constexpr Quat& operator*=(double s) {
        c1 *= s; c2 *= s; c3 *= s; c4 *= s;
        return *this;
    }

    friend constexpr Quat operator+(Quat a, const Quat& b) { return a += b; }
    friend constexpr Quat operator-(Quat a, const Quat& b) { return a -= b; }
    friend constexpr Quat operator-(const Quat& a) { return {-a.c1, -a.c2, -a.c3, -a.c4}; }
    friend constexpr Quat operator*(Quat a, double s) { return a *= s; }
    friend constexpr Quat operator*(double s, Quat a) { return a *= s; }
    friend constexpr Quat operator/(const Quat& a, double s) {
        return {a.c1 / s, a.c2 / s, a.c3 / s, a.c4 / s};
    }

    friend constexpr bool operator==(const Quat&, const Quat&) = default;
};

/// Hamilton product p·q.
constexpr Quat mul(const Quat& p, const Quat& q) {
    const auto r = detail::hamilton(p.c1, p.c2, p.c3, p.c4, q.c1, q.c2, q.c3, q.c4);
    return {r[0], r[1], r[2], r[3]};
}

constexpr Quat operator*(const Quat& p, const Quat& q) { return mul(p, q); }

/// Quaternion conjugate S(q) − V(q).
constexpr Quat conj(const Quat& q) { return {q.c1, -q.c2, -q.c3, -q.c4}; }

/// Squared norm N_q = q q̄ (not its square root; see magnitude()).
constexpr double norm(const Quat& q) {
    return q.c1 * q.c1 + q.c2 * q.c2 + q.c3 * q.c3 + q.c4 * q.c4;
}

/// √N_q.
inline double magnitude(const Quat& q) { return std::sqrt(norm(q)); }

/// q̄ / N_q. Throws DomainError("non-invertible") on zero norm.
Quat inverse(const Quat& q);

/// ⟨p|q⟩ = S(p q̄), the Euclidean dot product of the coefficient 4-vectors.
constexpr double inner(const Quat& p, const Quat& q) {
    return p.c1 * q.c1 + p.c2 * q.c2 + p.c3 * q.c3 + p.c4 * q.c4;
}

/// S(p q̄) = 0 within tol.
bool perpendicular(const Quat& p, const Quat& q, double tol = kDefaultTol);

/// V(p q̄) = 0 within tol.
bool parallel(const Quat& p, const Quat& q, double tol = kDefaultTol);

/// Angle λ ∈ [0, π] with cos λ = S(p q̄) / (√N_p √N_q).
double angle_between(const Quat& p, const Quat& q);

bool is_pure(const Quat& q, double tol = kDefaultTol);
bool is_unit(const Quat& q, double tol = kDefaultTol);

/**
 * q = magnitude · (cos θ + axis · sin θ), θ ∈ [0, π].
 *
 * When V(q) vanishes the axis is undetermined; `axis` is then (0,0,1) and
 * `degenerate_axis` is set, with θ equal to 0 or π according to the sign of S(q).
 */
struct PolarForm {
    double magnitude = 0.0;
    Vec3 axis{0.0, 0.0, 1.0};
    double angle = 0.0;
    bool degenerate_axis = false;
};

PolarForm polar(const Quat& q, double tol = kDefaultTol);

/// Rebuilds magnitude·(cos θ + axis sin θ). Throws if the axis is not unit within tol.
Quat from_polar(const PolarForm& f, double tol = kDefaultTol);

} // namespace bq
