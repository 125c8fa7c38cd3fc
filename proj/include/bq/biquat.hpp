#pragma once

#include <array>
#include <complex>

#include "bq/quat.hpp"

namespace bq {

using Complex = std::complex<double>;

/**
 * Complexified quaternion c1 + c2 î + c3 ĵ + c4 k̂ with complex coefficients.
 *
 * The complex unit i commutes with î, ĵ, k̂. The algebra has zero divisors:
 * a nonzero q with q q̄ = 0 (a null biquaternion) is a valid value, and only
 * the operations that need an inverse or a polar form reject it.
 */
struct BiQuat {
    Complex c1{};
    Complex c2{};
    Complex c3{};
    Complex c4{};

    constexpr BiQuat() = default;
    constexpr BiQuat(Complex a1, Complex a2, Complex a3, Complex a4)
        : c1(a1), c2(a2), c3(a3), c4(a4) {}
    /// Exact embedding of a real quaternion.
    constexpr explicit BiQuat(const Quat& q) : c1(q.c1), c2(q.c2), c3(q.c3), c4(q.c4) {}

    constexpr Complex scalar() const { return c1; }
    constexpr std::array<Complex, 4> coeffs() const { return {c1, c2, c3, c4}; }

    /// 1-based coefficient access.
    constexpr const Complex& operator[](int k) const {
        switch (k) {
        case 1: return c1;
        case 2: return c2;
        case 3: return c3;
        default: return c4;
        }
    }
    constexpr Complex& operator[](int k) {
        switch (k) {
        case 1: return c1;
        case 2: return c2;
        case 3: return c3;
        default: return c4;
        }
    }

    /// Real part q₁ and imaginary part q₂ of the decomposition q = q₁ + i q₂.
    Quat real_part() const { return {c1.real(), c2.real(), c3.real(), c4.real()}; }
    Quat imag_part() const { return {c1.imag(), c2.imag(), c3.imag(), c4.imag()}; }

    BiQuat& operator+=(const BiQuat& o) {
        c1 += o.c1; c2 += o.c2; c3 += o.c3; c4 += o.c4;
        return *this;
    }
    BiQuat& operator-=(const BiQuat& o) {
        c1 -= o.c1; c2 -= o.c2; c3 -= o.c3; c4 -= o.c4;
        return *this;
    }
    BiQuat& operator*=(Complex s) {
        c1 *= s; c2 *= s; c3 *= s; c4 *= s;
        return *this;
    }

    friend BiQuat operator+(BiQuat a, const BiQuat& b) { return a += b; }
    friend BiQuat operator-(BiQuat a, const BiQuat& b) { return a -= b; }
    friend BiQuat operator-(const BiQuat& a) { return {-a.c1, -a.c2, -a.c3, -a.c4}; }
    friend BiQuat operator*(BiQuat a, Complex s) { return a *= s; }
    friend BiQuat operator*(Complex s, BiQuat a) { return a *= s; }
    friend BiQuat operator/(const BiQuat& a, Complex s) {
        return {a.c1 / s, a.c2 / s, a.c3 / s, a.c4 / s};
    }

    friend bool operator==(const BiQuat&, const BiQuat&) = default;
};

inline const BiQuat kOne{1.0, 0.0, 0.0, 0.0};

/// Product in ℂ⊗ℍ; same structure constants as mul() with complex coefficients.
BiQuat bmul(const BiQuat& p, const BiQuat& q);

inline BiQuat operator*(const BiQuat& p, const BiQuat& q) { return bmul(p, q); }

enum class Conjugation {
    complex,    ///< q*: i ↦ −i, units fixed
    quaternion, ///< q̄: units negated, i fixed
    hermitian,  ///< q† = (q*)‾
};

BiQuat conjugate(const BiQuat& q, Conjugation kind);

/// Hermitian inner product S(p q†) = Σ p_k conj(q_k).
Complex inner_h(const BiQuat& p, const BiQuat& q);

/// Quaternionic inner product S(p q̄) = Σ p_k q_k. Zero on null biquaternions with p = q.
Complex inner_q(const BiQuat& p, const BiQuat& q);

/// Hermitian norm S(p p†) = Σ |p_k|².
double norm_h(const BiQuat& p);

/// Componentwise |p_k − q_k| ≤ tol.
bool approx_equal(const BiQuat& p, const BiQuat& q, double tol = kDefaultTol);

/// All imaginary parts vanish within tol.
bool is_real(const BiQuat& q, double tol = kDefaultTol);

/**
 * p† / N_p, valid when p* = ±p.
 *
 * Throws DomainError("inverse formula inapplicable") when p* ≠ ±p and
 * DomainError("non-invertible") on zero norm.
 */
BiQuat inverse_h(const BiQuat& p, double tol = kDefaultTol);

/// q = magnitude · (cos z + axis · sin z), with axis pure and axis² = −1.
struct PolarFormC {
    Complex magnitude{};
    BiQuat axis{0.0, 0.0, 0.0, 1.0};
    Complex angle{};
    bool degenerate_axis = false;
};

/// Throws DomainError("no polar form") on null input (q q̄ = 0).
PolarFormC polar_c(const BiQuat& q, double tol = kDefaultTol);

BiQuat from_polar_c(const PolarFormC& f);

/// True iff the vector part vanishes within tol, i.e. q commutes with î, ĵ, k̂.
bool is_central(const BiQuat& q, double tol = kDefaultTol);

/// Pauli matrices realised in ℂ⊗ℍ as iî, iĵ, ik̂.
namespace pauli {
inline const BiQuat X{0.0, Complex(0.0, 1.0), 0.0, 0.0};
inline const BiQuat Y{0.0, 0.0, Complex(0.0, 1.0), 0.0};
inline const BiQuat Z{0.0, 0.0, 0.0, Complex(0.0, 1.0)};
} // namespace pauli

} // namespace bq
