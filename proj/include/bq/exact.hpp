#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

#include "bq/biquat.hpp"

namespace bq::exact {

using Rational = mpq_class;

/// Complex number with arbitrary-precision rational parts.
struct ExactScalar {
    Rational re{0};
    Rational im{0};

    ExactScalar() = default;
    ExactScalar(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    ExactScalar(long r) : re(r), im(0) {}

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ExactScalar operator-(const ExactScalar& a) { return {-a.re, -a.im}; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// |z|², exact.
    Rational abs2() const { return re * re + im * im; }
    ExactScalar conj() const { return {re, -im}; }
    Complex to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string str() const;
};

/**
 * Element of ℂ⊗ℍ as 8 rationals over the real basis
 * e₀ = 1, e₁ = i, e₂ = î, e₃ = iî, e₄ = ĵ, e₅ = iĵ, e₆ = k̂, e₇ = ik̂.
 */
struct ExactBiQuat {
    std::array<Rational, 8> e{};

    ExactBiQuat() = default;
    ExactBiQuat(const ExactScalar& a1, const ExactScalar& a2, const ExactScalar& a3,
                const ExactScalar& a4);

    /// 1-based complex coefficient of the units 1, î, ĵ, k̂.
    ExactScalar coeff(int k) const { return {e[2 * (k - 1)], e[2 * (k - 1) + 1]}; }
    void set_coeff(int k, const ExactScalar& z);

    friend bool operator==(const ExactBiQuat&, const ExactBiQuat&) = default;
    std::string str() const;
};

/// Lossless: every finite double is a dyadic rational.
ExactBiQuat to_exact(const BiQuat& q);
BiQuat to_double(const ExactBiQuat& q);

/// e_a e_b = Σ_c table[a][b][c] e_c.
using StructureTable = std::array<std::array<std::array<int, 8>, 8>, 8>;

/// Built from the defining relations of ℍ and i² = −1, independently of bmul().
const StructureTable& structure_table();

/// Exact product through the 8-D structure constants.
ExactBiQuat oracle_mul(const ExactBiQuat& p, const ExactBiQuat& q);

/// Number of basis triples (a, b, c) with (e_a e_b) e_c = e_a (e_b e_c); 512 when associative.
int associative_basis_triples();

} // namespace bq::exact
