#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "bq/biquat.hpp"
#include "bq/quat.hpp"

namespace bq {

/// Positions of (α, β) when a one-particle state α|0⟩ + β|1⟩ is placed in ℂ⁴.
enum class Variant { V12, V34, V13, V24 };

const char* to_string(Variant v);

/// 1-based coefficient positions occupied by α and β.
std::pair<int, int> positions(Variant v);

struct StateAmp {
    Complex alpha{};
    Complex beta{};
    Variant variant = Variant::V12;
};

/// 1-based indices of coefficients with modulus > tol.
using Support = std::set<int>;

Support support(const BiQuat& q, double tol = kDefaultTol);
Support support(const Quat& q, double tol = kDefaultTol);

/// Places α, β at the variant's positions. Throws if |α|² + |β|² ≠ 1 within tol.
BiQuat embed_state(const StateAmp& s, double tol = kDefaultTol);

/// C = 2|q₁q₄ − q₂q₃| for a normalised q. Throws on norm_h(q) ≠ 1.
double concurrence(const BiQuat& q, double tol = kDefaultTol);

/// q / √norm_h(q). Throws on zero input.
BiQuat normalize(const BiQuat& q);

struct RestrictionReport {
    bool r1_pass = false; ///< p is not entangled
    bool r2_pass = false; ///< p is not a pure basis state
    bool r3_pass = false; ///< p shares exactly one coordinate with q, admissible support
    Support p_support;
    Support q_support;
    double concurrence_p = 0.0;
    std::string detail;

    bool passed() const { return r1_pass && r2_pass && r3_pass; }
};

/// Thrown by entangle() when p fails R1–R3; carries the full report.
class RestrictionError : public std::runtime_error {
public:
    explicit RestrictionError(RestrictionReport report);
    const RestrictionReport& report() const noexcept { return report_; }

private:
    RestrictionReport report_;
};

/// Evaluates R1–R3 for a real unit rotation p and a normalised state q.
RestrictionReport check_restrictions(const Quat& p, const BiQuat& q, double tol = kDefaultTol);

/// Λ(q) = p q p for a real unit p.
BiQuat lambda_map(const Quat& p, const BiQuat& q, double tol = kDefaultTol);

struct EntangleOutcome {
    BiQuat result;
    double concurrence_before = 0.0;
    double concurrence_after = 0.0;
    RestrictionReport report;
    /// α = 0 or β = 0: admissible, but Λ cannot create entanglement.
    bool degenerate_amplitudes = false;
};

/// Applies Λ when R1–R3 hold; throws RestrictionError otherwise.
EntangleOutcome entangle(const Quat& p, const BiQuat& q, double tol = kDefaultTol);

/// 4|α||β||a_i||a_j|, the concurrence Λ(q) attains under R1–R3.
double predicted_concurrence(const Quat& p, const BiQuat& q, double tol = kDefaultTol);

} // namespace bq
