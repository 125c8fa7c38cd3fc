#include "bq/entangle.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace bq {

namespace {

const std::array<Support, 4> kAdmissiblePSupports{
    Support{1, 2}, Support{1, 3}, Support{2, 4}, Support{3, 4}};

std::string format_support(const Support& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int k : s) {
        out << (first ? "" : ",") << k;
        first = false;
    }
    out << '}';
    return out.str();
}

void require_normalized(const BiQuat& q, double tol, const char* what) {
    if (std::abs(norm_h(q) - 1.0) > tol) {
        throw DomainError(std::string(what) + " must be normalized");
    }
}

} // namespace

const char* to_string(Variant v) {
    switch (v) {
    case Variant::V12: return "V12";
    case Variant::V34: return "V34";
    case Variant::V13: return "V13";
    case Variant::V24: return "V24";
    }
    return "?";
}

std::pair<int, int> positions(Variant v) {
    switch (v) {
    case Variant::V12: return {1, 2};
    case Variant::V34: return {3, 4};
    case Variant::V13: return {1, 3};
    case Variant::V24: return {2, 4};
    }
    return {1, 2};
}

Support support(const BiQuat& q, double tol) {
    Support s;
    for (int k = 1; k <= 4; ++k) {
        if (std::abs(q[k]) > tol) {
            s.insert(k);
        }
    }
    return s;
}

Support support(const Quat& q, double tol) { return support(BiQuat(q), tol); }

BiQuat embed_state(const StateAmp& s, double tol) {
    if (std::abs(std::norm(s.alpha) + std::norm(s.beta) - 1.0) > tol) {
        throw DomainError("state amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
    }
    BiQuat q;
    const auto [i, j] = positions(s.variant);
    q[i] = s.alpha;
    q[j] = s.beta;
    return q;
}

double concurrence(const BiQuat& q, double tol) {
    require_normalized(q, tol, "state");
    return 2.0 * std::abs(q.c1 * q.c4 - q.c2 * q.c3);
}

BiQuat normalize(const BiQuat& q) {
    const double n = norm_h(q);
    if (n == 0.0) {
        throw DomainError("cannot normalize the zero biquaternion");
    }
    return q / std::sqrt(n);
}

RestrictionError::RestrictionError(RestrictionReport report)
    : std::runtime_error("restrictions violated: " + report.detail), report_(std::move(report)) {}

RestrictionReport check_restrictions(const Quat& p, const BiQuat& q, double tol) {
    if (!is_unit(p, tol)) {
        throw DomainError("p must be a unit quaternion");
    }
    require_normalized(q, tol, "q");

    RestrictionReport r;
    r.p_support = support(p, tol);
    r.q_support = support(q, tol);
    r.concurrence_p = concurrence(BiQuat(p), tol);

    r.r1_pass = r.concurrence_p <= tol;
    r.r2_pass = r.p_support.size() >= 2;

    Support common;
    std::set_intersection(r.p_support.begin(), r.p_support.end(), r.q_support.begin(),
                          r.q_support.end(), std::inserter(common, common.begin()));
    const bool admissible = std::find(kAdmissiblePSupports.begin(), kAdmissiblePSupports.end(),
                                      r.p_support) != kAdmissiblePSupports.end();
    r.r3_pass = common.size() == 1 && admissible;

    std::ostringstream d;
    d << "R1 " << (r.r1_pass ? "pass" : "fail") << " (C(p)=" << r.concurrence_p << "); ";
    d << "R2 " << (r.r2_pass ? "pass" : "fail") << " (|supp p|=" << r.p_support.size() << "); ";
    d << "R3 " << (r.r3_pass ? "pass" : "fail") << " (supp p=" << format_support(r.p_support)
      << ", supp q=" << format_support(r.q_support) << ", shared=" << common.size()
      << (admissible ? "" : ", p support not admissible") << ")";
    r.detail = d.str();
    return r;
}

BiQuat lambda_map(const Quat& p, const BiQuat& q, double tol) {
    if (!is_unit(p, tol)) {
        throw DomainError("p must be a unit quaternion");
    }
    const BiQuat pb(p);
    return bmul(bmul(pb, q), pb);
}

EntangleOutcome entangle(const Quat& p, const BiQuat& q, double tol) {
    RestrictionReport report = check_restrictions(p, q, tol);
    if (!report.passed()) {
        throw RestrictionError(std::move(report));
    }
    EntangleOutcome out;
    out.result = lambda_map(p, q, tol);
    out.concurrence_before = concurrence(q, tol);
    out.concurrence_after = concurrence(out.result, tol);
    out.degenerate_amplitudes = report.q_support.size() < 2;
    out.report = std::move(report);
    return out;
}

double predicted_concurrence(const Quat& p, const BiQuat& q, double tol) {
    const RestrictionReport r = check_restrictions(p, q, tol);
    if (!r.passed()) {
        throw DomainError("predicted concurrence needs R1-R3: " + r.detail);
    }
    if (r.q_support.size() > 2) {
        throw DomainError("q is not an embedded one-particle state");
    }
    if (r.q_support.size() < 2) {
        return 0.0;
    }
    const int i = *r.q_support.begin();
    const int j = *r.q_support.rbegin();
    if ((i == 1 && j == 4) || (i == 2 && j == 3)) {
        throw DomainError("q is not an embedded one-particle state");
    }
    const int pi = *r.p_support.begin();
    const int pj = *r.p_support.rbegin();
    return 4.0 * std::abs(q[i]) * std::abs(q[j]) * std::abs(p[pi]) * std::abs(p[pj]);
}

} // namespace bq
