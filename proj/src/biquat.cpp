#include "bq/biquat.hpp"

#include <numbers>

namespace bq {

BiQuat bmul(const BiQuat& p, const BiQuat& q) {
    const auto r = detail::hamilton(p.c1, p.c2, p.c3, p.c4, q.c1, q.c2, q.c3, q.c4);
    return {r[0], r[1], r[2], r[3]};
}

BiQuat conjugate(const BiQuat& q, Conjugation kind) {
    switch (kind) {
    case Conjugation::complex:
        return {std::conj(q.c1), std::conj(q.c2), std::conj(q.c3), std::conj(q.c4)};
    case Conjugation::quaternion:
        return {q.c1, -q.c2, -q.c3, -q.c4};
    case Conjugation::hermitian:
        return {std::conj(q.c1), -std::conj(q.c2), -std::conj(q.c3), -std::conj(q.c4)};
    }
    return q;
}

Complex inner_h(const BiQuat& p, const BiQuat& q) {
    return p.c1 * std::conj(q.c1) + p.c2 * std::conj(q.c2) + p.c3 * std::conj(q.c3) +
           p.c4 * std::conj(q.c4);
}

Complex inner_q(const BiQuat& p, const BiQuat& q) {
    return p.c1 * q.c1 + p.c2 * q.c2 + p.c3 * q.c3 + p.c4 * q.c4;
}

double norm_h(const BiQuat& p) {
    return std::norm(p.c1) + std::norm(p.c2) + std::norm(p.c3) + std::norm(p.c4);
}

bool approx_equal(const BiQuat& p, const BiQuat& q, double tol) {
    for (int k = 1; k <= 4; ++k) {
        if (std::abs(p[k] - q[k]) > tol) {
            return false;
        }
    }
    return true;
}

bool is_real(const BiQuat& q, double tol) {
    return approx_equal(q, conjugate(q, Conjugation::complex), 2.0 * tol);
}

BiQuat inverse_h(const BiQuat& p, double tol) {
    const BiQuat star = conjugate(p, Conjugation::complex);
    if (!approx_equal(star, p, tol) && !approx_equal(star, -p, tol)) {
        throw DomainError("inverse formula inapplicable: p* is neither p nor -p");
    }
    const double n = norm_h(p);
    if (n == 0.0) {
        throw DomainError("non-invertible: biquaternion has zero norm");
    }
    return conjugate(p, Conjugation::hermitian) / n;
}

PolarFormC polar_c(const BiQuat& q, double tol) {
    const Complex n = inner_q(q, q);
    if (std::abs(n) <= tol) {
        throw DomainError("no polar form: null biquaternion (q q-bar = 0)");
    }
    PolarFormC f;
    f.magnitude = std::sqrt(n);
    const BiQuat u = q / f.magnitude;
    const BiQuat v{0.0, u.c2, u.c3, u.c4};
    f.angle = std::acos(u.c1);
    const Complex s = std::sin(f.angle);
    if (std::abs(s) <= tol) {
        if (norm_h(v) > tol * tol) {
            // u = ±1 + n with n a nonzero null vector: no axis satisfies axis² = −1.
            throw DomainError("no polar form: vector part is null");
        }
        f.degenerate_axis = true;
        f.axis = {0.0, 0.0, 0.0, 1.0};
        f.angle = u.c1.real() >= 0.0 ? Complex(0.0) : Complex(std::numbers::pi);
        return f;
    }
    f.axis = v / s;
    if (std::abs(f.angle.real()) <= tol && f.angle.imag() < 0.0) {
        // Purely hyperbolic angle: report z = iθ/2 with θ ≥ 0.
        f.angle = -f.angle;
        f.axis = -f.axis;
    }
    return f;
}

BiQuat from_polar_c(const PolarFormC& f) {
    return f.magnitude * (BiQuat{std::cos(f.angle), 0.0, 0.0, 0.0} + f.axis * std::sin(f.angle));
}

bool is_central(const BiQuat& q, double tol) {
    return std::abs(q.c2) <= tol && std::abs(q.c3) <= tol && std::abs(q.c4) <= tol;
}

} // namespace bq
