#include "bq/quat.hpp"

#include <algorithm>
#include <numbers>

namespace bq {

namespace {

double vec_length(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }

} // namespace

Quat inverse(const Quat& q) {
    const double n = norm(q);
    if (n == 0.0) {
        throw DomainError("non-invertible: quaternion has zero norm");
    }
    return conj(q) / n;
}

bool perpendicular(const Quat& p, const Quat& q, double tol) {
    return std::abs(inner(p, q)) <= tol;
}

bool parallel(const Quat& p, const Quat& q, double tol) {
    return vec_length(mul(p, conj(q)).vec()) <= tol;
}

double angle_between(const Quat& p, const Quat& q) {
    const double np = norm(p);
    const double nq = norm(q);
    if (np == 0.0 || nq == 0.0) {
        throw DomainError("angle undefined for a zero-norm quaternion");
    }
    const double c = inner(p, q) / (std::sqrt(np) * std::sqrt(nq));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

bool is_pure(const Quat& q, double tol) { return std::abs(q.c1) <= tol; }

bool is_unit(const Quat& q, double tol) { return std::abs(norm(q) - 1.0) <= tol; }

PolarForm polar(const Quat& q, double tol) {
    const double n = norm(q);
    if (n == 0.0) {
        throw DomainError("polar form undefined for a zero-norm quaternion");
    }
    PolarForm f;
    f.magnitude = std::sqrt(n);
    const Vec3 v = q.vec();
    const double vlen = vec_length(v);
    // atan2 stays accurate near θ = 0 and θ = π where acos(S/√N) does not.
    f.angle = std::atan2(vlen, q.c1);
    if (vlen <= tol) {
        f.degenerate_axis = true;
        f.axis = {0.0, 0.0, 1.0};
        f.angle = q.c1 >= 0.0 ? 0.0 : std::numbers::pi;
    } else {
        f.axis = {v[0] / vlen, v[1] / vlen, v[2] / vlen};
    }
    return f;
}

Quat from_polar(const PolarForm& f, double tol) {
    if (std::abs(vec_length(f.axis) - 1.0) > tol) {
        throw DomainError("polar axis is not a unit vector");
    }
    const double s = std::sin(f.angle);
    return f.magnitude * Quat(std::cos(f.angle), {f.axis[0] * s, f.axis[1] * s, f.axis[2] * s});
}

} // namespace bq
