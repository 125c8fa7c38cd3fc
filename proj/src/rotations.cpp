#include "bq/rotations.hpp"

namespace bq {

namespace {

void require_unit(const Quat& q, double tol) {
    if (!is_unit(q, tol)) {
        throw DomainError("rotation quaternion must have unit norm");
    }
}

// q q̄ = 1 in the quaternionic (not Hermitian) sense.
void require_quaternionic_unit(const BiQuat& q, double tol) {
    if (!approx_equal(bmul(q, conjugate(q, Conjugation::quaternion)), kOne, tol)) {
        throw DomainError("q q-bar must equal 1");
    }
}

} // namespace

Quat rotate_onesided(const Quat& q, const Quat& x, Side side, double tol) {
    require_unit(q, tol);
    return side == Side::left ? mul(q, x) : mul(x, q);
}

Triad make_triad(const Quat& qhat, double tol) {
    if (!is_pure(qhat, tol) || !is_unit(qhat, tol)) {
        throw DomainError("triad axis must be a pure unit quaternion");
    }
    const Vec3 a = qhat.vec();
    int k = 0;
    for (int j = 1; j < 3; ++j) {
        if (std::abs(a[j]) < std::abs(a[k])) {
            k = j;
        }
    }
    Vec3 e{0.0, 0.0, 0.0};
    e[k] = 1.0;
    const double d = a[k];
    Vec3 v{e[0] - d * a[0], e[1] - d * a[1], e[2] - d * a[2]};
    const double len = std::hypot(v[0], v[1], v[2]);
    v = {v[0] / len, v[1] / len, v[2] / len};

    Triad t;
    t.qhat = Quat(0.0, a);
    t.vhat = Quat(0.0, v);
    t.what = mul(t.qhat, t.vhat);
    return t;
}

Quat conjugate_rotation(const Quat& q, const Quat& x, double tol) {
    require_unit(q, tol);
    return mul(mul(q, x), inverse(q));
}

Vec3 rotate_vec3(const Quat& q, const Vec3& v, double tol) {
    return conjugate_rotation(q, Quat(0.0, v), tol).vec();
}

BiQuat psi_rotation(const BiQuat& q, const BiQuat& w, double tol) {
    if (!is_real(q, tol) || std::abs(norm_h(q) - 1.0) > tol) {
        throw DomainError("psi rotation needs q* = q and N_q = 1");
    }
    return bmul(bmul(q, w), conjugate(q, Conjugation::quaternion));
}

BiQuat lorentz(const BiQuat& q, const BiQuat& x, double tol) {
    require_quaternionic_unit(q, tol);
    return bmul(bmul(conjugate(q, Conjugation::hermitian), x), q);
}

BiQuat mu_rotation(const BiQuat& q, const BiQuat& x, double tol) {
    require_quaternionic_unit(q, tol);
    return bmul(bmul(conjugate(q, Conjugation::quaternion), x), q);
}

} // namespace bq
