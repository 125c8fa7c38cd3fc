#pragma once

#include "bq/biquat.hpp"
#include "bq/quat.hpp"

namespace bq {

enum class Side { left, right };

/// Right-handed orthonormal set of pure unit quaternions with qhat·vhat = what.
struct Triad {
    Quat qhat;
    Quat vhat;
    Quat what;
};

/// φ_L(x) = q x or φ_R(x) = x q for unit q.
Quat rotate_onesided(const Quat& q, const Quat& x, Side side, double tol = kDefaultTol);

/// Completes a pure unit quaternion to a triad. v̂ is the coordinate axis least
/// aligned with q̂ (lowest index on ties), orthogonalised and normalised.
Triad make_triad(const Quat& qhat, double tol = kDefaultTol);

/// q x q⁻¹ for unit q: fixes span{1, q̂}, turns the (v̂, ŵ) plane through 2θ.
Quat conjugate_rotation(const Quat& q, const Quat& x, double tol = kDefaultTol);

/// Vector part of q (0, v) q⁻¹.
Vec3 rotate_vec3(const Quat& q, const Vec3& v, double tol = kDefaultTol);

/// ψ(w) = q w q̄ for a real unit q acting on a biquaternion.
BiQuat psi_rotation(const BiQuat& q, const BiQuat& w, double tol = kDefaultTol);

/// q† x q for q q̄ = 1; preserves the complex interval x x̄.
BiQuat lorentz(const BiQuat& q, const BiQuat& x, double tol = kDefaultTol);

/// μ(x) = q̄ x q for q q̄ = 1.
BiQuat mu_rotation(const BiQuat& q, const BiQuat& x, double tol = kDefaultTol);

} // namespace bq
