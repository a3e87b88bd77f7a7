#pragma once

#include <optional>
#include <string>

#include "qkick/numerics.hpp"
#include "qkick/schedule.hpp"

namespace qkick {

/// Exchange coupling and in-plane field direction. hbar = 1.
struct SystemParams {
    double J = 1.0;
    double theta = 0.0;  // radians from the x axis
};

/// Returns a warning message when theta lies outside [0, pi/2]. Such angles
/// are accepted everywhere; the caller decides whether to report it.
std::optional<std::string> theta_range_warning(const SystemParams& params);

/// Instantaneous field values on qubit 1 and qubit 2.
struct FieldSample {
    double b1 = 0.0;
    double b2 = 0.0;
};

/// J (sx sx + sy sy + sz sz).
Matrix4 h0(const SystemParams& params);

/// 1/2 sum_i B_i (cos(theta) sx_i + sin(theta) sy_i). The B1 term acts on the
/// first tensor slot, so it couples |11> <-> |01> and |10> <-> |00>.
Matrix4 h_int(const FieldSample& sample, const SystemParams& params);

/// Field values of a Gaussian schedule at time t.
FieldSample gaussian_field(const GaussianSchedule& sched, double t);

/// h0 + h_int(field(t)). Delta kicks have no pointwise value: a KickSchedule
/// throws KickPointwiseError.
Matrix4 h_total(double t, const SystemParams& params, const PulseSchedule& schedule);

/// exp(-i [alpha/2 n.sigma_1 + beta/2 n.sigma_2]) with n = (cos theta, sin theta, 0),
/// built as the product of the two single-qubit rotations.
Matrix4 kick_generator(const SystemParams& params, double alpha, double beta);

/// [H(t''), H(t')] from the closed form J D M(theta), where s1 holds the
/// fields at t'' and s2 those at t'.
Matrix4 field_commutator(const SystemParams& params, const FieldSample& s1, const FieldSample& s2);

}  // namespace qkick
