#pragma once

#include <array>
#include <string_view>

#include "qkick/hamiltonian.hpp"
#include "qkick/numerics.hpp"
#include "qkick/schedule.hpp"

namespace qkick {

/// Time-evolution matrix U(t) together with the earliest time at which the
/// closed form that produced it holds. a(t) = U a(0).
struct Propagator {
    Matrix4 matrix = Matrix4::identity();
    double valid_from = 0.0;
};

/// exp(-i h0 t), written out in closed form. Requires t >= 0.
Propagator free_propagator(const SystemParams& params, double t);

/// The eight independent elements of a closed-form kick propagator. The other
/// eight follow from U44 = U11, U33 = U22, U32 = U23, U43 = e^{2i theta} U12,
/// U42 = e^{2i theta} U13, U41 = e^{4i theta} U14, U34 = e^{-2i theta} U21 and
/// U31 = e^{2i theta} U24.
struct ClosedFormElements {
    cplx u11, u12, u13, u14, u21, u22, u23, u24;

    static constexpr std::array<std::string_view, 8> names = {
        "U11", "U12", "U13", "U14", "U21", "U22", "U23", "U24"};

    cplx& operator[](std::size_t i);
    const cplx& operator[](std::size_t i) const;
};

/// Expands the independent elements into the full 4x4 matrix.
Matrix4 assemble(const ClosedFormElements& e, double theta);

/// Closed-form elements after `kicks` (1, 2 or 3) equally spaced kicks at
/// T, 2T, ..., evaluated at t > kicks * T. No argument checking.
ClosedFormElements closed_form_elements(int kicks, const SystemParams& params, double alpha,
                                        double beta, double spacing, double t);

/// One kick at sched.times[0]; valid for t > T (DomainError otherwise).
Propagator one_kick_propagator(const SystemParams& params, const KickSchedule& sched, double t);

/// Kicks at T and 2T (SpacingError for any other layout); valid for t > 2T.
Propagator two_kick_propagator(const SystemParams& params, const KickSchedule& sched, double t);

/// Kicks at T, 2T and 3T (SpacingError for any other layout); valid for t > 3T.
Propagator three_kick_propagator(const SystemParams& params, const KickSchedule& sched, double t);

/// Product form free(t - T_N) K free(T_N - T_{N-1}) ... K free(T_1) for an
/// arbitrary kick list. Requires t > T_N.
Propagator n_kick_propagator(const SystemParams& params, const KickSchedule& sched, double t);

/// Propagator for the region containing t: only kicks strictly before t
/// count. Uses the closed forms when the applied kicks are equally
/// spaced from the origin (at most three of them), the product form otherwise.
Propagator kick_propagator_at(const SystemParams& params, const KickSchedule& sched, double t);

/// a(t) = U a(0). Throws NormalizationError when |‖state0‖ - 1| > 1e-6.
Vector4 apply_propagator(const Propagator& u, const Vector4& state0);

inline constexpr double normalization_tolerance = 1e-6;

}  // namespace qkick
