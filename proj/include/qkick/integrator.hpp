#pragma once

#include <cstddef>
#include <vector>

#include "qkick/hamiltonian.hpp"
#include "qkick/numerics.hpp"
#include "qkick/propagators.hpp"
#include "qkick/schedule.hpp"

namespace qkick {

/// Tolerances target the global error of the sampled states.
struct IntegratorOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    /// Norm drift above this aborts the integration with NormalizationError.
    double norm_error_threshold = 1e-6;
    std::size_t max_steps = 20'000'000;
};

/// States sampled along one integration. Immutable once returned.
struct Trajectory {
    std::vector<double> times;
    std::vector<Vector4> states;
    /// max |‖a‖ - 1| over the samples and every accepted step.
    double norm_drift = 0.0;
    std::size_t steps = 0;
};

/// `count` equidistant points from start to stop inclusive.
std::vector<double> uniform_grid(double start, double stop, std::size_t count);

/// Integrates i da/dt = H(t) a from t = 0 to t_end under Gaussian pulses and
/// returns the state at every time in `samples` (ascending, within [0, t_end]).
///
/// Adaptive Dormand-Prince 5(4) with its continuous extension for the
/// samples. The step controller never crosses the points T_i + k tau,
/// k = -6..6, so narrow pulses cannot be stepped over. The local error is
/// measured per complex amplitude, which keeps the step sequence identical
/// for drives that differ only by a phase rotation of the basis. The state is
/// never renormalized.
///
/// Throws NormalizationError (initial norm off by > 1e-10, or drift above the
/// threshold), StepSizeUnderflow and DomainError.
Trajectory integrate(const SystemParams& params, const GaussianSchedule& sched, const Vector4& state0,
                     double t_end, const std::vector<double>& samples,
                     const IntegratorOptions& options = {});

/// Propagator whose j-th column is the basis state e_j integrated to t.
Propagator numeric_propagator(const SystemParams& params, const GaussianSchedule& sched, double t,
                              const IntegratorOptions& options = {});

}  // namespace qkick
