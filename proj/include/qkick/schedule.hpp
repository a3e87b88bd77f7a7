#pragma once

#include <variant>
#include <vector>

namespace qkick {

/// Train of delta kicks. Both qubits are kicked at every instant in `times`,
/// qubit 1 with integrated strength `alpha`, qubit 2 with `beta`.
struct KickSchedule {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> times;  // strictly increasing, all > 0

    /// Throws DomainError when the time list is not strictly increasing and positive.
    void validate() const;
};

/// Train of Gaussian pulses of common width `tau`:
///   B1(t) = alpha / (sqrt(pi) tau) * sum_i exp(-(t - T_i)^2 / tau^2),
/// and likewise for B2 with `beta`. Each pulse integrates to alpha (beta).
struct GaussianSchedule {
    double alpha = 0.0;
    double beta = 0.0;
    double tau = 1.0;
    std::vector<double> centers;

    /// Throws DomainError when tau <= 0 or the centers are not strictly increasing.
    void validate() const;
};

using PulseSchedule = std::variant<KickSchedule, GaussianSchedule>;

}  // namespace qkick
