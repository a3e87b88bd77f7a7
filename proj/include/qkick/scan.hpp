#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qkick/entanglement.hpp"
#include "qkick/hamiltonian.hpp"
#include "qkick/integrator.hpp"
#include "qkick/propagators.hpp"

namespace qkick {

enum class Drive { kick, gaussian };

struct AxisGrid {
    double start = 0.0;
    double stop = 1.0;
    std::size_t count = 2;

    std::vector<double> values() const;
};

enum class SweepParameter { alpha_over_beta, theta_over_pi };

struct SweepAxis {
    SweepParameter name = SweepParameter::alpha_over_beta;
    AxisGrid grid;
};

/// Everything needed to reproduce one figure panel. Kick times (or Gaussian
/// centres) are shared by both qubits; alpha = alpha_over_beta * beta.
struct ScanSpec {
    Drive drive = Drive::kick;
    double J = 1.0;
    double theta = 0.0;
    double alpha_over_beta = 1.0;
    double beta = 1.0;
    double tau = 0.0;  // gaussian only
    std::vector<double> centers;
    AxisGrid time{0.0, 20.0, 2000};
    std::optional<SweepAxis> sweep;
    NamedState initial_state = named_state(StateLabel::s11);
    IntegratorOptions integrator;

    /// Throws DomainError when a grid or the drive parameters are invalid.
    void validate() const;

    SystemParams system() const { return {J, theta}; }
    KickSchedule kick_schedule() const { return {alpha_over_beta * beta, beta, centers}; }
    GaussianSchedule gaussian_schedule() const { return {alpha_over_beta * beta, beta, tau, centers}; }

    /// Copy with the sweep parameter set to `value` and no sweep axis.
    ScanSpec row(double value) const;
};

struct ConcurrenceSeries {
    std::vector<double> times;
    std::vector<double> values;
    /// max norm drift of the underlying integration (0 for analytic rows)
    double norm_drift = 0.0;
    ScanSpec spec;
};

/// Row-major grid: concurrence[r * axis1.size() + c] belongs to axis2[r], axis1[c].
struct ScanGrid {
    std::vector<double> axis1;
    std::vector<double> axis2;
    std::vector<double> concurrence;
    double norm_drift = 0.0;
    ScanSpec spec;

    double at(std::size_t row, std::size_t col) const { return concurrence[row * axis1.size() + col]; }
};

/// Concurrence versus time. Kick drives use the analytic branch of the region
/// each sample falls in; Gaussian drives use one integration with dense output.
ConcurrenceSeries time_series(const ScanSpec& spec);

/// One time series per value of the sweep axis. Rows run on up to `threads`
/// workers (0 = hardware concurrency) and are assembled in axis order, so the
/// result does not depend on the thread count. The first row failure aborts
/// the whole grid and is rethrown.
ScanGrid grid_scan(const ScanSpec& spec, std::size_t threads = 0);

struct SteadyStats {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double spread = 0.0;
    std::size_t samples = 0;
    bool steady = false;
};

inline constexpr double steady_spread_threshold = 0.05;

/// Summary of the samples with lo < t < hi. Throws WindowError when the window
/// leaves the series range or holds fewer than 10 samples.
SteadyStats steady_value(const ConcurrenceSeries& series, double lo, double hi);

std::string to_string(Drive d);
std::string to_string(SweepParameter p);

}  // namespace qkick
