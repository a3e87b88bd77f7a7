#include "qkick/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "qkick/errors.hpp"

namespace qkick {

std::vector<double> AxisGrid::values() const { return uniform_grid(start, stop, count); }

void ScanSpec::validate() const {
    auto check_grid = [](const AxisGrid& g, const char* what) {
        if (g.count < 2 || !(g.start < g.stop) || !std::isfinite(g.start) || !std::isfinite(g.stop))
            throw DomainError(std::string(what) + " grid needs count >= 2 and start < stop");
    };
    check_grid(time, "time");
    if (time.start < 0.0) throw DomainError("time grid must start at t >= 0");
    if (sweep) check_grid(sweep->grid, "sweep");
    if (beta == 0.0) throw DomainError("beta must be non-zero when alpha is given as a ratio");
    if (drive == Drive::gaussian) {
        gaussian_schedule().validate();
    } else {
        kick_schedule().validate();
    }
}

ScanSpec ScanSpec::row(double value) const {
    ScanSpec r = *this;
    if (sweep) {
        if (sweep->name == SweepParameter::alpha_over_beta)
            r.alpha_over_beta = value;
        else
            r.theta = value * std::numbers::pi;
    }
    r.sweep.reset();
    return r;
}

namespace {

ConcurrenceSeries kick_series(const ScanSpec& spec, const std::vector<double>& times) {
    const SystemParams params = spec.system();
    const KickSchedule sched = spec.kick_schedule();
    ConcurrenceSeries s;
    s.times = times;
    s.values.reserve(times.size());
    for (double t : times) {
        const Propagator u = kick_propagator_at(params, sched, t);
        s.values.push_back(concurrence_pure(apply_propagator(u, spec.initial_state.vector)));
    }
    return s;
}

ConcurrenceSeries gaussian_series(const ScanSpec& spec, const std::vector<double>& times) {
    const Trajectory tr = integrate(spec.system(), spec.gaussian_schedule(), spec.initial_state.vector,
                                    times.back(), times, spec.integrator);
    ConcurrenceSeries s;
    s.times = times;
    s.values.reserve(times.size());
    for (const Vector4& a : tr.states) s.values.push_back(concurrence_pure(a));
    s.norm_drift = tr.norm_drift;
    return s;
}

}  // namespace

ConcurrenceSeries time_series(const ScanSpec& spec) {
    spec.validate();
    const std::vector<double> times = spec.time.values();
    ConcurrenceSeries s = spec.drive == Drive::kick ? kick_series(spec, times) : gaussian_series(spec, times);
    s.spec = spec;
    return s;
}

ScanGrid grid_scan(const ScanSpec& spec, std::size_t threads) {
    spec.validate();
    if (!spec.sweep) throw DomainError("grid scan needs a sweep axis");

    ScanGrid grid;
    grid.axis1 = spec.time.values();
    grid.axis2 = spec.sweep->grid.values();
    grid.spec = spec;
    const std::size_t rows = grid.axis2.size();
    const std::size_t cols = grid.axis1.size();
    grid.concurrence.assign(rows * cols, 0.0);
    std::vector<double> drifts(rows, 0.0);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load()) {
            const std::size_t r = next.fetch_add(1);
            if (r >= rows) return;
            try {
                const ConcurrenceSeries s = time_series(spec.row(grid.axis2[r]));
                std::copy(s.values.begin(), s.values.end(),
                          grid.concurrence.begin() + static_cast<std::ptrdiff_t>(r * cols));
                drifts[r] = s.norm_drift;
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, rows);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (first_error) std::rethrow_exception(first_error);
    grid.norm_drift = *std::max_element(drifts.begin(), drifts.end());
    return grid;
}

SteadyStats steady_value(const ConcurrenceSeries& series, double lo, double hi) {
    if (series.times.empty() || !(lo < hi) || lo < series.times.front() || hi > series.times.back())
        throw WindowError("window lies outside the series range");
    SteadyStats st;
    st.min = 1.0;
    st.max = 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        const double t = series.times[i];
        if (!(t > lo && t < hi)) continue;
        const double c = series.values[i];
        sum += c;
        st.min = std::min(st.min, c);
        st.max = std::max(st.max, c);
        ++st.samples;
    }
    if (st.samples < 10) throw WindowError("window holds fewer than 10 samples");
    st.mean = sum / static_cast<double>(st.samples);
    st.spread = st.max - st.min;
    st.steady = st.spread <= steady_spread_threshold;
    return st;
}

std::string to_string(Drive d) { return d == Drive::kick ? "kick" : "gaussian"; }

std::string to_string(SweepParameter p) {
    return p == SweepParameter::alpha_over_beta ? "alpha_over_beta" : "theta_over_pi";
}

}  // namespace qkick
