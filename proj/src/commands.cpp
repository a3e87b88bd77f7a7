#include "qkick/commands.hpp"

#include <chrono>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qkick/config.hpp"
#include "qkick/errors.hpp"
#include "qkick/hamiltonian.hpp"
#include "qkick/output.hpp"

namespace qkick {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Config problems exit 2, numeric failures exit 3.
template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        fmt::print(err, "config error: {}\n", e.what());
        return exit_config;
    } catch (const Error& e) {
        fmt::print(err, "numeric error: {}\n", e.what());
        return exit_numeric;
    } catch (const std::filesystem::filesystem_error& e) {
        fmt::print(err, "i/o error: {}\n", e.what());
        return exit_numeric;
    }
}

void warn_theta(const RunConfig& cfg, std::ostream& err) {
    if (cfg.spec.sweep && cfg.spec.sweep->name == SweepParameter::theta_over_pi) return;
    if (auto w = theta_range_warning(cfg.spec.system())) fmt::print(err, "warning: {}\n", *w);
}

}  // namespace

int cmd_evolve(const std::filesystem::path& config, const std::filesystem::path& out, std::ostream& log,
               std::ostream& err) {
    return guarded(err, [&] {
        const RunConfig cfg = load_config(config);
        if (cfg.spec.sweep) throw ConfigError("evolve does not take a sweep section; use scan");
        warn_theta(cfg, err);
        const auto start = Clock::now();
        const ConcurrenceSeries series = time_series(cfg.spec);
        const ResultEnvelope env =
            write_result(out, cfg, series_csv(series), {"evolve", seconds_since(start), series.norm_drift});
        fmt::print(log, "wrote {} ({} samples)\n", env.payload.string(), series.times.size());
        return int{exit_ok};
    });
}

int cmd_scan(const std::filesystem::path& config, const std::filesystem::path& out, std::size_t threads,
             std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        const RunConfig cfg = load_config(config);
        if (!cfg.spec.sweep) throw ConfigError("scan needs a sweep section");
        warn_theta(cfg, err);
        const auto start = Clock::now();
        const ScanGrid grid = grid_scan(cfg.spec, threads);
        const ResultEnvelope env =
            write_result(out, cfg, grid_csv(grid), {"scan", seconds_since(start), grid.norm_drift});
        fmt::print(log, "wrote {} ({} x {} points)\n", env.payload.string(), grid.axis2.size(), grid.axis1.size());
        return int{exit_ok};
    });
}

int cmd_verify(const VerifyOptions& options, const std::optional<std::filesystem::path>& out, std::ostream& log,
               std::ostream& err) {
    const int code = guarded(err, [&] {
        const VerifyReport report = run_verify(options);
        fmt::print(log, "{}", report.text());
        if (out) {
            std::filesystem::create_directories(*out);
            write_file(*out / "verify_report.json", report.to_json().dump(2) + "\n");
        }
        return report.passed() ? int{exit_ok} : int{exit_failed};
    });
    return code == exit_ok ? exit_ok : exit_failed;
}

}  // namespace qkick
