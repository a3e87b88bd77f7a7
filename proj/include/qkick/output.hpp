#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qkick/config.hpp"
#include "qkick/scan.hpp"

namespace qkick {

/// Header `t,concurrence`; numbers with 17 significant digits, LF endings.
std::string series_csv(const ConcurrenceSeries& series);

/// Long format, one line per grid point: `t,<sweep parameter>,concurrence`,
/// sweep rows outermost.
std::string grid_csv(const ScanGrid& grid);

/// Provenance written next to every payload.
struct Provenance {
    std::string command;
    double runtime_seconds = 0.0;
    double norm_drift = 0.0;
};

/// Sidecar document: the canonical config, its hash, tool version, UTC
/// timestamp, runtime and norm drift.
nlohmann::json metadata(const RunConfig& cfg, const Provenance& prov);

/// Files written for one run.
struct ResultEnvelope {
    std::filesystem::path payload;
    std::filesystem::path sidecar;
    std::string config_hash;
};

/// Writes `<out>/<name>.csv` and `<out>/<name>.meta.json`, creating `out`.
ResultEnvelope write_result(const std::filesystem::path& out, const RunConfig& cfg, const std::string& csv,
                            const Provenance& prov);

/// Writes `text` to `path` byte for byte. Throws Error on I/O failure.
void write_file(const std::filesystem::path& path, const std::string& text);

std::string tool_version();

}  // namespace qkick
