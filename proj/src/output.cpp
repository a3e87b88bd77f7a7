#include "qkick/output.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iterator>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "qkick/errors.hpp"

namespace qkick {

std::string series_csv(const ConcurrenceSeries& series) {
    std::string out = "t,concurrence\n";
    auto it = std::back_inserter(out);
    for (std::size_t i = 0; i < series.times.size(); ++i)
        fmt::format_to(it, "{:.17g},{:.17g}\n", series.times[i], series.values[i]);
    return out;
}

std::string grid_csv(const ScanGrid& grid) {
    const std::string axis = grid.spec.sweep ? to_string(grid.spec.sweep->name) : "row";
    std::string out = fmt::format("t,{},concurrence\n", axis);
    auto it = std::back_inserter(out);
    for (std::size_t r = 0; r < grid.axis2.size(); ++r)
        for (std::size_t c = 0; c < grid.axis1.size(); ++c)
            fmt::format_to(it, "{:.17g},{:.17g},{:.17g}\n", grid.axis1[c], grid.axis2[r], grid.at(r, c));
    return out;
}

std::string tool_version() { return QKICK_VERSION; }

nlohmann::json metadata(const RunConfig& cfg, const Provenance& prov) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    return {
        {"tool", "qkick"},
        {"version", tool_version()},
        {"command", prov.command},
        {"config", cfg.canonical},
        {"config_sha256", config_hash(cfg.canonical)},
        {"timestamp", fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now))},
        {"runtime_seconds", prov.runtime_seconds},
        {"norm_drift", prov.norm_drift},
    };
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("cannot write " + path.string());
}

ResultEnvelope write_result(const std::filesystem::path& out, const RunConfig& cfg, const std::string& csv,
                            const Provenance& prov) {
    std::filesystem::create_directories(out);
    ResultEnvelope env;
    env.payload = out / (cfg.name + ".csv");
    env.sidecar = out / (cfg.name + ".meta.json");
    const nlohmann::json meta = metadata(cfg, prov);
    env.config_hash = meta.at("config_sha256").get<std::string>();
    write_file(env.payload, csv);
    write_file(env.sidecar, meta.dump(2) + "\n");
    return env;
}

}  // namespace qkick
