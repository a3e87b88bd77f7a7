#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qkick/scan.hpp"

namespace qkick {

/// A parsed run configuration. `canonical` is the fully explicit form of
/// `spec`; parsing it again yields the same spec bit for bit.
struct RunConfig {
    ScanSpec spec;
    std::string name;
    std::string description;
    nlohmann::json canonical;
};

/// Validates and converts a configuration document. Every level rejects
/// unknown keys; wrong types, missing required keys and invalid values throw
/// ConfigError.
///
///     {
///       "name": "fig1a",                      optional, defaults to the file stem
///       "description": "...",                 optional
///       "drive": "kick" | "gaussian",
///       "system": {"J": 1, "theta_over_pi": 0.5},      or "theta" in radians
///       "pulses": {"alpha_over_beta": 3, "beta": 1, "centers": [5, 10, 15],
///                  "tau": 0.3},               tau only for gaussian drives
///       "initial_state": "11" | "phi+" | ... | [[re, im], x4],
///       "time": {"start": 0, "stop": 20, "count": 2000},
///       "sweep": {"parameter": "alpha_over_beta" | "theta_over_pi",
///                 "start": 0, "stop": 20, "count": 400},   optional
///       "tolerances": {"rtol": 1e-10, "atol": 1e-12}       optional
///     }
RunConfig parse_config(const nlohmann::json& doc, const std::string& default_name = "run");

/// Reads and parses a JSON file; the file stem is the default run name.
RunConfig load_config(const std::filesystem::path& path);

/// Fully explicit document for a spec (theta stored in radians).
nlohmann::json to_json(const ScanSpec& spec, const std::string& name, const std::string& description = {});

/// Lower-case hex SHA-256 of the compact dump of `canonical` (keys sorted).
std::string config_hash(const nlohmann::json& canonical);

}  // namespace qkick
