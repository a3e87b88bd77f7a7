#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "qkick/verify.hpp"

namespace qkick {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_config = 2, exit_numeric = 3 };

/// Writes the concurrence time series of a config. Errors go to `err`.
int cmd_evolve(const std::filesystem::path& config, const std::filesystem::path& out, std::ostream& log,
               std::ostream& err);

/// Writes the long-format grid of a config with a sweep section.
int cmd_scan(const std::filesystem::path& config, const std::filesystem::path& out, std::size_t threads,
             std::ostream& log, std::ostream& err);

/// Runs the oracle suite; writes verify_report.json when `out` is given.
int cmd_verify(const VerifyOptions& options, const std::optional<std::filesystem::path>& out, std::ostream& log,
               std::ostream& err);

}  // namespace qkick
