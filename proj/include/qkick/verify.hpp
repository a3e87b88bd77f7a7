#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qkick {

enum class VerifyLevel { quick, full };

/// Perturbs one independent closed-form element before comparison; used as a
/// negative control for the closed-form check.
struct ElementCorruption {
    std::string element;  // "U11" ... "U24"
    double shift = 1e-6;
};

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::quick;
    std::uint64_t seed = 20240601;
    std::optional<ElementCorruption> corrupt;
};

struct CheckResult {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    /// Where the worst deviation occurred, e.g. "U12 (2 kicks)".
    std::string detail;
};

struct TauRow {
    double tau = 0.0;
    double deviation = 0.0;
    double unitarity_defect = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<TauRow> tau_table;  // full level only

    bool passed() const;
    std::string text() const;
    nlohmann::json to_json() const;
};

/// Quick: closed-form kick propagators vs composition of matrix exponentials,
/// free propagator vs expm, pure vs density concurrence, commutator closed
/// form vs brute force, integrator vs free evolution. Full adds the
/// pulse-width convergence table and more random draws.
VerifyReport run_verify(const VerifyOptions& options = {});

}  // namespace qkick
