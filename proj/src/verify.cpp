#include "qkick/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "qkick/entanglement.hpp"
#include "qkick/errors.hpp"
#include "qkick/hamiltonian.hpp"
#include "qkick/integrator.hpp"
#include "qkick/propagators.hpp"

namespace qkick {

namespace {

using std::numbers::pi;

class Draws {
public:
    explicit Draws(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

    Vector4 state() {
        std::normal_distribution<double> n;
        Vector4 v;
        for (auto& a : v.v) a = {n(gen_), n(gen_)};
        return cplx{1.0 / v.norm()} * v;
    }

private:
    std::mt19937_64 gen_;
};

const cplx minus_i{0.0, -1.0};

Matrix4 composed(const SystemParams& p, double alpha, double beta, const std::vector<double>& times, double t) {
    const Matrix4 kick = expm(minus_i * h_int({alpha, beta}, p));
    Matrix4 u = Matrix4::identity();
    double last = 0.0;
    for (double tk : times) {
        u = kick * expm(cplx{0.0, -(tk - last)} * h0(p)) * u;
        last = tk;
    }
    return expm(cplx{0.0, -(t - last)} * h0(p)) * u;
}

std::size_t element_index(const std::string& name) {
    for (std::size_t i = 0; i < ClosedFormElements::names.size(); ++i)
        if (ClosedFormElements::names[i] == name) return i;
    throw DomainError("unknown closed-form element '" + name + "'");
}

CheckResult closed_form_check(const VerifyOptions& o, Draws& rng) {
    CheckResult r{"closed_form_vs_composition", 0.0, 1e-10, false, ""};
    std::optional<std::size_t> bad;
    if (o.corrupt) bad = element_index(o.corrupt->element);
    const int draws = o.level == VerifyLevel::full ? 1000 : 200;
    for (int k = 0; k < draws; ++k) {
        const int kicks = 1 + k % 3;
        const SystemParams p{rng.uniform(-2, 2), rng.uniform(0, pi / 2)};
        const double alpha = rng.uniform(-10, 10), beta = rng.uniform(-10, 10);
        const double spacing = rng.uniform(0.5, 5);
        const double t = kicks * spacing + rng.uniform(1e-3, 5);
        ClosedFormElements e = closed_form_elements(kicks, p, alpha, beta, spacing, t);
        if (bad) e[*bad] += o.corrupt->shift;
        const Matrix4 closed = assemble(e, p.theta);
        std::vector<double> times;
        for (int j = 1; j <= kicks; ++j) times.push_back(j * spacing);
        const Matrix4 ref = composed(p, alpha, beta, times, t);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                const double d = std::abs(closed(i, j) - ref(i, j));
                // near-ties go to the earlier entry; rows 1-2 hold the independent elements
                if (d > r.deviation * (1.0 + 1e-6)) {
                    r.deviation = d;
                    r.detail = fmt::format("U{}{} ({} kick{})", i + 1, j + 1, kicks, kicks > 1 ? "s" : "");
                }
            }
    }
    r.passed = r.deviation <= r.tolerance;
    return r;
}

CheckResult free_check(Draws& rng) {
    CheckResult r{"free_vs_expm", 0.0, 1e-12, false, ""};
    for (int k = 0; k < 100; ++k) {
        const SystemParams p{rng.uniform(-2, 2), rng.uniform(0, pi / 2)};
        const double t = rng.uniform(0, 20);
        r.deviation = std::max(r.deviation,
                               max_abs_diff(free_propagator(p, t).matrix, expm(cplx{0.0, -t} * h0(p))));
    }
    r.passed = r.deviation <= r.tolerance;
    return r;
}

CheckResult concurrence_check(Draws& rng) {
    CheckResult r{"pure_vs_density", 0.0, 1e-8, false, ""};
    for (int k = 0; k < 1000; ++k) {
        const Vector4 psi = rng.state();
        r.deviation = std::max(r.deviation,
                               std::abs(concurrence_pure(psi) - concurrence_density(DensityMatrix::from_pure(psi))));
    }
    r.passed = r.deviation <= r.tolerance;
    return r;
}

CheckResult commutator_check(Draws& rng) {
    CheckResult r{"commutator_closed_form", 0.0, 1e-12, false, ""};
    for (int k = 0; k < 100; ++k) {
        const SystemParams p{rng.uniform(-3, 3), rng.uniform(-pi, pi)};
        const FieldSample late{rng.uniform(-10, 10), rng.uniform(-10, 10)};
        const FieldSample early{rng.uniform(-10, 10), rng.uniform(-10, 10)};
        const Matrix4 ha = h0(p) + h_int(late, p), hb = h0(p) + h_int(early, p);
        r.deviation = std::max(r.deviation, max_abs_diff(field_commutator(p, late, early), ha * hb - hb * ha));
    }
    r.passed = r.deviation <= r.tolerance;
    return r;
}

CheckResult integrator_check(Draws& rng) {
    CheckResult r{"integrator_vs_free", 0.0, 1e-8, false, ""};
    const SystemParams p{1.0, pi / 2};
    const GaussianSchedule none{0.0, 0.0, 0.3, {5.0, 10.0, 15.0}};
    const Vector4 psi = rng.state();
    const std::vector<double> samples = uniform_grid(0.0, 20.0, 41);
    const Trajectory tr = integrate(p, none, psi, 20.0, samples);
    for (std::size_t i = 0; i < samples.size(); ++i)
        r.deviation = std::max(r.deviation, (tr.states[i] - free_propagator(p, samples[i]).matrix * psi).norm());
    r.passed = r.deviation <= r.tolerance;
    return r;
}

CheckResult tau_sweep(std::vector<TauRow>& table) {
    CheckResult r{"pulse_width_convergence", 0.0, 2e-3, false, ""};
    const SystemParams p{1.0, pi / 2};
    const KickSchedule kicks{3.0, 1.0, {5.0, 10.0, 15.0}};
    const Matrix4 limit = three_kick_propagator(p, kicks, 17.0).matrix;
    bool monotone = true;
    for (double tau : {0.1, 0.03, 0.01, 0.003, 0.001}) {
        const Propagator u = numeric_propagator(p, {3.0, 1.0, tau, kicks.times}, 17.0);
        const double d = max_abs_diff(u.matrix, limit);
        if (!table.empty() && d >= table.back().deviation) monotone = false;
        table.push_back({tau, d, unitarity_defect(u.matrix)});
    }
    r.deviation = table.back().deviation;
    r.detail = monotone ? "monotone in tau" : "not monotone in tau";
    r.passed = monotone && r.deviation <= r.tolerance;
    return r;
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::text() const {
    std::string out;
    auto it = std::back_inserter(out);
    for (const auto& c : checks)
        fmt::format_to(it, "{:<26} {:<4}  max dev {:.3e}  tol {:.1e}{}\n", c.name, c.passed ? "PASS" : "FAIL",
                       c.deviation, c.tolerance, c.detail.empty() ? "" : "  (" + c.detail + ")");
    if (!tau_table.empty()) {
        fmt::format_to(it, "\n{:>8}  {:>12}  {:>12}\n", "J tau", "max dev", "unitarity");
        for (const auto& row : tau_table)
            fmt::format_to(it, "{:>8}  {:>12.4e}  {:>12.2e}\n", row.tau, row.deviation, row.unitarity_defect);
    }
    fmt::format_to(it, "{}\n", passed() ? "all checks passed" : "verification FAILED");
    return out;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json doc;
    doc["passed"] = passed();
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        doc["checks"].push_back({{"name", c.name},
                                 {"deviation", c.deviation},
                                 {"tolerance", c.tolerance},
                                 {"passed", c.passed},
                                 {"detail", c.detail}});
    if (!tau_table.empty()) {
        doc["tau_table"] = nlohmann::json::array();
        for (const auto& row : tau_table)
            doc["tau_table"].push_back(
                {{"tau", row.tau}, {"deviation", row.deviation}, {"unitarity_defect", row.unitarity_defect}});
    }
    return doc;
}

VerifyReport run_verify(const VerifyOptions& options) {
    Draws rng(options.seed);
    VerifyReport report;
    report.checks.push_back(closed_form_check(options, rng));
    report.checks.push_back(free_check(rng));
    report.checks.push_back(concurrence_check(rng));
    report.checks.push_back(commutator_check(rng));
    report.checks.push_back(integrator_check(rng));
    if (options.level == VerifyLevel::full) report.checks.push_back(tau_sweep(report.tau_table));
    return report;
}

}  // namespace qkick
