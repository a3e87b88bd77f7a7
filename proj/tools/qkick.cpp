#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qkick/commands.hpp"
#include "qkick/output.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit Heisenberg concurrence under transverse kicks and Gaussian pulses"};
    app.set_version_flag("--version", qkick::tool_version());
    app.require_subcommand(1);

    std::string config, out = ".";
    std::size_t threads = 0;

    auto* evolve = app.add_subcommand("evolve", "concurrence time series from a config file");
    evolve->add_option("--config", config, "JSON run configuration")->required()->check(CLI::ExistingFile);
    evolve->add_option("--out", out, "output directory")->capture_default_str();

    auto* scan = app.add_subcommand("scan", "concurrence grid over time and a sweep parameter");
    scan->add_option("--config", config, "JSON run configuration")->required()->check(CLI::ExistingFile);
    scan->add_option("--out", out, "output directory")->capture_default_str();
    scan->add_option("--threads", threads, "worker threads for sweep rows (0 = all cores)")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the oracle checks");
    std::string level = "quick";
    std::optional<std::string> verify_out;
    std::optional<std::string> corrupt;
    qkick::VerifyOptions vopt;
    verify->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    verify->add_option("--out", verify_out, "directory for verify_report.json");
    verify->add_option("--seed", vopt.seed, "random seed for the draws")->capture_default_str();
    verify->add_option("--corrupt-entry", corrupt, "perturb a closed-form element (negative control)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qkick::exit_config;
    }

    if (*evolve) return qkick::cmd_evolve(config, out, std::cout, std::cerr);
    if (*scan) return qkick::cmd_scan(config, out, threads, std::cout, std::cerr);

    vopt.level = level == "full" ? qkick::VerifyLevel::full : qkick::VerifyLevel::quick;
    if (corrupt) vopt.corrupt = qkick::ElementCorruption{*corrupt};
    std::optional<std::filesystem::path> dir;
    if (verify_out) dir = *verify_out;
    return qkick::cmd_verify(vopt, dir, std::cout, std::cerr);
}
