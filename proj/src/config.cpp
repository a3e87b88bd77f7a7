#include "qkick/config.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <optional>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "qkick/errors.hpp"

namespace qkick {

using nlohmann::json;

namespace {

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ConfigError(where + " must be an object");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) throw ConfigError(fmt::format("unknown key '{}' in {}", key, where));
    }
}

double number(const json& obj, const char* key, const std::string& where, std::optional<double> fallback = {}) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError(fmt::format("missing key '{}' in {}", key, where));
    }
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(fmt::format("{}.{} must be a number", where, key));
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(fmt::format("{}.{} must be finite", where, key));
    return d;
}

std::size_t count(const json& obj, const char* key, const std::string& where, std::size_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw ConfigError(fmt::format("{}.{} must be a non-negative integer", where, key));
    return v.get<std::size_t>();
}

std::string text(const json& obj, const char* key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_string()) throw ConfigError(fmt::format("{}.{} must be a string", where, key));
    return v.get<std::string>();
}

AxisGrid grid(const json& obj, const std::string& where, const AxisGrid& fallback) {
    return {number(obj, "start", where, fallback.start), number(obj, "stop", where, fallback.stop),
            count(obj, "count", where, fallback.count)};
}

NamedState initial_state(const json& v) {
    if (v.is_string()) {
        try {
            return named_state(v.get<std::string>());
        } catch (const UnknownLabel& e) {
            throw ConfigError(e.what());
        }
    }
    if (!v.is_array() || v.size() != 4)
        throw ConfigError("initial_state must be a label or four [re, im] amplitudes");
    NamedState s{StateLabel::custom, {}};
    for (std::size_t i = 0; i < 4; ++i) {
        const json& a = v[i];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
            throw ConfigError("initial_state amplitudes must be [re, im] pairs");
        s.vector[i] = cplx{a[0].get<double>(), a[1].get<double>()};
    }
    if (std::abs(s.vector.norm() - 1.0) > 1e-10) throw ConfigError("initial_state must have unit norm");
    return s;
}

json state_json(const NamedState& s) {
    if (s.label != StateLabel::custom) return to_string(s.label);
    json arr = json::array();
    for (std::size_t i = 0; i < 4; ++i) arr.push_back({s.vector[i].real(), s.vector[i].imag()});
    return arr;
}

json grid_json(const AxisGrid& g) { return {{"start", g.start}, {"stop", g.stop}, {"count", g.count}}; }

}  // namespace

RunConfig parse_config(const json& doc, const std::string& default_name) {
    only_keys(doc, "config",
              {"name", "description", "drive", "system", "pulses", "initial_state", "time", "sweep", "tolerances"});
    RunConfig cfg;
    ScanSpec& s = cfg.spec;
    cfg.name = doc.contains("name") ? text(doc, "name", "config") : default_name;
    if (doc.contains("description")) cfg.description = text(doc, "description", "config");

    if (!doc.contains("drive")) throw ConfigError("missing key 'drive' in config");
    const std::string drive = text(doc, "drive", "config");
    if (drive == "kick")
        s.drive = Drive::kick;
    else if (drive == "gaussian")
        s.drive = Drive::gaussian;
    else
        throw ConfigError("drive must be 'kick' or 'gaussian', got '" + drive + "'");

    const json system = doc.value("system", json::object());
    only_keys(system, "system", {"J", "theta", "theta_over_pi"});
    s.J = number(system, "J", "system", 1.0);
    if (system.contains("theta") && system.contains("theta_over_pi"))
        throw ConfigError("system takes either theta or theta_over_pi, not both");
    s.theta = system.contains("theta_over_pi") ? number(system, "theta_over_pi", "system") * std::numbers::pi
                                               : number(system, "theta", "system", 0.0);

    const json pulses = doc.value("pulses", json::object());
    only_keys(pulses, "pulses", {"alpha_over_beta", "beta", "centers", "tau"});
    s.alpha_over_beta = number(pulses, "alpha_over_beta", "pulses", 1.0);
    s.beta = number(pulses, "beta", "pulses", 1.0);
    if (pulses.contains("centers")) {
        const json& c = pulses.at("centers");
        if (!c.is_array()) throw ConfigError("pulses.centers must be an array of numbers");
        for (const json& t : c) {
            if (!t.is_number()) throw ConfigError("pulses.centers must be an array of numbers");
            s.centers.push_back(t.get<double>());
        }
    }
    if (s.drive == Drive::gaussian)
        s.tau = number(pulses, "tau", "pulses");
    else if (pulses.contains("tau"))
        throw ConfigError("pulses.tau applies to gaussian drives only");

    if (!doc.contains("initial_state")) throw ConfigError("missing key 'initial_state' in config");
    s.initial_state = initial_state(doc.at("initial_state"));

    const json time = doc.value("time", json::object());
    only_keys(time, "time", {"start", "stop", "count"});
    s.time = grid(time, "time", s.time);

    if (doc.contains("sweep")) {
        const json& sw = doc.at("sweep");
        only_keys(sw, "sweep", {"parameter", "start", "stop", "count"});
        if (!sw.contains("parameter")) throw ConfigError("missing key 'parameter' in sweep");
        const std::string p = text(sw, "parameter", "sweep");
        SweepAxis axis;
        if (p == "alpha_over_beta") {
            axis = {SweepParameter::alpha_over_beta, {0.0, 20.0, 400}};
        } else if (p == "theta_over_pi") {
            axis = {SweepParameter::theta_over_pi, {0.0, 0.5, 200}};
        } else {
            throw ConfigError("sweep.parameter must be alpha_over_beta or theta_over_pi, got '" + p + "'");
        }
        axis.grid = grid(sw, "sweep", axis.grid);
        s.sweep = axis;
    }

    const json tol = doc.value("tolerances", json::object());
    only_keys(tol, "tolerances", {"rtol", "atol"});
    s.integrator.rtol = number(tol, "rtol", "tolerances", s.integrator.rtol);
    s.integrator.atol = number(tol, "atol", "tolerances", s.integrator.atol);
    if (!(s.integrator.rtol > 0.0) || !(s.integrator.atol > 0.0))
        throw ConfigError("tolerances must be positive");

    try {
        s.validate();
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    cfg.canonical = to_json(s, cfg.name, cfg.description);
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    json doc;
    try {
        doc = json::parse(in, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
    }
    return parse_config(doc, path.stem().string());
}

json to_json(const ScanSpec& s, const std::string& name, const std::string& description) {
    json doc;
    doc["name"] = name;
    if (!description.empty()) doc["description"] = description;
    doc["drive"] = to_string(s.drive);
    doc["system"] = {{"J", s.J}, {"theta", s.theta}};
    doc["pulses"] = {{"alpha_over_beta", s.alpha_over_beta}, {"beta", s.beta}, {"centers", s.centers}};
    if (s.drive == Drive::gaussian) doc["pulses"]["tau"] = s.tau;
    doc["initial_state"] = state_json(s.initial_state);
    doc["time"] = grid_json(s.time);
    if (s.sweep) {
        doc["sweep"] = grid_json(s.sweep->grid);
        doc["sweep"]["parameter"] = to_string(s.sweep->name);
    }
    doc["tolerances"] = {{"rtol", s.integrator.rtol}, {"atol", s.integrator.atol}};
    return doc;
}

std::string config_hash(const json& canonical) {
    const std::string text = canonical.dump();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

}  // namespace qkick
