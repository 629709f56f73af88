#include "config.hpp"

#include <tricoll/errors.hpp>
#include <tricoll/io.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string_view>

namespace tricoll::app {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string& key, const std::string& text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw ConfigError("key '" + key + "' expects a number, got '" + text + "'");
    return value;
}

int to_int(const std::string& key, const std::string& text) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("key '" + key + "' expects an integer, got '" + text + "'");
    return value;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"mu", [](RunConfig& c, const auto& k, const auto& v) { c.params.mu = to_double(k, v); }},
        {"Z", [](RunConfig& c, const auto& k, const auto& v) { c.params.Z = to_double(k, v); }},
        {"q", [](RunConfig& c, const auto& k, const auto& v) { c.params.q = to_double(k, v); }},
        {"n", [](RunConfig& c, const auto& k, const auto& v) { c.grid.n = to_int(k, v); }},
        {"L", [](RunConfig& c, const auto& k, const auto& v) { c.grid.L = to_double(k, v); }},
        {"count", [](RunConfig& c, const auto& k, const auto& v) { c.count = to_int(k, v); }},
        {"tau", [](RunConfig& c, const auto& k, const auto& v) { c.tau = to_double(k, v); }},
        {"block", [](RunConfig& c, const auto& k, const auto& v) { c.block = to_int(k, v); }},
        {"dt", [](RunConfig& c, const auto& k, const auto& v) { c.control.dt = to_double(k, v); }},
        {"n_steps",
         [](RunConfig& c, const auto& k, const auto& v) { c.control.n_steps = to_int(k, v); }},
        {"substeps",
         [](RunConfig& c, const auto& k, const auto& v) { c.control.substeps = to_int(k, v); }},
        {"alpha",
         [](RunConfig& c, const auto& k, const auto& v) { c.control.alpha = to_double(k, v); }},
        {"kick_field",
         [](RunConfig& c, const auto& k, const auto& v) { c.control.kick_field = to_double(k, v); }},
        {"basis_size",
         [](RunConfig& c, const auto& k, const auto& v) { c.control.basis_size = to_int(k, v); }},
        {"target",
         [](RunConfig& c, const auto& k, const auto& v) {
             c.control.target = (v == "auto") ? -1 : to_int(k, v);
             if (v != "auto" && c.control.target < 0)
                 throw ConfigError("key 'target' expects 'auto' or a non-negative index");
         }},
        {"operator",
         [](RunConfig& c, const auto&, const auto& v) {
             try {
                 c.control.kind = parse_operator_kind(v);
             } catch (const InvalidSpec& e) {
                 throw ConfigError(e.what());
             }
         }},
        {"c_rho", [](RunConfig& c, const auto& k, const auto& v) { c.c_rho = to_double(k, v); }},
        {"c_R", [](RunConfig& c, const auto& k, const auto& v) { c.c_R = to_double(k, v); }},
        {"n_max", [](RunConfig& c, const auto& k, const auto& v) { c.n_max = to_int(k, v); }},
    };
    return table;
}

}  // namespace

void RunConfig::validate() const {
    try {
        params.validate();
        grid.validate();
    } catch (const InvalidSpec& e) {
        throw ConfigError(e.what());
    }
    if (count < 1 || static_cast<std::size_t>(count) > grid.unknowns())
        throw ConfigError("count must be in [1, (n-1)^2]");
    if (!(tau > 0.0 && tau < 1.0)) throw ConfigError("tau must lie in (0, 1)");
    if (block < 1 || block > grid.points_per_axis())
        throw ConfigError("block must be in [1, n-1]");
    if (!(control.dt > 0.0)) throw ConfigError("dt must be positive");
    if (control.n_steps < 0) throw ConfigError("n_steps must be non-negative");
    if (control.substeps < 1) throw ConfigError("substeps must be >= 1");
    if (!(control.alpha > 0.0)) throw ConfigError("alpha must be positive");
    if (control.basis_size < 1 || control.basis_size > count)
        throw ConfigError("basis_size must be in [1, count]");
    if (control.target >= control.basis_size)
        throw ConfigError("target must be below basis_size");
    if (!(c_rho >= 0.0) || !(c_R >= 0.0)) throw ConfigError("c_rho and c_R must be >= 0");
    if (n_max < 1) throw ConfigError("n_max must be >= 1");
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value) {
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError("unknown configuration key '" + key + "'");
    it->second(config, key, value);
}

RunConfig parse_config(std::istream& in, RunConfig base) {
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
        if (!seen.insert(key).second)
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        try {
            apply_setting(base, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return base;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse_config(in);
}

void write_config(std::ostream& out, const RunConfig& c) {
    out << "# tricoll effective configuration\n"
        << "mu = " << format_double(c.params.mu) << '\n'
        << "Z = " << format_double(c.params.Z) << '\n'
        << "q = " << format_double(c.params.q) << '\n'
        << "n = " << c.grid.n << '\n'
        << "L = " << format_double(c.grid.L) << '\n'
        << "count = " << c.count << '\n'
        << "tau = " << format_double(c.tau) << '\n'
        << "block = " << c.block << '\n'
        << "operator = " << to_string(c.control.kind) << '\n'
        << "c_rho = " << format_double(c.c_rho) << '\n'
        << "c_R = " << format_double(c.c_R) << '\n'
        << "n_max = " << c.n_max << '\n'
        << "dt = " << format_double(c.control.dt) << '\n'
        << "n_steps = " << c.control.n_steps << '\n'
        << "substeps = " << c.control.substeps << '\n'
        << "alpha = " << format_double(c.control.alpha) << '\n'
        << "kick_field = " << format_double(c.control.kick_field) << '\n'
        << "basis_size = " << c.control.basis_size << '\n'
        << "target = "
        << (c.control.target < 0 ? std::string("auto") : std::to_string(c.control.target)) << '\n';
}

}  // namespace tricoll::app
