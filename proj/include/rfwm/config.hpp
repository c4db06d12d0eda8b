#pragma once
// Sweep configuration: plain key=value files, '#' comments, unknown keys
// rejected with line numbers. Serialization uses %.17g so a config survives
// a serialize/parse round trip bit-exactly.

#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfwm {

enum class SweepMode { Amplitudes, Quadratures, Entanglement, RegimeMap, Elimination };

inline const char* to_string(SweepMode m) {
    switch (m) {
        case SweepMode::Amplitudes: return "amplitudes";
        case SweepMode::Quadratures: return "quadratures";
        case SweepMode::Entanglement: return "entanglement";
        case SweepMode::RegimeMap: return "regime_map";
        case SweepMode::Elimination: return "elimination";
    }
    return "unknown";
}

struct GridSpec {
    double start = 0.0;
    double stop = 6.2831853071795862;  // 2*pi
    int points = 401;

    bool operator==(const GridSpec&) const = default;

    double at(int i) const {
        if (points < 2) return start;
        return start + (stop - start) * static_cast<double>(i) / (points - 1);
    }
};

struct SweepConfig {
    SweepMode mode = SweepMode::Amplitudes;
    std::optional<double> p_param;  // sets chi = 2 - 1/p, sigma = 1
    std::optional<double> chi;      // direct dimensionless couplings
    std::optional<double> sigma;
    double r = 0.0;        // squeezing of input mode b
    double alpha = 1.0;    // coherent amplitude of input mode a
    double length = 3.0;   // interaction length for regime_map
    int steps = 3;         // elimination ladder rungs
    int n_max = 8;         // elimination photon cutoff
    GridSpec grid;
    std::string output;    // empty = stdout

    bool operator==(const SweepConfig&) const = default;
};

class ConfigError : public std::runtime_error {
  public:
    ConfigError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_ = 0;
};

namespace config_detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        if (!std::isfinite(x)) throw std::invalid_argument("not finite");
        return x;
    } catch (const std::exception&) {
        throw ConfigError(line, "expected a number, got '" + v + "'");
    }
}

inline int parse_int(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        const int x = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ConfigError(line, "expected an integer, got '" + v + "'");
    }
}

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace config_detail

inline SweepMode mode_from_string(const std::string& s, int line = 0) {
    if (s == "amplitudes") return SweepMode::Amplitudes;
    if (s == "quadratures") return SweepMode::Quadratures;
    if (s == "entanglement") return SweepMode::Entanglement;
    if (s == "regime_map") return SweepMode::RegimeMap;
    if (s == "elimination") return SweepMode::Elimination;
    throw ConfigError(line, "unknown mode '" + s + "'");
}

// Applies one key=value pair. Shared by the file parser and command-line
// overrides (line = 0 for the latter).
inline void apply_config_key(SweepConfig& cfg, const std::string& key,
                             const std::string& value, int line = 0) {
    using config_detail::parse_double;
    using config_detail::parse_int;
    if (key == "mode") {
        cfg.mode = mode_from_string(value, line);
    } else if (key == "p") {
        cfg.p_param = parse_double(value, line);
    } else if (key == "chi") {
        cfg.chi = parse_double(value, line);
    } else if (key == "sigma") {
        cfg.sigma = parse_double(value, line);
    } else if (key == "r") {
        cfg.r = parse_double(value, line);
    } else if (key == "alpha") {
        cfg.alpha = parse_double(value, line);
    } else if (key == "length") {
        cfg.length = parse_double(value, line);
    } else if (key == "steps") {
        cfg.steps = parse_int(value, line);
    } else if (key == "n_max") {
        cfg.n_max = parse_int(value, line);
    } else if (key == "grid_start") {
        cfg.grid.start = parse_double(value, line);
    } else if (key == "grid_stop") {
        cfg.grid.stop = parse_double(value, line);
    } else if (key == "grid_points") {
        cfg.grid.points = parse_int(value, line);
    } else if (key == "output") {
        cfg.output = value;
    } else {
        throw ConfigError(line, "unknown key '" + key + "'");
    }
}

// Structural checks that do not depend on the sweep being run.
inline void validate_config(const SweepConfig& cfg) {
    if (cfg.r < 0.0) throw ConfigError(0, "r must be >= 0");
    if (cfg.grid.points < 2) throw ConfigError(0, "grid_points must be >= 2");
    if (!(cfg.grid.start >= 0.0)) throw ConfigError(0, "grid_start must be >= 0");
    if (!(cfg.grid.stop > cfg.grid.start))
        throw ConfigError(0, "grid_stop must exceed grid_start");
    if (cfg.p_param && (cfg.chi || cfg.sigma))
        throw ConfigError(0, "give either p or chi/sigma, not both");
    if (cfg.chi.has_value() != cfg.sigma.has_value())
        throw ConfigError(0, "chi and sigma must be given together");
    if (cfg.mode == SweepMode::Elimination) {
        if (cfg.steps < 1 || cfg.steps > 4)
            throw ConfigError(0, "steps must be in [1, 4]");
        if (cfg.n_max < 2) throw ConfigError(0, "n_max must be >= 2");
    }
    if (cfg.mode == SweepMode::RegimeMap && !(cfg.length > 0.0))
        throw ConfigError(0, "length must be > 0");
    const bool needs_couplings = cfg.mode == SweepMode::Amplitudes ||
                                 cfg.mode == SweepMode::Quadratures ||
                                 cfg.mode == SweepMode::Entanglement;
    if (needs_couplings && !cfg.p_param && !cfg.chi)
        throw ConfigError(0, "mode requires p or chi/sigma");
}

inline SweepConfig parse_config(std::istream& in, SweepConfig base = {}) {
    std::string raw;
    int line = 0;
    bool mode_seen = false;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = config_detail::trim(raw);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected key=value");
        const std::string key = config_detail::trim(s.substr(0, eq));
        const std::string value = config_detail::trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError(line, "empty key");
        apply_config_key(base, key, value, line);
        if (key == "mode") mode_seen = true;
    }
    if (!mode_seen) throw ConfigError(0, "mode is required");
    return base;
}

inline std::vector<std::string> serialize_config(const SweepConfig& cfg) {
    using config_detail::format_double;
    std::vector<std::string> out;
    out.push_back(std::string("mode=") + to_string(cfg.mode));
    if (cfg.p_param) out.push_back("p=" + format_double(*cfg.p_param));
    if (cfg.chi) out.push_back("chi=" + format_double(*cfg.chi));
    if (cfg.sigma) out.push_back("sigma=" + format_double(*cfg.sigma));
    out.push_back("r=" + format_double(cfg.r));
    out.push_back("alpha=" + format_double(cfg.alpha));
    out.push_back("length=" + format_double(cfg.length));
    out.push_back("steps=" + std::to_string(cfg.steps));
    out.push_back("n_max=" + std::to_string(cfg.n_max));
    out.push_back("grid_start=" + format_double(cfg.grid.start));
    out.push_back("grid_stop=" + format_double(cfg.grid.stop));
    out.push_back("grid_points=" + std::to_string(cfg.grid.points));
    if (!cfg.output.empty()) out.push_back("output=" + cfg.output);
    return out;
}

}  // namespace rfwm
