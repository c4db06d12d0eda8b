#pragma once
// Named sweep presets. The fig* presets are dimensionless (parameterized by
// P) and regenerate the standard curves; sodium_d1 is a physical-unit preset
// for a vapor-cell estimate on the sodium D1 line, with the atom-field
// coupling g and the resonant absorption alpha0 left as required user inputs.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rfwm/config.hpp"
#include "rfwm/params.hpp"

namespace rfwm {

// Raw physical knobs in user-facing units (MHz, 1/m, m). Kept separate from
// PhysicalParams so key=value overrides can arrive in any order before the
// unit conversion and the required-key check run.
struct PhysicalInput {
    double omega_mhz = 0.0;   // pump Rabi frequency
    double delta1_mhz = 0.0;  // one-photon detuning
    double delta2_mhz = 0.0;  // two-photon detuning
    std::optional<double> g_mhz;         // required: atom-field coupling
    std::optional<double> alpha0_per_m;  // required: resonant absorption
    double k_pump_per_m = 0.0;
    double k_quantum_per_m = 0.0;
    std::optional<double> delta_k_per_m;  // overrides k_pump - k_quantum
    double length_m = 0.0;
    double c_m_per_s = 299792458.0;

    bool operator==(const PhysicalInput&) const = default;
};

// Returns false when the key does not belong to the physical layer, so the
// caller can fall through to sweep-config keys.
inline bool apply_physical_key(PhysicalInput& in, const std::string& key,
                               const std::string& value, int line = 0) {
    using config_detail::parse_double;
    if (key == "omega_mhz") in.omega_mhz = parse_double(value, line);
    else if (key == "delta1_mhz") in.delta1_mhz = parse_double(value, line);
    else if (key == "delta2_mhz") in.delta2_mhz = parse_double(value, line);
    else if (key == "g_mhz") in.g_mhz = parse_double(value, line);
    else if (key == "alpha0_per_m") in.alpha0_per_m = parse_double(value, line);
    else if (key == "k_pump_per_m") in.k_pump_per_m = parse_double(value, line);
    else if (key == "k_quantum_per_m") in.k_quantum_per_m = parse_double(value, line);
    else if (key == "delta_k_per_m") in.delta_k_per_m = parse_double(value, line);
    else if (key == "length_m") in.length_m = parse_double(value, line);
    else if (key == "c_m_per_s") in.c_m_per_s = parse_double(value, line);
    else return false;
    return true;
}

inline PhysicalParams resolve_physical(const PhysicalInput& in) {
    std::string missing;
    if (!in.g_mhz) missing += " g_mhz";
    if (!in.alpha0_per_m) missing += " alpha0_per_m";
    if (!missing.empty())
        throw ConfigError(0, "missing required physical keys:" + missing);

    PhysicalParams p;
    p.omega_rabi = rad_per_s_from_mhz(in.omega_mhz);
    p.g_coupling = rad_per_s_from_mhz(*in.g_mhz);
    p.delta_one = rad_per_s_from_mhz(in.delta1_mhz);
    p.delta_two = rad_per_s_from_mhz(in.delta2_mhz);
    p.k_quantum = in.k_quantum_per_m;
    p.k_pump = in.delta_k_per_m ? in.k_quantum_per_m + *in.delta_k_per_m : in.k_pump_per_m;
    p.alpha0 = *in.alpha0_per_m;
    p.c_light = in.c_m_per_s;
    p.length = *in.alpha0_per_m * in.length_m;  // dimensionless z = alpha0 z0
    return p;
}

struct Preset {
    std::string name;
    SweepConfig sweep;
    std::optional<PhysicalInput> physical;
    std::vector<std::string> notes;  // emitted as "# note:" metadata lines
};

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c",
        "fig4a", "fig4b", "fig4c", "sodium_d1"};
    return names;
}

inline Preset get_preset(const std::string& name) {
    Preset pre;
    pre.name = name;

    auto family = [&](char digit) { return name.size() == 5 && name[3] == digit; };
    const bool is_fig = name.rfind("fig", 0) == 0 && name.size() == 5 &&
                        (name[4] == 'a' || name[4] == 'b' || name[4] == 'c');

    if (is_fig && (family('2') || family('3') || family('4'))) {
        switch (name[4]) {
            case 'a': pre.sweep.p_param = 10.0; break;
            case 'b': pre.sweep.p_param = 1.1; break;
            case 'c':
                pre.sweep.p_param = 0.4;  // band gap; hyperbolic growth caps the grid
                pre.sweep.grid.stop = 3.0;
                break;
        }
        if (family('2')) {
            pre.sweep.mode = SweepMode::Amplitudes;
            pre.notes.push_back("alpha = 1 is a preset assumption");
        } else if (family('3')) {
            pre.sweep.mode = SweepMode::Quadratures;
            pre.sweep.r = 0.5;
            pre.notes.push_back("r = 0.5 is a preset assumption");
        } else {
            pre.sweep.mode = SweepMode::Entanglement;
            pre.sweep.r = 0.5;
            pre.notes.push_back("r = 0.5 is a preset assumption");
        }
        return pre;
    }

    if (name == "sodium_d1") {
        PhysicalInput in;
        in.omega_mhz = 60.0;
        in.delta1_mhz = 3000.0;
        in.delta2_mhz = 50.0;
        const double k_d1 = 2.0 * std::numbers::pi / 589.6e-9;  // sodium D1 line
        in.k_pump_per_m = k_d1;
        in.k_quantum_per_m = k_d1;
        in.length_m = 0.10;
        pre.physical = in;
        pre.sweep.mode = SweepMode::Amplitudes;
        pre.notes.push_back("g and alpha0 are required inputs: pass g_mhz=... alpha0_per_m=...");
        pre.notes.push_back("omega_mhz is recorded as quoted; half- vs full-Rabi convention unspecified");
        pre.notes.push_back("k_pump = k_quantum = 2pi/589.6nm by default; set delta_k_per_m to detune");
        return pre;
    }

    throw ConfigError(0, "unknown preset '" + name + "'");
}

// Converts a physical preset into a runnable dimensionless sweep: derives
// (chi, sigma, P, regime), stamps them into the sweep config, and appends the
// derived values plus the dispersive-validity ratios as metadata notes.
inline DispersiveReport finalize_physical(Preset& pre) {
    if (!pre.physical) throw ConfigError(0, "preset '" + pre.name + "' has no physical layer");
    const PhysicalParams p = resolve_physical(*pre.physical);
    const Couplings c = derive_couplings(p);
    pre.sweep.chi = c.chi;
    pre.sweep.sigma = c.sigma;
    pre.sweep.p_param.reset();

    auto fmt = config_detail::format_double;
    pre.notes.push_back("derived chi = " + fmt(c.chi) + ", sigma = " + fmt(c.sigma));
    pre.notes.push_back("derived chi0 = " + fmt(c.chi0) + " rad/s, sigma0 = " + fmt(c.sigma0) +
                        " rad/s, delta_k = " + fmt(c.delta_k) + " 1/m");
    if (c.p_param) pre.notes.push_back("derived P = " + fmt(*c.p_param));
    pre.notes.push_back(std::string("regime: ") + to_string(c.regime));
    pre.notes.push_back("dimensionless medium length alpha0*L = " + fmt(p.length));

    const DispersiveReport rep = validate_dispersive(p, pre.sweep.n_max);
    pre.notes.push_back("dispersive ratios: pump " + fmt(rep.ratio_pump) + ", quantum " +
                        fmt(rep.ratio_quantum) + " (threshold " + fmt(rep.threshold) + ")");
    if (!rep.pass)
        pre.notes.push_back("warning: dispersive validity check failed; results are extrapolation");
    return rep;
}

}  // namespace rfwm
