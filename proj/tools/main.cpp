// Command-line front end: sweeps from config files, named presets with
// key=value overrides, and the dispersive-validity check.
// Exit codes: 0 success, 2 config/usage error, 3 numerical-validity failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfwm/config.hpp"
#include "rfwm/params.hpp"
#include "rfwm/presets.hpp"
#include "rfwm/sweep.hpp"

namespace {

std::pair<std::string, std::string> split_override(const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
        throw rfwm::ConfigError(0, "override must be key=value, got '" + kv + "'");
    return {kv.substr(0, eq), kv.substr(eq + 1)};
}

void run_to_output(const rfwm::SweepConfig& cfg, const std::vector<std::string>& notes) {
    if (cfg.output.empty()) {
        rfwm::run_sweep(cfg, std::cout, notes);
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw rfwm::ConfigError(0, "cannot open output path '" + cfg.output + "'");
    rfwm::run_sweep(cfg, out, notes);
    if (!out) throw rfwm::ConfigError(0, "write failed for '" + cfg.output + "'");
}

int do_sweep(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rfwm::ConfigError(0, "cannot open config '" + path + "'");
    const rfwm::SweepConfig cfg = rfwm::parse_config(in);
    run_to_output(cfg, {});
    return 0;
}

int do_preset(const std::string& name, const std::vector<std::string>& overrides, bool list) {
    if (list) {
        for (const std::string& n : rfwm::preset_names()) std::cout << n << "\n";
        return 0;
    }
    if (name.empty()) throw rfwm::ConfigError(0, "preset name required (or --list)");

    rfwm::Preset pre = rfwm::get_preset(name);
    for (const std::string& kv : overrides) {
        const auto [key, value] = split_override(kv);
        if (pre.physical && rfwm::apply_physical_key(*pre.physical, key, value)) continue;
        rfwm::apply_config_key(pre.sweep, key, value);
    }
    if (pre.physical) {
        const rfwm::DispersiveReport rep = rfwm::finalize_physical(pre);
        if (rep.ratio_pump >= 1.0 || rep.ratio_quantum >= 1.0)
            throw rfwm::NumericError("dispersive ratios reach 1; the coupled-mode model is invalid here");
        if (!rep.pass)
            std::cerr << "warning: dispersive ratios exceed the validity threshold\n";
    }
    run_to_output(pre.sweep, pre.notes);
    return 0;
}

int do_validate(const std::vector<std::string>& params) {
    rfwm::PhysicalInput in;
    int n_max = 8;
    for (const std::string& kv : params) {
        const auto [key, value] = split_override(kv);
        if (rfwm::apply_physical_key(in, key, value)) continue;
        if (key == "n_max") n_max = rfwm::config_detail::parse_int(value, 0);
        else throw rfwm::ConfigError(0, "unknown key '" + key + "'");
    }
    if (!in.g_mhz) throw rfwm::ConfigError(0, "g_mhz is required");
    if (in.delta1_mhz == 0.0 || in.delta2_mhz == 0.0)
        throw rfwm::ConfigError(0, "delta1_mhz and delta2_mhz must be nonzero");

    rfwm::PhysicalParams p;
    p.omega_rabi = rfwm::rad_per_s_from_mhz(in.omega_mhz);
    p.g_coupling = rfwm::rad_per_s_from_mhz(*in.g_mhz);
    p.delta_one = rfwm::rad_per_s_from_mhz(in.delta1_mhz);
    p.delta_two = rfwm::rad_per_s_from_mhz(in.delta2_mhz);

    const rfwm::DispersiveReport rep = rfwm::validate_dispersive(p, n_max);
    auto num = rfwm::sweep_detail::num;
    std::cout << "ratio_pump=" << num(rep.ratio_pump) << "\n"
              << "ratio_quantum=" << num(rep.ratio_quantum) << " (n_max=" << n_max << ")\n"
              << "threshold=" << num(rep.threshold) << "\n"
              << "pass=" << (rep.pass ? "true" : "false") << "\n";

    if (in.alpha0_per_m) {
        const rfwm::Couplings c = rfwm::derive_couplings(rfwm::resolve_physical(in));
        std::cout << "chi=" << num(c.chi) << "\n"
                  << "sigma=" << num(c.sigma) << "\n";
        if (c.p_param) std::cout << "P=" << num(*c.p_param) << "\n";
        std::cout << "regime=" << rfwm::to_string(c.regime) << "\n";
    }
    return rep.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupled-mode simulator: counterpropagating quantum fields in a pump-driven Raman medium"};
    app.require_subcommand(1);

    std::string config_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a sweep described by a key=value config file");
    sweep_cmd->add_option("config", config_path, "path to config file")->required();

    std::string preset_name;
    std::vector<std::string> preset_overrides;
    bool list_presets = false;
    auto* preset_cmd = app.add_subcommand("preset", "Run a named preset with optional key=value overrides");
    preset_cmd->add_option("name", preset_name, "preset name");
    preset_cmd->add_option("overrides", preset_overrides, "key=value overrides");
    preset_cmd->add_flag("--list", list_presets, "list preset names and exit");

    std::vector<std::string> validate_params;
    auto* validate_cmd =
        app.add_subcommand("validate", "Report dispersive-validity ratios for physical parameters");
    validate_cmd->add_option("params", validate_params, "key=value physical parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sweep_cmd) return do_sweep(config_path);
        if (*preset_cmd) return do_preset(preset_name, preset_overrides, list_presets);
        if (*validate_cmd) return do_validate(validate_params);
        return 2;
    } catch (const rfwm::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const rfwm::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
