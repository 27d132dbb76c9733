#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cdgate/scenario.hpp"

namespace fs = std::filesystem;

namespace {

// exit codes: 0 ok, 2 config error, 3 accuracy failure, 4 check-threshold failure
constexpr int kExitConfig = 2;
constexpr int kExitAccuracy = 3;
constexpr int kExitCheck = 4;

cdg::ScenarioConfig resolve_scenario(const std::string& ref) {
    const auto& presets = cdg::builtin_presets();
    if (auto it = presets.find(ref); it != presets.end()) return it->second.config;
    if (fs::exists(ref)) return cdg::parse_config_file(ref);
    throw cdg::ConfigError("no preset or config file named '" + ref + "'");
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

void print_presets() {
    std::printf("%-22s %s\n", "preset", "description");
    for (const auto& [name, preset] : cdg::builtin_presets()) {
        std::string desc;
        switch (preset.config.regime) {
            case cdg::Regime::TimeDependentDetuning: desc = "tdd"; break;
            case cdg::Regime::LargeDetuning: desc = "large-detuning"; break;
            case cdg::Regime::OnePhotonResonance: desc = "one-photon-resonance"; break;
        }
        desc += preset.config.protocol == cdg::Protocol::Adiabatic ? ", adiabatic"
                                                                   : ", counterdiabatic";
        switch (preset.config.gate) {
            case cdg::GateChoice::SigmaX: desc += ", sigma-x"; break;
            case cdg::GateChoice::SigmaZ: desc += ", sigma-z"; break;
            case cdg::GateChoice::TwoQubit: desc += ", two-qubit"; break;
        }
        desc += ", t_f=" + std::to_string(preset.config.step_time);
        if (preset.config.slow) desc += "  [slow]";
        std::printf("%-22s %s\n", name.c_str(), desc.c_str());
    }
}

int cmd_run(const std::string& ref, const std::string& out_dir, bool check, double dt,
            int quad, int fock, bool pulses_csv) {
    cdg::ScenarioConfig cfg = resolve_scenario(ref);
    if (dt > 0) cfg.dt_override = dt;
    if (quad > 0) cfg.quadrature_n = quad;
    if (fock > 0) cfg.fock_cutoff = fock;
    cfg.validate();

    const cdg::RunResult res = cdg::run_scenario(cfg);
    std::printf("%s: final fidelity %.6f, leakage %.3e, max norm drift %.2e\n",
                cfg.name.c_str(), res.final_fidelity, res.leakage, res.max_norm_drift);
    if (res.diag.available) {
        std::printf("  pulse diagnostics: max amp/detuning %.4f, "
                    "pump/stokes in [%.4f, %.4f] on the cd window\n",
                    res.diag.max_cd_amp_over_detuning, res.diag.ratio_min,
                    res.diag.ratio_max);
    }
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        const std::string trace =
            (fs::path(out_dir) / ("trace_" + cfg.name + ".csv")).string();
        cdg::write_trace_csv(trace, res);
        std::printf("  wrote %s\n", trace.c_str());
        if (pulses_csv && !cfg.two_qubit()) {
            cdg::ScheduleRequest req;
            req.regime = cfg.regime;
            req.protocol = cfg.protocol;
            req.gate = cfg.gate;
            req.step_time = cfg.step_time;
            req.gap = cfg.gap > 0 ? cfg.gap
                      : cfg.regime == cdg::Regime::LargeDetuning ? 0.01 : 1.0;
            req.detuning = cfg.detuning;
            const std::string pf =
                (fs::path(out_dir) / ("pulses_" + cfg.name + ".csv")).string();
            cdg::write_pulse_csv(pf, cdg::build_schedule(req), 2000);
            std::printf("  wrote %s\n", pf.c_str());
        }
    }
    if (check) {
        const auto& presets = cdg::builtin_presets();
        auto it = presets.find(cfg.name);
        if (it == presets.end() || !it->second.check) {
            std::fprintf(stderr, "no check threshold known for '%s'\n", cfg.name.c_str());
            return kExitConfig;
        }
        const cdg::PresetCheck& c = *it->second.check;
        const bool pass = c.kind == cdg::PresetCheck::Kind::MinFinalFidelity
                              ? res.final_fidelity >= c.threshold
                              : res.final_fidelity < c.threshold;
        std::printf("  check: final fidelity %.6f %s %.4g -> %s\n", res.final_fidelity,
                    c.kind == cdg::PresetCheck::Kind::MinFinalFidelity ? ">=" : "<",
                    c.threshold, pass ? "PASS" : "FAIL");
        if (!pass) return kExitCheck;
    }
    return 0;
}

int cmd_sweep(const std::string& ref, const std::string& param,
              const std::string& values, const std::string& out_dir) {
    cdg::SweepSpec spec;
    spec.base = resolve_scenario(ref);
    spec.param = param;
    spec.values = parse_values(values);
    const auto rows = cdg::run_sweep(spec);
    std::printf("%-12s %-14s %-10s %s\n", param.c_str(), "final_fidelity", "leakage",
                "status");
    for (const auto& row : rows)
        std::printf("%-12g %-14.8f %-10.2e %s\n", row.value, row.final_fidelity,
                    row.leakage, row.status.c_str());
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        const std::string path =
            (fs::path(out_dir) / ("sweep_" + spec.base.name + "_" + param + ".csv"))
                .string();
        cdg::write_sweep_csv(path, rows);
        std::printf("wrote %s\n", path.c_str());
    }
    for (const auto& row : rows)
        if (row.status != "ok") return kExitAccuracy;
    return 0;
}

int cmd_validate(const std::string& ref) {
    cdg::ScenarioConfig cfg = resolve_scenario(ref);
    const cdg::EffectiveModelReport rep = cdg::validate_effective_model(cfg);
    std::printf("full-vs-effective overlap: min %.6f over the run\n", rep.min_overlap);
    std::printf("decoupled-state survival: phi1 %.9f, phi7 %.6f\n", rep.phi1_survival,
                rep.phi7_survival);
    std::printf("fock guard: max population of the extra layer %.3e\n",
                rep.max_top_fock_population);
    return 0;
}

int cmd_plots(const std::string& dir) {
    const auto scripts = cdg::emit_plots(dir, dir);
    for (const auto& s : scripts) std::printf("wrote %s\n", s.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counterdiabatic geometric-gate simulator"};
    app.require_subcommand(1);

    std::string ref, out_dir, param, values, dir;
    double dt = 0.0;
    int quad = 0, fock = 0;
    bool check = false, pulses_csv = false;

    auto* run = app.add_subcommand("run", "run one scenario preset or config file");
    run->add_option("scenario", ref, "preset name or config path")->required();
    run->add_option("--out", out_dir, "output directory for CSVs");
    run->add_flag("--check", check, "verify the preset's pinned threshold");
    run->add_option("--dt", dt, "integrator step override");
    run->add_option("--quad", quad, "average-fidelity grid size");
    run->add_option("--fock", fock, "resonator Fock cutoff");
    run->add_flag("--pulses", pulses_csv, "also export the pulse waveforms");

    auto* sweep = app.add_subcommand("sweep", "sweep tf, gamma or kappa");
    sweep->add_option("scenario", ref, "preset name or config path")->required();
    sweep->add_option("--param", param, "tf | gamma | kappa")->required();
    sweep->add_option("--values", values, "comma-separated values")->required();
    sweep->add_option("--out", out_dir, "output directory");

    auto* validate =
        app.add_subcommand("validate-effective", "full vs effective two-qubit model");
    validate->add_option("scenario", ref, "two-qubit preset or config")->required();

    auto* plots = app.add_subcommand("plots", "emit plot scripts for a results dir");
    plots->add_option("dir", dir, "directory holding result CSVs")->required();

    auto* list = app.add_subcommand("presets", "list built-in presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(ref, out_dir, check, dt, quad, fock, pulses_csv);
        if (sweep->parsed()) return cmd_sweep(ref, param, values, out_dir);
        if (validate->parsed()) return cmd_validate(ref);
        if (plots->parsed()) return cmd_plots(dir);
        if (list->parsed()) {
            print_presets();
            return 0;
        }
    } catch (const cdg::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const cdg::AccuracyError& e) {
        std::fprintf(stderr, "accuracy failure: %s\n", e.what());
        return kExitAccuracy;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
