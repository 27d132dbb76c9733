#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdgate/dynamics.hpp"
#include "cdgate/gates.hpp"
#include "cdgate/pulses.hpp"

namespace cdg {

enum class FidelityKind { Average, Fixed };

/// One fully specified run: regime/protocol/gate plus every numeric knob.
struct ScenarioConfig {
    std::string name = "custom";
    Regime regime = Regime::TimeDependentDetuning;
    Protocol protocol = Protocol::Counterdiabatic;
    GateChoice gate = GateChoice::SigmaX;
    double step_time = 3.0;   // t_f, total time 2 t_f
    double gap = 0.0;         // 0 -> regime default (1 tdd/resonance, 0.01 large det.)
    double detuning = 50.0;   // static detuning of the large-detuning regime
    double g1 = 50.0, g2 = 50.0;
    int fock_cutoff = 2;
    double qubit_decay = 0.0;      // total single-qubit decay rate
    double resonator_decay = 0.0;  // resonator rate
    std::array<double, 6> init_angles{M_PI / 8, 3 * M_PI / 8, 0, 0, 0, 0};
    FidelityKind fidelity_kind = FidelityKind::Fixed;
    int quadrature_n = 16;
    double dt_override = 0.0;  // 0 -> default min(t_f/4000, 0.02/max static freq)
    int target_samples = 801;
    bool slow = false;  // excluded from default check suites

    void validate() const;
    double default_dt() const;
    double dt() const { return dt_override > 0.0 ? dt_override : default_dt(); }
    bool two_qubit() const { return gate == GateChoice::TwoQubit; }
    bool dissipative() const { return qubit_decay > 0.0 || resonator_decay > 0.0; }
};

struct PulseDiagnostics {
    double max_cd_amp_over_detuning = 0.0;  // large-detuning SAGQC only
    double ratio_min = 1.0, ratio_max = 1.0; // pump/stokes on the cd half-max window
    double cd_window_rate_over_max_delta_eff = 0.0;
    bool available = false;
};

struct RunResult {
    std::string name;
    std::vector<double> times;
    std::vector<double> fidelity;  // vs the scenario's target gate
    std::vector<std::vector<double>> populations;  // per basis label
    std::vector<std::string> pop_labels;
    std::vector<double> norm_drift;
    double final_fidelity = 0.0;
    double leakage = 0.0;
    double max_norm_drift = 0.0;
    PulseDiagnostics diag;
    GateSpec target;
    bool ok = true;
    std::string status = "ok";
};

/// Target gate of a scenario. The large-detuning geometric phase is the
/// simulation-pinned value (see gates module notes).
GateSpec target_gate(const ScenarioConfig& cfg);

RunResult run_scenario(const ScenarioConfig& cfg);

struct SweepSpec {
    std::string param;  // "tf" | "gamma" | "kappa"
    std::vector<double> values;
    ScenarioConfig base;
};

struct SweepRow {
    double value = 0.0;
    double final_fidelity = 0.0;
    double leakage = 0.0;
    std::string status = "ok";
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads = 0);

struct EffectiveModelReport {
    double min_overlap = 0.0;        // full vs embedded effective, over the run
    double phi1_survival = 0.0;
    double phi7_survival = 0.0;
    double max_top_fock_population = 0.0;  // n = cutoff+1 layer of the guard rerun
    std::vector<double> times;
    std::vector<double> overlap;
};

/// Appendix-style validation: propagate the full and the effective model side
/// by side, plus decoupled-state survival and the Fock-truncation guard.
EffectiveModelReport validate_effective_model(const ScenarioConfig& cfg);

/// Write plot scripts (one per recognized figure group) consuming CSVs in dir.
/// Returns the script paths; throws if no known CSVs are present.
std::vector<std::string> emit_plots(const std::string& csv_dir,
                                    const std::string& out_dir);

struct PresetCheck {
    enum class Kind { MinFinalFidelity, MaxFinalFidelity } kind;
    double threshold;
};

struct Preset {
    ScenarioConfig config;
    std::optional<PresetCheck> check;
    std::string note;
};

const std::map<std::string, Preset>& builtin_presets();

/// CSV/export helpers (deterministic formatting).
void write_trace_csv(const std::string& path, const RunResult& r);
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);
void write_pulse_csv(const std::string& path, const PulseSchedule& s, int samples);

/// Worker count: CDGATE_THREADS if set, else hardware concurrency (min 1).
int worker_count();

/// Flat key=value config file -> ScenarioConfig (unknown keys rejected).
ScenarioConfig parse_config_file(const std::string& path);

}  // namespace cdg
