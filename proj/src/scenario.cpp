#include "cdgate/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace cdg {

namespace {
constexpr double kPi = 3.14159265358979323846;

double static_frequency_scale(const ScenarioConfig& cfg) {
    double w = cfg.gap > 0.0 ? cfg.gap : 1.0;
    if (cfg.regime == Regime::LargeDetuning) w = std::max(w, cfg.detuning);
    if (cfg.two_qubit()) w = std::max(w, std::hypot(cfg.g1, cfg.g2));
    return w;
}

double effective_gap(const ScenarioConfig& cfg) {
    if (cfg.gap > 0.0) return cfg.gap;
    return cfg.regime == Regime::LargeDetuning ? 0.01 : 1.0;
}
}  // namespace

void ScenarioConfig::validate() const {
    if (step_time <= 0.0) throw ConfigError("scenario: t_f must be positive");
    if (regime == Regime::OnePhotonResonance && protocol == Protocol::Adiabatic)
        throw ConfigError(
            "scenario: the one-photon-resonance case defines no adiabatic protocol");
    if (fidelity_kind == FidelityKind::Average && two_qubit())
        throw ConfigError("scenario: average fidelity is single-qubit only");
    if (two_qubit()) {
        if (g1 <= 0.0 || g2 <= 0.0)
            throw ConfigError("scenario: couplings must be positive");
        if (fock_cutoff < 2) throw ConfigError("scenario: fock cutoff must be >= 2");
    }
    if (qubit_decay < 0.0 || resonator_decay < 0.0)
        throw ConfigError("scenario: decay rates must be non-negative");
    if (quadrature_n < 1) throw ConfigError("scenario: quadrature grid must be >= 1");
    if (dt_override < 0.0) throw ConfigError("scenario: dt override must be positive");
}

double ScenarioConfig::default_dt() const {
    return std::min(step_time / 4000.0, 0.02 / static_frequency_scale(*this));
}

GateSpec target_gate(const ScenarioConfig& cfg) {
    const bool large = cfg.regime == Regime::LargeDetuning;
    switch (cfg.gate) {
        case GateChoice::SigmaX:
            return large ? GateSpec::u01_tilde(kPi / 2, kPi / 2)
                         : GateSpec::u01(kPi / 4, kPi);
        case GateChoice::SigmaZ:
            return large ? GateSpec::u01_tilde(0.0, kPi / 2)
                         : GateSpec::u01(kPi / 2, kPi);
        case GateChoice::TwoQubit:
            // the realized large-detuning block phase carries the pulse-set's
            // a.c.-Stark contribution; -pi/2 is the simulation-pinned value
            return large ? GateSpec::u2_prime(kPi / 2, -kPi / 2)
                         : GateSpec::u2(kPi / 2, kPi);
    }
    throw ConfigError("scenario: unknown gate");
}

namespace {

ScheduleRequest schedule_request(const ScenarioConfig& cfg) {
    ScheduleRequest req;
    req.regime = cfg.regime;
    req.protocol = cfg.protocol;
    req.gate = cfg.gate;
    req.step_time = cfg.step_time;
    req.gap = effective_gap(cfg);
    req.detuning = cfg.detuning;
    return req;
}

QubitResonatorParams qr_params(const ScenarioConfig& cfg,
                               const PulseSchedule& schedule) {
    QubitResonatorParams p;
    p.g1 = cfg.g1;
    p.g2 = cfg.g2;
    p.fock_cutoff = cfg.fock_cutoff;
    const double g = std::hypot(cfg.g1, cfg.g2);
    auto sched = std::make_shared<PulseSchedule>(schedule);
    const double g1 = cfg.g1, g2 = cfg.g2;
    p.drive2 = [sched, g, g1](double t, Side side) {
        return g * sched->eval(t, side).pump / g1;
    };
    p.drive1 = [sched, g, g2](double t, Side side) {
        return -g * sched->eval(t, side).stokes / g2;
    };
    p.detuning = [sched](double t, Side side) {
        return sched->eval(t, side).detuning;
    };
    return p;
}

HamiltonianModel build_model(const ScenarioConfig& cfg, const PulseSchedule& schedule) {
    if (!cfg.two_qubit()) return HamiltonianModel::three_level(schedule);
    return HamiltonianModel::qubit_resonator(qr_params(cfg, schedule),
                                             schedule.breakpoints(),
                                             schedule.total_time());
}

std::vector<int> computational_indices(const ScenarioConfig& cfg) {
    if (!cfg.two_qubit()) return {0, 2};
    const QRSubspace sub(cfg.fock_cutoff);
    return {sub.phi(1), sub.phi(2), sub.phi(6), sub.phi(7)};
}

StateVector initial_state(const ScenarioConfig& cfg) {
    if (!cfg.two_qubit())
        return single_qubit_init(cfg.init_angles[0], cfg.init_angles[1]);
    const QRSubspace sub(cfg.fock_cutoff);
    const Vector c = two_qubit_init_amplitudes(cfg.init_angles);
    Vector v = Vector::Zero(sub.dim());
    v(sub.phi(1)) = c(0);
    v(sub.phi(2)) = c(1);
    v(sub.phi(6)) = c(2);
    v(sub.phi(7)) = c(3);
    return StateVector(std::move(v));
}

StateVector target_state(const ScenarioConfig& cfg, const StateVector& psi0) {
    const OperatorMatrix u = gate_matrix(target_gate(cfg));
    const auto comp = computational_indices(cfg);
    Vector v = psi0.vec();
    Vector in(static_cast<Eigen::Index>(comp.size()));
    for (size_t i = 0; i < comp.size(); ++i) in(static_cast<Eigen::Index>(i)) = v(comp[i]);
    const Vector out = u.mat() * in;
    for (size_t i = 0; i < comp.size(); ++i) v(comp[i]) = out(static_cast<Eigen::Index>(i));
    return StateVector(std::move(v));
}

PulseDiagnostics pulse_diagnostics(const PulseSchedule& schedule) {
    PulseDiagnostics d;
    if (!schedule.effective()) return d;
    const auto& eff = *schedule.effective();
    const double T = schedule.total_time();
    const int n = 4001;
    double max_cd = 0.0, max_delta = 0.0, max_amp = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = T * i / n;
        max_cd = std::max(max_cd, std::abs(eff.omega_eff_cd(t, Side::Right)));
        max_delta = std::max(max_delta, std::abs(eff.delta_eff(t, Side::Right)));
        const PulseSample s = schedule.eval(t, Side::Right);
        max_amp = std::max({max_amp, std::abs(s.pump), std::abs(s.stokes)});
    }
    const double det = schedule.eval(0.0, Side::Right).detuning;
    d.max_cd_amp_over_detuning = det > 0.0 ? max_amp / det : 0.0;
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0, wmin_cd = max_cd;
    for (int i = 0; i <= n; ++i) {
        const double t = T * i / n;
        const double cd = std::abs(eff.omega_eff_cd(t, Side::Right));
        if (cd < 0.5 * max_cd) continue;  // half-maximum "on" window
        wmin_cd = std::min(wmin_cd, cd);
        const PulseSample s = schedule.eval(t, Side::Right);
        const double stokes = std::abs(s.stokes);
        if (stokes <= 0.0) continue;
        const double ratio = std::abs(s.pump) / stokes;
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
    }
    d.ratio_min = rmin;
    d.ratio_max = rmax;
    d.cd_window_rate_over_max_delta_eff = max_delta > 0.0 ? wmin_cd / max_delta : 0.0;
    d.available = true;
    return d;
}

void fill_population_columns(const ScenarioConfig& cfg, const HamiltonianModel& model,
                             const Trajectory& traj, RunResult& r) {
    r.pop_labels = model.basis_labels();
    if (r.pop_labels.empty())
        for (int i = 0; i < model.dim(); ++i) r.pop_labels.push_back(std::to_string(i));
    const size_t n = traj.times.size();
    r.populations.assign(r.pop_labels.size(), std::vector<double>(n));
    r.norm_drift.assign(n, 0.0);
    for (size_t k = 0; k < n; ++k) {
        if (traj.is_density) {
            const Matrix& rho = traj.densities[k];
            for (int i = 0; i < model.dim(); ++i)
                r.populations[static_cast<size_t>(i)][k] = rho(i, i).real();
            r.norm_drift[k] = std::abs(rho.trace().real() - 1.0);
        } else {
            const Vector& psi = traj.states[k];
            for (int i = 0; i < model.dim(); ++i)
                r.populations[static_cast<size_t>(i)][k] = std::norm(psi(i));
            r.norm_drift[k] = std::abs(psi.squaredNorm() - 1.0);
        }
    }
    double keep = 0.0;
    for (int idx : computational_indices(cfg))
        keep += r.populations[static_cast<size_t>(idx)].back();
    r.leakage = 1.0 - keep;
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    RunResult r;
    r.name = cfg.name;
    r.target = target_gate(cfg);

    const PulseSchedule schedule = build_schedule(schedule_request(cfg));
    const HamiltonianModel model = build_model(cfg, schedule);
    const TimeGrid grid = TimeGrid::for_model(model, cfg.dt(), cfg.target_samples);
    if (cfg.protocol == Protocol::Counterdiabatic &&
        cfg.regime == Regime::LargeDetuning)
        r.diag = pulse_diagnostics(schedule);

    const StateVector psi0 = initial_state(cfg);
    const StateVector tgt = target_state(cfg, psi0);

    if (cfg.dissipative()) {
        const LindbladSet jumps =
            cfg.two_qubit()
                ? LindbladSet::qubit_resonator_decay(cfg.qubit_decay,
                                                     cfg.resonator_decay,
                                                     cfg.fock_cutoff)
                : LindbladSet::three_level_decay(cfg.qubit_decay);
        const Trajectory traj =
            evolve_lindblad(model, DensityMatrix::pure(psi0), jumps, grid);
        r.times = traj.times;
        r.fidelity.resize(traj.times.size());
        for (size_t k = 0; k < traj.times.size(); ++k) {
            const Complex f = tgt.vec().adjoint() * (traj.densities[k] * tgt.vec());
            r.fidelity[k] = f.real();
        }
        fill_population_columns(cfg, model, traj, r);
        r.max_norm_drift = traj.max_norm_drift;
        r.final_fidelity = r.fidelity.back();
        return r;
    }

    if (cfg.fidelity_kind == FidelityKind::Average) {
        auto runner = [&](const StateVector& s) {
            return evolve_schrodinger(model, s, grid);
        };
        const AverageFidelityResult avg = average_fidelity(
            runner, r.target, QuadratureConfig{cfg.quadrature_n}, worker_count());
        r.times = avg.times;
        r.fidelity = avg.trace;
        r.final_fidelity = avg.final_value;
        // population columns from the representative fixed-angle run
        const Trajectory rep = evolve_schrodinger(model, psi0, grid);
        fill_population_columns(cfg, model, rep, r);
        r.max_norm_drift = rep.max_norm_drift;
        return r;
    }

    const Trajectory traj = evolve_schrodinger(model, psi0, grid);
    r.times = traj.times;
    r.fidelity.resize(traj.times.size());
    for (size_t k = 0; k < traj.times.size(); ++k)
        r.fidelity[k] = std::norm(tgt.vec().dot(traj.states[k]));
    fill_population_columns(cfg, model, traj, r);
    r.max_norm_drift = traj.max_norm_drift;
    r.final_fidelity = r.fidelity.back();
    return r;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads) {
    if (spec.values.empty()) throw ConfigError("sweep: no values");
    if (!std::is_sorted(spec.values.begin(), spec.values.end()))
        throw ConfigError("sweep: values must be sorted");
    if (spec.param != "tf" && spec.param != "gamma" && spec.param != "kappa")
        throw ConfigError("sweep: param must be tf, gamma or kappa");
    const int workers =
        std::max(1, std::min<int>(threads > 0 ? threads : worker_count(),
                                  static_cast<int>(spec.values.size())));
    std::vector<SweepRow> rows(spec.values.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next.fetch_add(1); i < spec.values.size();
             i = next.fetch_add(1)) {
            ScenarioConfig cfg = spec.base;
            const double v = spec.values[i];
            if (spec.param == "tf") cfg.step_time = v;
            else if (spec.param == "gamma") cfg.qubit_decay = v;
            else cfg.resonator_decay = v;
            SweepRow row;
            row.value = v;
            try {
                const RunResult res = run_scenario(cfg);
                row.final_fidelity = res.final_fidelity;
                row.leakage = res.leakage;
            } catch (const std::exception& e) {
                row.status = std::string("error: ") + e.what();
                std::replace(row.status.begin(), row.status.end(), ',', ';');
                row.final_fidelity = std::numeric_limits<double>::quiet_NaN();
            }
            rows[i] = std::move(row);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return rows;
}

EffectiveModelReport validate_effective_model(const ScenarioConfig& cfg) {
    if (!cfg.two_qubit())
        throw ConfigError("validate_effective_model: two-qubit scenarios only");
    cfg.validate();
    EffectiveModelReport rep;
    const PulseSchedule schedule = build_schedule(schedule_request(cfg));
    const QubitResonatorParams params = qr_params(cfg, schedule);
    const HamiltonianModel full = HamiltonianModel::qubit_resonator(
        params, schedule.breakpoints(), schedule.total_time());
    const HamiltonianModel eff = HamiltonianModel::qr_effective(
        params, schedule.breakpoints(), schedule.total_time());
    const TimeGrid grid = TimeGrid::for_model(full, cfg.dt(), cfg.target_samples);
    const TimeGrid grid_eff = TimeGrid::for_model(eff, cfg.dt(), cfg.target_samples);

    Vector v0 = Vector::Zero(3);
    v0(0) = 1.0 / std::sqrt(2.0);
    v0(2) = 1.0 / std::sqrt(2.0);
    const StateVector eff0{Vector(v0)};
    const StateVector full0 =
        embed_effective_state(eff0, cfg.g1, cfg.g2, cfg.fock_cutoff);
    const Trajectory tf_full = evolve_schrodinger(full, full0, grid);
    const Trajectory tf_eff = evolve_schrodinger(eff, eff0, grid_eff);
    if (tf_full.times.size() != tf_eff.times.size())
        throw AccuracyError("validate_effective_model: sample grids disagree");
    rep.min_overlap = 1.0;
    for (size_t k = 0; k < tf_full.times.size(); ++k) {
        const StateVector es{Vector(tf_eff.states[k]), 1e-6};
        const StateVector emb =
            embed_effective_state(es, cfg.g1, cfg.g2, cfg.fock_cutoff);
        const double ov = std::norm(emb.vec().dot(tf_full.states[k]));
        rep.times.push_back(tf_full.times[k]);
        rep.overlap.push_back(ov);
        rep.min_overlap = std::min(rep.min_overlap, ov);
    }

    const QRSubspace sub(cfg.fock_cutoff);
    for (int k : {1, 7}) {
        const Trajectory t = evolve_schrodinger(
            full, StateVector::basis_state(sub.dim(), sub.phi(k)), grid);
        const double survival = std::norm(t.final_state()(sub.phi(k)));
        (k == 1 ? rep.phi1_survival : rep.phi7_survival) = survival;
    }

    // Fock-truncation guard: rerun with one extra layer, watch its population
    ScenarioConfig guard = cfg;
    guard.fock_cutoff = cfg.fock_cutoff + 1;
    const QubitResonatorParams gp = qr_params(guard, schedule);
    const HamiltonianModel gfull = HamiltonianModel::qubit_resonator(
        gp, schedule.breakpoints(), schedule.total_time());
    const QRSubspace gsub(guard.fock_cutoff);
    const StateVector g0 =
        embed_effective_state(eff0, guard.g1, guard.g2, guard.fock_cutoff);
    const Trajectory gt = evolve_schrodinger(
        gfull, g0, TimeGrid::for_model(gfull, cfg.dt(), cfg.target_samples));
    double top = 0.0;
    for (const auto& psi : gt.states) {
        double layer = 0.0;
        for (int q1 = 0; q1 < 3; ++q1)
            for (int q2 = 0; q2 < 3; ++q2)
                layer += std::norm(psi(gsub.index(q1, q2, guard.fock_cutoff)));
        top = std::max(top, layer);
    }
    rep.max_top_fock_population = top;
    return rep;
}

int worker_count() {
    if (const char* env = std::getenv("CDGATE_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_trace_csv(const std::string& path, const RunResult& r) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "t,fidelity";
    for (const auto& l : r.pop_labels) out << ",pop_" << l;
    out << ",norm_drift\n";
    for (size_t k = 0; k < r.times.size(); ++k) {
        out << fmt(r.times[k]) << ',' << fmt(r.fidelity[k]);
        for (const auto& col : r.populations) out << ',' << fmt(col[k]);
        out << ',' << fmt(r.norm_drift[k]) << '\n';
    }
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "value,final_fidelity,leakage,status\n";
    for (const auto& row : rows)
        out << fmt(row.value) << ',' << fmt(row.final_fidelity) << ','
            << fmt(row.leakage) << ',' << row.status << '\n';
}

void write_pulse_csv(const std::string& path, const PulseSchedule& s, int samples) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "t,re_pump,im_pump,re_stokes,im_stokes,detuning\n";
    for (int i = 0; i <= samples; ++i) {
        const double t = s.total_time() * i / samples;
        const PulseSample p = s.eval(t, i == samples ? Side::Left : Side::Right);
        out << fmt(t) << ',' << fmt(p.pump.real()) << ',' << fmt(p.pump.imag()) << ','
            << fmt(p.stokes.real()) << ',' << fmt(p.stokes.imag()) << ','
            << fmt(p.detuning) << '\n';
    }
}

std::vector<std::string> emit_plots(const std::string& csv_dir,
                                    const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::map<std::string, std::vector<std::string>> groups;
    if (!fs::is_directory(csv_dir))
        throw std::runtime_error("emit_plots: not a directory: " + csv_dir);
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(csv_dir))
        if (entry.path().extension() == ".csv") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
        for (const char* g : {"fig1", "fig2", "fig4", "fig5", "fig6"})
            if (fs::path(f).filename().string().find(g) != std::string::npos)
                groups[g].push_back(f);
    if (groups.empty())
        throw std::runtime_error("emit_plots: no recognizable CSV results in " + csv_dir);
    fs::create_directories(out_dir);
    std::vector<std::string> scripts;
    for (const auto& [group, paths] : groups) {
        const std::string script = (fs::path(out_dir) / ("plot_" + group + ".py")).string();
        std::ofstream out(script);
        if (!out) throw std::runtime_error("cannot open " + script);
        out << "#!/usr/bin/env python3\n"
            << "import csv\nimport os\nimport matplotlib\nmatplotlib.use('Agg')\n"
            << "import matplotlib.pyplot as plt\n\nFILES = [\n";
        for (const auto& p : paths) out << "    " << std::quoted(fs::absolute(p).string()) << ",\n";
        out << "]\n\n"
            << "fig, ax = plt.subplots(figsize=(7, 4.5))\n"
            << "for path in FILES:\n"
            << "    with open(path) as fh:\n"
            << "        rows = list(csv.DictReader(fh))\n"
            << "    label = os.path.basename(path).removesuffix('.csv')\n"
            << "    if rows and 't' in rows[0]:\n"
            << "        ax.plot([float(r['t']) for r in rows],\n"
            << "                [float(r['fidelity']) for r in rows], label=label)\n"
            << "        ax.set_xlabel('t')\n"
            << "        ax.set_ylabel('fidelity')\n"
            << "    else:\n"
            << "        ax.plot([float(r['value']) for r in rows],\n"
            << "                [float(r['final_fidelity']) for r in rows],\n"
            << "                marker='o', label=label)\n"
            << "        ax.set_xscale('log')\n"
            << "        ax.set_xlabel('swept value')\n"
            << "        ax.set_ylabel('final fidelity')\n"
            << "ax.legend(fontsize=7)\n"
            << "ax.grid(alpha=0.3)\n"
            << "fig.tight_layout()\n"
            << "fig.savefig(" << std::quoted(group + ".png") << ", dpi=160)\n"
            << "print('wrote " << group << ".png')\n";
        scripts.push_back(script);
    }
    return scripts;
}

namespace {

Preset make_preset(const char* name, Regime regime, Protocol protocol, GateChoice gate,
                   double tf, FidelityKind fk, std::optional<PresetCheck> check,
                   const char* note = "", bool slow = false, double dt_override = 0.0) {
    Preset p;
    p.config.name = name;
    p.config.regime = regime;
    p.config.protocol = protocol;
    p.config.gate = gate;
    p.config.step_time = tf;
    p.config.fidelity_kind = fk;
    p.config.slow = slow;
    p.config.dt_override = dt_override;
    if (gate == GateChoice::TwoQubit)
        p.config.init_angles = {kPi / 8, kPi / 4, 3 * kPi / 8, 3 * kPi / 8, kPi / 4,
                                kPi / 8};
    p.check = check;
    p.note = note;
    return p;
}

PresetCheck at_least(double v) {
    return {PresetCheck::Kind::MinFinalFidelity, v};
}
PresetCheck below(double v) {
    return {PresetCheck::Kind::MaxFinalFidelity, v};
}

}  // namespace

const std::map<std::string, Preset>& builtin_presets() {
    static const std::map<std::string, Preset> presets = [] {
        using R = Regime;
        using P = Protocol;
        using G = GateChoice;
        using F = FidelityKind;
        std::map<std::string, Preset> m;
        auto add = [&m](Preset p) { m.emplace(p.config.name, std::move(p)); };
        add(make_preset("fig1-sx-sagqc", R::TimeDependentDetuning, P::Counterdiabatic,
                        G::SigmaX, 3, F::Average, at_least(0.999)));
        add(make_preset("fig1-sx-agqc-tf3", R::TimeDependentDetuning, P::Adiabatic,
                        G::SigmaX, 3, F::Average, below(0.95)));
        add(make_preset("fig1-sx-agqc", R::TimeDependentDetuning, P::Adiabatic,
                        G::SigmaX, 30, F::Average, at_least(0.99)));
        add(make_preset("fig1-sz-sagqc", R::TimeDependentDetuning, P::Counterdiabatic,
                        G::SigmaZ, 3, F::Average, at_least(0.999)));
        add(make_preset("fig1-sz-agqc-tf3", R::TimeDependentDetuning, P::Adiabatic,
                        G::SigmaZ, 3, F::Average, below(0.95)));
        add(make_preset("fig1-sz-agqc", R::TimeDependentDetuning, P::Adiabatic,
                        G::SigmaZ, 30, F::Average, at_least(0.99)));
        add(make_preset("fig1-sx-res", R::OnePhotonResonance, P::Counterdiabatic,
                        G::SigmaX, 3, F::Average, at_least(0.999),
                        "matches fig1-sx-sagqc at final time"));
        add(make_preset("fig1-sz-res", R::OnePhotonResonance, P::Counterdiabatic,
                        G::SigmaZ, 3, F::Average, at_least(0.999)));
        add(make_preset("fig2-sx-sagqc", R::LargeDetuning, P::Counterdiabatic,
                        G::SigmaX, 30, F::Fixed, at_least(0.99)));
        add(make_preset("fig2-sz-sagqc", R::LargeDetuning, P::Counterdiabatic,
                        G::SigmaZ, 30, F::Fixed, at_least(0.99)));
        add(make_preset("fig2-sx-agqc", R::LargeDetuning, P::Adiabatic, G::SigmaX,
                        5000, F::Fixed, at_least(0.99), "long adiabatic run", true,
                        5e-3));
        add(make_preset("fig2-sz-agqc", R::LargeDetuning, P::Adiabatic, G::SigmaZ,
                        2500, F::Fixed, at_least(0.99), "long adiabatic run", true,
                        5e-3));
        add(make_preset("fig4-tdd", R::TimeDependentDetuning, P::Counterdiabatic,
                        G::TwoQubit, 30, F::Fixed, at_least(0.99)));
        add(make_preset("fig4-ld", R::LargeDetuning, P::Counterdiabatic, G::TwoQubit,
                        30, F::Fixed, at_least(0.99)));
        // decay bases (Fig. 5/6): fixed-state fidelity, decay set per sweep
        add(make_preset("fig5-tdd-sx-sagqc", R::TimeDependentDetuning,
                        P::Counterdiabatic, G::SigmaX, 3, F::Fixed, std::nullopt));
        add(make_preset("fig5-tdd-sx-agqc", R::TimeDependentDetuning, P::Adiabatic,
                        G::SigmaX, 30, F::Fixed, std::nullopt));
        add(make_preset("fig5-tdd-sz-sagqc", R::TimeDependentDetuning,
                        P::Counterdiabatic, G::SigmaZ, 3, F::Fixed, std::nullopt));
        add(make_preset("fig5-tdd-sz-agqc", R::TimeDependentDetuning, P::Adiabatic,
                        G::SigmaZ, 30, F::Fixed, std::nullopt));
        add(make_preset("fig5-ld-sx-sagqc", R::LargeDetuning, P::Counterdiabatic,
                        G::SigmaX, 30, F::Fixed, std::nullopt));
        add(make_preset("fig5-ld-sz-sagqc", R::LargeDetuning, P::Counterdiabatic,
                        G::SigmaZ, 30, F::Fixed, std::nullopt));
        add(make_preset("fig5-ld-sx-agqc", R::LargeDetuning, P::Adiabatic, G::SigmaX,
                        5000, F::Fixed, std::nullopt, "long adiabatic run", true,
                        5e-3));
        add(make_preset("fig5-ld-sz-agqc", R::LargeDetuning, P::Adiabatic, G::SigmaZ,
                        2500, F::Fixed, std::nullopt, "long adiabatic run", true,
                        5e-3));
        add(make_preset("fig6-tdd", R::TimeDependentDetuning, P::Counterdiabatic,
                        G::TwoQubit, 30, F::Fixed, std::nullopt));
        add(make_preset("fig6-ld", R::LargeDetuning, P::Counterdiabatic, G::TwoQubit,
                        30, F::Fixed, std::nullopt));
        return m;
    }();
    return presets;
}

namespace {

Regime parse_regime(const std::string& v) {
    if (v == "tdd") return Regime::TimeDependentDetuning;
    if (v == "large-detuning") return Regime::LargeDetuning;
    if (v == "one-photon-resonance") return Regime::OnePhotonResonance;
    throw ConfigError("unknown regime: " + v);
}

Protocol parse_protocol(const std::string& v) {
    if (v == "adiabatic") return Protocol::Adiabatic;
    if (v == "counterdiabatic") return Protocol::Counterdiabatic;
    throw ConfigError("unknown protocol: " + v);
}

GateChoice parse_gate(const std::string& v) {
    if (v == "sigma-x") return GateChoice::SigmaX;
    if (v == "sigma-z") return GateChoice::SigmaZ;
    if (v == "two-qubit") return GateChoice::TwoQubit;
    throw ConfigError("unknown gate: " + v);
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    ScenarioConfig cfg;
    cfg.name = std::filesystem::path(path).stem().string();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        auto num = [&](auto parse) {
            try {
                return parse(val);
            } catch (const std::logic_error&) {
                throw ConfigError(path + ":" + std::to_string(lineno) +
                                  ": bad value for " + key);
            }
        };
        auto dbl = [&] { return num([](const std::string& s) { return std::stod(s); }); };
        auto itg = [&] { return num([](const std::string& s) { return std::stoi(s); }); };
        if (key == "name") cfg.name = val;
        else if (key == "regime") cfg.regime = parse_regime(val);
        else if (key == "protocol") cfg.protocol = parse_protocol(val);
        else if (key == "gate") cfg.gate = parse_gate(val);
        else if (key == "tf") cfg.step_time = dbl();
        else if (key == "gap") cfg.gap = dbl();
        else if (key == "detuning") cfg.detuning = dbl();
        else if (key == "g1") cfg.g1 = dbl();
        else if (key == "g2") cfg.g2 = dbl();
        else if (key == "fock") cfg.fock_cutoff = itg();
        else if (key == "gamma") cfg.qubit_decay = dbl();
        else if (key == "kappa") cfg.resonator_decay = dbl();
        else if (key == "alpha1") cfg.init_angles[0] = dbl();
        else if (key == "alpha2") cfg.init_angles[1] = dbl();
        else if (key == "alpha3") cfg.init_angles[2] = dbl();
        else if (key == "alpha4") cfg.init_angles[3] = dbl();
        else if (key == "alpha5") cfg.init_angles[4] = dbl();
        else if (key == "alpha6") cfg.init_angles[5] = dbl();
        else if (key == "fidelity")
            cfg.fidelity_kind =
                val == "average" ? FidelityKind::Average : FidelityKind::Fixed;
        else if (key == "quad") cfg.quadrature_n = itg();
        else if (key == "dt") cfg.dt_override = dbl();
        else if (key == "samples") cfg.target_samples = itg();
        else
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": unknown key: " + key);
    }
    cfg.validate();
    return cfg;
}

}  // namespace cdg
