#include "cdgate/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cdg {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double poly_eval(const std::array<double, 6>& c, double t) {
    double v = 0.0;
    for (int k = 5; k >= 0; --k) v = v * t + c[static_cast<size_t>(k)];
    return v;
}

double poly_rate(const std::array<double, 6>& c, double t) {
    double v = 0.0;
    for (int k = 5; k >= 1; --k) v = v * t + k * c[static_cast<size_t>(k)];
    return v;
}
}  // namespace

MixingAngleSchedule::MixingAngleSchedule(MixingKind k, double step_time,
                                         std::array<double, 6> coeff)
    : kind_(k), step_time_(step_time), coeff_(coeff) {
    if (step_time <= 0.0)
        throw std::invalid_argument("MixingAngleSchedule: step_time must be positive");
}

MixingAngleSchedule MixingAngleSchedule::cubic_tdd(double tf) {
    return MixingAngleSchedule(MixingKind::CubicTdd, tf,
                               {0.0, 0.0, 3.0 * kPi / (tf * tf),
                                -2.0 * kPi / (tf * tf * tf), 0.0, 0.0});
}

MixingAngleSchedule MixingAngleSchedule::quintic_large_x(double tf) {
    const double tf2 = tf * tf, tf3 = tf2 * tf, tf4 = tf3 * tf, tf5 = tf4 * tf;
    return MixingAngleSchedule(MixingKind::QuinticLargeX, tf,
                               {kPi / 2.0, 0.0, -15.0 * kPi / tf2, 50.0 * kPi / tf3,
                                -60.0 * kPi / tf4, 24.0 * kPi / tf5});
}

MixingAngleSchedule MixingAngleSchedule::cubic_large_z(double tf) {
    return MixingAngleSchedule(MixingKind::CubicLargeZ, tf,
                               {0.0, 0.0, 3.0 * kPi / (tf * tf),
                                -2.0 * kPi / (tf * tf * tf), 0.0, 0.0});
}

AngleSample MixingAngleSchedule::eval(double t, Side side) const {
    const double T = total_time();
    if (t < 0.0 || t > T)
        throw std::domain_error("MixingAngleSchedule: t outside [0, 2 t_f]");
    double local = t;
    // the two halves are congruent copies; pick the half per the requested limit
    const bool second = (t > step_time_) || (t == step_time_ && side == Side::Right);
    if (second && t > 0.0) local = t - step_time_;
    if (t == T) local = step_time_;  // right edge: left limit of the last half
    return AngleSample{poly_eval(coeff_, local), poly_rate(coeff_, local)};
}

PhaseSchedule::PhaseSchedule(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.size() != breakpoints_.size() + 1)
        throw std::invalid_argument("PhaseSchedule: need one more value than breakpoints");
    if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()))
        throw std::invalid_argument("PhaseSchedule: breakpoints must be sorted");
}

PhaseSchedule PhaseSchedule::constant(double value) {
    return PhaseSchedule({}, {value});
}

double PhaseSchedule::eval(double t, Side side) const {
    size_t idx = 0;
    for (; idx < breakpoints_.size(); ++idx) {
        const double b = breakpoints_[idx];
        if (t < b || (t == b && side == Side::Left)) break;
    }
    return values_[idx];
}

PulseSchedule::PulseSchedule(std::function<PulseSample(double, Side)> eval,
                             double total_time, std::vector<double> breakpoints)
    : eval_(std::move(eval)), total_time_(total_time),
      breakpoints_(std::move(breakpoints)) {
    if (total_time_ <= 0.0)
        throw std::invalid_argument("PulseSchedule: total_time must be positive");
    std::sort(breakpoints_.begin(), breakpoints_.end());
    if (breakpoints_.empty() || breakpoints_.front() != 0.0)
        breakpoints_.insert(breakpoints_.begin(), 0.0);
    if (breakpoints_.back() != total_time_) breakpoints_.push_back(total_time_);
}

PulseSample PulseSchedule::eval(double t, Side side) const {
    if (t < 0.0 || t > total_time_)
        throw std::domain_error("PulseSchedule: t outside [0, T]");
    PulseSample s = eval_(t, side);
    if (!std::isfinite(s.pump.real()) || !std::isfinite(s.pump.imag()) ||
        !std::isfinite(s.stokes.real()) || !std::isfinite(s.stokes.imag()) ||
        !std::isfinite(s.detuning))
        throw std::runtime_error("PulseSchedule: non-finite sample");
    return s;
}

double cd_amplitude(double drive_amp, double drive_rate, double detuning,
                    double detuning_rate, double gap) {
    if (gap <= 0.0)
        throw RegimeError("cd_amplitude: gap must be positive");
    return (drive_rate * detuning - drive_amp * detuning_rate) / (gap * gap);
}

std::pair<Complex, Complex> modified_rabi_tdd(double bright_angle, double drive_phase,
                                              double drive_amp, double cd_amp) {
    const Complex base = (drive_amp - kI * cd_amp) * std::exp(-kI * drive_phase);
    return {base * std::sin(bright_angle), base * std::cos(bright_angle)};
}

std::pair<double, double> effective_params(double pump, double stokes, double detuning) {
    if (detuning == 0.0)
        throw RegimeError("effective_params: detuning must be nonzero");
    return {(pump * pump - stokes * stokes) / (4.0 * detuning),
            pump * stokes / (2.0 * detuning)};
}

std::pair<double, double> inverse_rabi(double delta_eff, double omega_eff,
                                       double detuning) {
    if (detuning <= 0.0)
        throw RegimeError("inverse_rabi: detuning must be positive");
    const double r = std::hypot(delta_eff, omega_eff);
    const double rad_p = 2.0 * detuning * (r + delta_eff);
    const double rad_s = 2.0 * detuning * (r - delta_eff);
    if (rad_p < 0.0 || rad_s < 0.0)
        throw RegimeError("inverse_rabi: negative radicand");
    const double pump = std::sqrt(std::max(0.0, rad_p));
    const double stokes = std::sqrt(std::max(0.0, rad_s));
    // principal roots solve the defining relations only for omega_eff >= 0;
    // reject inputs whose round-substitution drifts beyond 1e-9
    const auto [de, oe] = effective_params(pump, stokes, detuning);
    const double scale = std::max(1.0, r);
    if (std::abs(de - delta_eff) > 1e-9 * scale || std::abs(oe - omega_eff) > 1e-9 * scale)
        throw RegimeError("inverse_rabi: round-substitution mismatch (branch)");
    return {pump, stokes};
}

std::pair<double, double> cd_rabi_large(double delta_eff, double cd_rate,
                                        double detuning, CdRabiDiagnostics* diag) {
    if (detuning <= 0.0)
        throw RegimeError("cd_rabi_large: detuning must be positive");
    const double r = std::hypot(delta_eff, cd_rate);
    const double rad_p = 2.0 * detuning * (r + delta_eff);
    const double rad_s = 2.0 * detuning * (r - delta_eff);
    if (rad_p < 0.0 || rad_s < 0.0)
        throw RegimeError("cd_rabi_large: negative radicand");
    const double pump = std::sqrt(std::max(0.0, rad_p));
    const double stokes = std::sqrt(std::max(0.0, rad_s));
    const double realized = pump * stokes / (2.0 * detuning);
    const double scale = std::max(1.0, r);
    if (std::abs(realized - std::abs(cd_rate)) > 1e-9 * scale)
        throw RegimeError("cd_rabi_large: realized effective drive mismatch");
    if (diag) {
        diag->amp_over_detuning = std::max(pump, stokes) / detuning;
        diag->pump_stokes_ratio =
            stokes > 0.0 ? pump / stokes : std::numeric_limits<double>::quiet_NaN();
    }
    return {pump, stokes};
}

double bright_angle_for(GateChoice gate) {
    switch (gate) {
        case GateChoice::SigmaX: return kPi / 4.0;
        case GateChoice::SigmaZ: return kPi / 2.0;
        case GateChoice::TwoQubit: return kPi / 2.0;
    }
    throw std::invalid_argument("bright_angle_for: unknown gate");
}

namespace {

PulseSchedule build_tdd(const ScheduleRequest& req, bool resonance) {
    const double tf = req.step_time;
    const double gap = req.gap;
    const double eta = bright_angle_for(req.gate);
    const MixingAngleSchedule ang = MixingAngleSchedule::cubic_tdd(tf);
    const bool cd = req.protocol == Protocol::Counterdiabatic;
    auto eval = [ang, gap, eta, cd, resonance](double t, Side side) {
        const AngleSample a = ang.eval(t, side);
        if (resonance) {
            // one-photon resonance: amplitudes carry the counterdiabatic rate only
            const auto [p, s] = modified_rabi_tdd(eta, 0.0, a.rate, 0.0);
            return PulseSample{p, s, 0.0};
        }
        const double drive = gap * std::sin(a.angle);
        const double det = gap * std::cos(a.angle);
        const auto [p, s] = modified_rabi_tdd(eta, 0.0, drive, cd ? a.rate : 0.0);
        return PulseSample{p, s, det};
    };
    return PulseSchedule(eval, 2.0 * tf, {tf});
}

struct LargeDetControls {
    double delta_eff;
    double omega_eff;
    double omega_eff_cd;
    double phase;
};

// Quarter-interval control rows of the sigma-x construction; the sign flips
// keep omega_eff and omega_eff_cd non-negative so principal roots invert them.
LargeDetControls ld_controls_x(const MixingAngleSchedule& ang, double gap, double t,
                               Side side) {
    const double tf = ang.step_time();
    const AngleSample a = ang.eval(t, side);
    double local = t >= tf ? t - tf : t;
    if (t == tf) local = side == Side::Left ? tf : 0.0;
    if (t == 2.0 * tf) local = tf;
    const bool first_quarter =
        (local < 0.5 * tf) || (local == 0.5 * tf && side == Side::Left);
    LargeDetControls c{};
    if (first_quarter) {
        c.delta_eff = gap * std::cos(kPi + a.angle);
        c.omega_eff = gap * std::sin(a.angle);
    } else {
        c.delta_eff = gap * std::cos(a.angle);
        c.omega_eff = gap * std::sin(-a.angle);
    }
    c.omega_eff_cd = -a.rate;
    const bool mid = (t > 0.5 * tf && t < 1.5 * tf) ||
                     (t == 0.5 * tf && side == Side::Right) ||
                     (t == 1.5 * tf && side == Side::Left);
    c.phase = mid ? kPi / 2.0 : 0.0;
    return c;
}

LargeDetControls ld_controls_z(const MixingAngleSchedule& ang, double gap, double t,
                               Side side) {
    const double tf = ang.step_time();
    const AngleSample a = ang.eval(t, side);
    LargeDetControls c{};
    c.delta_eff = gap * std::cos(a.angle);
    c.omega_eff = gap * std::sin(a.angle);
    c.omega_eff_cd = a.rate;
    const bool second = (t > tf) || (t == tf && side == Side::Right);
    c.phase = second ? kPi / 2.0 : 0.0;
    return c;
}

PulseSchedule build_large_detuning(const ScheduleRequest& req) {
    const double tf = req.step_time;
    const double gap = req.gap;
    const double det = req.detuning;
    if (det <= 0.0)
        throw RegimeError("build_schedule: large detuning requires detuning > 0");
    const bool x_table = req.gate != GateChoice::SigmaZ;  // two-qubit reuses sigma-x rows
    const MixingAngleSchedule ang = x_table ? MixingAngleSchedule::quintic_large_x(tf)
                                            : MixingAngleSchedule::cubic_large_z(tf);
    const bool cd = req.protocol == Protocol::Counterdiabatic;
    auto controls = [ang, gap, x_table](double t, Side side) {
        return x_table ? ld_controls_x(ang, gap, t, side)
                       : ld_controls_z(ang, gap, t, side);
    };
    auto eval = [controls, det, cd](double t, Side side) {
        const LargeDetControls c = controls(t, side);
        if (cd) {
            const auto [p, s] = cd_rabi_large(c.delta_eff, c.omega_eff_cd, det);
            // retain the -i of the counterdiabatic coupling on the Stokes phase
            const Complex stokes = s * std::exp(kI * (c.phase + kPi / 2.0));
            return PulseSample{Complex(p, 0.0), stokes, det};
        }
        const auto [p, s] = inverse_rabi(c.delta_eff, c.omega_eff, det);
        return PulseSample{Complex(p, 0.0), s * std::exp(kI * c.phase), det};
    };
    std::vector<double> bps = x_table
        ? std::vector<double>{0.5 * tf, tf, 1.5 * tf}
        : std::vector<double>{tf};
    PulseSchedule sched(eval, 2.0 * tf, std::move(bps));
    EffectiveControls eff;
    eff.delta_eff = [controls](double t, Side s) { return controls(t, s).delta_eff; };
    eff.omega_eff = [controls](double t, Side s) { return controls(t, s).omega_eff; };
    eff.omega_eff_cd = [controls](double t, Side s) {
        return controls(t, s).omega_eff_cd;
    };
    eff.drive_phase = [controls](double t, Side s) { return controls(t, s).phase; };
    eff.gap = gap;
    sched.attach_effective(std::move(eff));
    return sched;
}

}  // namespace

PulseSchedule build_schedule(const ScheduleRequest& req) {
    if (req.step_time <= 0.0)
        throw ConfigError("build_schedule: step_time must be positive");
    if (req.gap <= 0.0)
        throw ConfigError("build_schedule: gap must be positive");
    switch (req.regime) {
        case Regime::TimeDependentDetuning:
            return build_tdd(req, false);
        case Regime::OnePhotonResonance:
            if (req.protocol == Protocol::Adiabatic)
                throw ConfigError(
                    "build_schedule: one-photon resonance has no adiabatic protocol");
            return build_tdd(req, true);
        case Regime::LargeDetuning:
            return build_large_detuning(req);
    }
    throw ConfigError("build_schedule: unknown regime");
}

}  // namespace cdg
