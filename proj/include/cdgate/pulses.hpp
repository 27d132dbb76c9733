#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cdgate/core.hpp"

namespace cdg {

/// Which one-sided limit to take when t sits exactly on a breakpoint.
enum class Side { Left, Right };

enum class Regime { TimeDependentDetuning, LargeDetuning, OnePhotonResonance };
enum class Protocol { Adiabatic, Counterdiabatic };
enum class GateChoice { SigmaX, SigmaZ, TwoQubit };

enum class MixingKind { CubicTdd, QuinticLargeX, CubicLargeZ };

struct AngleSample {
    double angle;
    double rate;
};

/// Piecewise-polynomial mixing angle on [0, 2*t_f], two congruent halves.
/// Rates are exact polynomial derivatives.
class MixingAngleSchedule {
  public:
    static MixingAngleSchedule cubic_tdd(double step_time);
    static MixingAngleSchedule quintic_large_x(double step_time);
    static MixingAngleSchedule cubic_large_z(double step_time);

    AngleSample eval(double t, Side side = Side::Right) const;

    double step_time() const { return step_time_; }
    double total_time() const { return 2.0 * step_time_; }
    MixingKind kind() const { return kind_; }

  private:
    MixingAngleSchedule(MixingKind k, double step_time,
                        std::array<double, 6> coeff);
    MixingKind kind_;
    double step_time_;
    std::array<double, 6> coeff_;  // local polynomial of each half
};

/// Piecewise-constant drive phase with sorted breakpoints.
class PhaseSchedule {
  public:
    PhaseSchedule(std::vector<double> breakpoints, std::vector<double> values);
    static PhaseSchedule constant(double value);

    double eval(double t, Side side = Side::Right) const;
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }

  private:
    std::vector<double> breakpoints_;  // interior jump times
    std::vector<double> values_;       // size = breakpoints_.size() + 1
};

/// Effective two-level controls of the large-detuning reduction.
struct EffectiveControls {
    std::function<double(double, Side)> delta_eff;
    std::function<double(double, Side)> omega_eff;
    std::function<double(double, Side)> omega_eff_cd;
    std::function<double(double, Side)> drive_phase;
    double gap = 0.0;  // constant |(delta_eff, omega_eff)| when built from a mixing angle
};

struct PulseSample {
    Complex pump;     // complex amplitude driving |0> <-> |e>
    Complex stokes;   // complex amplitude driving |1> <-> |e>
    double detuning;  // shared one-photon detuning
};

/// Time-parameterized control set on [0, T] with declared breakpoints.
class PulseSchedule {
  public:
    PulseSchedule(std::function<PulseSample(double, Side)> eval, double total_time,
                  std::vector<double> breakpoints);

    PulseSample eval(double t, Side side = Side::Right) const;
    double total_time() const { return total_time_; }
    /// Sorted, includes 0 and T plus every evaluator discontinuity.
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    const std::optional<EffectiveControls>& effective() const { return effective_; }
    void attach_effective(EffectiveControls c) { effective_ = std::move(c); }

  private:
    std::function<PulseSample(double, Side)> eval_;
    double total_time_;
    std::vector<double> breakpoints_;
    std::optional<EffectiveControls> effective_;
};

/// Counterdiabatic amplitude [d(drive)/dt * detuning - drive * d(detuning)/dt] / gap^2.
double cd_amplitude(double drive_amp, double drive_rate, double detuning,
                    double detuning_rate, double gap);

/// Modified pump/Stokes pair for the time-dependent-detuning regime.
std::pair<Complex, Complex> modified_rabi_tdd(double bright_angle, double drive_phase,
                                              double drive_amp, double cd_amp);

/// (delta_eff, omega_eff) of the adiabatic elimination: ((p^2-s^2)/4D, p*s/2D).
std::pair<double, double> effective_params(double pump, double stokes, double detuning);

/// Inverse of effective_params, principal non-negative roots; validates by
/// round-substitution and rejects mismatches beyond 1e-9.
std::pair<double, double> inverse_rabi(double delta_eff, double omega_eff,
                                       double detuning);

struct CdRabiDiagnostics {
    double amp_over_detuning;  // max(|pump|,|stokes|)/detuning  (must be << 1)
    double pump_stokes_ratio;  // pump/stokes where stokes > 0, else NaN
};

/// Counterdiabatic pump/Stokes pair for the large-detuning regime; validates
/// the realized |omega_eff| identity to 1e-9.
std::pair<double, double> cd_rabi_large(double delta_eff, double cd_rate,
                                        double detuning,
                                        CdRabiDiagnostics* diag = nullptr);

struct ScheduleRequest {
    Regime regime = Regime::TimeDependentDetuning;
    Protocol protocol = Protocol::Counterdiabatic;
    GateChoice gate = GateChoice::SigmaX;
    double step_time = 3.0;  // t_f; total time T = 2 t_f
    double gap = 1.0;        // drive-vector magnitude (1 for tdd, 0.01 large-detuning)
    double detuning = 50.0;  // static detuning, large-detuning regime only
};

/// Assemble the full control schedule for one regime/protocol/gate choice.
PulseSchedule build_schedule(const ScheduleRequest& req);

/// Bright-state mixing angle for a single-qubit gate choice (pi/4 for the
/// sigma-x family, pi/2 for sigma-z); the two-qubit construction reuses pi/2.
double bright_angle_for(GateChoice gate);

}  // namespace cdg
