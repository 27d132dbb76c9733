#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cdgate/core.hpp"
#include "cdgate/pulses.hpp"

namespace cdg {

/// Lambda-system Hamiltonian in the basis {|0>, |e>, |1>}:
///   (1/2) [[0, p, 0], [p*, -2D, s*], [0, s, 0]]
OperatorMatrix h_three_level(const PulseSchedule& p, double t, Side side = Side::Right);
OperatorMatrix h_three_level(const PulseSample& s);

/// Bright-excited two-level block in the basis {|Phi>, |e>}.
OperatorMatrix h_phi_e(double drive_amp, double detuning, double drive_phase);

/// Counterdiabatic two-level term: off-diagonals -/+ i*cd*exp(-/+ i phase)/2.
OperatorMatrix h_counterdiabatic_2lv(double cd_amp, double drive_phase);

/// Parameters of the two-qutrit + resonator model. Drives and detuning are
/// time-evaluable; couplings static.
struct QubitResonatorParams {
    double g1 = 50.0;
    double g2 = 50.0;
    std::function<Complex(double, Side)> drive1;   // |1>_1 <-> |e>_1
    std::function<Complex(double, Side)> drive2;   // |0>_2 <-> |e>_2
    std::function<double(double, Side)> detuning;  // shared by all transitions
    int fock_cutoff = 2;
};

/// Index bookkeeping on the composite space (qutrit1 x qutrit2 x Fock),
/// qutrit basis order {|0>, |e>, |1>}.
class QRSubspace {
  public:
    explicit QRSubspace(int fock_cutoff);

    int dim() const { return 9 * (fock_cutoff_ + 1); }
    int fock_cutoff() const { return fock_cutoff_; }
    /// q in {0,1,2} meaning {|0>, |e>, |1>}; n in [0, fock_cutoff]
    int index(int q1, int q2, int n) const;
    /// phi_k of the paper's enumeration, k in [1, 15] (k >= 8 needs cutoff >= its photon need)
    int phi(int k) const;
    /// indices spanned from |00;0> / |11;0> initial states (5 states)
    const std::vector<int>& lambda_chain() const { return lambda_chain_; }
    /// indices spanned from |10;0> (9 states)
    const std::vector<int>& banned_chain() const { return banned_chain_; }
    std::vector<std::string> labels() const;

  private:
    int fock_cutoff_;
    std::vector<int> lambda_chain_;
    std::vector<int> banned_chain_;
};

OperatorMatrix h_qubit_resonator(const QubitResonatorParams& p, double t,
                                 Side side = Side::Right);

/// Static qubit-resonator coupling part alone (drive- and detuning-free).
OperatorMatrix h_qr_coupling(double g1, double g2, int fock_cutoff);

/// Effective three-level reduction in the basis {|phi2>, |Psi0>, |phi6>}.
OperatorMatrix h_qr_effective(const QubitResonatorParams& p, double t,
                              Side side = Side::Right);

/// Map {|phi2>, |Psi0>, |phi6>} amplitudes into the composite space.
StateVector embed_effective_state(const StateVector& v, double g1, double g2,
                                  int fock_cutoff);

/// Immutable time-evaluable Hamiltonian bound to its schedule; evaluation is
/// pure and safe for concurrent workers.
class HamiltonianModel {
  public:
    enum class Kind {
        ThreeLevelFull,
        TwoLevelPhiE,
        TwoLevelEff,
        TwoLevelEffMod,
        ThreeLevelResonantCd,
        QubitResonatorFull,
        QubitResonatorEff,
    };

    static HamiltonianModel three_level(PulseSchedule schedule);
    static HamiltonianModel qubit_resonator(QubitResonatorParams p,
                                            std::vector<double> breakpoints,
                                            double total_time);
    static HamiltonianModel qr_effective(QubitResonatorParams p,
                                         std::vector<double> breakpoints,
                                         double total_time);
    /// Escape hatch for tests and custom two-level models.
    static HamiltonianModel from_fn(Kind kind, int dim,
                                    std::function<void(double, Side, Matrix&)> fill,
                                    std::vector<double> breakpoints, double total_time);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    double total_time() const { return total_time_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    void eval_into(double t, Side side, Matrix& out) const;
    Matrix eval(double t, Side side = Side::Right) const;

  private:
    HamiltonianModel(Kind kind, int dim,
                     std::function<void(double, Side, Matrix&)> fill,
                     std::vector<double> breakpoints, double total_time,
                     std::vector<std::string> labels);

    Kind kind_;
    int dim_;
    std::function<void(double, Side, Matrix&)> fill_;
    std::vector<double> breakpoints_;
    double total_time_;
    std::vector<std::string> labels_;
};

inline const std::vector<std::string>& three_level_labels() {
    static const std::vector<std::string> labels{"0", "e", "1"};
    return labels;
}

}  // namespace cdg
