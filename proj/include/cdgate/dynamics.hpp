#pragma once

#include <functional>
#include <vector>

#include "cdgate/core.hpp"
#include "cdgate/hamiltonians.hpp"

namespace cdg {

/// Fixed-step integration grid; nodes land exactly on every breakpoint.
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    double dt = 0.0;
    std::vector<double> breakpoints;  // interior discontinuities, sorted
    int target_samples = 801;

    static TimeGrid for_model(const HamiltonianModel& m, double dt,
                              int target_samples = 801);
    /// per-segment step counts realizing dt (rounded up per segment)
    std::vector<std::pair<double, double>> segments() const;
    void validate() const;
};

/// Jump operators realized as sqrt(rate) * op.
class LindbladSet {
  public:
    LindbladSet() = default;
    LindbladSet(std::vector<OperatorMatrix> ops, std::vector<double> rates);

    /// sqrt(G/2)|0><e| and sqrt(G/2)|1><e| on the {|0>,|e>,|1>} basis
    static LindbladSet three_level_decay(double total_rate);
    /// the four qubit jump ops at rate G/2 each plus sqrt(kappa) a
    static LindbladSet qubit_resonator_decay(double qubit_rate, double resonator_rate,
                                             int fock_cutoff);

    bool empty() const { return scaled_.empty(); }
    int dim() const { return scaled_.empty() ? 0 : static_cast<int>(scaled_[0].rows()); }
    const std::vector<Matrix>& scaled_ops() const { return scaled_; }
    const Matrix& damping() const { return damping_; }  // sum L^dag L

  private:
    std::vector<Matrix> scaled_;
    Matrix damping_;
};

struct EvolveOptions {
    double norm_tol = 1e-8;           // pure runs: | ||psi||^2 - 1 | bound
    double trace_tol = 1e-7;          // density runs
    double herm_residual_tol = 1e-10; // antisymmetric part before symmetrization
    double negativity_tol = 1e-6;     // min eigenvalue >= -negativity_tol at samples
    bool check_positivity = true;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Vector> states;      // pure runs
    std::vector<Matrix> densities;   // dissipative runs
    bool is_density = false;
    double max_norm_drift = 0.0;     // max | ||psi||^2 - 1 |  (or |tr rho - 1|)
    double final_norm_drift = 0.0;
    double max_herm_residual = 0.0;  // density runs
    double min_sample_eigenvalue = 0.0;

    const Vector& final_state() const { return states.back(); }
    const Matrix& final_density() const { return densities.back(); }
};

/// Classical fixed-step RK4 of i d/dt psi = H psi per smooth segment.
/// No renormalization; drift is a measured diagnostic and an error beyond tol.
Trajectory evolve_schrodinger(const HamiltonianModel& model, const StateVector& psi0,
                              const TimeGrid& grid, const EvolveOptions& opt = {});

/// RK4 on the Markovian master equation; rho symmetrized each step after an
/// antisymmetry-residual check.
Trajectory evolve_lindblad(const HamiltonianModel& model, const DensityMatrix& rho0,
                           const LindbladSet& jumps, const TimeGrid& grid,
                           const EvolveOptions& opt = {});

struct EigenpathSample {
    double value;  // instantaneous eigenvalue along the followed branch
    Vector state;
};
using Eigenpath = std::function<EigenpathSample(double)>;

struct PhaseSplit {
    double dynamical;  // -integral of the eigenvalue
    double geometric;  // discrete Berry phase of the closed followed path
    double min_overlap;
};

/// Splits the phase acquired along a followed (closed) eigenpath into its
/// dynamical and geometric parts. Requires the trajectory to track the path
/// with squared overlap >= 0.99 at every sample.
PhaseSplit phase_decomposition(const Trajectory& traj, const Eigenpath& path);

}  // namespace cdg
