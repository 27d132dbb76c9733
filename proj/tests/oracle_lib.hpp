#pragma once

// Independent brute-force / analytic oracles. Deliberately naive: these pin
// expected values for the main pipeline and must not share its code paths.

#include <string>
#include <vector>

#include "cdgate/core.hpp"
#include "cdgate/dynamics.hpp"
#include "cdgate/gates.hpp"
#include "cdgate/hamiltonians.hpp"

namespace cdg::oracle {

/// Closed-form resonant two-level transfer probability sin^2(w t / 2).
double rabi_oracle(double rabi, double t);

/// One exact step psi' = exp(-i H dt) psi via dense eigendecomposition.
Vector matrix_exp_step(const Matrix& h, const Vector& psi, double dt);

/// Exact-step propagation of a piecewise-constant (midpoint-sampled)
/// refinement of the model; an integrator independent of the RK4 path.
Vector exact_evolve(const HamiltonianModel& model, const Vector& psi0, double dt);

/// Dense-grid (n x n) evaluation of the average gate fidelity when `applied`
/// is executed instead of `gate` (both 2x2 on {|0>,|1>}).
double average_fidelity_oracle(const Matrix& gate, const Matrix& applied,
                               int n = 512);

struct PinnedConstant {
    std::string name;
    double value;
    double recomputed;
    double delta;
};

struct OracleReport {
    std::vector<PinnedConstant> entries;
    double max_delta = 0.0;
};

/// Recompute every pinned constant with the oracles and report the deltas.
OracleReport verify_pinned_constants();

}  // namespace cdg::oracle
