#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cdgate/core.hpp"
#include "cdgate/dynamics.hpp"

namespace cdg {

enum class GateFamily { U01, U01Tilde, U2, U2Prime };

/// Closed-form gate matrices. U01/U2 take (bright angle, geometric phase);
/// the tilde families take (initial mixing angle, geometric phase).
struct GateSpec {
    GateFamily family;
    double angle;
    double phase;

    static GateSpec u01(double bright_angle, double geometric_phase) {
        return {GateFamily::U01, bright_angle, geometric_phase};
    }
    static GateSpec u01_tilde(double mixing_angle0, double geometric_phase) {
        return {GateFamily::U01Tilde, mixing_angle0, geometric_phase};
    }
    static GateSpec u2(double bright_angle, double geometric_phase) {
        return {GateFamily::U2, bright_angle, geometric_phase};
    }
    static GateSpec u2_prime(double mixing_angle0, double geometric_phase) {
        return {GateFamily::U2Prime, mixing_angle0, geometric_phase};
    }
};

/// 2x2 on {|0>,|1>}, or 4x4 on {|01>,|00>,|11>,|10>} for the two-qubit families.
OperatorMatrix gate_matrix(const GateSpec& spec);

double state_fidelity(const StateVector& target, const StateVector& actual);
double state_fidelity(const StateVector& target, const DensityMatrix& actual);

/// sin(a1)|0> + cos(a1) e^{i a2}|1> embedded in the {|0>,|e>,|1>} space.
StateVector single_qubit_init(double a1, double a2);

/// The six-angle two-qubit product-basis state on {phi1, phi2, phi6, phi7}.
Vector two_qubit_init_amplitudes(const std::array<double, 6>& a);

struct QuadratureConfig {
    int n = 16;  // uniform N x N grid over [0, 2pi)^2
};

struct AverageFidelityResult {
    double final_value = 0.0;
    std::vector<double> times;
    std::vector<double> trace;  // grid-averaged fidelity vs time
};

/// Uniform-grid approximation of the average gate fidelity over the initial
/// state angles. runner maps a 3-dim initial state to its trajectory; the
/// target is the gate applied on the {|0>,|1>} amplitudes.
AverageFidelityResult average_fidelity(
    const std::function<Trajectory(const StateVector&)>& runner, const GateSpec& gate,
    const QuadratureConfig& quad = {}, int threads = 1);

struct InferredGate {
    OperatorMatrix gate;    // global phase stripped
    double leakage;         // max over columns of 1 - subspace norm
    double unitarity_error; // || U^dag U - I ||_max
};

/// Process reconstruction: propagate each computational basis ket, assemble
/// columns, strip the global phase (largest entry of column 0 real positive).
InferredGate infer_effective_gate(
    const std::function<Vector(const Vector&)>& propagate_final,
    const std::vector<int>& computational_indices, int full_dim,
    double leakage_bound = 1e-2);

}  // namespace cdg
