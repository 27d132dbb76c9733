#pragma once

// Frozen oracle-derived expected values. Each constant was computed with the
// independent oracles in oracle_lib (or by hand from the closed forms) before
// the implementation run, and is re-verified against them by test_oracles.

namespace cdg::pinned {

// average gate fidelity when the identity is executed instead of the gate,
// uniform-grid average over both initial-state angles (dense 512x512 oracle)
inline constexpr double kAvgFidelityIdentityVsSigmaX = 0.25;
inline constexpr double kAvgFidelityIdentityVsSigmaZ = 0.5;

// cubic ramp rate maximum 3*pi/(2 t_f) at t_f = 3
inline constexpr double kCubicRateMaxTf3 = 1.5707963267948966;

// counterdiabatic pump/stokes amplitude at detuning 50, zero effective
// detuning, rate 3*pi/60: sqrt(2 * 50 * 3*pi/60)
inline constexpr double kCdRabiSymmetricPoint = 3.9633272976444757;

// coupling-chain gap for g1 = g2 = 50: sqrt(g1^2 + g2^2)
inline constexpr double kQrGap = 70.710678118654755;

// large-detuning two-qubit block phase realized by the Table-2 pulse set at
// t_f = 30 (geometric pi/2 minus the pulses' a.c.-Stark phase, mod 2pi)
inline constexpr double kLargeDetTwoQubitGeometricPhase = -1.5707963267948966;

}  // namespace cdg::pinned
