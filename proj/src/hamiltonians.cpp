#include "cdgate/hamiltonians.hpp"

#include <cmath>

namespace cdg {

namespace {
constexpr Complex kI{0.0, 1.0};
}

OperatorMatrix h_three_level(const PulseSample& s) {
    Matrix h = Matrix::Zero(3, 3);
    h(0, 1) = 0.5 * s.pump;
    h(1, 0) = 0.5 * std::conj(s.pump);
    h(1, 1) = -s.detuning;
    h(2, 1) = 0.5 * s.stokes;
    h(1, 2) = 0.5 * std::conj(s.stokes);
    return OperatorMatrix(std::move(h), three_level_labels());
}

OperatorMatrix h_three_level(const PulseSchedule& p, double t, Side side) {
    return h_three_level(p.eval(t, side));
}

OperatorMatrix h_phi_e(double drive_amp, double detuning, double drive_phase) {
    Matrix h(2, 2);
    const Complex off = 0.5 * drive_amp * std::exp(-kI * drive_phase);
    h(0, 0) = 0.5 * detuning;
    h(0, 1) = off;
    h(1, 0) = std::conj(off);
    h(1, 1) = -0.5 * detuning;
    return OperatorMatrix(std::move(h), {"Phi", "e"});
}

OperatorMatrix h_counterdiabatic_2lv(double cd_amp, double drive_phase) {
    Matrix h = Matrix::Zero(2, 2);
    h(0, 1) = -0.5 * kI * cd_amp * std::exp(-kI * drive_phase);
    h(1, 0) = std::conj(h(0, 1));
    return OperatorMatrix(std::move(h), {"Phi", "e"});
}

QRSubspace::QRSubspace(int fock_cutoff) : fock_cutoff_(fock_cutoff) {
    if (fock_cutoff_ < 2)
        throw ConfigError("QRSubspace: fock_cutoff must be >= 2");
    lambda_chain_ = {phi(2), phi(3), phi(4), phi(5), phi(6)};
    for (int k = 7; k <= 15; ++k) banned_chain_.push_back(phi(k));
}

int QRSubspace::index(int q1, int q2, int n) const {
    if (q1 < 0 || q1 > 2 || q2 < 0 || q2 > 2 || n < 0 || n > fock_cutoff_)
        throw DimensionError("QRSubspace: index out of range");
    return (q1 * 3 + q2) * (fock_cutoff_ + 1) + n;
}

int QRSubspace::phi(int k) const {
    // qutrit codes: 0 -> |0>, 1 -> |e>, 2 -> |1>
    switch (k) {
        case 1: return index(0, 2, 0);
        case 2: return index(0, 0, 0);
        case 3: return index(0, 1, 0);
        case 4: return index(0, 2, 1);
        case 5: return index(1, 2, 0);
        case 6: return index(2, 2, 0);
        case 7: return index(2, 0, 0);
        case 8: return index(1, 0, 0);
        case 9: return index(2, 1, 0);
        case 10: return index(0, 0, 1);
        case 11: return index(1, 1, 0);
        case 12: return index(2, 2, 1);
        case 13: return index(0, 1, 1);
        case 14: return index(1, 2, 1);
        case 15: return index(0, 2, 2);
    }
    throw DimensionError("QRSubspace: phi index must be in [1, 15]");
}

std::vector<std::string> QRSubspace::labels() const {
    static const char* q[3] = {"0", "e", "1"};
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(dim()));
    for (int q1 = 0; q1 < 3; ++q1)
        for (int q2 = 0; q2 < 3; ++q2)
            for (int n = 0; n <= fock_cutoff_; ++n)
                out.push_back(std::string(q[q1]) + q[q2] + std::to_string(n));
    return out;
}

OperatorMatrix h_qr_coupling(double g1, double g2, int fock_cutoff) {
    const QRSubspace sub(fock_cutoff);
    const int nf = fock_cutoff + 1;
    Matrix h = Matrix::Zero(sub.dim(), sub.dim());
    // g1 (|e>_1<0| a + |0>_1<e| a^dag),  g2 (|e>_2<1| a + |1>_2<e| a^dag)
    for (int q2 = 0; q2 < 3; ++q2)
        for (int n = 1; n < nf; ++n) {
            const double amp = g1 * std::sqrt(static_cast<double>(n));
            const int from = sub.index(0, q2, n);
            const int to = sub.index(1, q2, n - 1);
            h(to, from) += amp;
            h(from, to) += amp;
        }
    for (int q1 = 0; q1 < 3; ++q1)
        for (int n = 1; n < nf; ++n) {
            const double amp = g2 * std::sqrt(static_cast<double>(n));
            const int from = sub.index(q1, 2, n);
            const int to = sub.index(q1, 1, n - 1);
            h(to, from) += amp;
            h(from, to) += amp;
        }
    return OperatorMatrix(std::move(h), sub.labels());
}

OperatorMatrix h_qubit_resonator(const QubitResonatorParams& p, double t, Side side) {
    const QRSubspace sub(p.fock_cutoff);
    Matrix h = h_qr_coupling(p.g1, p.g2, p.fock_cutoff).mat();
    const Complex o1 = p.drive1 ? p.drive1(t, side) : Complex{};
    const Complex o2 = p.drive2 ? p.drive2(t, side) : Complex{};
    const double det = p.detuning ? p.detuning(t, side) : 0.0;
    const int nf = p.fock_cutoff + 1;
    for (int q2 = 0; q2 < 3; ++q2)
        for (int n = 0; n < nf; ++n) {
            const int e1 = sub.index(1, q2, n);
            const int one1 = sub.index(2, q2, n);
            h(one1, e1) += 0.5 * o1;            // (O1/2)|1>_1<e|
            h(e1, one1) += 0.5 * std::conj(o1);
            h(e1, e1) += -det;
        }
    for (int q1 = 0; q1 < 3; ++q1)
        for (int n = 0; n < nf; ++n) {
            const int e2 = sub.index(q1, 1, n);
            const int zero2 = sub.index(q1, 0, n);
            h(zero2, e2) += 0.5 * o2;           // (O2/2)|0>_2<e|
            h(e2, zero2) += 0.5 * std::conj(o2);
            h(e2, e2) += -det;
        }
    return OperatorMatrix(std::move(h), sub.labels());
}

OperatorMatrix h_qr_effective(const QubitResonatorParams& p, double t, Side side) {
    const double g = std::hypot(p.g1, p.g2);
    const Complex o1 = p.drive1 ? p.drive1(t, side) : Complex{};
    const Complex o2 = p.drive2 ? p.drive2(t, side) : Complex{};
    const double det = p.detuning ? p.detuning(t, side) : 0.0;
    // projection of the drive onto the zero-eigenvalue chain {phi2, Psi0, phi6}
    Matrix h = Matrix::Zero(3, 3);
    h(0, 1) = 0.5 * p.g1 * o2 / g;
    h(1, 0) = std::conj(h(0, 1));
    h(2, 1) = -0.5 * p.g2 * o1 / g;
    h(1, 2) = std::conj(h(2, 1));
    h(1, 1) = -det;
    return OperatorMatrix(std::move(h), {"phi2", "Psi0", "phi6"});
}

StateVector embed_effective_state(const StateVector& v, double g1, double g2,
                                  int fock_cutoff) {
    if (v.dim() != 3)
        throw DimensionError("embed_effective_state: expected 3 amplitudes");
    const QRSubspace sub(fock_cutoff);
    const double g = std::hypot(g1, g2);
    Vector out = Vector::Zero(sub.dim());
    out(sub.phi(2)) = v.amplitude(0);
    out(sub.phi(3)) = v.amplitude(1) * g1 / g;
    out(sub.phi(5)) = -v.amplitude(1) * g2 / g;
    out(sub.phi(6)) = v.amplitude(2);
    return StateVector(std::move(out));
}

HamiltonianModel::HamiltonianModel(Kind kind, int dim,
                                   std::function<void(double, Side, Matrix&)> fill,
                                   std::vector<double> breakpoints, double total_time,
                                   std::vector<std::string> labels)
    : kind_(kind), dim_(dim), fill_(std::move(fill)),
      breakpoints_(std::move(breakpoints)), total_time_(total_time),
      labels_(std::move(labels)) {}

HamiltonianModel HamiltonianModel::three_level(PulseSchedule schedule) {
    const double T = schedule.total_time();
    auto bps = schedule.breakpoints();
    auto sched = std::make_shared<PulseSchedule>(std::move(schedule));
    auto fill = [sched](double t, Side side, Matrix& out) {
        const PulseSample s = sched->eval(t, side);
        out.setZero(3, 3);
        out(0, 1) = 0.5 * s.pump;
        out(1, 0) = 0.5 * std::conj(s.pump);
        out(1, 1) = -s.detuning;
        out(2, 1) = 0.5 * s.stokes;
        out(1, 2) = 0.5 * std::conj(s.stokes);
    };
    return HamiltonianModel(Kind::ThreeLevelFull, 3, fill, std::move(bps), T,
                            three_level_labels());
}

HamiltonianModel HamiltonianModel::qubit_resonator(QubitResonatorParams p,
                                                   std::vector<double> breakpoints,
                                                   double total_time) {
    const QRSubspace sub(p.fock_cutoff);
    auto labels = sub.labels();
    const int dim = sub.dim();
    auto coupling = std::make_shared<Matrix>(
        h_qr_coupling(p.g1, p.g2, p.fock_cutoff).mat());
    auto params = std::make_shared<QubitResonatorParams>(std::move(p));
    auto fill = [coupling, params, sub, dim](double t, Side side, Matrix& out) {
        out = *coupling;
        const Complex o1 = params->drive1 ? params->drive1(t, side) : Complex{};
        const Complex o2 = params->drive2 ? params->drive2(t, side) : Complex{};
        const double det = params->detuning ? params->detuning(t, side) : 0.0;
        const int nf = params->fock_cutoff + 1;
        for (int q2 = 0; q2 < 3; ++q2)
            for (int n = 0; n < nf; ++n) {
                const int e1 = sub.index(1, q2, n);
                const int one1 = sub.index(2, q2, n);
                out(one1, e1) += 0.5 * o1;
                out(e1, one1) += 0.5 * std::conj(o1);
                out(e1, e1) += -det;
            }
        for (int q1 = 0; q1 < 3; ++q1)
            for (int n = 0; n < nf; ++n) {
                const int e2 = sub.index(q1, 1, n);
                const int zero2 = sub.index(q1, 0, n);
                out(zero2, e2) += 0.5 * o2;
                out(e2, zero2) += 0.5 * std::conj(o2);
                out(e2, e2) += -det;
            }
    };
    return HamiltonianModel(Kind::QubitResonatorFull, dim, fill,
                            std::move(breakpoints), total_time, std::move(labels));
}

HamiltonianModel HamiltonianModel::qr_effective(QubitResonatorParams p,
                                                std::vector<double> breakpoints,
                                                double total_time) {
    auto params = std::make_shared<QubitResonatorParams>(std::move(p));
    auto fill = [params](double t, Side side, Matrix& out) {
        out = h_qr_effective(*params, t, side).mat();
    };
    return HamiltonianModel(Kind::QubitResonatorEff, 3, fill, std::move(breakpoints),
                            total_time, {"phi2", "Psi0", "phi6"});
}

HamiltonianModel HamiltonianModel::from_fn(
    Kind kind, int dim, std::function<void(double, Side, Matrix&)> fill,
    std::vector<double> breakpoints, double total_time) {
    return HamiltonianModel(kind, dim, std::move(fill), std::move(breakpoints),
                            total_time, {});
}

void HamiltonianModel::eval_into(double t, Side side, Matrix& out) const {
    fill_(t, side, out);
}

Matrix HamiltonianModel::eval(double t, Side side) const {
    Matrix out(dim_, dim_);
    eval_into(t, side, out);
    return out;
}

}  // namespace cdg
