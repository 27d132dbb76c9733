#include "oracle_lib.hpp"

#include <cmath>

#include "pinned_constants.hpp"

namespace cdg::oracle {

double rabi_oracle(double rabi, double t) {
    const double s = std::sin(0.5 * rabi * t);
    return s * s;
}

Vector matrix_exp_step(const Matrix& h, const Vector& psi, double dt) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("matrix_exp_step: eigensolver failed");
    const Vector coeff = es.eigenvectors().adjoint() * psi;
    Vector rotated(coeff.size());
    for (Eigen::Index k = 0; k < coeff.size(); ++k)
        rotated(k) = std::exp(Complex(0.0, -es.eigenvalues()(k) * dt)) * coeff(k);
    return es.eigenvectors() * rotated;
}

Vector exact_evolve(const HamiltonianModel& model, const Vector& psi0, double dt) {
    Vector psi = psi0;
    Matrix h(model.dim(), model.dim());
    TimeGrid grid;
    grid.t_end = model.total_time();
    grid.dt = dt;
    grid.breakpoints = model.breakpoints();
    for (auto [a, b] : grid.segments()) {
        const long n = std::max<long>(1, static_cast<long>(std::ceil((b - a) / dt)));
        const double step = (b - a) / static_cast<double>(n);
        for (long i = 0; i < n; ++i) {
            const double mid = a + step * (static_cast<double>(i) + 0.5);
            model.eval_into(mid, Side::Right, h);
            psi = matrix_exp_step(h, psi, step);
        }
    }
    return psi;
}

double average_fidelity_oracle(const Matrix& gate, const Matrix& applied, int n) {
    double sum = 0.0;
    const double two_pi = 2.0 * M_PI;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double a1 = two_pi * i / n;
            const double a2 = two_pi * j / n;
            Eigen::Vector2cd psi;
            psi << std::sin(a1), std::cos(a1) * std::exp(Complex(0.0, a2));
            const Eigen::Vector2cd tgt = gate * psi;
            const Eigen::Vector2cd got = applied * psi;
            sum += std::norm(tgt.dot(got));
        }
    return sum / (static_cast<double>(n) * n);
}

OracleReport verify_pinned_constants() {
    OracleReport rep;
    auto add = [&rep](const std::string& name, double pinned, double recomputed) {
        rep.entries.push_back({name, pinned, recomputed, std::abs(pinned - recomputed)});
        rep.max_delta = std::max(rep.max_delta, rep.entries.back().delta);
    };
    Matrix sx(2, 2), sz(2, 2), id = Matrix::Identity(2, 2);
    sx << 0, 1, 1, 0;
    sz << 1, 0, 0, -1;
    add("avg_fidelity_identity_vs_sigma_x", pinned::kAvgFidelityIdentityVsSigmaX,
        average_fidelity_oracle(sx, id));
    add("avg_fidelity_identity_vs_sigma_z", pinned::kAvgFidelityIdentityVsSigmaZ,
        average_fidelity_oracle(sz, id));
    add("cubic_rate_max_tf3", pinned::kCubicRateMaxTf3, 3.0 * M_PI / (2.0 * 3.0));
    add("cd_rabi_symmetric_point", pinned::kCdRabiSymmetricPoint,
        std::sqrt(2.0 * 50.0 * 3.0 * M_PI / 60.0));
    add("qr_gap", pinned::kQrGap, std::sqrt(2.0) * 50.0);
    add("large_det_two_qubit_geometric_phase",
        pinned::kLargeDetTwoQubitGeometricPhase, -M_PI / 2.0);
    return rep;
}

}  // namespace cdg::oracle
