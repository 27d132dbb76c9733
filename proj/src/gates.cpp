#include "cdgate/gates.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace cdg {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;

Matrix u01_mat(double eta, double g) {
    const double c = std::cos(eta), s = std::sin(eta);
    const Complex e = std::exp(kI * g);
    Matrix u(2, 2);
    u(0, 0) = c * c + e * s * s;
    u(0, 1) = c * s * (e - 1.0);
    u(1, 0) = c * s * (e - 1.0);
    u(1, 1) = e * c * c + s * s;
    return u;
}

Matrix u01_tilde_mat(double th, double g) {
    Matrix u(2, 2);
    u(0, 0) = std::cos(g) + kI * std::cos(th) * std::sin(g);
    u(0, 1) = kI * std::sin(th) * std::sin(g);
    u(1, 0) = kI * std::sin(th) * std::sin(g);
    u(1, 1) = std::cos(g) - kI * std::cos(th) * std::sin(g);
    return u;
}

Matrix embed_block(const Matrix& b) {
    Matrix u = Matrix::Identity(4, 4);
    u.block<2, 2>(1, 1) = b;
    return u;
}
}  // namespace

OperatorMatrix gate_matrix(const GateSpec& spec) {
    Matrix u;
    std::vector<std::string> basis;
    switch (spec.family) {
        case GateFamily::U01:
            u = u01_mat(spec.angle, spec.phase);
            basis = {"0", "1"};
            break;
        case GateFamily::U01Tilde:
            u = u01_tilde_mat(spec.angle, spec.phase);
            basis = {"0", "1"};
            break;
        case GateFamily::U2:
            u = embed_block(u01_mat(spec.angle, spec.phase));
            basis = {"01", "00", "11", "10"};
            break;
        case GateFamily::U2Prime:
            u = embed_block(u01_tilde_mat(spec.angle, spec.phase));
            basis = {"01", "00", "11", "10"};
            break;
    }
    OperatorMatrix out(std::move(u), std::move(basis));
    const double uerr =
        (out.mat().adjoint() * out.mat() - Matrix::Identity(out.dim(), out.dim()))
            .cwiseAbs()
            .maxCoeff();
    if (uerr > 1e-12)
        throw std::runtime_error("gate_matrix: non-unitary result");
    return out;
}

double state_fidelity(const StateVector& target, const StateVector& actual) {
    if (target.dim() != actual.dim())
        throw DimensionError("state_fidelity: dimension mismatch");
    return std::norm(target.vec().dot(actual.vec()));
}

double state_fidelity(const StateVector& target, const DensityMatrix& actual) {
    if (target.dim() != actual.dim())
        throw DimensionError("state_fidelity: dimension mismatch");
    const Complex f = target.vec().adjoint() * (actual.mat() * target.vec());
    return f.real();
}

StateVector single_qubit_init(double a1, double a2) {
    Vector v = Vector::Zero(3);
    v(0) = std::sin(a1);
    v(2) = std::cos(a1) * std::exp(kI * a2);
    return StateVector(std::move(v));
}

Vector two_qubit_init_amplitudes(const std::array<double, 6>& a) {
    Vector c(4);
    c(0) = std::sin(a[0]);
    c(1) = std::cos(a[0]) * std::exp(kI * a[3]) * std::sin(a[1]);
    c(2) = std::cos(a[0]) * std::cos(a[1]) * std::exp(kI * a[4]) * std::sin(a[2]);
    c(3) = std::cos(a[0]) * std::cos(a[1]) * std::exp(kI * a[5]) * std::cos(a[2]);
    return c;
}

AverageFidelityResult average_fidelity(
    const std::function<Trajectory(const StateVector&)>& runner, const GateSpec& gate,
    const QuadratureConfig& quad, int threads) {
    if (quad.n < 1) throw ConfigError("average_fidelity: grid size must be positive");
    const OperatorMatrix u = gate_matrix(gate);
    if (u.dim() != 2)
        throw ConfigError("average_fidelity: single-qubit gates only");
    const int n = quad.n;
    const int nodes = n * n;
    std::vector<std::vector<double>> traces(static_cast<size_t>(nodes));
    std::vector<double> times;

    auto run_node = [&](int node) {
        const int i = node / n, j = node % n;
        const double a1 = 2.0 * kPi * i / n;
        const double a2 = 2.0 * kPi * j / n;
        const StateVector psi0 = single_qubit_init(a1, a2);
        Vector tgt = Vector::Zero(3);
        const Eigen::Vector2cd in(psi0.vec()(0), psi0.vec()(2));
        const Eigen::Vector2cd g = u.mat() * in;
        tgt(0) = g(0);
        tgt(2) = g(1);
        const Trajectory traj = runner(psi0);
        std::vector<double> f(traj.times.size());
        for (size_t k = 0; k < traj.times.size(); ++k)
            f[k] = std::norm(tgt.dot(traj.states[k]));
        traces[static_cast<size_t>(node)] = std::move(f);
        if (node == 0) times = traj.times;
    };

    const int workers = std::max(1, threads);
    if (workers == 1) {
        for (int node = 0; node < nodes; ++node) run_node(node);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int node = next.fetch_add(1); node < nodes;
                     node = next.fetch_add(1))
                    run_node(node);
            });
        for (auto& th : pool) th.join();
    }

    AverageFidelityResult out;
    out.times = std::move(times);
    out.trace.assign(out.times.size(), 0.0);
    for (int node = 0; node < nodes; ++node) {
        const auto& f = traces[static_cast<size_t>(node)];
        if (f.size() != out.trace.size())
            throw AccuracyError("average_fidelity: inconsistent sample grids");
        for (size_t k = 0; k < f.size(); ++k) out.trace[k] += f[k];
    }
    for (auto& v : out.trace) v /= nodes;
    out.final_value = out.trace.back();
    return out;
}

InferredGate infer_effective_gate(
    const std::function<Vector(const Vector&)>& propagate_final,
    const std::vector<int>& computational_indices, int full_dim,
    double leakage_bound) {
    const int d = static_cast<int>(computational_indices.size());
    Matrix u(d, d);
    double leakage = 0.0;
    for (int col = 0; col < d; ++col) {
        Vector e = Vector::Zero(full_dim);
        e(computational_indices[static_cast<size_t>(col)]) = 1.0;
        const Vector out = propagate_final(e);
        double keep = 0.0;
        for (int row = 0; row < d; ++row) {
            u(row, col) = out(computational_indices[static_cast<size_t>(row)]);
            keep += std::norm(u(row, col));
        }
        leakage = std::max(leakage, 1.0 - keep);
    }
    if (leakage > leakage_bound)
        throw AccuracyError("infer_effective_gate: leakage " + std::to_string(leakage) +
                            " above bound");
    int jmax = 0;
    u.col(0).cwiseAbs().maxCoeff(&jmax);
    const Complex a = u(jmax, 0);
    if (std::abs(a) > 0.0) u *= std::conj(a) / std::abs(a);
    InferredGate res;
    res.leakage = leakage;
    res.unitarity_error =
        (u.adjoint() * u - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    res.gate = OperatorMatrix(std::move(u));
    return res;
}

}  // namespace cdg
