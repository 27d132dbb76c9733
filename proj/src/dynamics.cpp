#include "cdgate/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cdg {

namespace {
constexpr Complex kI{0.0, 1.0};

std::vector<double> merged_breakpoints(double t0, double t1,
                                       const std::vector<double>& interior) {
    std::set<double> pts{t0, t1};
    for (double b : interior)
        if (b > t0 && b < t1) pts.insert(b);
    return {pts.begin(), pts.end()};
}
}  // namespace

TimeGrid TimeGrid::for_model(const HamiltonianModel& m, double dt, int target_samples) {
    TimeGrid g;
    g.t_start = 0.0;
    g.t_end = m.total_time();
    g.dt = dt;
    g.breakpoints = m.breakpoints();
    g.target_samples = target_samples;
    g.validate();
    return g;
}

void TimeGrid::validate() const {
    if (dt <= 0.0) throw ConfigError("TimeGrid: dt must be positive");
    if (t_end <= t_start) throw ConfigError("TimeGrid: empty interval");
}

std::vector<std::pair<double, double>> TimeGrid::segments() const {
    auto pts = merged_breakpoints(t_start, t_end, breakpoints);
    std::vector<std::pair<double, double>> out;
    for (size_t i = 0; i + 1 < pts.size(); ++i) out.emplace_back(pts[i], pts[i + 1]);
    return out;
}

LindbladSet::LindbladSet(std::vector<OperatorMatrix> ops, std::vector<double> rates) {
    if (ops.size() != rates.size())
        throw DimensionError("LindbladSet: ops/rates size mismatch");
    for (size_t k = 0; k < ops.size(); ++k) {
        if (rates[k] < 0.0) throw std::invalid_argument("LindbladSet: negative rate");
        if (!ops.empty() && ops[k].dim() != ops[0].dim())
            throw DimensionError("LindbladSet: inconsistent dims");
        if (rates[k] == 0.0) continue;
        scaled_.push_back(std::sqrt(rates[k]) * ops[k].mat());
    }
    if (!scaled_.empty()) {
        damping_ = Matrix::Zero(scaled_[0].rows(), scaled_[0].cols());
        for (const auto& l : scaled_) damping_ += l.adjoint() * l;
    }
}

LindbladSet LindbladSet::three_level_decay(double total_rate) {
    Matrix l1 = Matrix::Zero(3, 3), l2 = Matrix::Zero(3, 3);
    l1(0, 1) = 1.0;  // |0><e|
    l2(2, 1) = 1.0;  // |1><e|
    return LindbladSet({OperatorMatrix(l1), OperatorMatrix(l2)},
                       {0.5 * total_rate, 0.5 * total_rate});
}

LindbladSet LindbladSet::qubit_resonator_decay(double qubit_rate, double resonator_rate,
                                               int fock_cutoff) {
    const QRSubspace sub(fock_cutoff);
    const int dim = sub.dim();
    const int nf = fock_cutoff + 1;
    std::vector<OperatorMatrix> ops;
    std::vector<double> rates;
    // qubit n from |e> to |m>, m in {0 -> code 0, 1 -> code 2}
    for (int qubit = 1; qubit <= 2; ++qubit)
        for (int target : {0, 2}) {
            Matrix l = Matrix::Zero(dim, dim);
            for (int other = 0; other < 3; ++other)
                for (int n = 0; n < nf; ++n) {
                    const int from = qubit == 1 ? sub.index(1, other, n)
                                                : sub.index(other, 1, n);
                    const int to = qubit == 1 ? sub.index(target, other, n)
                                              : sub.index(other, target, n);
                    l(to, from) = 1.0;
                }
            ops.emplace_back(std::move(l));
            rates.push_back(0.5 * qubit_rate);
        }
    Matrix a = Matrix::Zero(dim, dim);
    for (int q1 = 0; q1 < 3; ++q1)
        for (int q2 = 0; q2 < 3; ++q2)
            for (int n = 1; n < nf; ++n)
                a(sub.index(q1, q2, n - 1), sub.index(q1, q2, n)) =
                    std::sqrt(static_cast<double>(n));
    ops.emplace_back(std::move(a));
    rates.push_back(resonator_rate);
    return LindbladSet(std::move(ops), std::move(rates));
}

namespace {

long steps_for(double len, double dt) {
    return std::max<long>(1, static_cast<long>(std::ceil(len / dt - 1e-12)));
}

}  // namespace

Trajectory evolve_schrodinger(const HamiltonianModel& model, const StateVector& psi0,
                              const TimeGrid& grid, const EvolveOptions& opt) {
    if (model.dim() != psi0.dim())
        throw DimensionError("evolve_schrodinger: dimension mismatch");
    grid.validate();
    const auto segs = grid.segments();
    long total_steps = 0;
    for (auto [a, b] : segs) total_steps += steps_for(b - a, grid.dt);
    const long stride = std::max<long>(1, total_steps / std::max(1, grid.target_samples));

    Trajectory traj;
    traj.is_density = false;
    const int dim = model.dim();
    Vector psi = psi0.vec();
    Matrix h(dim, dim);
    Vector k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    traj.times.push_back(grid.t_start);
    traj.states.push_back(psi);

    long step_index = 0;
    for (auto [a, b] : segs) {
        const long n = steps_for(b - a, grid.dt);
        const double h_step = (b - a) / static_cast<double>(n);
        for (long i = 0; i < n; ++i) {
            const double t = a + h_step * static_cast<double>(i);
            const double t_mid = t + 0.5 * h_step;
            const double t_next = i + 1 == n ? b : t + h_step;
            const Side end_side = i + 1 == n ? Side::Left : Side::Right;

            model.eval_into(t, Side::Right, h);
            k1 = -kI * (h * psi);
            model.eval_into(t_mid, Side::Right, h);
            tmp = psi + 0.5 * h_step * k1;
            k2 = -kI * (h * tmp);
            tmp = psi + 0.5 * h_step * k2;
            k3 = -kI * (h * tmp);
            model.eval_into(t_next, end_side, h);
            tmp = psi + h_step * k3;
            k4 = -kI * (h * tmp);
            psi += (h_step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

            const double drift = std::abs(psi.squaredNorm() - 1.0);
            traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
            if (drift > opt.norm_tol)
                throw AccuracyError(
                    "evolve_schrodinger: norm drift " + std::to_string(drift) +
                    " exceeds tolerance; retry with dt <= " + std::to_string(grid.dt / 2));
            ++step_index;
            if (step_index % stride == 0 || i + 1 == n) {
                traj.times.push_back(t_next);
                traj.states.push_back(psi);
            }
        }
    }
    traj.final_norm_drift = std::abs(psi.squaredNorm() - 1.0);
    return traj;
}

namespace {

/// d rho = -i[H, rho] + sum_l (L rho L^dag - 1/2 {L^dag L, rho})
void lindblad_rhs(const Matrix& h, const LindbladSet& jumps, const Matrix& rho,
                  Matrix& out, Matrix& scratch) {
    out.noalias() = h * rho;
    scratch.noalias() = rho * h;
    out = -kI * (out - scratch);
    if (!jumps.empty()) {
        const Matrix& d = jumps.damping();
        scratch.noalias() = d * rho;
        out -= 0.5 * scratch;
        scratch.noalias() = rho * d;
        out -= 0.5 * scratch;
        for (const auto& l : jumps.scaled_ops()) {
            scratch.noalias() = l * rho;
            out.noalias() += scratch * l.adjoint();
        }
    }
}

}  // namespace

Trajectory evolve_lindblad(const HamiltonianModel& model, const DensityMatrix& rho0,
                           const LindbladSet& jumps, const TimeGrid& grid,
                           const EvolveOptions& opt) {
    if (model.dim() != rho0.dim())
        throw DimensionError("evolve_lindblad: dimension mismatch");
    if (!jumps.empty() && jumps.dim() != model.dim())
        throw DimensionError("evolve_lindblad: jump-operator dimension mismatch");
    grid.validate();
    const auto segs = grid.segments();
    long total_steps = 0;
    for (auto [a, b] : segs) total_steps += steps_for(b - a, grid.dt);
    const long stride = std::max<long>(1, total_steps / std::max(1, grid.target_samples));

    Trajectory traj;
    traj.is_density = true;
    traj.min_sample_eigenvalue = 1.0;
    const int dim = model.dim();
    Matrix rho = rho0.mat();
    Matrix h(dim, dim), k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim),
        tmp(dim, dim), scratch(dim, dim);
    traj.times.push_back(grid.t_start);
    traj.densities.push_back(rho);

    auto record_sample = [&](double t) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
        const double lmin = es.eigenvalues().minCoeff();
        traj.min_sample_eigenvalue = std::min(traj.min_sample_eigenvalue, lmin);
        if (opt.check_positivity && lmin < -opt.negativity_tol)
            throw AccuracyError("evolve_lindblad: negativity " + std::to_string(lmin));
        traj.times.push_back(t);
        traj.densities.push_back(rho);
    };

    long step_index = 0;
    for (auto [a, b] : segs) {
        const long n = steps_for(b - a, grid.dt);
        const double h_step = (b - a) / static_cast<double>(n);
        for (long i = 0; i < n; ++i) {
            const double t = a + h_step * static_cast<double>(i);
            const double t_mid = t + 0.5 * h_step;
            const double t_next = i + 1 == n ? b : t + h_step;
            const Side end_side = i + 1 == n ? Side::Left : Side::Right;

            model.eval_into(t, Side::Right, h);
            lindblad_rhs(h, jumps, rho, k1, scratch);
            model.eval_into(t_mid, Side::Right, h);
            tmp = rho + 0.5 * h_step * k1;
            lindblad_rhs(h, jumps, tmp, k2, scratch);
            tmp = rho + 0.5 * h_step * k2;
            lindblad_rhs(h, jumps, tmp, k3, scratch);
            model.eval_into(t_next, end_side, h);
            tmp = rho + h_step * k3;
            lindblad_rhs(h, jumps, tmp, k4, scratch);
            rho += (h_step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

            // symmetrize; the antisymmetric residual is a diagnostic with a hard cap
            scratch = 0.5 * (rho - rho.adjoint());
            const double asym = scratch.cwiseAbs().maxCoeff();
            traj.max_herm_residual = std::max(traj.max_herm_residual, asym);
            if (asym > opt.herm_residual_tol)
                throw AccuracyError("evolve_lindblad: Hermiticity residual " +
                                    std::to_string(asym));
            rho = 0.5 * (rho + rho.adjoint());

            const double tr_drift = std::abs(rho.trace().real() - 1.0) +
                                    std::abs(rho.trace().imag());
            traj.max_norm_drift = std::max(traj.max_norm_drift, tr_drift);
            if (tr_drift > opt.trace_tol)
                throw AccuracyError("evolve_lindblad: trace drift " +
                                    std::to_string(tr_drift) +
                                    "; retry with dt <= " + std::to_string(grid.dt / 2));
            ++step_index;
            if (step_index % stride == 0 || i + 1 == n) record_sample(t_next);
        }
    }
    traj.final_norm_drift = std::abs(rho.trace().real() - 1.0);
    return traj;
}

PhaseSplit phase_decomposition(const Trajectory& traj, const Eigenpath& path) {
    if (traj.is_density || traj.states.empty())
        throw std::invalid_argument("phase_decomposition: needs a pure trajectory");
    const size_t n = traj.times.size();
    std::vector<Vector> fixed(n);
    std::vector<double> values(n);
    PhaseSplit out{0.0, 0.0, 1.0};
    for (size_t k = 0; k < n; ++k) {
        EigenpathSample s = path(traj.times[k]);
        values[k] = s.value;
        // gauge: largest-magnitude component real positive
        int j = 0;
        s.state.cwiseAbs().maxCoeff(&j);
        const Complex a = s.state(j);
        if (std::abs(a) > 0.0) s.state *= std::conj(a) / std::abs(a);
        const double ov = std::norm(s.state.dot(traj.states[k]));
        out.min_overlap = std::min(out.min_overlap, ov);
        fixed[k] = std::move(s.state);
    }
    if (out.min_overlap < 0.99)
        throw AccuracyError("phase_decomposition: trajectory left the eigenpath "
                            "(min overlap " + std::to_string(out.min_overlap) + ")");
    for (size_t k = 0; k + 1 < n; ++k)
        out.dynamical -= 0.5 * (values[k] + values[k + 1]) *
                         (traj.times[k + 1] - traj.times[k]);
    double geo = 0.0;
    for (size_t k = 0; k + 1 < n; ++k)
        geo -= std::arg(fixed[k].dot(fixed[k + 1]));
    geo -= std::arg(fixed[n - 1].dot(fixed[0]));  // close the loop
    // unwind to (-pi, pi]
    while (geo <= -M_PI) geo += 2.0 * M_PI;
    while (geo > M_PI) geo -= 2.0 * M_PI;
    out.geometric = geo;
    return out;
}

}  // namespace cdg
