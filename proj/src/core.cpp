#include "cdgate/core.hpp"

#include <cmath>

namespace cdg {

bool all_finite(const Matrix& m) {
    return m.allFinite();
}

bool all_finite(const Vector& v) {
    return v.allFinite();
}

OperatorMatrix::OperatorMatrix(Matrix m, std::vector<std::string> basis)
    : mat_(std::move(m)), basis_(std::move(basis)) {
    if (mat_.rows() != mat_.cols())
        throw DimensionError("OperatorMatrix: matrix must be square");
    if (!basis_.empty() && static_cast<int>(basis_.size()) != mat_.rows())
        throw DimensionError("OperatorMatrix: basis label count != dim");
    if (!all_finite(mat_))
        throw std::invalid_argument("OperatorMatrix: non-finite entries");
}

OperatorMatrix OperatorMatrix::identity(int dim) {
    return OperatorMatrix(Matrix::Identity(dim, dim));
}

OperatorMatrix OperatorMatrix::hermitian(Matrix m, std::vector<std::string> basis) {
    OperatorMatrix out(std::move(m), std::move(basis));
    if (!out.is_hermitian())
        throw std::invalid_argument("OperatorMatrix: not Hermitian within 1e-12");
    return out;
}

double OperatorMatrix::hermiticity_residual() const {
    return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
}

StateVector::StateVector(Vector v, double norm_tol) : v_(std::move(v)) {
    if (v_.size() == 0)
        throw DimensionError("StateVector: empty");
    if (!all_finite(v_))
        throw std::invalid_argument("StateVector: non-finite amplitudes");
    const double n2 = v_.squaredNorm();
    if (std::abs(n2 - 1.0) > norm_tol)
        throw std::invalid_argument("StateVector: squared norm " + std::to_string(n2) +
                                    " deviates from 1 beyond tolerance");
}

StateVector StateVector::basis_state(int dim, int index) {
    if (index < 0 || index >= dim)
        throw DimensionError("StateVector: basis index out of range");
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return StateVector(std::move(v));
}

DensityMatrix::DensityMatrix(Matrix m, double herm_tol, double trace_tol,
                             double negativity_tol)
    : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw DimensionError("DensityMatrix: matrix must be square");
    if (!all_finite(m_))
        throw std::invalid_argument("DensityMatrix: non-finite entries");
    const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > herm_tol)
        throw std::invalid_argument("DensityMatrix: Hermiticity residual " +
                                    std::to_string(herm));
    const double tr = std::abs(m_.trace().real() - 1.0) + std::abs(m_.trace().imag());
    if (tr > trace_tol)
        throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                    std::to_string(tr));
    const double lmin = min_eigenvalue();
    if (lmin < -negativity_tol)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(lmin));
}

DensityMatrix DensityMatrix::pure(const StateVector& s) {
    return DensityMatrix(s.vec() * s.vec().adjoint());
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m_ + m_.adjoint()),
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

OperatorMatrix tensor_product(const OperatorMatrix& a, const OperatorMatrix& b) {
    const int da = a.dim(), db = b.dim();
    Matrix out(static_cast<Eigen::Index>(da) * db, static_cast<Eigen::Index>(da) * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a.mat()(i, j) * b.mat();
    std::vector<std::string> labels;
    if (!a.basis().empty() && !b.basis().empty()) {
        labels.reserve(static_cast<size_t>(da) * db);
        for (const auto& la : a.basis())
            for (const auto& lb : b.basis())
                labels.push_back(la + lb);
    }
    return OperatorMatrix(std::move(out), std::move(labels));
}

Eigensystem eigensystem_hermitian(const OperatorMatrix& m) {
    if (!m.is_hermitian())
        throw std::invalid_argument("eigensystem_hermitian: input not flagged/valid Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m.mat());
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigensystem_hermitian: solver failed");
    return Eigensystem{es.eigenvalues(), es.eigenvectors()};
}

Complex expectation(const OperatorMatrix& m, const StateVector& s) {
    if (m.dim() != s.dim())
        throw DimensionError("expectation: dimension mismatch");
    return s.vec().adjoint() * (m.mat() * s.vec());
}

}  // namespace cdg
