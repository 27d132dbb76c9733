#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cdg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kStateNormTol = 1e-9;
inline constexpr double kDensityHermTol = 1e-10;
inline constexpr double kDensityTraceTol = 1e-8;
inline constexpr double kDensityNegativityTol = 1e-8;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

/// Dense square complex operator with an optional basis label list.
class OperatorMatrix {
  public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(Matrix m, std::vector<std::string> basis = {});

    static OperatorMatrix identity(int dim);
    /// Construction path for operators that must be Hermitian; throws if not.
    static OperatorMatrix hermitian(Matrix m, std::vector<std::string> basis = {});

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& mat() const { return mat_; }
    const std::vector<std::string>& basis() const { return basis_; }

    double hermiticity_residual() const;
    bool is_hermitian(double tol = kHermitianTol) const {
        return hermiticity_residual() <= tol;
    }

  private:
    Matrix mat_;
    std::vector<std::string> basis_;
};

/// Pure-state amplitude vector, unit norm within kStateNormTol.
class StateVector {
  public:
    StateVector() = default;
    explicit StateVector(Vector v, double norm_tol = kStateNormTol);

    static StateVector basis_state(int dim, int index);

    int dim() const { return static_cast<int>(v_.size()); }
    const Vector& vec() const { return v_; }
    Complex amplitude(int i) const { return v_(i); }

  private:
    Vector v_;
};

/// Hermitian, unit-trace, (numerically) positive density operator.
class DensityMatrix {
  public:
    DensityMatrix() = default;
    explicit DensityMatrix(Matrix m, double herm_tol = kDensityHermTol,
                           double trace_tol = kDensityTraceTol,
                           double negativity_tol = kDensityNegativityTol);

    static DensityMatrix pure(const StateVector& s);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& mat() const { return m_; }
    double min_eigenvalue() const;

  private:
    Matrix m_;
};

/// Kronecker product; basis labels concatenate pairwise when both present.
OperatorMatrix tensor_product(const OperatorMatrix& a, const OperatorMatrix& b);

struct Eigensystem {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // columns, orthonormal
};

/// Dense Hermitian eigensolve; rejects non-Hermitian input.
Eigensystem eigensystem_hermitian(const OperatorMatrix& m);

/// <s|M|s>
Complex expectation(const OperatorMatrix& m, const StateVector& s);

}  // namespace cdg
