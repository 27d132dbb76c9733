#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cdgate/core.hpp"

using namespace cdg;

namespace {

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix random_hermitian(int dim, std::mt19937& rng) {
    std::normal_distribution<double> dist;
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Complex(dist(rng), dist(rng));
    return 0.5 * (a + a.adjoint());
}

}  // namespace

TEST_CASE("tensor product basics") {
    const OperatorMatrix i2 = OperatorMatrix::identity(2);
    const OperatorMatrix i3 = OperatorMatrix::identity(3);
    const OperatorMatrix i6 = tensor_product(i2, i3);
    CHECK(i6.dim() == 6);
    CHECK((i6.mat() - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);

    // sigma_x (x) I_2 permutes |0>(x)|1> to |1>(x)|1>
    const OperatorMatrix sx{pauli_x()};
    const OperatorMatrix perm = tensor_product(sx, i2);
    Vector v01 = Vector::Zero(4);
    v01(1) = 1.0;  // |0>|1>
    const Vector out = perm.mat() * v01;
    CHECK(std::abs(out(3) - 1.0) < 1e-15);
    CHECK(out.cwiseAbs().sum() == doctest::Approx(1.0));

    Matrix d1(2, 2), d2(2, 2);
    d1 << 1, 0, 0, 2;
    d2 << 3, 0, 0, 4;
    const OperatorMatrix kron = tensor_product(OperatorMatrix{d1}, OperatorMatrix{d2});
    Vector expected(4);
    expected << 3, 4, 6, 8;
    CHECK((kron.mat().diagonal() - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("tensor product label concatenation and associativity") {
    const OperatorMatrix a(pauli_z(), {"0", "1"});
    const OperatorMatrix b(pauli_x(), {"a", "b"});
    const OperatorMatrix ab = tensor_product(a, b);
    REQUIRE(ab.basis().size() == 4);
    CHECK(ab.basis()[0] == "0a");
    CHECK(ab.basis()[3] == "1b");

    std::mt19937 rng(7);
    const OperatorMatrix c{random_hermitian(3, rng)};
    const OperatorMatrix left = tensor_product(tensor_product(a, b), c);
    const OperatorMatrix right = tensor_product(a, tensor_product(b, c));
    CHECK((left.mat() - right.mat()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("eigensystem of sigma_z and drive-direction invariance") {
    const auto es = eigensystem_hermitian(OperatorMatrix{pauli_z()});
    CHECK(es.values(0) == doctest::Approx(-1.0));
    CHECK(es.values(1) == doctest::Approx(1.0));

    for (double phi : {0.0, 0.3, 1.1, 2.9, 4.5}) {
        const double w = 0.73;
        const Matrix h =
            0.5 * w * (std::cos(phi) * pauli_x() + std::sin(phi) * pauli_y());
        const auto e = eigensystem_hermitian(OperatorMatrix{h});
        CHECK(e.values(0) == doctest::Approx(-0.5 * w).epsilon(1e-12));
        CHECK(e.values(1) == doctest::Approx(0.5 * w).epsilon(1e-12));
    }
}

TEST_CASE("eigensystem rejects non-Hermitian input") {
    Matrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS(eigensystem_hermitian(OperatorMatrix{m}), std::invalid_argument);
}

TEST_CASE("eigensystem reconstruction property") {
    std::mt19937 rng(1234);
    for (int dim : {2, 5, 17, 32}) {
        const Matrix m = random_hermitian(dim, rng);
        const auto es = eigensystem_hermitian(OperatorMatrix{m});
        Matrix rebuilt = Matrix::Zero(dim, dim);
        for (int k = 0; k < dim; ++k)
            rebuilt += es.values(k) * es.vectors.col(k) * es.vectors.col(k).adjoint();
        CHECK((rebuilt - m).cwiseAbs().maxCoeff() < 1e-9);
        // orthonormality and residual
        CHECK((es.vectors.adjoint() * es.vectors - Matrix::Identity(dim, dim))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
        for (int k = 0; k < dim; ++k)
            CHECK((m * es.vectors.col(k) - es.values(k) * es.vectors.col(k))
                      .cwiseAbs()
                      .maxCoeff() < 1e-10);
        for (int k = 1; k < dim; ++k) CHECK(es.values(k) >= es.values(k - 1));
    }
}

TEST_CASE("expectation values") {
    const StateVector zero = StateVector::basis_state(2, 0);
    CHECK(expectation(OperatorMatrix{pauli_z()}, zero).real() == doctest::Approx(1.0));
    CHECK(std::abs(expectation(OperatorMatrix{pauli_x()}, zero)) < 1e-15);

    Vector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(expectation(OperatorMatrix{pauli_x()}, StateVector{plus}).real() ==
          doctest::Approx(1.0));

    CHECK_THROWS_AS(expectation(OperatorMatrix::identity(3), zero), DimensionError);
}

TEST_CASE("state vector normalization contract") {
    Vector bad(2);
    bad << 1.0, 1.0;
    CHECK_THROWS(StateVector{bad});
    Vector ok(2);
    ok << std::sqrt(0.5), std::sqrt(0.5);
    CHECK_NOTHROW(StateVector{ok});
}

TEST_CASE("density matrix invariants on exported construction paths") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        // random pure state
        std::normal_distribution<double> dist;
        Vector v(4);
        for (int i = 0; i < 4; ++i) v(i) = Complex(dist(rng), dist(rng));
        v.normalize();
        const DensityMatrix rho = DensityMatrix::pure(StateVector{v});
        CHECK(rho.min_eigenvalue() > -1e-12);
        CHECK(std::abs(rho.mat().trace().real() - 1.0) < 1e-12);
    }
    // trace violation rejected
    CHECK_THROWS(DensityMatrix{Matrix::Identity(2, 2)});
    // non-Hermitian rejected
    Matrix m(2, 2);
    m << 0.5, 0.2, 0.0, 0.5;
    CHECK_THROWS(DensityMatrix{m});
    // negative eigenvalue rejected
    Matrix neg(2, 2);
    neg << 1.2, 0, 0, -0.2;
    CHECK_THROWS(DensityMatrix{neg});
}

TEST_CASE("operator matrix basic contracts") {
    Matrix notsquare(2, 3);
    notsquare.setZero();
    CHECK_THROWS_AS(OperatorMatrix{notsquare}, DimensionError);
    CHECK_THROWS_AS(OperatorMatrix(pauli_x(), {"only-one"}), DimensionError);
    Matrix inf = pauli_x();
    inf(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS(OperatorMatrix{inf});
    CHECK_THROWS(OperatorMatrix::hermitian([] {
        Matrix m(2, 2);
        m << 0, 1, 0.5, 0;
        return m;
    }()));
}
