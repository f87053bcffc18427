// test_linalg.cpp — operator types, eigendecomposition, exponentials,
// tensor products, partial traces and residuals.

#include <doctest.h>

#include "oracles.hpp"
#include "puredeph/linalg.hpp"
#include "puredeph/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace puredeph;
using namespace puredeph::linalg;

TEST_CASE("HermitianOperator rejects non-Hermitian and non-finite input") {
    Matrix m(2, 2);
    m << 1, 1, 0, 1;
    CHECK_THROWS_AS(HermitianOperator{m}, std::invalid_argument);
    CHECK_THROWS_AS(HermitianOperator{Matrix::Zero(2, 3)}, std::invalid_argument);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(HermitianOperator{bad}, std::invalid_argument);
    CHECK_NOTHROW(HermitianOperator{oracles::pauli_y()});
}

TEST_CASE("UnitaryOperator rejects non-unitary input") {
    CHECK_THROWS_AS(UnitaryOperator{Matrix::Identity(2, 2) * 2.0}, std::invalid_argument);
    CHECK_NOTHROW(UnitaryOperator{oracles::pauli_x()});
    CHECK(UnitaryOperator::identity(3).matrix().isApprox(Matrix::Identity(3, 3)));
}

TEST_CASE("DensityMatrix validation") {
    CHECK_THROWS_AS(DensityMatrix{Matrix::Identity(2, 2)}, std::invalid_argument);  // trace 2
    CHECK_THROWS_AS(DensityMatrix{oracles::diag({1.5, -0.5})}, std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix(Matrix::Identity(4, 4) / 4.0, {2, 3}), std::invalid_argument);
    const DensityMatrix rho(Matrix::Identity(6, 6) / 6.0, {2, 3});
    CHECK(rho.subsystem_dims() == std::vector<Index>{2, 3});
    CHECK(DensityMatrix(oracles::diag({1, 0})).subsystem_dims() == std::vector<Index>{2});
}

TEST_CASE("hermitian_eig on fixed examples") {
    SUBCASE("identity") {
        const auto es = hermitian_eig(HermitianOperator(Matrix::Identity(3, 3)));
        CHECK((es.values.array() - 1.0).abs().maxCoeff() < 1e-14);
        CHECK((es.vectors.adjoint() * es.vectors - Matrix::Identity(3, 3)).norm() < 1e-14);
    }
    SUBCASE("pauli z: ascending values, columns swapped") {
        const auto es = hermitian_eig(HermitianOperator(oracles::pauli_z()));
        CHECK(es.values(0) == doctest::Approx(-1.0));
        CHECK(es.values(1) == doctest::Approx(1.0));
        Matrix swapped(2, 2);
        swapped << 0, 1, 1, 0;
        CHECK((es.vectors - swapped).norm() < 1e-14);
    }
    SUBCASE("pauli y: first component real positive") {
        const auto es = hermitian_eig(HermitianOperator(oracles::pauli_y()));
        for (Index c = 0; c < 2; ++c) {
            CHECK(std::abs(es.vectors(0, c).imag()) < 1e-14);
            CHECK(es.vectors(0, c).real() > 0.0);
        }
    }
}

TEST_CASE("hermitian_eig reconstructs random matrices deterministically") {
    InstanceGenerator gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = gen.hermitian(8, 3.0);
        const auto es = hermitian_eig(h);
        const Matrix rebuilt = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
        CHECK((rebuilt - h.matrix()).norm() <= 1e-10 * h.matrix().norm());
        for (Index k = 1; k < es.values.size(); ++k) CHECK(es.values(k - 1) <= es.values(k));
        const auto again = hermitian_eig(h);
        CHECK(again.values == es.values);
        CHECK(again.vectors == es.vectors);
    }
}

TEST_CASE("eigen_clusters groups near-degenerate values") {
    RealVector v(5);
    v << 0.0, 1e-12, 0.5, 0.5 + 1e-13, 1.0;
    const auto clusters = eigen_clusters(v, 1e-9);
    REQUIRE(clusters.size() == 3);
    CHECK(clusters[0] == std::pair<Index, Index>{0, 2});
    CHECK(clusters[1] == std::pair<Index, Index>{2, 4});
    CHECK(clusters[2] == std::pair<Index, Index>{4, 5});
}

TEST_CASE("unitary_exp examples") {
    SUBCASE("H = 0 gives the identity") {
        const auto u = unitary_exp(HermitianOperator(Matrix::Zero(3, 3)), 2.7);
        CHECK((u.matrix() - Matrix::Identity(3, 3)).norm() < 1e-15);
    }
    SUBCASE("diagonal closed form") {
        const double t = std::numbers::pi / 2;
        const auto u = unitary_exp(HermitianOperator(oracles::pauli_z()), t);
        CHECK((u.matrix() - oracles::diag({std::polar(1.0, -t), std::polar(1.0, t)})).norm() < 1e-14);
    }
    SUBCASE("pauli x rotation") {
        const double t = 0.3;
        const auto u = unitary_exp(HermitianOperator(oracles::pauli_x()), t);
        const Matrix expected = std::cos(t) * Matrix::Identity(2, 2) - Complex(0, std::sin(t)) * oracles::pauli_x();
        CHECK((u.matrix() - expected).norm() < 1e-14);
    }
}

TEST_CASE("unitary_exp properties on random Hermitian generators") {
    InstanceGenerator gen(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = 2 + trial % 5;
        const auto h = gen.hermitian(n, 2.0);
        const double s = gen.uniform(-3, 3);
        const double t = gen.uniform(-3, 3);
        const Matrix us = unitary_exp(h, s).matrix();
        const Matrix ut = unitary_exp(h, t).matrix();
        const Matrix ust = unitary_exp(h, s + t).matrix();
        CHECK((us.adjoint() * us - Matrix::Identity(n, n)).norm() < 1e-12);
        CHECK((us * ut - ust).norm() < 1e-11);
        CHECK((us - oracles::taylor_exp(h.matrix(), s)).norm() < 1e-10);
    }
}

TEST_CASE("tensor examples and entry convention") {
    const Matrix one = Matrix::Identity(1, 1);
    InstanceGenerator gen(13);
    const Matrix b = gen.ginibre(3, 3);
    CHECK((tensor(one, b) - b).norm() == 0.0);
    CHECK((tensor(b, one) - b).norm() == 0.0);
    CHECK((tensor(oracles::diag({1, 0}), oracles::diag({0, 1})) - oracles::diag({0, 1, 0, 0})).norm() == 0.0);

    const Matrix a = gen.ginibre(2, 2);
    CHECK((tensor(a, b) - oracles::kron(a, b)).norm() < 1e-15);
}

TEST_CASE("tensor trace is multiplicative") {
    InstanceGenerator gen(14);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = gen.ginibre(2 + trial % 3, 2 + trial % 3);
        const Matrix b = gen.ginibre(3, 3);
        CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) < 1e-12);
    }
}

TEST_CASE("partial_trace examples") {
    SUBCASE("product state") {
        InstanceGenerator gen(15);
        const auto rq = gen.ginibre_density(2);
        const auto re = gen.ginibre_density(3);
        const DensityMatrix joint(tensor(rq.matrix(), re.matrix()), {2, 3});
        CHECK((partial_trace(joint, 0).matrix() - rq.matrix()).norm() < 1e-14);
        CHECK((partial_trace(joint, 1).matrix() - re.matrix()).norm() < 1e-14);
    }
    SUBCASE("Bell state reduces to I/2") {
        const DensityMatrix bell(oracles::bell_phi_plus(), {2, 2});
        CHECK((partial_trace(bell, 0).matrix() - Matrix::Identity(2, 2) / 2.0).norm() < 1e-15);
        CHECK((partial_trace(bell, 1).matrix() - Matrix::Identity(2, 2) / 2.0).norm() < 1e-15);
    }
    SUBCASE("invalid arguments") {
        const DensityMatrix bell(oracles::bell_phi_plus(), {2, 2});
        CHECK_THROWS_AS(partial_trace(bell, 2), std::invalid_argument);
        CHECK_THROWS_AS(partial_trace(DensityMatrix(oracles::diag({1, 0})), 0), std::invalid_argument);
        CHECK_THROWS_AS(partial_trace(Matrix::Identity(4, 4), {2, 3}, 0), std::invalid_argument);
    }
}

TEST_CASE("partial_trace agrees with the index-sum oracle") {
    InstanceGenerator gen(16);
    const std::vector<Index> dims{2, 3, 2};
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix m = gen.ginibre(12, 12);
        for (std::size_t keep = 0; keep < dims.size(); ++keep) {
            CHECK((partial_trace(m, dims, keep) - oracles::partial_trace(m, dims, keep)).norm() < 1e-12);
        }
    }
}

TEST_CASE("partial_trace preserves trace and positivity") {
    InstanceGenerator gen(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto rho = gen.ginibre_density(8);
        const DensityMatrix joint(rho.matrix(), {2, 4});
        for (std::size_t keep : {std::size_t{0}, std::size_t{1}}) {
            const auto reduced = partial_trace(joint, keep);  // constructor validates trace and PSD
            CHECK(std::abs(reduced.matrix().trace() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("partial_transpose") {
    SUBCASE("Bell state spectrum") {
        const Matrix pt = partial_transpose(oracles::bell_phi_plus(), {2, 2}, {1});
        const RealVector ev = hermitian_eigenvalues(pt);
        CHECK(ev(0) == doctest::Approx(-0.5));
        for (Index k = 1; k < 4; ++k) CHECK(ev(k) == doctest::Approx(0.5));
    }
    SUBCASE("involution and full transpose") {
        InstanceGenerator gen(18);
        const Matrix m = gen.ginibre(6, 6);
        const std::vector<Index> dims{2, 3};
        CHECK((partial_transpose(partial_transpose(m, dims, {0}), dims, {0}) - m).norm() < 1e-15);
        CHECK((partial_transpose(m, dims, {0, 1}) - m.transpose()).norm() < 1e-15);
        CHECK((partial_transpose(m, dims, {}) - m).norm() == 0.0);
    }
    SUBCASE("product state stays positive") {
        const Matrix prod = tensor(oracles::diag({0.3, 0.7}), oracles::diag({0.4, 0.6}));
        CHECK(hermitian_eigenvalues(partial_transpose(prod, {2, 2}, {0})).minCoeff() >= 0.0);
    }
}

TEST_CASE("commutator_residual") {
    CHECK(commutator_residual(oracles::pauli_x(), oracles::pauli_z()) == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(commutator_residual(oracles::pauli_x(), oracles::pauli_x()) == 0.0);
    CHECK(commutator_residual(oracles::diag({1, 2}), oracles::diag({3, 4})) == 0.0);
    InstanceGenerator gen(19);
    const Matrix a = gen.ginibre(3, 3);
    const Matrix b = gen.ginibre(3, 3);
    CHECK(commutator_residual(a, b) == doctest::Approx(commutator_residual(b, a)));
    CHECK_THROWS_AS(commutator_residual(a, Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("is_normal") {
    InstanceGenerator gen(20);
    CHECK(is_normal(gen.hermitian(4).matrix()));
    CHECK(is_normal(gen.haar_unitary(4).matrix()));
    Matrix jordan(2, 2);
    jordan << 0, 1, 0, 0;
    CHECK_FALSE(is_normal(jordan));
}

TEST_CASE("von_neumann_entropy") {
    CHECK(von_neumann_entropy(oracles::diag({1, 0})) == doctest::Approx(0.0));
    CHECK(von_neumann_entropy(Matrix::Identity(2, 2) / 2.0) == doctest::Approx(1.0));
    CHECK(von_neumann_entropy(Matrix::Identity(4, 4) / 4.0) == doctest::Approx(2.0));
    CHECK(von_neumann_entropy(oracles::bell_phi_plus()) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("random density matrices have unit trace and non-negative spectrum") {
    InstanceGenerator gen(21);
    for (int trial = 0; trial < 20; ++trial) {
        const auto rho = trial % 2 ? gen.ginibre_density(5) : gen.pure_density(5);
        const RealVector ev = hermitian_eigenvalues(rho.matrix());
        CHECK(ev.sum() == doctest::Approx(1.0));
        CHECK(ev.minCoeff() >= -1e-12);
    }
    const RealVector p = gen.probabilities(6);
    CHECK(p.sum() == doctest::Approx(1.0));
    CHECK(p.minCoeff() >= 0.0);
}
