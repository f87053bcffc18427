// test_correlation.cpp — separability, zero-discord detectors and their
// logical relations on pure-dephasing states.

#include <doctest.h>

#include "oracles.hpp"
#include "puredeph/correlation.hpp"
#include "puredeph/random.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

using namespace puredeph;
using namespace puredeph::correlation;
using linalg::HermitianOperator;
using model::evolve_joint;

namespace {

constexpr double kPi = std::numbers::pi;

HermitianOperator herm(const Matrix& m) { return HermitianOperator(m); }
HermitianOperator zero(Index n) { return HermitianOperator(Matrix::Zero(n, n)); }
EnvironmentState env_of(const Matrix& r) { return EnvironmentState(linalg::DensityMatrix(r)); }

// A diagonal model with R(0) rotated by the same unitary as the couplings:
// H_i = U diag(h_i) U†, R = U diag(c) U†. Separable at every t.
struct CommutingInstance {
    DephasingModel model;
    EnvironmentState env;
};

CommutingInstance commuting_instance(InstanceGenerator& gen, Index n) {
    const Matrix u = gen.haar_unitary(n).matrix();
    auto rotated = [&](const RealVector& d) { return Matrix(u * d.cast<Complex>().asDiagonal() * u.adjoint()); };
    RealVector h0(n), h1(n), he(n);
    for (Index k = 0; k < n; ++k) h0(k) = gen.uniform(-2, 2), h1(k) = gen.uniform(-2, 2), he(k) = gen.uniform(-1, 1);
    return {DephasingModel(0.0, 0.0, herm(rotated(he)), herm(rotated(h0)), herm(rotated(h1))),
            env_of(rotated(gen.probabilities(n)))};
}

// Principal Hermitian generator H with exp(−iH) = u, from the Schur form of a unitary.
Matrix generator_of(const Matrix& u) {
    Eigen::ComplexSchur<Matrix> schur(u);
    const Matrix& q = schur.matrixU();
    Matrix d = Matrix::Zero(u.rows(), u.cols());
    for (Index k = 0; k < u.rows(); ++k) d(k, k) = -std::arg(schur.matrixT()(k, k));
    return q * d * q.adjoint();
}

}  // namespace

TEST_CASE("relative_commutator scale") {
    CHECK(relative_commutator(oracles::pauli_x(), oracles::pauli_z()) ==
          doctest::Approx(2.0 * std::sqrt(2.0) / 2.0));  // ‖σx‖‖σz‖ = 2
    CHECK(relative_commutator(0.1 * oracles::pauli_x(), 0.1 * oracles::pauli_z()) ==
          doctest::Approx(0.02 * std::sqrt(2.0)));  // below unit scale: absolute
}

TEST_CASE("separability examples") {
    SUBCASE("t = 0 is always separable") {
        InstanceGenerator gen(41);
        const DephasingModel model(0.1, 0.2, gen.hermitian(3), gen.hermitian(3), gen.hermitian(3));
        const auto r = separability_check(EnvironmentState(gen.ginibre_density(3)), model, 0.0);
        CHECK(r.separable);
        CHECK(r.residual < 1e-14);
    }
    SUBCASE("diagonal commuting model is separable at every t") {
        const DephasingModel model(0, 0, zero(2), zero(2), herm(oracles::pauli_z()));
        const auto env = env_of(oracles::diag({0.7, 0.3}));
        for (double t : {0.1, 0.5, 1.0, 3.0, 10.0}) {
            const auto r = separability_check(env, model, t);
            CHECK(r.separable);
            CHECK(r.residual < 1e-15);
        }
    }
    SUBCASE("pure environment with transverse coupling is entangled at generic t") {
        const DephasingModel model(0, 0, zero(2), zero(2), herm(oracles::pauli_x()));
        const auto env = env_of(oracles::diag({1, 0}));
        for (double t : {0.3, 1.0, 2.0}) {
            const auto r = separability_check(env, model, t);
            CHECK_FALSE(r.separable);
            CHECK(r.residual > 1e-3);
            CHECK(r.forms_agree());
        }
    }
    SUBCASE("transverse coupling recurs to a product at t = π/g") {
        const double g = 0.6;
        const DephasingModel model(0, 0, zero(2), zero(2), herm(g * oracles::pauli_x()));
        const auto r = separability_check(env_of(oracles::diag({1, 0})), model, kPi / g);
        CHECK(r.separable);
        CHECK(r.residual < 1e-14);
    }
    SUBCASE("maximally mixed environment never entangles") {
        InstanceGenerator gen(42);
        const DephasingModel model(0, 0, gen.hermitian(3), gen.hermitian(3), gen.hermitian(3));
        CHECK(separability_check(env_of(Matrix::Identity(3, 3) / 3.0), model, 2.3).separable);
    }
}

TEST_CASE("commutator and conjugation forms give the same residual") {
    InstanceGenerator gen(43);
    for (int trial = 0; trial < 30; ++trial) {
        const Index n = 2 + trial % 3;
        const DephasingModel model(gen.uniform(-1, 1), gen.uniform(-1, 1), gen.hermitian(n), gen.hermitian(n),
                                   gen.hermitian(n));
        const auto r = separability_check(EnvironmentState(gen.ginibre_density(n)), model, gen.uniform(0, 5));
        CHECK(r.residual == doctest::Approx(r.conjugated_residual).epsilon(1e-10));
        CHECK(r.forms_agree());
    }
}

TEST_CASE("conjugation form uses w R w†, not w† R w") {
    // w0 = U, w1 = U·D with D diagonal, R = |0⟩⟨0|: ŵ = D commutes with R, so
    // σ(t) is a product, while U†RU ≠ D†U†RUD for generic U.
    InstanceGenerator gen(44);
    const Matrix u = gen.haar_unitary(2).matrix();
    const Matrix d = oracles::diag({std::polar(1.0, 0.4), std::polar(1.0, -1.1)});
    const DephasingModel model(0, 0, zero(2), herm(generator_of(u)), herm(generator_of(u * d)));
    const auto env = env_of(oracles::diag({1, 0}));
    const auto w = model::conditional_evolutions(model, 1.0);
    REQUIRE((w.w0.matrix() - u).norm() < 1e-12);
    REQUIRE((w.w1.matrix() - u * d).norm() < 1e-12);

    const auto r = separability_check(env, model, 1.0);
    CHECK(r.separable);
    CHECK(r.conjugated_separable);

    const Matrix& rho = env.density();
    const Matrix swapped = w.w0.matrix().adjoint() * rho * w.w0.matrix() - w.w1.matrix().adjoint() * rho * w.w1.matrix();
    CHECK(swapped.norm() > 1e-3);

    // Direct check on the state: Tr_Q σ factorizes.
    const auto sigma = evolve_joint(QubitPureState::normalized(1.0, 1.0), env, model, 1.0);
    const Matrix product = oracles::kron(linalg::partial_trace(sigma, 0).matrix(), linalg::partial_trace(sigma, 1).matrix());
    CHECK((sigma.matrix() - product).norm() < 1e-12);
}

TEST_CASE("build_Rij") {
    InstanceGenerator gen(45);
    const DephasingModel model(0.2, -0.3, gen.hermitian(3), gen.hermitian(3), gen.hermitian(3));
    const EnvironmentState env(gen.ginibre_density(3));
    SUBCASE("t = 0 all blocks equal R") {
        const auto f = build_Rij(env, model, 0.0);
        for (const Matrix* m : {&f.r00, &f.r01, &f.r10, &f.r11}) CHECK((*m - env.density()).norm() < 1e-14);
    }
    SUBCASE("blocks relate to σ(t)") {
        const double t = 1.9;
        const auto f = build_Rij(env, model, t);
        const auto psi = QubitPureState::normalized(Complex(0.6, 0.2), 0.5);
        const auto b = model::qubit_blocks(evolve_joint(psi, env, model, t));
        CHECK((b[0][1] - psi.alpha() * std::conj(psi.beta()) * f.r01).norm() < 1e-13);
        CHECK((f.r10 - f.r01.adjoint()).norm() < 1e-14);
        CHECK(std::abs(f.r00.trace() - 1.0) < 1e-13);
        CHECK(std::abs(f.r11.trace() - 1.0) < 1e-13);
    }
}

TEST_CASE("environment-side discord examples") {
    SUBCASE("t = 0") {
        InstanceGenerator gen(46);
        const DephasingModel model(0, 0, gen.hermitian(3), gen.hermitian(3), gen.hermitian(3));
        const auto r = env_discord_check(build_Rij(EnvironmentState(gen.ginibre_density(3)), model, 0.0));
        CHECK(r.zero_discord);
        CHECK(r.residual < 1e-14);
    }
    SUBCASE("diagonal commuting model") {
        const DephasingModel model(0, 0, zero(2), zero(2), herm(oracles::pauli_z()));
        const auto r = env_discord_check(build_Rij(env_of(oracles::diag({0.7, 0.3})), model, 1.2));
        CHECK(r.zero_discord);
    }
    SUBCASE("pure environment with transverse coupling") {
        const DephasingModel model(0, 0, zero(2), zero(2), herm(oracles::pauli_x()));
        const auto r = env_discord_check(build_Rij(env_of(oracles::diag({1, 0})), model, 1.0));
        CHECK_FALSE(r.zero_discord);
        CHECK(r.residual > 1e-3);
    }
}

TEST_CASE("simultaneous eigenbasis examples") {
    SUBCASE("t = 0: phases vanish and weights are the spectrum of R") {
        const auto d = simultaneous_eigenbasis(oracles::diag({0.2, 0.8}), Matrix::Identity(2, 2));
        CHECK(d.phases.cwiseAbs().maxCoeff() < 1e-15);
        CHECK(d.weights(0) == doctest::Approx(0.2));
        CHECK(d.weights(1) == doctest::Approx(0.8));
    }
    SUBCASE("diagonal model: phases are the branch energy differences") {
        const double t = 2.5;
        const DephasingModel model(0, 0, zero(2), herm(oracles::diag({0.3, -0.2})), herm(oracles::diag({1.1, 0.9})));
        const auto d = simultaneous_eigenbasis(env_of(oracles::diag({0.7, 0.3})), model, t);
        // ŵ = diag(exp(−i(h1 − h0)t)); weight 0.3 belongs to the second basis state.
        auto wrapped = [](double x) { return std::remainder(x, 2 * kPi); };
        for (Index k = 0; k < 2; ++k) {
            const Index which = std::abs(d.basis(0, k)) > 0.5 ? 0 : 1;
            const double expected = which == 0 ? (1.1 - 0.3) * t : (0.9 + 0.2) * t;
            CHECK(std::abs(wrapped(d.phases(k) - expected)) < 1e-12);
            CHECK(d.weights(k) == doctest::Approx(which == 0 ? 0.7 : 0.3));
        }
        CHECK(d.r0_reconstruction < 1e-12);
        CHECK(d.w_reconstruction < 1e-12);
    }
    SUBCASE("maximally mixed R diagonalizes ŵ") {
        InstanceGenerator gen(47);
        const Matrix w = gen.haar_unitary(4).matrix();
        const auto d = simultaneous_eigenbasis(Matrix::Identity(4, 4) / 4.0, w);
        Matrix rebuilt = Matrix::Zero(4, 4);
        for (Index k = 0; k < 4; ++k) rebuilt += std::polar(1.0, -d.phases(k)) * d.basis.col(k) * d.basis.col(k).adjoint();
        CHECK((rebuilt - w).norm() < 1e-10);
        CHECK((d.weights.array() - 0.25).abs().maxCoeff() < 1e-14);
        for (Index k = 0; k < 4; ++k) CHECK((d.phases(k) > -kPi && d.phases(k) <= kPi));
    }
    SUBCASE("entangled input is rejected") {
        const DephasingModel model(0, 0, zero(2), zero(2), herm(oracles::pauli_x()));
        CHECK_THROWS_AS(simultaneous_eigenbasis(env_of(oracles::diag({1, 0})), model, 1.0), NotSeparableError);
    }
}

TEST_CASE("simultaneous eigenbasis reconstructs rotated commuting instances") {
    InstanceGenerator gen(48);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = commuting_instance(gen, 2 + trial % 4);
        const double t = gen.uniform(0, 6);
        const auto d = simultaneous_eigenbasis(inst.env, inst.model, t);
        CHECK(d.r0_reconstruction < 1e-9);
        CHECK(d.w_reconstruction < 1e-9);
        CHECK(d.weights.sum() == doctest::Approx(1.0));
    }
}

namespace {

EigenphaseDecomposition manual_decomposition(std::initializer_list<double> weights, std::initializer_list<double> phases) {
    EigenphaseDecomposition d;
    const auto n = static_cast<Index>(weights.size());
    d.basis = Matrix::Identity(n, n);
    d.weights.resize(n);
    d.phases.resize(n);
    Index k = 0;
    for (double w : weights) d.weights(k++) = w;
    k = 0;
    for (double p : phases) d.phases(k++) = p;
    return d;
}

// Closed-form commutator of ρ_n = [[a², αβ* e^{iφn}], [α*β e^{−iφn}, b²]] and ρ_m.
Matrix block_commutator_oracle(Complex alpha, Complex beta, double phi_n, double phi_m) {
    const double a2 = std::norm(alpha);
    const double b2 = std::norm(beta);
    const Complex i(0, 1);
    Matrix c(2, 2);
    c(0, 0) = 2.0 * i * a2 * b2 * std::sin(phi_n - phi_m);
    c(1, 1) = -2.0 * i * a2 * b2 * std::sin(phi_n - phi_m);
    c(0, 1) = -alpha * std::conj(beta) * (a2 - b2) * (std::exp(i * phi_n) - std::exp(i * phi_m));
    c(1, 0) = -std::conj(c(0, 1));
    return c;
}

Matrix block(Complex alpha, Complex beta, double phi) {
    Matrix m(2, 2);
    m << std::norm(alpha), alpha * std::conj(beta) * std::polar(1.0, phi), std::conj(alpha) * beta * std::polar(1.0, -phi),
        std::norm(beta);
    return m;
}

}  // namespace

TEST_CASE("qubit-side discord examples") {
    const auto equal = QubitPureState::normalized(1.0, 1.0);
    SUBCASE("equal amplitudes, phases 0 and π: zero discord") {
        const auto r = qubit_discord_check(equal, manual_decomposition({0.6, 0.4}, {0.0, kPi}));
        CHECK(r.zero_discord);
        CHECK(r.residual < 1e-15);
    }
    SUBCASE("equal amplitudes, phases 0 and π/2: discordant") {
        CHECK_FALSE(qubit_discord_check(equal, manual_decomposition({0.6, 0.4}, {0.0, kPi / 2})).zero_discord);
    }
    SUBCASE("unequal amplitudes, phases 0 and π: discordant") {
        const auto psi = QubitPureState(std::sqrt(0.9), std::sqrt(0.1));
        CHECK_FALSE(qubit_discord_check(psi, manual_decomposition({0.6, 0.4}, {0.0, kPi})).zero_discord);
    }
    SUBCASE("all phases equal: zero discord for any amplitudes") {
        const auto psi = QubitPureState(std::sqrt(0.9), Complex(0, std::sqrt(0.1)));
        CHECK(qubit_discord_check(psi, manual_decomposition({0.5, 0.3, 0.2}, {0.7, 0.7, 0.7})).zero_discord);
    }
    SUBCASE("inactive weights are ignored") {
        const auto psi = QubitPureState(std::sqrt(0.9), std::sqrt(0.1));
        CHECK(qubit_discord_check(psi, manual_decomposition({1.0, 0.0}, {0.0, 1.3})).zero_discord);
    }
}

TEST_CASE("qubit-side block commutators match their closed form") {
    InstanceGenerator gen(49);
    for (int trial = 0; trial < 50; ++trial) {
        const auto psi = QubitPureState::normalized(gen.complex_gaussian(), gen.complex_gaussian());
        const double pn = gen.uniform(-kPi, kPi);
        const double pm = gen.uniform(-kPi, kPi);
        const Matrix bn = block(psi.alpha(), psi.beta(), pn);
        const Matrix bm = block(psi.alpha(), psi.beta(), pm);
        const Matrix oracle = block_commutator_oracle(psi.alpha(), psi.beta(), pn, pm);
        CHECK((bn * bm - bm * bn - oracle).norm() < 1e-14);
        CHECK(std::abs(oracle.trace()) < 1e-15);

        const double cn = gen.uniform(0.1, 0.9);
        const auto r = qubit_discord_check(psi, manual_decomposition({cn, 1 - cn}, {pn, pm}));
        CHECK(r.residual == doctest::Approx(cn * (1 - cn) * oracle.norm()).epsilon(1e-10));
    }
}

TEST_CASE("block criterion examples") {
    SUBCASE("product state") {
        InstanceGenerator gen(50);
        const linalg::DensityMatrix prod(oracles::kron(gen.ginibre_density(2).matrix(), gen.ginibre_density(3).matrix()),
                                         {2, 3});
        CHECK(block_criterion(prod, 0).zero_discord);
        CHECK(block_criterion(prod, 1).zero_discord);
    }
    SUBCASE("Bell state") {
        const linalg::DensityMatrix bell(oracles::bell_phi_plus(), {2, 2});
        CHECK_FALSE(block_criterion(bell, 0).zero_discord);
        CHECK_FALSE(block_criterion(bell, 1).zero_discord);
    }
    SUBCASE("quantum-classical state is zero-discord on one side only") {
        // ½|0⟩⟨0|⊗|0⟩⟨0| + ½|1⟩⟨1|⊗|+⟩⟨+|: classical on the first factor only.
        Matrix plus = Matrix::Constant(2, 2, 0.5);
        const linalg::DensityMatrix qc(0.5 * oracles::kron(oracles::diag({1, 0}), oracles::diag({1, 0})) +
                                           0.5 * oracles::kron(oracles::diag({0, 1}), plus),
                                       {2, 2});
        CHECK(block_criterion(qc, 0).zero_discord);
        CHECK_FALSE(block_criterion(qc, 1).zero_discord);
    }
    SUBCASE("invalid measured index") {
        const linalg::DensityMatrix bell(oracles::bell_phi_plus(), {2, 2});
        CHECK_THROWS_AS(block_criterion(bell, 2), std::invalid_argument);
        CHECK_THROWS_AS(block_criterion(linalg::DensityMatrix(oracles::diag({1, 0})), 0), std::invalid_argument);
    }
}

TEST_CASE("eigenphase criterion agrees with the block criterion on σ(t)") {
    InstanceGenerator gen(51);
    int discordant = 0;
    int zero = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = commuting_instance(gen, 2 + trial % 3);
        const auto psi = trial % 2 ? QubitPureState::normalized(1.0, std::polar(1.0, gen.uniform(0, 6)))
                                   : QubitPureState::normalized(gen.complex_gaussian(), gen.complex_gaussian());
        const double t = trial % 5 == 0 ? 0.0 : gen.uniform(0, 6);
        const auto eig = qubit_discord_check(psi, simultaneous_eigenbasis(inst.env, inst.model, t));
        const auto bc = block_criterion(evolve_joint(psi, inst.env, inst.model, t), 0);
        CHECK(eig.zero_discord == bc.zero_discord);
        (eig.zero_discord ? zero : discordant) += 1;
    }
    CHECK(zero > 0);
    CHECK(discordant > 0);
}

TEST_CASE("environment-side detector agrees with the block criterion on σ(t)") {
    InstanceGenerator gen(52);
    for (int trial = 0; trial < 30; ++trial) {
        const Index n = 2 + trial % 3;
        const DephasingModel model(0, 0, gen.hermitian(n), gen.hermitian(n), gen.hermitian(n));
        const EnvironmentState env(trial % 3 ? gen.ginibre_density(n) : gen.pure_density(n));
        const double t = trial % 4 == 0 ? 0.0 : gen.uniform(0.2, 4);
        const auto psi = QubitPureState::normalized(gen.complex_gaussian(), gen.complex_gaussian());
        const auto envd = env_discord_check(build_Rij(env, model, t));
        const auto bc = block_criterion(evolve_joint(psi, env, model, t), 1);
        CHECK(envd.zero_discord == bc.zero_discord);
    }
}

TEST_CASE("analyze examples") {
    SUBCASE("t = 0") {
        InstanceGenerator gen(53);
        const DephasingModel model(0, 0, gen.hermitian(3), gen.hermitian(3), gen.hermitian(3));
        const auto r = analyze(QubitPureState::normalized(1.0, 2.0), EnvironmentState(gen.ginibre_density(3)), model, 0.0);
        CHECK(r.separable);
        CHECK(r.env_zero_discord);
        CHECK(r.qubit_zero_discord);
    }
    SUBCASE("pointer state") {
        const DephasingModel model(0, 0, zero(2), zero(2), herm(oracles::pauli_x()));
        const auto r = analyze(QubitPureState(1.0, 0.0), env_of(oracles::diag({1, 0})), model, 1.0);
        CHECK(r.separable);
        CHECK(r.env_zero_discord);
        CHECK(r.qubit_zero_discord);
    }
    SUBCASE("entangled") {
        const DephasingModel model(0, 0, zero(2), zero(2), herm(oracles::pauli_x()));
        const auto r = analyze(QubitPureState::normalized(1.0, 1.0), env_of(oracles::diag({1, 0})), model, 1.0);
        CHECK_FALSE(r.separable);
        CHECK_FALSE(r.env_zero_discord);
        CHECK_FALSE(r.qubit_zero_discord);
        CHECK(r.qubit_discord_residual > 1e-3);
    }
    SUBCASE("separable, environment classical, qubit discordant") {
        const DephasingModel model(0, 0, zero(2), zero(2), herm(oracles::pauli_z()));
        const auto r = analyze(QubitPureState(std::sqrt(0.9), std::sqrt(0.1)), env_of(oracles::diag({0.7, 0.3})), model, 0.8);
        CHECK(r.separable);
        CHECK(r.env_zero_discord);
        CHECK_FALSE(r.qubit_zero_discord);
        CHECK(r.tolerance_used == kDefaultTolerance);
    }
}

TEST_CASE("separability and environment-side zero discord coincide on random instances") {
    InstanceGenerator gen(54);
    int separable = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Index n = 2 + trial % 3;
        const bool commuting = trial % 2 == 0;
        const auto inst = commuting ? commuting_instance(gen, n)
                                    : CommutingInstance{DephasingModel(0, 0, gen.hermitian(n), gen.hermitian(n),
                                                                       gen.hermitian(n)),
                                                        EnvironmentState(gen.ginibre_density(n))};
        const auto psi = QubitPureState::normalized(gen.complex_gaussian(), gen.complex_gaussian());
        const auto r = analyze(psi, inst.env, inst.model, gen.uniform(0.1, 5));
        CHECK(r.separable == r.env_zero_discord);
        if (r.qubit_zero_discord) CHECK(r.env_zero_discord);
        if (r.env_zero_discord) CHECK(r.separable);
        CHECK(r.separable == commuting);
        separable += r.separable;
    }
    CHECK(separable == 30);
}

TEST_CASE("unequal amplitudes: loss of coherence implies qubit-side discord") {
    InstanceGenerator gen(55);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = commuting_instance(gen, 2 + trial % 3);
        const double p = gen.uniform(0.05, 0.45);
        const QubitPureState psi(std::sqrt(p), std::polar(std::sqrt(1 - p), gen.uniform(0, 6)));
        const double t = gen.uniform(0.5, 6);
        const double c0 = model::qubit_coherence(evolve_joint(psi, inst.env, inst.model, 0.0));
        const double ct = model::qubit_coherence(evolve_joint(psi, inst.env, inst.model, t));
        const auto r = analyze(psi, inst.env, inst.model, t);
        REQUIRE(r.separable);
        if (c0 - ct > 1e-6) CHECK_FALSE(r.qubit_zero_discord);
    }
}

TEST_CASE("verdicts are stable across tolerances for well-separated residuals") {
    const DephasingModel model(0, 0, zero(2), zero(2), herm(oracles::pauli_x()));
    const auto env = env_of(oracles::diag({1, 0}));
    for (double tol : {1e-6, 1e-9, 1e-12}) {
        CHECK_FALSE(separability_check(env, model, 1.0, tol).separable);
        CHECK(separability_check(env, model, kPi, tol).separable);
    }
}
