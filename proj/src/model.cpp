// model.cpp — pure-dephasing Hamiltonian and exact joint evolution.

#include "puredeph/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace puredeph::model {

namespace {

void require_qubit_env(const DensityMatrix& sigma, const char* what) {
    const auto& dims = sigma.subsystem_dims();
    if (dims.size() != 2 || dims[0] != 2) {
        throw std::invalid_argument(std::string(what) + ": expected subsystem_dims {2, N}");
    }
}

}  // namespace

DephasingModel::DephasingModel(double eps0, double eps1, HermitianOperator env_hamiltonian,
                               HermitianOperator coupling0, HermitianOperator coupling1)
    : eps0_(eps0), eps1_(eps1), h_env_(std::move(env_hamiltonian)), v0_(std::move(coupling0)),
      v1_(std::move(coupling1)) {
    if (!std::isfinite(eps0_) || !std::isfinite(eps1_)) {
        throw std::invalid_argument("DephasingModel: qubit energies must be finite");
    }
    const Index n = h_env_.dim();
    if (v0_.dim() != n) {
        throw std::invalid_argument("DephasingModel: V0 is " + std::to_string(v0_.dim()) + "x" +
                                    std::to_string(v0_.dim()) + ", H_E is " + std::to_string(n) + "x" +
                                    std::to_string(n));
    }
    if (v1_.dim() != n) {
        throw std::invalid_argument("DephasingModel: V1 is " + std::to_string(v1_.dim()) + "x" +
                                    std::to_string(v1_.dim()) + ", H_E is " + std::to_string(n) + "x" +
                                    std::to_string(n));
    }
}

HermitianOperator DephasingModel::conditional_hamiltonian(int pointer) const {
    if (pointer != 0 && pointer != 1) throw std::invalid_argument("conditional_hamiltonian: pointer must be 0 or 1");
    const HermitianOperator& v = pointer == 0 ? v0_ : v1_;
    const double eps = pointer == 0 ? eps0_ : eps1_;
    const Index n = env_dim();
    return HermitianOperator(h_env_.matrix() + v.matrix() + eps * Matrix::Identity(n, n));
}

QubitPureState::QubitPureState(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
    const double norm2 = std::norm(alpha) + std::norm(beta);
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument("QubitPureState: |alpha|^2 + |beta|^2 = " + std::to_string(norm2) +
                                    ", expected 1");
    }
}

QubitPureState QubitPureState::normalized(Complex alpha, Complex beta) {
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("QubitPureState: amplitudes must not both vanish");
    }
    return QubitPureState(alpha / norm, beta / norm);
}

Matrix QubitPureState::density() const {
    Vector psi(2);
    psi << alpha_, beta_;
    return psi * psi.adjoint();
}

EnvironmentState::EnvironmentState(DensityMatrix r0)
    : r0_(std::move(r0)), spectrum_(linalg::hermitian_eig(HermitianOperator(r0_.matrix()))) {}

ConditionalEvolutions conditional_evolutions(const DephasingModel& model, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("conditional_evolutions: non-finite time");
    return {linalg::unitary_exp(model.conditional_hamiltonian(0), t),
            linalg::unitary_exp(model.conditional_hamiltonian(1), t)};
}

Matrix relative_evolution(const ConditionalEvolutions& w) {
    return w.w0.matrix().adjoint() * w.w1.matrix();
}

UnitaryOperator joint_evolution_operator(const DephasingModel& model, double t) {
    const ConditionalEvolutions w = conditional_evolutions(model, t);
    const Index n = model.env_dim();
    Matrix u = Matrix::Zero(2 * n, 2 * n);
    u.topLeftCorner(n, n) = w.w0.matrix();
    u.bottomRightCorner(n, n) = w.w1.matrix();
    return UnitaryOperator(std::move(u));
}

DensityMatrix evolve_joint(const QubitPureState& psi, const EnvironmentState& env,
                           const DephasingModel& model, double t) {
    if (env.dim() != model.env_dim()) {
        throw std::invalid_argument("evolve_joint: R0 is " + std::to_string(env.dim()) +
                                    "-dimensional but the model has env_dim " + std::to_string(model.env_dim()));
    }
    const Matrix initial = linalg::tensor(psi.density(), env.density());
    const Matrix u = joint_evolution_operator(model, t).matrix();
    return DensityMatrix(u * initial * u.adjoint(), {2, model.env_dim()});
}

QubitBlocks qubit_blocks(const DensityMatrix& sigma) {
    require_qubit_env(sigma, "qubit_blocks");
    const Index n = sigma.subsystem_dims()[1];
    QubitBlocks blocks;
    for (Index k = 0; k < 2; ++k) {
        for (Index q = 0; q < 2; ++q) blocks[k][q] = sigma.matrix().block(k * n, q * n, n, n);
    }
    return blocks;
}

double qubit_coherence(const DensityMatrix& sigma) {
    require_qubit_env(sigma, "qubit_coherence");
    return std::abs(linalg::partial_trace(sigma.matrix(), sigma.subsystem_dims(), 0)(0, 1));
}

}  // namespace puredeph::model
