// model.hpp — pure-dephasing qubit–environment Hamiltonian and its exact
// unitary evolution.
//
//   H = Σ_i ε_i |i⟩⟨i| + H_E + |0⟩⟨0| ⊗ V_0 + |1⟩⟨1| ⊗ V_1
//
// The qubit pointer basis {|0⟩, |1⟩} is outermost in every joint matrix, so
// the joint state over (qubit, environment) has subsystem_dims {2, N}.

#pragma once

#include "puredeph/linalg.hpp"

#include <array>

namespace puredeph::model {

using linalg::DensityMatrix;
using linalg::HermitianOperator;
using linalg::UnitaryOperator;

class DephasingModel {
public:
    DephasingModel(double eps0, double eps1, HermitianOperator env_hamiltonian,
                   HermitianOperator coupling0, HermitianOperator coupling1);

    double eps0() const { return eps0_; }
    double eps1() const { return eps1_; }
    const HermitianOperator& env_hamiltonian() const { return h_env_; }
    const HermitianOperator& coupling0() const { return v0_; }
    const HermitianOperator& coupling1() const { return v1_; }
    Index env_dim() const { return h_env_.dim(); }

    // H_i + ε_i·1, the generator of w_i(t).
    HermitianOperator conditional_hamiltonian(int pointer) const;

private:
    double eps0_;
    double eps1_;
    HermitianOperator h_env_;
    HermitianOperator v0_;
    HermitianOperator v1_;
};

class QubitPureState {
public:
    // |α|² + |β|² must equal 1 within 1e-12.
    QubitPureState(Complex alpha, Complex beta);

    // Rescales (α, β) to unit norm; rejects the zero vector.
    static QubitPureState normalized(Complex alpha, Complex beta);

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }
    bool is_superposition() const { return alpha_ != 0.0 && beta_ != 0.0; }
    Matrix density() const;

private:
    Complex alpha_;
    Complex beta_;
};

// Initial environment state R(0) with its eigen-decomposition Σ c_n |n⟩⟨n|.
class EnvironmentState {
public:
    explicit EnvironmentState(DensityMatrix r0);

    const Matrix& density() const { return r0_.matrix(); }
    const DensityMatrix& state() const { return r0_; }
    Index dim() const { return r0_.dim(); }
    const linalg::EigenSystem& spectrum() const { return spectrum_; }

private:
    DensityMatrix r0_;
    linalg::EigenSystem spectrum_;
};

struct ConditionalEvolutions {
    UnitaryOperator w0;
    UnitaryOperator w1;
};

// w_i(t) = exp(−i(H_E + V_i + ε_i)t); the qubit self-energy phase is absorbed.
ConditionalEvolutions conditional_evolutions(const DephasingModel& model, double t);

// ŵ(t) = w_0†(t) w_1(t).
Matrix relative_evolution(const ConditionalEvolutions& w);

// U(t) = |0⟩⟨0| ⊗ w_0(t) + |1⟩⟨1| ⊗ w_1(t).
UnitaryOperator joint_evolution_operator(const DephasingModel& model, double t);

// σ(t) = U(t)(|ψ⟩⟨ψ| ⊗ R(0))U†(t), subsystem_dims {2, N}.
DensityMatrix evolve_joint(const QubitPureState& psi, const EnvironmentState& env,
                           const DephasingModel& model, double t);

// σ_kq = ⟨k|σ|q⟩ for qubit indices k, q; indexed [k][q].
using QubitBlocks = std::array<std::array<Matrix, 2>, 2>;
QubitBlocks qubit_blocks(const DensityMatrix& sigma);

// |⟨0| Tr_E σ |1⟩|.
double qubit_coherence(const DensityMatrix& sigma);

}  // namespace puredeph::model
