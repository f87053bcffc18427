// two_qubit.hpp — Bell pair (|00⟩ + |11⟩)/√2 with only qubit A coupled to an
// environment:
//
//   H = ε_A |1⟩⟨1|_A + ε_B |1⟩⟨1|_B + |1⟩⟨1|_A ⊗ V_A + H_E
//
// Joint states are ordered (A, B, E); the pair is one factor of dimension 4
// in the {4, N} view and two qubit factors in the {2, 2, N} view.

#pragma once

#include "puredeph/correlation.hpp"
#include "puredeph/linalg.hpp"
#include "puredeph/model.hpp"

#include <vector>

namespace puredeph::two_qubit {

using linalg::DensityMatrix;
using linalg::HermitianOperator;
using model::EnvironmentState;

class TwoQubitModel {
public:
    TwoQubitModel(double eps_a, double eps_b, HermitianOperator env_hamiltonian, HermitianOperator coupling_a,
                  EnvironmentState env);

    double eps_a() const { return eps_a_; }
    double eps_b() const { return eps_b_; }
    const HermitianOperator& env_hamiltonian() const { return h_env_; }
    const HermitianOperator& coupling_a() const { return v_a_; }
    const EnvironmentState& env() const { return env_; }
    Index env_dim() const { return h_env_.dim(); }

    // Single-qubit model acting on span{|00⟩, |11⟩}: |00⟩ ↦ |0⟩, |11⟩ ↦ |1⟩.
    model::DephasingModel effective_model() const;

private:
    double eps_a_;
    double eps_b_;
    HermitianOperator h_env_;
    HermitianOperator v_a_;
    EnvironmentState env_;
};

// U(t)(|Φ+⟩⟨Φ+| ⊗ R(0))U†(t) with U = exp(−iHt); subsystem_dims {4, N}.
DensityMatrix evolve_bell(const TwoQubitModel& model, double t);

// Tr_E σ as a two-qubit state, subsystem_dims {2, 2}.
DensityMatrix reduced_pair(const DensityMatrix& sigma);

// Joint eigenbasis of R(0) and ŵ(t) for the effective single-qubit model.
correlation::EigenphaseDecomposition pair_decomposition(const TwoQubitModel& model, double t,
                                                        double tol = kDefaultTolerance);

// |Σ_n c_n' exp(iφ_n)|
double concurrence_closed_form(const correlation::EigenphaseDecomposition& decomp);

// Wootters concurrence of a two-qubit density matrix.
double wootters_concurrence(const DensityMatrix& rho);

struct Bipartition {
    std::vector<Index> dims;          // factorization of the full space
    std::vector<std::size_t> side_a;  // factors on the transposed side
};

// Σ |negative eigenvalues| of the partial transpose over side_a.
double negativity(const Matrix& sigma, const Bipartition& cut);
double negativity(const DensityMatrix& sigma, const Bipartition& cut);

struct CycleTimes {
    double phi0 = 0.0;
    double phi1 = 0.0;
    double period = 0.0;       // 2π / |φ1 − φ0|
    std::vector<double> t_p;   // pure Bell state recurs: e^{iφ0 t} = e^{iφ1 t}
    std::vector<double> t_q;   // midcycle: e^{iφ0 t} = −e^{iφ1 t}
};

// First `count` times of each kind for static eigenphases φ_n(t) = φ_n·t.
CycleTimes cycle_times(double phi0, double phi1, int count);

// N = 2, H_E = 0, V_A = diag(0, phi_gap), R(0) = diag(c0, 1 − c0), ε = 0.
TwoQubitModel fig1_model(double c0, double phi_gap = 1.0);

struct Fig1Sample {
    double t = 0.0;
    double t_normalized = 0.0;
    double concurrence = 0.0;  // |c0 + (1 − c0) e^{i·phi_gap·t}|
    double wootters = 0.0;     // from the reduced state of the full evolution
};

struct Fig1Curve {
    double c0 = 0.0;
    double phi_gap = 0.0;
    double period = 0.0;
    std::vector<Fig1Sample> samples;
    double max_deviation = 0.0;  // max |concurrence − wootters|
};

// One full cycle t ∈ [0, 2π/phi_gap] on `samples` uniform points (endpoints included).
Fig1Curve fig1_curve(double c0, double phi_gap, int samples);

}  // namespace puredeph::two_qubit
