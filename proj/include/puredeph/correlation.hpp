// correlation.hpp — qubit–environment correlation detectors for states
// generated by pure-dephasing evolution:
//
//   * separability:            [R(0), ŵ(t)] = 0, equivalently R_00(t) = R_11(t)
//   * zero discord w.r.t. E:   R_ij(t) = w_i R(0) w_j† pairwise commute, R_01 normal
//   * zero discord w.r.t. Q:   the 2×2 blocks c_n' ρ_n of the eigenphase form commute
//
// plus the generic block criterion for arbitrary bipartite states.
//
// All residuals are relative: ‖[A, B]‖_F / max(1, ‖A‖_F ‖B‖_F). A criterion
// holds when its residual is at most the tolerance.

#pragma once

#include "puredeph/linalg.hpp"
#include "puredeph/model.hpp"

#include <array>
#include <stdexcept>

namespace puredeph::correlation {

using model::DephasingModel;
using model::EnvironmentState;
using model::QubitPureState;

// Cutoff below which an eigenweight c_n' is treated as absent.
inline constexpr double kActiveWeightCutoff = 1e-12;

// ‖[A, B]‖_F / max(1, ‖A‖_F ‖B‖_F)
double relative_commutator(const Matrix& a, const Matrix& b);

struct SeparabilityResult {
    bool separable = true;
    double residual = 0.0;              // ‖[R(0), ŵ]‖_F, relative to max(1, ‖R(0)‖_F²)
    bool conjugated_separable = true;
    double conjugated_residual = 0.0;   // ‖w_0 R w_0† − w_1 R w_1†‖_F, same scale

    bool forms_agree() const { return separable == conjugated_separable; }
};

SeparabilityResult separability_check(const EnvironmentState& env, const DephasingModel& model, double t,
                                      double tol = kDefaultTolerance);

struct RijFamily {
    Matrix r00;
    Matrix r01;
    Matrix r10;
    Matrix r11;
};

RijFamily build_Rij(const EnvironmentState& env, const DephasingModel& model, double t);

struct EnvDiscordResult {
    bool zero_discord = true;
    double residual = 0.0;  // max over all entries below
    // [R00,R11], [R00,R01], [R00,R10], [R11,R01], [R11,R10], [R01,R10]
    std::array<double, 6> commutators{};
    // [R_ij, R_ij†] for ij = 00, 01, 10, 11
    std::array<double, 4> normality{};
};

EnvDiscordResult env_discord_check(const RijFamily& family, double tol = kDefaultTolerance);

// Common eigenbasis of R(0) and ŵ(t) = w_0† w_1 at a separable time:
//   R(0) = Σ c_n' |n'⟩⟨n'|,  ŵ(t) = Σ exp(−i φ_n) |n'⟩⟨n'|.
struct EigenphaseDecomposition {
    Matrix basis;          // columns |n'⟩
    RealVector weights;    // c_n'
    RealVector phases;     // φ_n in (−π, π]
    double r0_reconstruction = 0.0;
    double w_reconstruction = 0.0;
};

class NotSeparableError : public std::domain_error {
public:
    NotSeparableError(const std::string& what, double residual) : std::domain_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Throws NotSeparableError if [R(0), ŵ] does not vanish within tol, and
// std::runtime_error if the joint basis fails to reconstruct both operators
// to 1e-9.
EigenphaseDecomposition simultaneous_eigenbasis(const EnvironmentState& env, const DephasingModel& model, double t,
                                                double tol = kDefaultTolerance);

// Matrix-level form: r0 Hermitian, w_rel unitary.
EigenphaseDecomposition simultaneous_eigenbasis(const Matrix& r0, const Matrix& w_rel,
                                                double tol = kDefaultTolerance);

struct QubitDiscordResult {
    bool zero_discord = true;
    double residual = 0.0;
};

// Pairwise commutators of the blocks c_n' [[|α|², αβ* e^{iφ_n}], [α*β e^{−iφ_n}, |β|²]]
// over all active n, m.
QubitDiscordResult qubit_discord_check(const QubitPureState& psi, const EigenphaseDecomposition& decomp,
                                       double tol = kDefaultTolerance);

struct BlockCriterionResult {
    bool zero_discord = true;
    double residual = 0.0;
};

// Zero discord with respect to subsystem `measured` of a two-party state:
// all blocks ⟨k|σ|q⟩ (k, q running over the other party) are normal and
// commute pairwise.
BlockCriterionResult block_criterion(const linalg::DensityMatrix& sigma, std::size_t measured,
                                     double tol = kDefaultTolerance);

struct CorrelationReport {
    double t = 0.0;
    double sep_residual = 0.0;
    double sep_conjugated_residual = 0.0;
    bool separable = true;
    double env_discord_residual = 0.0;
    bool env_zero_discord = true;
    double qubit_discord_residual = 0.0;
    bool qubit_zero_discord = true;
    double tolerance_used = kDefaultTolerance;
};

CorrelationReport analyze(const QubitPureState& psi, const EnvironmentState& env, const DephasingModel& model,
                          double t, double tol = kDefaultTolerance);

}  // namespace puredeph::correlation
