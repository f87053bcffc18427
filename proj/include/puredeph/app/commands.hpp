// commands.hpp — the CLI subcommands as library calls, so the test suites
// can drive them without spawning processes.

#pragma once

#include "puredeph/app/config.hpp"
#include "puredeph/correlation.hpp"
#include "puredeph/two_qubit.hpp"

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace puredeph::app {

// Exit codes shared by every subcommand.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitViolation = 2;

// Residuals inside (kZeroBand, kNonzeroBand) are too close to the verdict
// threshold to be scored; they are logged and excluded.
inline constexpr double kZeroBand = 1e-12;
inline constexpr double kNonzeroBand = 1e-6;

bool well_separated(double relative_residual);

// ---------------------------------------------------------------- simulate

struct SimulationRow {
    double t = 0.0;
    double coherence = 0.0;
    double population0 = 0.0;
    double population1 = 0.0;
    correlation::CorrelationReport report;
};

struct ConservationDiagnostics {
    double max_population_drift = 0.0;  // |⟨i|Tr_E σ(t)|i⟩ − ⟨i|Tr_E σ(0)|i⟩|
    double max_spectrum_drift = 0.0;    // max |λ_k(σ(t)) − λ_k(σ(0))|
    double max_trace_error = 0.0;       // |Tr σ(t) − 1|

    bool ok() const;
};

inline constexpr double kPopulationTolerance = 1e-12;
inline constexpr double kSpectrumTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-12;

struct SimulationResult {
    std::vector<SimulationRow> rows;
    ConservationDiagnostics conservation;
    int theorem_violations = 0;  // well-separated rows where separable != env_zero_discord
};

SimulationResult run_simulation(const RunConfig& config);

// Columns: t, coherence, sep_residual, separable, env_discord_residual,
// env_zero_discord, qubit_discord_residual, qubit_zero_discord.
void write_simulation_csv(std::ostream& out, const SimulationResult& result);

nlohmann::json simulation_summary(const SimulationResult& result);

// ------------------------------------------------------ verify-equivalence

// RecurrentSpectrum: H_0 and H_1 have spectra in ℤ but share no eigenbasis
// with each other or with R(0); at t ∈ 2πℤ both w_i are scalars, so the
// state is separable without any commuting structure.
enum class InstanceClass { RandomCoupling, DiagonalCommuting, PureEnvironment, RecurrentSpectrum };
const char* to_string(InstanceClass c);

struct EquivalenceOptions {
    std::vector<Index> env_dims{2, 3, 4};
    int trials = 100;  // per environment dimension; classes rotate through the trials
    int times = 16;    // time points per trial; recurrent instances put half of them on t ∈ 2πℤ
    std::uint64_t seed = 2018;
    double tolerance = kDefaultTolerance;
    double t_max = 5.0;
};

struct EquivalenceSample {
    Index env_dim = 0;
    int trial = 0;
    InstanceClass kind = InstanceClass::RandomCoupling;
    double t = 0.0;
    bool recurrence_time = false;
    double sep_residual = 0.0;
    double sep_conjugated_residual = 0.0;
    double env_residual = 0.0;
    bool separable = false;
    bool conjugated_separable = false;
    bool env_zero_discord = false;
    bool scored = false;  // all residuals well separated
};

struct EquivalenceReport {
    EquivalenceOptions options;
    std::vector<EquivalenceSample> samples;

    int scored = 0;
    int excluded = 0;
    int separable = 0;
    int entangled = 0;
    int verdict_disagreements = 0;      // separable != env_zero_discord
    int form_disagreements = 0;         // commutator form != conjugation form
    int subset_violations = 0;          // env_zero_discord && !separable
    int tolerance_sweep_mismatches = 0; // verdicts differ across {1e-6, 1e-9, 1e-12}
    int construction_mismatches = 0;    // commuting/recurrence-time sample entangled, or pure-environment sample separable
    double max_zero_residual = 0.0;
    double min_nonzero_residual = 0.0;
    double max_env_to_sep_ratio = 0.0;

    int violations() const { return verdict_disagreements + form_disagreements + subset_violations +
                                    tolerance_sweep_mismatches; }
    nlohmann::json to_json() const;
};

EquivalenceReport verify_equivalence(const EquivalenceOptions& options);

// -------------------------------------------------------------------- fig1

struct Fig1Options {
    std::vector<double> c0{0.5, 0.7, 0.9};
    int samples = 101;
    double phi_gap = 1.0;
};

std::vector<two_qubit::Fig1Curve> run_fig1(const Fig1Options& options);

// Long format, columns: c0, t_normalized, concurrence.
void write_fig1_csv(std::ostream& out, const std::vector<two_qubit::Fig1Curve>& curves);

// ------------------------------------------------------- oracle-crosscheck

struct OracleCrosscheckOptions {
    int trials = 200;     // Ginibre-random 2⊗2 states
    int classical = 20;   // classical-classical states in random local bases
    int bell = 20;        // Bell states under random local unitaries
    std::uint64_t seed = 7;
    double zero_threshold = 5e-3;
    double tolerance = kDefaultTolerance;
};

struct OracleCase {
    std::string kind;  // "ginibre", "classical", "bell"
    int index = 0;
    std::size_t measured = 0;
    double oracle = 0.0;
    double block_residual = 0.0;
    bool block_zero_discord = false;
    bool agrees = false;
    Matrix state;
};

struct OracleCrosscheckReport {
    OracleCrosscheckOptions options;
    std::vector<OracleCase> cases;
    int agreements = 0;
    double bell_oracle_min = 0.0;
    double bell_oracle_max = 0.0;
    double classical_oracle_max = 0.0;
    double ginibre_oracle_min = 0.0;

    int disagreements() const { return static_cast<int>(cases.size()) - agreements; }
    nlohmann::json to_json() const;
};

OracleCrosscheckReport run_oracle_crosscheck(const OracleCrosscheckOptions& options);

nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace puredeph::app
