// commands.cpp — simulate, verify-equivalence, fig1 and oracle-crosscheck.

#include "puredeph/app/commands.hpp"

#include "puredeph/app/csv.hpp"
#include "puredeph/discord_oracle.hpp"
#include "puredeph/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace puredeph::app {

using nlohmann::json;

bool well_separated(double relative_residual) {
    return relative_residual <= kZeroBand || relative_residual >= kNonzeroBand;
}

// ---------------------------------------------------------------- simulate

bool ConservationDiagnostics::ok() const {
    return max_population_drift <= kPopulationTolerance && max_spectrum_drift <= kSpectrumTolerance &&
           max_trace_error <= kTraceTolerance;
}

SimulationResult run_simulation(const RunConfig& config) {
    SimulationResult result;
    const auto& psi = config.qubit;

    const auto sigma0 = model::evolve_joint(psi, config.env, config.model, 0.0);
    const RealVector spectrum0 = linalg::hermitian_eigenvalues(sigma0.matrix());
    const Matrix reduced0 = linalg::partial_trace(sigma0.matrix(), sigma0.subsystem_dims(), 0);

    for (double t : config.grid.times()) {
        const auto sigma = model::evolve_joint(psi, config.env, config.model, t);
        const Matrix reduced = linalg::partial_trace(sigma.matrix(), sigma.subsystem_dims(), 0);

        SimulationRow row;
        row.t = t;
        row.coherence = std::abs(reduced(0, 1));
        row.population0 = reduced(0, 0).real();
        row.population1 = reduced(1, 1).real();
        row.report = correlation::analyze(psi, config.env, config.model, t, config.tolerance);

        auto& c = result.conservation;
        c.max_population_drift = std::max({c.max_population_drift, std::abs(row.population0 - reduced0(0, 0).real()),
                                           std::abs(row.population1 - reduced0(1, 1).real())});
        c.max_spectrum_drift = std::max(
            c.max_spectrum_drift, (linalg::hermitian_eigenvalues(sigma.matrix()) - spectrum0).cwiseAbs().maxCoeff());
        c.max_trace_error = std::max(c.max_trace_error, std::abs(sigma.matrix().trace() - 1.0));

        const auto& r = row.report;
        if (well_separated(r.sep_residual) && well_separated(r.env_discord_residual) &&
            r.separable != r.env_zero_discord) {
            ++result.theorem_violations;
        }
        result.rows.push_back(row);
    }
    return result;
}

void write_simulation_csv(std::ostream& out, const SimulationResult& result) {
    CsvWriter csv(out, {"t", "coherence", "sep_residual", "separable", "env_discord_residual", "env_zero_discord",
                        "qubit_discord_residual", "qubit_zero_discord"});
    for (const auto& row : result.rows) {
        const auto& r = row.report;
        csv.row({format_double(row.t), format_double(row.coherence), format_double(r.sep_residual),
                 format_bool(r.separable), format_double(r.env_discord_residual), format_bool(r.env_zero_discord),
                 format_double(r.qubit_discord_residual), format_bool(r.qubit_zero_discord)});
    }
}

json simulation_summary(const SimulationResult& result) {
    json summary;
    summary["rows"] = result.rows.size();
    if (result.rows.empty()) return summary;

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& row : result.rows) {
        lo = std::min(lo, row.coherence);
        hi = std::max(hi, row.coherence);
    }
    summary["coherence"] = {{"initial", result.rows.front().coherence}, {"min", lo}, {"max", hi}};
    summary["tolerance"] = result.rows.front().report.tolerance_used;

    json transitions = json::array();
    const std::array<std::pair<const char*, bool correlation::CorrelationReport::*>, 3> verdicts{{
        {"separable", &correlation::CorrelationReport::separable},
        {"env_zero_discord", &correlation::CorrelationReport::env_zero_discord},
        {"qubit_zero_discord", &correlation::CorrelationReport::qubit_zero_discord},
    }};
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
        for (const auto& [name, field] : verdicts) {
            const bool before = result.rows[i - 1].report.*field;
            const bool after = result.rows[i].report.*field;
            if (before != after) transitions.push_back({{"t", result.rows[i].t}, {"verdict", name}, {"value", after}});
        }
    }
    summary["transitions"] = transitions;

    const auto& c = result.conservation;
    summary["conservation"] = {{"max_population_drift", c.max_population_drift},
                               {"max_spectrum_drift", c.max_spectrum_drift},
                               {"max_trace_error", c.max_trace_error},
                               {"ok", c.ok()}};
    summary["theorem_violations"] = result.theorem_violations;
    return summary;
}

// ------------------------------------------------------ verify-equivalence

const char* to_string(InstanceClass c) {
    switch (c) {
        case InstanceClass::RandomCoupling: return "random_coupling";
        case InstanceClass::DiagonalCommuting: return "diagonal_commuting";
        case InstanceClass::PureEnvironment: return "pure_environment";
        case InstanceClass::RecurrentSpectrum: return "recurrent_spectrum";
    }
    return "unknown";
}

namespace {

struct Instance {
    model::DephasingModel model;
    model::EnvironmentState env;
};

linalg::HermitianOperator rotated_diagonal(const Matrix& u, const RealVector& diag) {
    return linalg::HermitianOperator(u * diag.cast<Complex>().asDiagonal() * u.adjoint());
}

RealVector uniform_vector(InstanceGenerator& gen, Index n, double lo, double hi) {
    RealVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = gen.uniform(lo, hi);
    return v;
}

Instance make_instance(InstanceGenerator& gen, InstanceClass kind, Index n) {
    const double eps0 = gen.uniform(-1.0, 1.0);
    const double eps1 = gen.uniform(-1.0, 1.0);
    switch (kind) {
        case InstanceClass::RandomCoupling: {
            auto h = gen.hermitian(n);
            auto v0 = gen.hermitian(n);
            auto v1 = gen.hermitian(n);
            return {model::DephasingModel(eps0, eps1, h, v0, v1), model::EnvironmentState(gen.ginibre_density(n))};
        }
        case InstanceClass::DiagonalCommuting: {
            // Every operator diagonal in one shared, randomly rotated basis.
            const Matrix u = gen.haar_unitary(n).matrix();
            auto h = rotated_diagonal(u, uniform_vector(gen, n, -1.0, 1.0));
            auto v0 = rotated_diagonal(u, uniform_vector(gen, n, -1.0, 1.0));
            auto v1 = rotated_diagonal(u, uniform_vector(gen, n, -1.0, 1.0));
            const RealVector p = gen.probabilities(n);
            linalg::DensityMatrix r(u * p.cast<Complex>().asDiagonal() * u.adjoint());
            return {model::DephasingModel(eps0, eps1, h, v0, v1), model::EnvironmentState(r)};
        }
        case InstanceClass::PureEnvironment: {
            auto h = gen.hermitian(n);
            auto v0 = gen.hermitian(n);
            auto v1 = gen.hermitian(n);
            return {model::DephasingModel(eps0, eps1, h, v0, v1), model::EnvironmentState(gen.pure_density(n))};
        }
        case InstanceClass::RecurrentSpectrum: {
            // V_i = H_i − H_E − ε_i with H_i = U_i diag(integers) U_i†.
            auto h = gen.hermitian(n);
            const Matrix id = Matrix::Identity(n, n);
            auto integer_spectrum = [&] {
                RealVector d(n);
                for (Index i = 0; i < n; ++i) d(i) = std::floor(gen.uniform(-3.0, 4.0));
                return rotated_diagonal(gen.haar_unitary(n).matrix(), d).matrix();
            };
            linalg::HermitianOperator v0(integer_spectrum() - h.matrix() - eps0 * id);
            linalg::HermitianOperator v1(integer_spectrum() - h.matrix() - eps1 * id);
            return {model::DephasingModel(eps0, eps1, h, v0, v1), model::EnvironmentState(gen.ginibre_density(n))};
        }
    }
    throw std::logic_error("make_instance: unknown class");
}

}  // namespace

EquivalenceReport verify_equivalence(const EquivalenceOptions& options) {
    if (options.trials < 1) throw ConfigError("trials: must be at least 1");
    if (options.times < 1) throw ConfigError("times: must be at least 1");
    if (options.env_dims.empty()) throw ConfigError("env-dims: empty list");
    for (Index n : options.env_dims) {
        if (n < 1 || n > 64) throw ConfigError("env-dims: dimension " + std::to_string(n) + " outside [1, 64]");
    }
    if (!(options.tolerance > 0.0)) throw ConfigError("tol: must be positive");

    EquivalenceReport report;
    report.options = options;
    report.min_nonzero_residual = std::numeric_limits<double>::infinity();
    InstanceGenerator gen(options.seed);
    constexpr std::array<double, 3> sweep{1e-6, 1e-9, 1e-12};

    for (Index n : options.env_dims) {
        for (int trial = 0; trial < options.trials; ++trial) {
            const auto kind = static_cast<InstanceClass>(trial % 4);
            const Instance inst = make_instance(gen, kind, n);
            for (int k = 0; k < options.times; ++k) {
                EquivalenceSample s;
                s.env_dim = n;
                s.trial = trial;
                s.kind = kind;
                s.t = gen.uniform(0.0, options.t_max);
                if (kind == InstanceClass::RecurrentSpectrum && k % 2 == 0) {
                    s.recurrence_time = true;
                    s.t = 2.0 * std::numbers::pi * (1 + (k / 2) % 3);
                }

                const auto sep = correlation::separability_check(inst.env, inst.model, s.t, options.tolerance);
                const auto envd =
                    correlation::env_discord_check(correlation::build_Rij(inst.env, inst.model, s.t), options.tolerance);
                s.sep_residual = sep.residual;
                s.sep_conjugated_residual = sep.conjugated_residual;
                s.env_residual = envd.residual;
                s.separable = sep.separable;
                s.conjugated_separable = sep.conjugated_separable;
                s.env_zero_discord = envd.zero_discord;
                s.scored = well_separated(s.sep_residual) && well_separated(s.sep_conjugated_residual) &&
                           well_separated(s.env_residual);

                if (!s.scored) {
                    ++report.excluded;
                    report.samples.push_back(s);
                    continue;
                }
                ++report.scored;
                (s.separable ? report.separable : report.entangled) += 1;
                if (s.separable != s.env_zero_discord) ++report.verdict_disagreements;
                if (s.separable != s.conjugated_separable) ++report.form_disagreements;
                if (s.env_zero_discord && !s.separable) ++report.subset_violations;
                for (double tol : sweep) {
                    if ((s.sep_residual <= tol) != s.separable || (s.env_residual <= tol) != s.env_zero_discord) {
                        ++report.tolerance_sweep_mismatches;
                        break;
                    }
                }
                if (((kind == InstanceClass::DiagonalCommuting || s.recurrence_time) && !s.separable) ||
                    (kind == InstanceClass::PureEnvironment && s.separable)) {
                    ++report.construction_mismatches;
                }
                const double hi = std::max({s.sep_residual, s.sep_conjugated_residual, s.env_residual});
                const double lo = std::min({s.sep_residual, s.sep_conjugated_residual, s.env_residual});
                if (s.separable) {
                    report.max_zero_residual = std::max(report.max_zero_residual, hi);
                } else {
                    report.min_nonzero_residual = std::min(report.min_nonzero_residual, lo);
                }
                if (s.sep_residual > kZeroBand) {
                    report.max_env_to_sep_ratio = std::max(report.max_env_to_sep_ratio, s.env_residual / s.sep_residual);
                }
                report.samples.push_back(s);
            }
        }
    }
    if (report.entangled == 0) report.min_nonzero_residual = 0.0;
    return report;
}

json EquivalenceReport::to_json() const {
    json j;
    j["seed"] = options.seed;
    j["tolerance"] = options.tolerance;
    j["env_dims"] = options.env_dims;
    j["trials_per_dim"] = options.trials;
    j["times_per_trial"] = options.times;
    j["t_max"] = options.t_max;
    j["samples"] = samples.size();
    j["scored"] = scored;
    j["separable"] = separable;
    j["entangled"] = entangled;
    j["verdict_disagreements"] = verdict_disagreements;
    j["form_disagreements"] = form_disagreements;
    j["subset_violations"] = subset_violations;
    j["tolerance_sweep_mismatches"] = tolerance_sweep_mismatches;
    j["construction_mismatches"] = construction_mismatches;
    j["max_zero_residual"] = max_zero_residual;
    j["min_nonzero_residual"] = min_nonzero_residual;
    j["max_env_to_sep_ratio"] = max_env_to_sep_ratio;
    j["violations"] = violations();

    json by_class = json::object();
    json excluded_log = json::array();
    json violation_log = json::array();
    for (const auto& s : samples) {
        auto& entry = by_class[to_string(s.kind)];
        if (entry.is_null()) entry = {{"samples", 0}, {"separable", 0}, {"entangled", 0}, {"excluded", 0}};
        entry["samples"] = entry["samples"].get<int>() + 1;
        const char* bucket = !s.scored ? "excluded" : (s.separable ? "separable" : "entangled");
        entry[bucket] = entry[bucket].get<int>() + 1;

        json record = {{"env_dim", s.env_dim},
                       {"trial", s.trial},
                       {"class", to_string(s.kind)},
                       {"t", s.t},
                       {"recurrence_time", s.recurrence_time},
                       {"sep_residual", s.sep_residual},
                       {"sep_conjugated_residual", s.sep_conjugated_residual},
                       {"env_residual", s.env_residual}};
        if (!s.scored) {
            excluded_log.push_back(record);
        } else if (s.separable != s.env_zero_discord || s.separable != s.conjugated_separable) {
            violation_log.push_back(record);
        }
    }
    j["by_class"] = by_class;
    j["excluded"] = excluded_log;
    j["violation_details"] = violation_log;
    return j;
}

// -------------------------------------------------------------------- fig1

std::vector<two_qubit::Fig1Curve> run_fig1(const Fig1Options& options) {
    if (options.c0.empty()) throw ConfigError("c0: empty list");
    if (options.samples < 2) throw ConfigError("samples: must be at least 2");
    std::vector<two_qubit::Fig1Curve> curves;
    for (double c0 : options.c0) {
        if (!(c0 >= 0.5 && c0 <= 1.0)) throw ConfigError("c0: " + format_double(c0) + " outside [0.5, 1]");
        curves.push_back(two_qubit::fig1_curve(c0, options.phi_gap, options.samples));
    }
    return curves;
}

void write_fig1_csv(std::ostream& out, const std::vector<two_qubit::Fig1Curve>& curves) {
    CsvWriter csv(out, {"c0", "t_normalized", "concurrence"});
    for (const auto& curve : curves) {
        for (const auto& s : curve.samples) {
            csv.row({format_double(curve.c0), format_double(s.t_normalized), format_double(s.concurrence)});
        }
    }
}

// ------------------------------------------------------- oracle-crosscheck

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

namespace {

Matrix classical_classical_state(InstanceGenerator& gen) {
    const RealVector p = gen.probabilities(4);
    const Matrix ua = gen.haar_unitary(2).matrix();
    const Matrix ub = gen.haar_unitary(2).matrix();
    Matrix rho = Matrix::Zero(4, 4);
    for (Index i = 0; i < 2; ++i) {
        for (Index j = 0; j < 2; ++j) {
            const Vector v = linalg::tensor(ua.col(i), ub.col(j));
            rho += p(2 * i + j) * v * v.adjoint();
        }
    }
    return rho;
}

Matrix bell_state(InstanceGenerator& gen, int which) {
    Vector psi = Vector::Zero(4);
    const double h = 1.0 / std::numbers::sqrt2;
    switch (which % 4) {
        case 0: psi(0) = h; psi(3) = h; break;
        case 1: psi(0) = h; psi(3) = -h; break;
        case 2: psi(1) = h; psi(2) = h; break;
        default: psi(1) = h; psi(2) = -h; break;
    }
    const Matrix u = linalg::tensor(gen.haar_unitary(2).matrix(), gen.haar_unitary(2).matrix());
    psi = u * psi;
    return psi * psi.adjoint();
}

}  // namespace

OracleCrosscheckReport run_oracle_crosscheck(const OracleCrosscheckOptions& options) {
    if (options.trials < 1) throw ConfigError("trials: must be at least 1");
    if (options.classical < 0 || options.bell < 0) throw ConfigError("injected state counts must be non-negative");

    OracleCrosscheckReport report;
    report.options = options;
    report.bell_oracle_min = report.ginibre_oracle_min = std::numeric_limits<double>::infinity();
    report.bell_oracle_max = -std::numeric_limits<double>::infinity();
    InstanceGenerator gen(options.seed);

    auto score = [&](const std::string& kind, int index, const Matrix& m) {
        const linalg::DensityMatrix rho(m, {2, 2});
        for (std::size_t measured : {std::size_t{0}, std::size_t{1}}) {
            OracleCase c;
            c.kind = kind;
            c.index = index;
            c.measured = measured;
            c.oracle = oracle::discord_oracle(rho, measured);
            const auto block = correlation::block_criterion(rho, measured, options.tolerance);
            c.block_residual = block.residual;
            c.block_zero_discord = block.zero_discord;
            c.agrees = (c.oracle <= options.zero_threshold) == c.block_zero_discord;
            c.state = rho.matrix();
            if (c.agrees) ++report.agreements;
            if (kind == "bell") {
                report.bell_oracle_min = std::min(report.bell_oracle_min, c.oracle);
                report.bell_oracle_max = std::max(report.bell_oracle_max, c.oracle);
            } else if (kind == "classical") {
                report.classical_oracle_max = std::max(report.classical_oracle_max, c.oracle);
            } else {
                report.ginibre_oracle_min = std::min(report.ginibre_oracle_min, c.oracle);
            }
            report.cases.push_back(std::move(c));
        }
    };

    for (int i = 0; i < options.trials; ++i) score("ginibre", i, gen.ginibre_density(4).matrix());
    for (int i = 0; i < options.classical; ++i) score("classical", i, classical_classical_state(gen));
    for (int i = 0; i < options.bell; ++i) score("bell", i, bell_state(gen, i));

    if (options.bell == 0) report.bell_oracle_min = report.bell_oracle_max = 0.0;
    return report;
}

json OracleCrosscheckReport::to_json() const {
    json j;
    j["seed"] = options.seed;
    j["tolerance"] = options.tolerance;
    j["zero_threshold"] = options.zero_threshold;
    j["ginibre_states"] = options.trials;
    j["classical_states"] = options.classical;
    j["bell_states"] = options.bell;
    j["cases"] = cases.size();
    j["agreements"] = agreements;
    j["disagreements"] = disagreements();
    j["agreement_rate"] = cases.empty() ? 1.0 : static_cast<double>(agreements) / static_cast<double>(cases.size());
    j["bell_oracle_min"] = bell_oracle_min;
    j["bell_oracle_max"] = bell_oracle_max;
    j["classical_oracle_max"] = classical_oracle_max;
    j["ginibre_oracle_min"] = ginibre_oracle_min;
    json details = json::array();
    for (const auto& c : cases) {
        if (c.agrees) continue;
        details.push_back({{"kind", c.kind},
                           {"index", c.index},
                           {"measured", c.measured},
                           {"oracle", c.oracle},
                           {"block_residual", c.block_residual},
                           {"block_zero_discord", c.block_zero_discord},
                           {"state", matrix_to_json(c.state)}});
    }
    j["disagreement_details"] = details;
    return j;
}

}  // namespace puredeph::app
