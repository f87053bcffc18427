// config.hpp — JSON run configuration for the simulate command.
//
//   {
//     "model": {"env_dim": 2, "eps0": 0.0, "eps1": 0.0,
//               "H_E": "zero", "V0": "zero", "V1": "pauli_z(1.0)"},
//     "environment": {"R0": "diag(0.7, 0.3)"},
//     "qubit": {"alpha": [0.7071, 0.0], "beta": [0.7071, 0.0]},
//     "time": {"t_max": 10.0, "steps": 200},
//     "tolerance": 1e-9,
//     "output": "run.csv"
//   }
//
// Operators are either preset strings or explicit row-major nested arrays of
// [re, im] pairs. Qubit amplitudes are [magnitude, phase] pairs and are
// normalized after parsing.

#pragma once

#include "puredeph/linalg.hpp"
#include "puredeph/model.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace puredeph::app {

// Malformed or inconsistent configuration. The message names the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kToleranceEnvVar = "PUREDEPH_TOLERANCE";

// kDefaultTolerance unless PUREDEPH_TOLERANCE holds a positive number.
double default_tolerance();

struct TimeGrid {
    double t_max = 0.0;
    int steps = 0;  // intervals; the grid has steps + 1 points including 0 and t_max

    std::vector<double> times() const;
};

struct RunConfig {
    model::DephasingModel model;
    model::EnvironmentState env;
    model::QubitPureState qubit;
    TimeGrid grid;
    double tolerance = kDefaultTolerance;
    std::optional<std::string> output;
};

RunConfig parse_run_config(const nlohmann::json& j, double default_tol = kDefaultTolerance);
RunConfig load_run_config(const std::string& path, double default_tol = kDefaultTolerance);

// Presets: zero, diag(v...), pauli_z(g), pauli_x(g), random_hermitian(seed, scale).
linalg::HermitianOperator parse_operator(const nlohmann::json& j, Index dim, const std::string& field);

// Presets: diag(p...), pure(k), maximally_mixed, ginibre_density(seed).
linalg::DensityMatrix parse_density(const nlohmann::json& j, Index dim, const std::string& field);

// Row-major nested array of [re, im] pairs (bare reals are accepted).
Matrix parse_matrix(const nlohmann::json& j, const std::string& field);

struct Preset {
    std::string name;
    std::vector<double> args;
};

// "name(a, b, ...)" or "name".
Preset parse_preset(const std::string& text, const std::string& field);

}  // namespace puredeph::app
