// config.cpp — JSON run configuration.

#include "puredeph/app/config.hpp"

#include "puredeph/random.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace puredeph::app {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ConfigError(field + ": " + message);
}

double number(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(field, "must be finite");
    return v;
}

const json& member(const json& j, const std::string& key, const std::string& field) {
    if (!j.is_object()) fail(field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(field + "." + key, "missing");
    return *it;
}

Complex complex_entry(const json& j, const std::string& field) {
    if (j.is_number()) return {number(j, field), 0.0};
    if (j.is_array() && j.size() == 2) return {number(j[0], field), number(j[1], field)};
    fail(field, "expected a number or an [re, im] pair");
}

void require_args(const Preset& p, std::size_t n, const std::string& field) {
    if (p.args.size() != n) {
        fail(field, "preset " + p.name + " takes " + std::to_string(n) + " argument(s), got " +
                        std::to_string(p.args.size()));
    }
}

void require_dim(const Matrix& m, Index dim, const std::string& field) {
    if (m.rows() != dim || m.cols() != dim) {
        fail(field, "dimension mismatch: got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        ", env_dim is " + std::to_string(dim));
    }
}

Matrix pauli(Index dim, bool x, double g, const std::string& field) {
    if (dim != 2) fail(field, "dimension mismatch: Pauli presets need env_dim 2, got " + std::to_string(dim));
    Matrix m = Matrix::Zero(2, 2);
    if (x) {
        m(0, 1) = m(1, 0) = g;
    } else {
        m(0, 0) = g;
        m(1, 1) = -g;
    }
    return m;
}

std::uint64_t seed_arg(double v, const std::string& field) {
    if (v < 0 || v != std::floor(v)) fail(field, "seed must be a non-negative integer");
    return static_cast<std::uint64_t>(v);
}

}  // namespace

double default_tolerance() {
    const char* env = std::getenv(kToleranceEnvVar);
    if (env == nullptr || *env == '\0') return kDefaultTolerance;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string(kToleranceEnvVar) + ": expected a positive number, got '" + env + "'");
    }
    return v;
}

std::vector<double> TimeGrid::times() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) out.push_back(steps == 0 ? 0.0 : t_max * k / steps);
    return out;
}

Preset parse_preset(const std::string& text, const std::string& field) {
    Preset p;
    const auto open = text.find('(');
    if (open == std::string::npos) {
        p.name = text;
    } else {
        if (text.back() != ')') fail(field, "unterminated preset '" + text + "'");
        p.name = text.substr(0, open);
        std::stringstream args(text.substr(open + 1, text.size() - open - 2));
        std::string token;
        while (std::getline(args, token, ',')) {
            try {
                std::size_t used = 0;
                const double v = std::stod(token, &used);
                if (token.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(token);
                p.args.push_back(v);
            } catch (const std::exception&) {
                fail(field, "bad preset argument '" + token + "'");
            }
        }
    }
    const auto trim = p.name.find_last_not_of(' ');
    p.name = p.name.substr(0, trim + 1);
    if (p.name.empty()) fail(field, "empty preset name");
    return p;
}

Matrix parse_matrix(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) fail(field, "expected a non-empty array of rows");
    const auto n = static_cast<Index>(j.size());
    Matrix m(n, n);
    for (Index r = 0; r < n; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != n) {
            fail(field, "dimension mismatch: row " + std::to_string(r) + " does not have " + std::to_string(n) +
                            " entries");
        }
        for (Index c = 0; c < n; ++c) {
            m(r, c) = complex_entry(row[static_cast<std::size_t>(c)],
                                    field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
    }
    return m;
}

linalg::HermitianOperator parse_operator(const json& j, Index dim, const std::string& field) {
    Matrix m;
    if (j.is_string()) {
        const Preset p = parse_preset(j.get<std::string>(), field);
        if (p.name == "zero") {
            require_args(p, 0, field);
            m = Matrix::Zero(dim, dim);
        } else if (p.name == "diag") {
            if (static_cast<Index>(p.args.size()) != dim) {
                fail(field, "dimension mismatch: diag has " + std::to_string(p.args.size()) + " entries, env_dim is " +
                                std::to_string(dim));
            }
            m = Matrix::Zero(dim, dim);
            for (Index i = 0; i < dim; ++i) m(i, i) = p.args[static_cast<std::size_t>(i)];
        } else if (p.name == "pauli_z" || p.name == "pauli_x") {
            require_args(p, 1, field);
            m = pauli(dim, p.name == "pauli_x", p.args[0], field);
        } else if (p.name == "random_hermitian") {
            require_args(p, 2, field);
            InstanceGenerator gen(seed_arg(p.args[0], field));
            m = gen.hermitian(dim, p.args[1]).matrix();
        } else {
            fail(field, "unknown operator preset '" + p.name + "'");
        }
    } else {
        m = parse_matrix(j, field);
        require_dim(m, dim, field);
    }
    try {
        return linalg::HermitianOperator(m);
    } catch (const std::invalid_argument& e) {
        fail(field, e.what());
    }
}

linalg::DensityMatrix parse_density(const json& j, Index dim, const std::string& field) {
    Matrix m;
    if (j.is_string()) {
        const Preset p = parse_preset(j.get<std::string>(), field);
        if (p.name == "diag") {
            if (static_cast<Index>(p.args.size()) != dim) {
                fail(field, "dimension mismatch: diag has " + std::to_string(p.args.size()) + " entries, env_dim is " +
                                std::to_string(dim));
            }
            m = Matrix::Zero(dim, dim);
            for (Index i = 0; i < dim; ++i) m(i, i) = p.args[static_cast<std::size_t>(i)];
        } else if (p.name == "pure") {
            require_args(p, 1, field);
            const double k = p.args[0];
            if (k < 0 || k >= static_cast<double>(dim) || k != std::floor(k)) {
                fail(field, "pure(k) needs an integer 0 <= k < env_dim");
            }
            m = Matrix::Zero(dim, dim);
            m(static_cast<Index>(k), static_cast<Index>(k)) = 1.0;
        } else if (p.name == "maximally_mixed") {
            require_args(p, 0, field);
            m = Matrix::Identity(dim, dim) / static_cast<double>(dim);
        } else if (p.name == "ginibre_density") {
            require_args(p, 1, field);
            InstanceGenerator gen(seed_arg(p.args[0], field));
            m = gen.ginibre_density(dim).matrix();
        } else {
            fail(field, "unknown density preset '" + p.name + "'");
        }
    } else {
        m = parse_matrix(j, field);
        require_dim(m, dim, field);
    }
    try {
        return linalg::DensityMatrix(m);
    } catch (const std::invalid_argument& e) {
        fail(field, e.what());
    }
}

RunConfig parse_run_config(const json& j, double default_tol) {
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");

    const json& jm = member(j, "model", "config");
    const json& jdim = member(jm, "env_dim", "model");
    if (!jdim.is_number_integer() || jdim.get<long long>() < 1) fail("model.env_dim", "expected a positive integer");
    const auto dim = static_cast<Index>(jdim.get<long long>());

    const double eps0 = jm.contains("eps0") ? number(jm["eps0"], "model.eps0") : 0.0;
    const double eps1 = jm.contains("eps1") ? number(jm["eps1"], "model.eps1") : 0.0;
    auto h_env = parse_operator(member(jm, "H_E", "model"), dim, "model.H_E");
    auto v0 = parse_operator(member(jm, "V0", "model"), dim, "model.V0");
    auto v1 = parse_operator(member(jm, "V1", "model"), dim, "model.V1");

    auto r0 = parse_density(member(member(j, "environment", "config"), "R0", "environment"), dim, "environment.R0");

    const json& jq = member(j, "qubit", "config");
    auto amplitude = [&](const char* key) {
        const std::string field = std::string("qubit.") + key;
        const json& a = member(jq, key, "qubit");
        if (!a.is_array() || a.size() != 2) fail(field, "expected [magnitude, phase]");
        const double mag = number(a[0], field);
        if (mag < 0.0) fail(field, "magnitude must be non-negative");
        return std::polar(mag, number(a[1], field));
    };
    const Complex alpha = amplitude("alpha");
    const Complex beta = amplitude("beta");
    std::optional<model::QubitPureState> qubit;
    try {
        qubit = model::QubitPureState::normalized(alpha, beta);
    } catch (const std::invalid_argument& e) {
        fail("qubit", e.what());
    }

    const json& jt = member(j, "time", "config");
    TimeGrid grid;
    grid.t_max = number(member(jt, "t_max", "time"), "time.t_max");
    const json& jsteps = member(jt, "steps", "time");
    if (!jsteps.is_number_integer() || jsteps.get<long long>() < 0) fail("time.steps", "expected a non-negative integer");
    grid.steps = static_cast<int>(jsteps.get<long long>());

    double tol = default_tol;
    if (j.contains("tolerance")) {
        tol = number(j["tolerance"], "tolerance");
        if (!(tol > 0.0)) fail("tolerance", "must be positive");
    }
    std::optional<std::string> output;
    if (j.contains("output")) {
        if (!j["output"].is_string()) fail("output", "expected a path string");
        output = j["output"].get<std::string>();
    }

    return RunConfig{model::DephasingModel(eps0, eps1, std::move(h_env), std::move(v0), std::move(v1)),
                     model::EnvironmentState(std::move(r0)), *qubit, grid, tol, output};
}

RunConfig load_run_config(const std::string& path, double default_tol) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    return parse_run_config(j, default_tol);
}

}  // namespace puredeph::app
