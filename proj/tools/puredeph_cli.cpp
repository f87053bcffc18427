// puredeph — command-line driver.
//
//   puredeph simulate --config PATH [--out PATH] [--summary PATH]
//   puredeph verify-equivalence [--env-dims 2,3,4] [--trials N] [--times N] [--seed S] [--tol X] [--out PATH]
//   puredeph fig1 [--c0 0.5,0.7,0.9] [--samples N] [--out PATH]
//   puredeph oracle-crosscheck [--trials N] [--seed S] [--out PATH]
//
// Exit codes: 0 success, 1 configuration error, 2 invariant or theorem violation.

#include "puredeph/app/commands.hpp"
#include "puredeph/app/config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace puredeph;
using namespace puredeph::app;

// Writes through `emit` to the file at `path`, or to stdout when empty.
template <class Emit>
void write_output(const std::string& path, Emit&& emit) {
    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("out: cannot open '" + path + "' for writing");
    emit(out);
    if (!out) throw ConfigError("out: write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact pure-dephasing simulator and qubit-environment correlation analyzer"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string summary_path;
    auto* simulate = app.add_subcommand("simulate", "Evolve a configured model and analyze correlations per time point");
    simulate->add_option("--config", config_path, "JSON run configuration")->required();
    simulate->add_option("--out", out_path, "CSV output (default: config 'output', else stdout)");
    simulate->add_option("--summary", summary_path, "JSON summary output (default: stderr)");

    EquivalenceOptions eq;
    std::optional<double> eq_tol;
    auto* verify = app.add_subcommand("verify-equivalence", "Random campaign: separability vs zero discord w.r.t. E");
    verify->add_option("--env-dims", eq.env_dims, "Environment dimensions")->delimiter(',');
    verify->add_option("--trials", eq.trials, "Instances per environment dimension");
    verify->add_option("--times", eq.times, "Time points per instance");
    verify->add_option("--seed", eq.seed, "RNG seed");
    verify->add_option("--tol", eq_tol, "Relative verdict tolerance");
    verify->add_option("--t-max", eq.t_max, "Upper end of the sampled time window");
    verify->add_option("--out", out_path, "JSON report (default: stdout)");

    Fig1Options fig;
    auto* fig1 = app.add_subcommand("fig1", "Full-cycle inter-qubit concurrence curves");
    fig1->add_option("--c0", fig.c0, "Environment populations c0 in [0.5, 1]")->delimiter(',');
    fig1->add_option("--samples", fig.samples, "Points per cycle, endpoints included");
    fig1->add_option("--phi-gap", fig.phi_gap, "Eigenphase rate difference |phi1 - phi0|");
    fig1->add_option("--out", out_path, "CSV output (default: stdout)");

    OracleCrosscheckOptions oc;
    auto* oracle = app.add_subcommand("oracle-crosscheck", "Brute-force discord vs block criterion on 2x2 states");
    oracle->add_option("--trials", oc.trials, "Random Ginibre states");
    oracle->add_option("--seed", oc.seed, "RNG seed");
    oracle->add_option("--out", out_path, "JSON report (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        const double default_tol = default_tolerance();

        if (*simulate) {
            const RunConfig config = load_run_config(config_path, default_tol);
            if (out_path.empty() && config.output) out_path = *config.output;
            const SimulationResult result = run_simulation(config);
            write_output(out_path, [&](std::ostream& os) { write_simulation_csv(os, result); });
            const auto summary = simulation_summary(result);
            if (summary_path.empty()) {
                std::cerr << summary.dump(2) << '\n';
            } else {
                write_output(summary_path, [&](std::ostream& os) { os << summary.dump(2) << '\n'; });
            }
            return result.conservation.ok() && result.theorem_violations == 0 ? kExitSuccess : kExitViolation;
        }

        if (*verify) {
            eq.tolerance = eq_tol.value_or(default_tol);
            const EquivalenceReport report = verify_equivalence(eq);
            write_output(out_path, [&](std::ostream& os) { os << report.to_json().dump(2) << '\n'; });
            if (report.violations() > 0) {
                std::cerr << "verify-equivalence: " << report.violations() << " violation(s)\n";
                return kExitViolation;
            }
            return kExitSuccess;
        }

        if (*fig1) {
            const auto curves = run_fig1(fig);
            double worst = 0.0;
            for (const auto& c : curves) worst = std::max(worst, c.max_deviation);
            write_output(out_path, [&](std::ostream& os) { write_fig1_csv(os, curves); });
            if (worst > 1e-10) {
                std::cerr << "fig1: closed form deviates from the Wootters concurrence by " << worst << '\n';
                return kExitViolation;
            }
            return kExitSuccess;
        }

        if (*oracle) {
            oc.tolerance = default_tol;
            const OracleCrosscheckReport report = run_oracle_crosscheck(oc);
            write_output(out_path, [&](std::ostream& os) { os << report.to_json().dump(2) << '\n'; });
            if (report.disagreements() > 0) {
                std::cerr << "oracle-crosscheck: " << report.disagreements() << " disagreement(s)\n";
                return kExitViolation;
            }
            return kExitSuccess;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    return kExitSuccess;
}
