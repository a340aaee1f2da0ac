// Copyright 2026 The Cheshire Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 2 input error, 3
// numerical/singularity error, 4 post-selection starvation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cheshire/errors.hpp"
#include "cheshire/sampling.hpp"
#include "cheshire/scenario.hpp"
#include "cheshire/version.hpp"
#include "report.hpp"

namespace {

using namespace cheshire;
using cli::Format;
using cli::PointerRun;
using cli::Report;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitStarvation = 4;

/// A user-input problem detected by the CLI itself.
struct UsageError : Error {
    using Error::Error;
};

struct CommonOptions {
    std::string scenario_arg;
    std::string format = "text";
    std::string out_path;
    std::string scenario_dir;
};

void add_common(CLI::App *cmd, CommonOptions &opts) {
    cmd->add_option("scenario", opts.scenario_arg, "Scenario file (or name under the scenario directory)")
        ->required();
    cmd->add_option("--format", opts.format, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", opts.out_path, "Write the report to a file instead of stdout");
    cmd->add_option("--scenario-dir", opts.scenario_dir,
                    "Directory searched for bare scenario names (default: $CHESHIRE_SCENARIO_DIR)");
}

Format parse_format(const std::string &name) {
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    return Format::Text;
}

std::string resolve_scenario_path(const CommonOptions &opts) {
    namespace fs = std::filesystem;
    if (fs::exists(opts.scenario_arg)) {
        return opts.scenario_arg;
    }
    std::string dir = opts.scenario_dir;
    if (dir.empty()) {
        const char *env = std::getenv("CHESHIRE_SCENARIO_DIR");
        if (env != nullptr) {
            dir = env;
        }
    }
    if (!dir.empty()) {
        fs::path joined = fs::path(dir) / opts.scenario_arg;
        if (fs::exists(joined)) {
            return joined.string();
        }
    }
    throw UsageError("scenario '" + opts.scenario_arg + "' not found");
}

void emit(const Report &report, const CommonOptions &opts) {
    std::string text = cli::render(report, parse_format(opts.format));
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write to '" + opts.out_path + "'");
    }
    out << text;
}

Observable parse_observable(const std::string &name, const Scenario &scenario) {
    Observable obs;
    if (!observable_from_name(name, obs)) {
        throw UsageError("unknown observable '" + name + "'");
    }
    bool probed = false;
    for (Observable p : scenario.probes) {
        probed = probed || p == obs;
    }
    if (!probed && obs != Observable::I) {
        throw UsageError("observable '" + name + "' is not probed by scenario '" +
                         scenario.name + "'");
    }
    return obs;
}

Report base_report(const Scenario &scenario, const TwoStateVector &tsv) {
    Report report;
    report.scenario_name = scenario.name;
    report.denominator = tsv.denominator();
    report.postselect_prob = scenario_postselection_probability(scenario);
    return report;
}

int cmd_table(const CommonOptions &opts) {
    Scenario scenario = load_scenario_file(resolve_scenario_path(opts));
    TwoStateVector tsv = scenario_tsv(scenario);
    Report report = base_report(scenario, tsv);
    report.command = "table";
    for (Observable obs : scenario.probes) {
        Complex value = weak_value(tsv, observable_operator(obs, tsv.space())).value;
        report.table.push_back({observable_arm(obs), observable_name(obs), value});
    }
    emit(report, opts);
    return kExitOk;
}

int cmd_validate(const CommonOptions &opts) {
    Scenario scenario = load_scenario_file(resolve_scenario_path(opts));
    std::cout << "OK " << scenario.name << ": space " << scenario.circuit.space().str() << ", "
              << scenario.circuit.stages().size() << " stage(s), "
              << scenario.circuit.detectors().size() << " detector(s), " << scenario.probes.size()
              << " probe(s)\n";
    return kExitOk;
}

void warn_if_strong(const CouplingConfig &cfg) {
    if (!cfg.weak_regime()) {
        std::cerr << "warning: g = " << cli::format_machine(cfg.g)
                  << " is outside the weak regime (g > 0.1 sigma); pointer averages need not "
                     "track weak values\n";
    }
}

int cmd_pointer_sweep(const CommonOptions &opts, const std::string &observable_name_arg,
                      std::vector<double> g_fractions, double sigma) {
    Scenario scenario = load_scenario_file(resolve_scenario_path(opts));
    Observable obs = parse_observable(observable_name_arg, scenario);
    if (g_fractions.size() < 3) {
        throw UsageError("pointer-sweep needs at least three --g values");
    }
    TwoStateVector tsv = scenario_tsv(scenario);
    LabeledOperator a = observable_operator(obs, tsv.space());
    PointerState initial = PointerState::gaussian(sigma);

    Report report = base_report(scenario, tsv);
    report.command = "pointer-sweep";
    report.observable = observable_name(obs);
    report.sigma = sigma;
    std::vector<std::pair<double, PointerReadout>> readouts;
    for (double fraction : g_fractions) {
        CouplingConfig cfg{fraction * sigma, sigma};
        if (!cfg.weak_regime()) {
            throw UsageError("g = " + cli::format_machine(fraction) +
                             " sigma is outside the weak regime (needs g <= 0.1 sigma)");
        }
        ConditionalPointer conditional = couple_and_postselect(tsv, a, cfg, initial);
        PointerReadout readout = exact_readout(conditional, initial);
        readouts.emplace_back(cfg.g, readout);
        report.pointer_runs.push_back({cfg.g, readout});
    }
    report.estimate = weak_limit_extrapolate(readouts);
    emit(report, opts);
    return kExitOk;
}

int cmd_montecarlo(const CommonOptions &opts, const std::string &observable_name_arg,
                   long long n, uint64_t seed, double g_fraction, double sigma) {
    Scenario scenario = load_scenario_file(resolve_scenario_path(opts));
    Observable obs = parse_observable(observable_name_arg, scenario);
    if (n < 1) {
        throw UsageError("montecarlo needs n >= 1");
    }
    TwoStateVector tsv = scenario_tsv(scenario);
    LabeledOperator a = observable_operator(obs, tsv.space());
    CouplingConfig cfg{g_fraction * sigma, sigma};
    warn_if_strong(cfg);

    PointerReadout readout = sample_clicks(tsv, a, cfg, n, seed);
    Report report = base_report(scenario, tsv);
    report.command = "montecarlo";
    report.observable = observable_name(obs);
    report.sigma = sigma;
    report.seed = seed;
    report.n_trials = n;
    report.pointer_runs.push_back({cfg.g, readout});
    report.estimate = cli::run_estimate(report.pointer_runs.back());
    if (readout.std_error_position.has_value()) {
        report.estimate_stderr_re = *readout.std_error_position / cfg.g;
        report.estimate_stderr_im =
            *readout.std_error_momentum / (2 * cfg.g * readout.momentum_variance);
    }
    emit(report, opts);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Weak-value tables and finite-strength pointer simulations for pre- and "
                 "post-selected interferometer scenarios"};
    app.set_version_flag("--version", std::string("cheshire ") + kVersion);
    app.require_subcommand(1);

    CommonOptions table_opts;
    CLI::App *table = app.add_subcommand("table", "Print the weak-value table of a scenario");
    add_common(table, table_opts);

    CommonOptions validate_opts;
    CLI::App *validate = app.add_subcommand("validate", "Parse a scenario and report its shape");
    add_common(validate, validate_opts);

    CommonOptions sweep_opts;
    std::string sweep_observable;
    std::vector<double> sweep_g;
    double sweep_sigma = 1.0;
    CLI::App *sweep = app.add_subcommand(
        "pointer-sweep", "Couple a finite-strength pointer at several g and extrapolate to g=0");
    add_common(sweep, sweep_opts);
    sweep->add_option("--observable", sweep_observable, "Probe observable (e.g. SxR)")->required();
    sweep->add_option("--g", sweep_g,
                      "Coupling strengths as fractions of sigma (repeatable; default "
                      "0.001 0.002 0.004)");
    sweep->add_option("--sigma", sweep_sigma, "Initial pointer width")->check(CLI::PositiveNumber);

    CommonOptions mc_opts;
    std::string mc_observable;
    long long mc_n = 1000000;
    uint64_t mc_seed = 42;
    double mc_g = 0.01;
    double mc_sigma = 1.0;
    CLI::App *mc = app.add_subcommand(
        "montecarlo", "Estimate a weak value from simulated post-selected clicks");
    add_common(mc, mc_opts);
    mc->add_option("--observable", mc_observable, "Probe observable (e.g. PiL)")->required();
    mc->add_option("--n", mc_n, "Number of trials (default 1000000)");
    mc->add_option("--seed", mc_seed, "RNG seed (default 42); fixed seed => identical report");
    mc->add_option("--g", mc_g, "Coupling strength as a fraction of sigma (default 0.01)");
    mc->add_option("--sigma", mc_sigma, "Initial pointer width")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (table->parsed()) {
            return cmd_table(table_opts);
        }
        if (validate->parsed()) {
            return cmd_validate(validate_opts);
        }
        if (sweep->parsed()) {
            if (sweep_g.empty()) {
                sweep_g = {0.001, 0.002, 0.004};
            }
            return cmd_pointer_sweep(sweep_opts, sweep_observable, sweep_g, sweep_sigma);
        }
        if (mc->parsed()) {
            return cmd_montecarlo(mc_opts, mc_observable, mc_n, mc_seed, mc_g, mc_sigma);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const StarvationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStarvation;
    } catch (const SingularDenominatorError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const GridOverflowError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitInput;
}
