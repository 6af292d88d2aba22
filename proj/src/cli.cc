// Copyright 2026 The wfuse Authors
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

#include "wfuse/cli.h"

#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "wfuse/pdbs_table.h"
#include "wfuse/random.h"
#include "wfuse/solve.h"
#include "wfuse/tolerance.h"

namespace wfuse {

namespace {

Cell opt_cell(const std::optional<double> &v) {
    return v ? Cell{*v} : Cell{};
}

Cell size_cell(size_t n) {
    return Cell{static_cast<int64_t>(n)};
}

void add_solutions(RunReport &report, const std::vector<ParamSolution> &sols, const ParamSolution &chosen) {
    auto &t = report.table("solutions", {"nu", "mu", "ps_formula", "ps_simulated", "gauge_fidelity", "selected"});
    for (const auto &s : sols) {
        t.add_row({s.nu, s.mu, s.success_probability, s.simulated_probability, s.gauge_fidelity,
                   s.nu == chosen.nu && s.mu == chosen.mu});
    }
}

void add_branches(RunReport &report, const ProtocolOutcome &outcome) {
    auto &t = report.table("branches", {"pattern", "class", "probability", "fidelity", "recyclable.n", "recyclable.m"});
    for (const auto &b : outcome.branches) {
        std::string cls = to_string(b.classification);
        if (b.bit_flipped) {
            cls += " (bit-flipped)";
        }
        Cell rn, rm;
        if (b.recyclable_sizes) {
            rn = size_cell(b.recyclable_sizes->first);
            rm = size_cell(b.recyclable_sizes->second);
        }
        t.add_row({b.label, cls, b.branch.probability, opt_cell(b.fidelity), rn, rm});
    }
}

/// Resolves (mu, nu): user-supplied when both given, else the solver's best pair.
PdbsParams resolve_params(RunReport &report, const std::optional<double> &mu, const std::optional<double> &nu,
                          const Scheme &scheme) {
    if (mu.has_value() != nu.has_value()) {
        throw std::invalid_argument("--mu and --nu must be given together");
    }
    if (mu) {
        PdbsParams p{*mu, *nu};
        validate(p);
        report.inputs.emplace_back("params_source", std::string("user"));
        return p;
    }
    auto sols = solve_scheme(scheme);
    auto best = best_params(sols);
    add_solutions(report, sols, best);
    report.inputs.emplace_back("params_source", std::string("solver"));
    return best.params();
}

void add_result(RunReport &report, const Scheme &scheme, const PdbsParams &p, const ProtocolOutcome &outcome) {
    std::vector<std::string> cols = {"mu", "nu", "ps_formula", "ps_simulated", "gauge_fidelity", "branch_sum"};
    if (scheme.is_fusion()) {
        cols.insert(cols.end(), {"mirror_ps", "mirror_fidelity"});
    }
    auto &t = report.table("result", cols);
    std::vector<Cell> row = {p.mu,
                             p.nu,
                             opt_cell(formula_probability(scheme, p)),
                             outcome.success_probability,
                             outcome.gauge_fidelity,
                             outcome.probability_sum()};
    if (scheme.is_fusion()) {
        if (outcome.mirror) {
            row.push_back(outcome.mirror->branch.probability);
            row.push_back(opt_cell(outcome.mirror->fidelity));
        } else {
            row.insert(row.end(), {Cell{}, Cell{}});
        }
    }
    t.add_row(std::move(row));
}

struct PropertyResult {
    std::string name;
    int64_t trials = 0;
    double max_error = 0;
    std::string counterexample;

    void record(double err, const std::function<std::string()> &describe) {
        if (err > max_error) {
            max_error = err;
        }
        if (err > tolerance() && counterexample.empty()) {
            counterexample = describe();
        }
    }
};

std::string params_str(const PdbsParams &p) {
    std::ostringstream out;
    out.precision(17);
    out << "mu=" << p.mu << " nu=" << p.nu;
    return out.str();
}

double max_amplitude_gap(const PolarizationState &a, const PolarizationState &b) {
    double gap = 0;
    for (const auto &[term, amp] : a.terms()) {
        gap = std::max(gap, std::abs(amp - b.amplitude(term)));
    }
    for (const auto &[term, amp] : b.terms()) {
        gap = std::max(gap, std::abs(amp - a.amplitude(term)));
    }
    return gap;
}

}  // namespace

RunReport cmd_fuse(const FuseOptions &opt) {
    RunReport report;
    report.command = "fuse";
    report.inputs = {{"left", size_cell(opt.left)}, {"right", size_cell(opt.right)}, {"target", to_string(opt.target)}};
    if (opt.left < 2 || opt.right < 2) {
        throw std::invalid_argument("fusion needs --left and --right >= 2");
    }
    auto scheme = opt.target == TargetKind::W ? Scheme::w_fusion(opt.left, opt.right)
                                              : Scheme::wlike_fusion(opt.left, opt.right);
    auto p = resolve_params(report, opt.mu, opt.nu, scheme);
    report.inputs.emplace_back("mu", p.mu);
    report.inputs.emplace_back("nu", p.nu);
    auto outcome = fuse({StateSpec::wlike(opt.left), StateSpec::wlike(opt.right), p, opt.target});
    add_result(report, scheme, p, outcome);
    add_branches(report, outcome);
    report.notes.push_back("heralding: one V photon at mode d's V detector, mode c kept as the last qubit");
    if (opt.left == 2 && opt.right == 2) {
        report.notes.push_back("for two Bell-pair inputs the H outcome at mode d also heralds (up to a bit flip); "
                               "ps_simulated counts the V outcome only");
    }
    if (outcome.gauge_fidelity < 1 - kSolutionTolerance) {
        report.notes.push_back("parameters do not reach the target: gauge fidelity below 1");
    }
    return report;
}

RunReport cmd_expand(const ExpandOptions &opt) {
    RunReport report;
    report.command = "expand";
    report.inputs = {{"size", size_cell(opt.size)}, {"target", to_string(opt.target)}};
    if (opt.size < 2) {
        throw std::invalid_argument("expansion needs --size >= 2");
    }
    auto scheme = opt.target == TargetKind::W ? Scheme::w_expansion(opt.size) : Scheme::wlike_expansion(opt.size);
    auto p = resolve_params(report, opt.mu, opt.nu, scheme);
    report.inputs.emplace_back("mu", p.mu);
    report.inputs.emplace_back("nu", p.nu);
    auto outcome = expand(StateSpec::wlike(opt.size), p, opt.target);
    add_result(report, scheme, p, outcome);
    add_branches(report, outcome);
    auto formula = formula_probability(scheme, p);
    if (formula && outcome.gauge_fidelity >= 1 - kSolutionTolerance &&
        std::abs(*formula - outcome.success_probability) > kSolutionTolerance) {
        report.notes.push_back("closed-form success probability disagrees with the simulated branch probability");
    }
    return report;
}

RunReport cmd_table1(size_t max_size) {
    if (max_size < 2) {
        throw std::invalid_argument("--max must be >= 2");
    }
    RunReport report;
    report.command = "table1";
    report.inputs = {{"max", size_cell(max_size)}};
    auto table = table1(max_size);
    auto &rows = report.table("rows", {"n", "m", "sol1.nu", "sol1.mu", "sol2.nu", "sol2.mu", "ps_max", "ps_paper",
                                       "ps_simulated", "gauge_fidelity_min"});
    for (const auto &r : table.rows) {
        const auto &best = r.sol1.success_probability > r.sol2.success_probability ? r.sol1 : r.sol2;
        rows.add_row({size_cell(r.n), size_cell(r.m), r.sol1.nu, r.sol1.mu, r.sol2.nu, r.sol2.mu, r.ps_max,
                      opt_cell(r.ps_printed), best.simulated_probability,
                      std::min(r.sol1.gauge_fidelity, r.sol2.gauge_fidelity)});
    }
    auto &d = report.table("discrepancies", {"n", "m", "field", "printed", "computed", "note"});
    for (const auto &x : table.discrepancies) {
        d.add_row({size_cell(x.n), size_cell(x.m), x.field, x.printed, x.computed, x.note});
    }
    return report;
}

RunReport cmd_cost(const CostOptions &opt) {
    RunReport report;
    report.command = "cost";
    static const std::map<CostCommand, std::string> names = {{CostCommand::WLike, "wlike"},
                                                             {CostCommand::WFromWLike, "w-from-wlike"},
                                                             {CostCommand::WFromW, "w-from-w"},
                                                             {CostCommand::Compare, "compare"}};
    report.inputs = {{"strategy", names.at(opt.strategy)},
                     {"max_size", size_cell(opt.max_size)},
                     {"policy", to_string(opt.policy)}};
    if (opt.strategy == CostCommand::Compare) {
        if (opt.max_size < 3) {
            throw std::invalid_argument("compare needs --max-size >= 3");
        }
        auto curves = compare_curves(opt.max_size, opt.policy);
        auto &t = report.table("curves", {"size", "cost_w_from_w", "cost_w_from_wlike", "wlike_cheaper"});
        std::string holds, fails;
        for (const auto &c : curves) {
            t.add_row({size_cell(c.size), c.cost_w_from_w, c.cost_w_from_wlike, c.wlike_route_cheaper()});
            (c.wlike_route_cheaper() ? holds : fails) += (c.wlike_route_cheaper() ? holds : fails).empty()
                                                             ? std::to_string(c.size)
                                                             : " " + std::to_string(c.size);
        }
        report.notes.push_back("cost_w_from_w: re-derived W⊕W fusion (prototype W inputs, solved by the simulator)");
        report.notes.push_back("W-from-W-like cheaper at sizes: " + (holds.empty() ? "none" : holds));
        report.notes.push_back("W-from-W-like not cheaper at sizes: " + (fails.empty() ? "none" : fails));
        return report;
    }
    if (opt.max_size < 2) {
        throw std::invalid_argument("--max-size must be >= 2");
    }
    CostStrategy strategy = opt.strategy == CostCommand::WLike        ? CostStrategy::WLikeFromWLike
                            : opt.strategy == CostCommand::WFromWLike ? CostStrategy::WFromWLike
                                                                      : CostStrategy::WFromW;
    auto table = cost_table(strategy, opt.max_size, opt.policy);
    auto &t = report.table("costs", {"size", "cost", "pairing.n", "pairing.m", "nu", "mu", "ps"});
    for (const auto &[size, e] : table.entries) {
        Cell pn, pm, nu, mu, ps;
        if (e.pairing) {
            pn = size_cell(e.pairing->first);
            pm = size_cell(e.pairing->second);
        }
        if (e.params) {
            nu = e.params->nu;
            mu = e.params->mu;
            ps = e.params->success_probability;
        }
        t.add_row({size_cell(size), e.cost, pn, pm, nu, mu, ps});
    }
    auto other = cost_table(strategy, opt.max_size,
                            opt.policy == PairingPolicy::Balanced ? PairingPolicy::Exhaustive : PairingPolicy::Balanced);
    const auto &balanced = opt.policy == PairingPolicy::Balanced ? table : other;
    const auto &exhaustive = opt.policy == PairingPolicy::Balanced ? other : table;
    auto &cmp = report.table("policy_comparison", {"size", "balanced", "exhaustive", "balanced_is_optimal"});
    for (const auto &[size, e] : exhaustive.entries) {
        double b = balanced.at(size).cost;
        cmp.add_row({size_cell(size), b, e.cost, b <= e.cost * (1 + 1e-12)});
    }
    if (strategy == CostStrategy::WFromW) {
        report.notes.push_back("re-derived W⊕W fusion (prototype W inputs, solved by the simulator)");
    }
    return report;
}

RunReport cmd_oracle_check(const OracleOptions &opt) {
    if (opt.trials < 1) {
        throw std::invalid_argument("--trials must be >= 1");
    }
    RunReport report;
    report.command = "oracle-check";
    report.inputs = {{"trials", opt.trials}, {"seed", static_cast<int64_t>(opt.seed)}, {"inject_fault", opt.inject_fault}};
    std::mt19937_64 rng(opt.seed);
    const Polarization pols[] = {Polarization::H, Polarization::V};

    PropertyResult table{"pdbs_table_equivalence", 0, 0, {}};
    for (int64_t k = 0; k < opt.trials; k++) {
        auto p = random_params(rng);
        PdbsParams impl = opt.inject_fault ? PdbsParams{std::min(p.mu + 1e-6, 0.9999999), p.nu} : p;
        for (auto a : pols) {
            for (auto b : pols) {
                auto got = apply_pdbs(two_photon_input(a, b), 0, 1, impl);
                auto want = table_state(two_photon_table(a, b, p));
                table.record(max_amplitude_gap(got, want), [&] {
                    return params_str(p) + " input |" + to_char(a) + ">_a|" + to_char(b) + ">_b got " + got.str() +
                           " want " + want.str();
                });
            }
        }
        table.trials++;
    }

    PropertyResult unitarity{"unitarity", 0, 0, {}};
    for (int64_t k = 0; k < opt.trials; k++) {
        auto p = random_params(rng);
        auto x = random_state(rng, static_cast<size_t>(uniform01(rng) * 3), 2, 6);
        auto y = apply_pdbs(x, 0, 1, p);
        unitarity.record(std::abs(y.norm_sq() - x.norm_sq()), [&] {
            return params_str(p) + " input " + x.str();
        });
        unitarity.trials++;
    }

    PropertyResult completeness{"branch_completeness", 0, 0, {}};
    for (int64_t k = 0; k < opt.trials; k++) {
        auto p = random_params(rng);
        auto x = random_state(rng, 2, 3, 6);
        std::set<size_t> kept;
        for (size_t m = 0; m < 3; m++) {
            if (uniform01(rng) < 0.5) {
                kept.insert(m);
            }
        }
        auto branches = detect(apply_pdbs(x, 0, 1, p), kept);
        double sum = 0;
        for (const auto &b : branches) {
            sum += b.probability;
        }
        completeness.record(std::abs(sum - 1), [&] {
            return params_str(p) + " input " + x.str();
        });
        completeness.trials++;
    }

    PropertyResult degeneracy{"equal_transmissivity_symmetry", 0, 0, {}};
    for (int64_t k = 0; k < opt.trials; k++) {
        double t = random_params(rng).mu;
        PdbsParams p{t, t};
        auto hv = apply_pdbs(two_photon_input(Polarization::H, Polarization::V), 0, 1, p);
        auto vh = apply_pdbs(two_photon_input(Polarization::V, Polarization::H), 0, 1, p);
        double a = std::abs(hv.amplitude(FockTerm{{}, {{1, 0}, {0, 1}}}));
        double b = std::abs(vh.amplitude(FockTerm{{}, {{0, 1}, {1, 0}}}));
        degeneracy.record(std::abs(a - b), [&] {
            return params_str(p);
        });
        degeneracy.trials++;
    }

    auto &t = report.table("properties", {"property", "trials", "passed", "max_error", "counterexample"});
    bool all = true;
    for (const auto *r : {&table, &unitarity, &completeness, &degeneracy}) {
        bool passed = r->counterexample.empty();
        all = all && passed;
        t.add_row({r->name, r->trials, passed, r->max_error, r->counterexample.empty() ? Cell{} : Cell{r->counterexample}});
    }
    report.exit_status = all ? kExitOk : kExitPropertyFailure;
    return report;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulate and solve PDBS fusion and expansion of W-like and W photonic states", "wfuse"};
    app.require_subcommand(1);

    std::string format = "text";
    bool as_json = false;
    bool as_csv = false;
    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_flag("--json", as_json, "Same as --format json");
        cmd->add_flag("--csv", as_csv, "Same as --format csv");
    };
    const std::map<std::string, TargetKind> targets = {{"wlike", TargetKind::WLike}, {"w", TargetKind::W}};
    const std::map<std::string, PairingPolicy> policies = {{"balanced", PairingPolicy::Balanced},
                                                           {"exhaustive", PairingPolicy::Exhaustive}};
    const std::map<std::string, CostCommand> strategies = {{"wlike", CostCommand::WLike},
                                                           {"w-from-wlike", CostCommand::WFromWLike},
                                                           {"w-from-w", CostCommand::WFromW},
                                                           {"compare", CostCommand::Compare}};

    FuseOptions fuse_opt;
    double fuse_mu = 0, fuse_nu = 0;
    auto *fuse_cmd = app.add_subcommand("fuse", "Fuse two W-like states on a PDBS");
    fuse_cmd->add_option("--left", fuse_opt.left, "Size N of the W-like state entering input a")->required();
    fuse_cmd->add_option("--right", fuse_opt.right, "Size M of the W-like state entering input b")->required();
    fuse_cmd->add_option("--target", fuse_opt.target, "Target state: wlike or w")
        ->transform(CLI::CheckedTransformer(targets))
        ->required();
    auto *fuse_mu_opt = fuse_cmd->add_option("--mu", fuse_mu, "H transmissivity (default: solver)");
    auto *fuse_nu_opt = fuse_cmd->add_option("--nu", fuse_nu, "V transmissivity (default: solver)");
    add_format(fuse_cmd);

    ExpandOptions expand_opt;
    double expand_mu = 0, expand_nu = 0;
    auto *expand_cmd = app.add_subcommand("expand", "Expand a W-like state with an H ancilla");
    expand_cmd->add_option("--size", expand_opt.size, "Size N of the W-like state")->required();
    expand_cmd->add_option("--target", expand_opt.target, "Target state: wlike or w")
        ->transform(CLI::CheckedTransformer(targets))
        ->required();
    auto *expand_mu_opt = expand_cmd->add_option("--mu", expand_mu, "H transmissivity (default: solver)");
    auto *expand_nu_opt = expand_cmd->add_option("--nu", expand_nu, "V transmissivity (default: solver)");
    add_format(expand_cmd);

    size_t table_max = 10;
    auto *table_cmd = app.add_subcommand("table1", "Regenerate the W-like fusion parameter table");
    table_cmd->add_option("--max", table_max, "Largest input size");
    add_format(table_cmd);

    CostOptions cost_opt;
    auto *cost_cmd = app.add_subcommand("cost", "Resource-cost tables and curve comparison");
    cost_cmd->add_option("--strategy", cost_opt.strategy, "wlike, w-from-wlike, w-from-w or compare")
        ->transform(CLI::CheckedTransformer(strategies))
        ->required();
    cost_cmd->add_option("--max-size", cost_opt.max_size, "Largest output size");
    cost_cmd->add_option("--policy", cost_opt.policy, "balanced or exhaustive")
        ->transform(CLI::CheckedTransformer(policies));
    add_format(cost_cmd);

    OracleOptions oracle_opt;
    auto *oracle_cmd = app.add_subcommand("oracle-check", "Run the randomized property checks");
    oracle_cmd->add_option("--trials", oracle_opt.trials, "Random cases per property");
    oracle_cmd->add_option("--seed", oracle_opt.seed, "RNG seed");
    oracle_cmd->add_flag("--inject-fault", oracle_opt.inject_fault, "Perturb the implementation to test the harness");
    add_format(oracle_cmd);

    std::vector<std::string> argv_store = {"wfuse"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_store) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    OutputFormat fmt = as_json ? OutputFormat::Json
                       : as_csv ? OutputFormat::Csv
                       : format == "json" ? OutputFormat::Json
                       : format == "csv"  ? OutputFormat::Csv
                                          : OutputFormat::Text;
    try {
        RunReport report;
        if (fuse_cmd->parsed()) {
            if (*fuse_mu_opt) {
                fuse_opt.mu = fuse_mu;
            }
            if (*fuse_nu_opt) {
                fuse_opt.nu = fuse_nu;
            }
            report = cmd_fuse(fuse_opt);
        } else if (expand_cmd->parsed()) {
            if (*expand_mu_opt) {
                expand_opt.mu = expand_mu;
            }
            if (*expand_nu_opt) {
                expand_opt.nu = expand_nu;
            }
            report = cmd_expand(expand_opt);
        } else if (table_cmd->parsed()) {
            report = cmd_table1(table_max);
        } else if (cost_cmd->parsed()) {
            report = cmd_cost(cost_opt);
        } else {
            report = cmd_oracle_check(oracle_opt);
        }
        out << render(report, fmt);
        return report.exit_status;
    } catch (const NoPhysicalSolution &e) {
        err << "error: " << e.what() << '\n';
        return kExitNoSolution;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace wfuse
