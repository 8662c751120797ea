// lrctool: construct, analyze, and exercise locally repairable codes.
//
// Exit codes: 0 success (optimal or almost-optimal), 2 I/O, parse or
// validation errors, 3 below/invalid verdict, 4 infeasible parameters,
// 1 anything else.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrc/codefile.hpp"

using nlohmann::json;
using namespace lrc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitIo = 2;
constexpr int kExitBelow = 3;
constexpr int kExitInfeasible = 4;

const char* mode_name(construction::Feasibility mode) {
    switch (mode) {
        case construction::Feasibility::Direct: return "direct";
        case construction::Feasibility::Replicate: return "replicate";
        case construction::Feasibility::Infeasible: return "infeasible";
        case construction::Feasibility::Invalid: return "invalid";
    }
    return "?";
}

json report_to_json(const analysis::CodeReport& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    if (r.d_claimed >= 0) j["d_claimed"] = r.d_claimed;
    j["r_claimed"] = r.r_claimed;
    j["r_measured"] = r.r_measured;
    j["locality_ok"] = r.locality_ok;
    j["d_opt"] = r.dopt;
    j["verdict"] = analysis::verdict_name(r.verdict);
    return j;
}

void print_report(const analysis::CodeReport& r) {
    std::cout << "(n, k) = (" << r.n << ", " << r.k << ")  d = " << r.d
              << "  locality: measured " << r.r_measured;
    if (r.r_claimed >= 0) std::cout << " (claimed " << r.r_claimed << ")";
    std::cout << "  d_opt = " << r.dopt << "  ->  " << analysis::verdict_name(r.verdict)
              << "\n";
    if (r.d < r.dopt)
        std::cout << "  gap to the locality bound: " << r.dopt - r.d << "\n";
    if (!r.locality_ok)
        std::cout << "  warning: claimed locality " << r.r_claimed
                  << " is not achievable at every coordinate\n";
}

int exit_for(analysis::Verdict verdict) {
    switch (verdict) {
        case analysis::Verdict::Optimal:
        case analysis::Verdict::AlmostOptimal: return kExitOk;
        case analysis::Verdict::Below:
        case analysis::Verdict::Invalid: return kExitBelow;
    }
    return kExitError;
}

analysis::CodeReport analyze_file(const codefile::CodeFile& file,
                                  const analysis::Budget& budget) {
    if (file.kind == codefile::Kind::Linear) return analysis::analyze(*file.linear, budget);
    int d_claimed = -1;
    if (file.op_matrix->family != f4family::Family::Custom)
        d_claimed = f4family::family_claim(file.op_matrix->family,
                                           file.op_matrix->block_index).d;
    return f4family::verify_operator_code(*file.op_matrix, file.params.r, d_claimed, budget);
}

int cmd_construct(int n, int k, int r, std::uint64_t q, std::uint64_t seed,
                  const std::string& out, bool as_json, double budget_scale) {
    const auto verdict = construction::feasibility(n, k, r);
    if (verdict.mode == construction::Feasibility::Invalid) {
        std::cerr << "invalid parameters: " << verdict.reason << "\n";
        return kExitIo;
    }
    if (verdict.mode == construction::Feasibility::Infeasible) {
        std::cerr << "infeasible: " << verdict.reason << "\n";
        return kExitInfeasible;
    }
    if (q == 0) q = construction::smallest_supported_q(n, k);

    construction::LinearLrcCode code =
        verdict.mode == construction::Feasibility::Direct
            ? construction::build(construction::CodeParams{n, k, r, q}, seed)
            : construction::build_with_replication(n, k, r, q, seed);

    // verification-on-write: no unverified code file ever exists
    const auto report = analysis::analyze(code, analysis::Budget{}.scaled(budget_scale));

    if (as_json) {
        json j = report_to_json(report);
        j["q"] = q;
        j["mode"] = mode_name(verdict.mode);
        j["seed"] = seed;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "(" << n << ", " << k << ", " << r << ") over GF(" << q
                  << "): " << mode_name(verdict.mode) << " construction, seed " << seed
                  << "\n";
        print_report(report);
    }
    if (!out.empty()) {
        codefile::save(codefile::wrap(std::move(code)), out);
        if (!as_json) std::cout << "wrote " << out << "\n";
    }
    return exit_for(report.verdict);
}

int cmd_analyze(const std::string& path, bool as_json, double budget_scale) {
    const auto file = codefile::load(path);
    const auto report = analyze_file(file, analysis::Budget{}.scaled(budget_scale));
    if (as_json) std::cout << report_to_json(report).dump(2) << "\n";
    else print_report(report);
    return exit_for(report.verdict);
}

int cmd_f4(const std::string& family_name, int i, const std::string& out, bool as_json,
           double budget_scale) {
    const auto family = f4family::family_from_name(family_name);
    if (!family || *family == f4family::Family::Custom) {
        std::cerr << "unknown family '" << family_name
                  << "' (expected f1-33, f2-33 or f1-34)\n";
        return kExitIo;
    }
    const auto budget = analysis::Budget{}.scaled(budget_scale);
    const auto claim = f4family::family_claim(*family, i);
    const auto matrix = f4family::family_matrix(*family, i);
    const auto report = f4family::verify_operator_code(matrix, claim.r, claim.d, budget);

    if (as_json) {
        json j = report_to_json(report);
        j["family"] = family_name;
        j["i"] = i;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << family_name << " at i = " << i << ": claimed (n, k, d, r) = ("
                  << claim.n << ", " << claim.k << ", " << claim.d << ", " << claim.r
                  << ")\n";
        print_report(report);
        const auto zero = f4family::encode(matrix, std::vector<std::uint8_t>(claim.k, 0));
        std::cout << "  all-zero message encodes to";
        for (auto s : zero) std::cout << " " << f4family::f4_str(s);
        std::cout << "\n";
    }
    if (!out.empty()) {
        const auto ctx = repairsim::OperatorCodeContext::make(matrix, claim.r, budget);
        codefile::save(codefile::wrap(matrix, claim.r, ctx.repair_sets, 0), out);
        if (!as_json) std::cout << "wrote " << out << "\n";
    }
    return exit_for(report.verdict);
}

json sweep_row_json(const analysis::SweepRow& row) {
    json j;
    j["n"] = row.n;
    j["k"] = row.k;
    j["r"] = row.r;
    j["q"] = row.q;
    j["mode"] = mode_name(row.mode);
    j["d_opt"] = row.dopt;
    j["pred_lo"] = row.pred.lower;
    j["pred_hi"] = row.pred.upper;
    j["rule"] = analysis::rule_name(row.pred.rule);
    if (row.d_measured >= 0) {
        j["d_measured"] = row.d_measured;
        j["r_measured"] = row.r_measured;
        j["verdict"] = analysis::verdict_name(row.verdict);
    } else {
        j["d_measured"] = nullptr;
        j["r_measured"] = nullptr;
        j["verdict"] = nullptr;
    }
    j["seed"] = row.seed;
    if (!row.error.empty()) j["error"] = row.error;
    return j;
}

int cmd_sweep(int n_max, int cap, std::uint64_t seed, const std::string& out,
              double budget_scale) {
    if (n_max < 2 || n_max > cap) {
        std::cerr << "sweep: --n-max must be in [2, " << cap
                  << "] (raise --cap to go further)\n";
        return kExitIo;
    }
    const auto rows = analysis::sweep(n_max, seed, analysis::Budget{}.scaled(budget_scale));

    std::ofstream file_out;
    if (!out.empty()) {
        file_out.open(out);
        if (!file_out) {
            std::cerr << "cannot open " << out << "\n";
            return kExitIo;
        }
    }
    std::ostream& dst = out.empty() ? std::cout : file_out;

    int built = 0, violations = 0;
    for (const auto& row : rows) {
        dst << sweep_row_json(row).dump() << "\n";
        built += row.d_measured >= 0;
        violations += !row.within_prediction;
    }
    std::cerr << rows.size() << " triples, " << built << " constructed, " << violations
              << " prediction violations\n";
    return violations == 0 ? kExitOk : kExitError;
}

int cmd_simulate(const std::string& path, int trials, int erasures, std::uint64_t seed,
                 double budget_scale) {
    const auto file = codefile::load(path);
    repairsim::SimStats stats;
    if (file.kind == codefile::Kind::Linear) {
        stats = repairsim::simulate(*file.linear, trials, erasures, seed);
    } else {
        const auto budget = analysis::Budget{}.scaled(budget_scale);
        const auto ctx = file.repair_sets
                             ? repairsim::OperatorCodeContext::make_with_sets(
                                   *file.op_matrix, *file.repair_sets, budget)
                             : repairsim::OperatorCodeContext::make(
                                   *file.op_matrix, file.params.r, budget);
        stats = repairsim::simulate(ctx, trials, erasures, seed);
    }
    json j;
    j["trials"] = stats.trials;
    j["erasures"] = stats.erasures;
    j["local_rate"] = stats.local_rate;
    j["global_rate"] = stats.global_rate;
    j["mean_reads"] = stats.mean_reads;
    j["seed"] = stats.seed;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally repairable code construction and verification"};
    app.require_subcommand(1);
    app.fallthrough();  // app-level flags are accepted after the subcommand

    double budget_scale = 1.0;
    app.add_option("--budget", budget_scale, "scale factor for enumeration budgets")
        ->capture_default_str();

    auto* construct = app.add_subcommand("construct", "build a linear LRC");
    int n = 0, k = 0, r = 0;
    std::uint64_t q = 0, seed = 1;
    std::string out;
    bool as_json = false;
    construct->add_option("--n", n, "code length")->required();
    construct->add_option("--k", k, "dimension")->required();
    construct->add_option("--r", r, "locality")->required();
    construct->add_option("--q", q,
                          "field order (default: smallest supported above the guarantee)");
    construct->add_option("--seed", seed, "construction seed")->capture_default_str();
    construct->add_option("--out", out, "write the code file here");
    construct->add_flag("--json", as_json, "machine-readable report");

    auto* analyze = app.add_subcommand("analyze", "measure a stored code");
    std::string analyze_path;
    bool analyze_json = false;
    analyze->add_option("path", analyze_path, "code file")->required();
    analyze->add_flag("--json", analyze_json, "machine-readable report");

    auto* f4 = app.add_subcommand("f4", "build and verify an F4 operator family");
    std::string family;
    int block_i = 1;
    std::string f4_out;
    bool f4_json = false;
    f4->add_option("--family", family, "f1-33, f2-33 or f1-34")->required();
    f4->add_option("--i", block_i, "block index (i >= 1)")->capture_default_str();
    f4->add_option("--out", f4_out, "write the code file here");
    f4->add_flag("--json", f4_json, "machine-readable report");

    auto* sweep = app.add_subcommand("sweep",
                                     "construct and verify all triples up to n-max");
    int n_max = 8, cap = 10;
    std::uint64_t sweep_seed = 1;
    std::string sweep_out;
    sweep->add_option("--n-max", n_max, "largest code length")->capture_default_str();
    sweep->add_option("--cap", cap, "hard limit for --n-max")->capture_default_str();
    sweep->add_option("--seed", sweep_seed, "sweep seed")->capture_default_str();
    sweep->add_option("--out", sweep_out, "write JSON lines here instead of stdout");

    auto* simulate = app.add_subcommand("simulate", "erasure and repair simulation");
    std::string sim_path;
    int trials = 1000, erasures = 1;
    std::uint64_t sim_seed = 1;
    simulate->add_option("path", sim_path, "code file")->required();
    simulate->add_option("--trials", trials, "number of trials")->capture_default_str();
    simulate->add_option("--erasures", erasures, "erasures per trial")
        ->capture_default_str();
    simulate->add_option("--seed", sim_seed, "simulation seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct)
            return cmd_construct(n, k, r, q, seed, out, as_json, budget_scale);
        if (*analyze) return cmd_analyze(analyze_path, analyze_json, budget_scale);
        if (*f4) return cmd_f4(family, block_i, f4_out, f4_json, budget_scale);
        if (*sweep) return cmd_sweep(n_max, cap, sweep_seed, sweep_out, budget_scale);
        if (*simulate)
            return cmd_simulate(sim_path, trials, erasures, sim_seed, budget_scale);
    } catch (const codefile::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "(budget-related failures can be retried with --budget <factor>)\n";
        return kExitError;
    }
    return kExitError;
}
