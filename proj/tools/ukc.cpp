#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "ukc/report.hpp"
#include "ukc/verify.hpp"

namespace {

using namespace ukc;

Strategy parse_strategy(const std::string& s) {
    if (s == "ed") return Strategy::ED;
    if (s == "ep") return Strategy::EP;
    if (s == "oc") return Strategy::OC;
    throw InputError("unknown strategy: " + s);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct SolveArgs {
    std::string input;
    int k = 1;
    std::string strategy;
    std::string det = "gonzalez";
    std::string version = "restricted";
};

struct GenArgs {
    int n = 0;
    int z = 0;
    std::string space = "euclidean";
    int dim = 2;
    int m = 8;
    std::uint64_t seed = 1;
};

int run_solve(const SolveArgs& args, bool no_timing) {
    const auto start = std::chrono::steady_clock::now();
    const Instance inst = parse_instance(read_file(args.input));

    Solution sol;
    if (args.version == "one-center") {
        if (args.k != 1) throw InputError("--version one-center requires --k 1");
        sol = solve_one_center(inst);
    } else {
        if (args.strategy.empty())
            throw InputError("--strategy is required for the assigned versions");
        const auto version = args.version == "restricted" ? ProblemVersion::restricted
                                                          : ProblemVersion::unrestricted;
        const auto det =
            args.det == "gonzalez" ? DetSolver::gonzalez : DetSolver::exact_discrete;
        sol = solve_kcenter(inst, args.k, parse_strategy(args.strategy), det, version);
    }

    RunReport rep;
    rep.command = "solve";
    rep.instance_digest = instance_digest(inst);
    rep.solution = std::move(sol);
    if (!no_timing)
        rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    std::cout << report_to_json_string(rep) << "\n";
    return 0;
}

int run_verify_cmd(const VerifyConfig& cfg, bool no_timing) {
    const auto start = std::chrono::steady_clock::now();
    RunReport rep = run_verify(cfg);
    if (!no_timing)
        rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    std::cout << report_to_json_string(rep) << "\n";

    std::size_t passed = 0;
    const RatioRow* first_failure = nullptr;
    for (const auto& r : rep.ratios) {
        if (r.pass)
            ++passed;
        else if (first_failure == nullptr)
            first_failure = &r;
    }
    std::cerr << "verify/" << cfg.suite << ": " << passed << "/" << rep.ratios.size()
              << " rows passed\n";
    if (first_failure != nullptr) {
        std::cerr << "first failure: " << first_failure->label << " at seed "
                  << first_failure->instance_seed << " (replay: verify --suite " << cfg.suite
                  << " --seed " << first_failure->instance_seed << " --trials 1)\n";
        return 1;
    }
    return 0;
}

int run_gen(const GenArgs& args) {
    const auto kind = args.space == "finite" ? SpaceKind::finite : SpaceKind::euclidean;
    const int dim_or_m = kind == SpaceKind::finite ? args.m : args.dim;
    const Instance inst = generate_instance(args.n, args.z, kind, dim_or_m, args.seed);
    std::cout << emit_instance(inst) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-center clustering for uncertain points"};
    app.require_subcommand(1);
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "report wall_time_ms as 0 (byte-stable output)");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve an instance and print the report JSON");
    solve->add_option("--input", solve_args.input, "instance JSON file")->required();
    solve->add_option("--k", solve_args.k, "number of centers");
    solve->add_option("--strategy", solve_args.strategy, "assignment rule")
        ->check(CLI::IsMember({"ed", "ep", "oc"}));
    solve->add_option("--det", solve_args.det, "deterministic solver for the surrogates")
        ->check(CLI::IsMember({"gonzalez", "exact"}));
    solve->add_option("--version", solve_args.version, "problem version")
        ->check(CLI::IsMember({"restricted", "unrestricted", "one-center"}));

    VerifyConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "run a property suite over seeded instances");
    verify->add_option("--suite", verify_cfg.suite, "which suite to run")
        ->check(CLI::IsMember({"evaluators", "lemmas", "bounds", "all"}));
    verify->add_option("--trials", verify_cfg.trials, "number of seeded trials");
    verify->add_option("--seed", verify_cfg.seed, "base seed; trial t uses seed + t");
    verify->add_option("--max-n", verify_cfg.max_n, "max uncertain points per instance");
    verify->add_option("--max-z", verify_cfg.max_z, "max locations per point");
    verify->add_option("--max-k", verify_cfg.max_k, "max centers");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--n", gen_args.n, "number of uncertain points")->required();
    gen->add_option("--z", gen_args.z, "locations per point")->required();
    gen->add_option("--space", gen_args.space, "space kind")
        ->check(CLI::IsMember({"euclidean", "finite"}));
    gen->add_option("--dim", gen_args.dim, "dimension (euclidean)");
    gen->add_option("--m", gen_args.m, "number of space points (finite)");
    gen->add_option("--seed", gen_args.seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args, no_timing);
        if (verify->parsed()) return run_verify_cmd(verify_cfg, no_timing);
        return run_gen(gen_args);
    } catch (const UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
