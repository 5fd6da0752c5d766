#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gm/bench.hpp"
#include "gm/demo.hpp"
#include "gm/fitness_list.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gm::not_found_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gm::error("cannot open " + path + " for writing");
    out << text;
    out.close();
    if (!out) throw gm::error("failed while writing " + path);
}

struct Options {
    std::string instance_path;
    std::string kind = "tsp-open";
    std::string algo = "gene-machine";
    std::vector<std::string> algos;
    std::uint64_t budget_evals = 0;
    std::uint64_t time_ms = 0;
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> seeds;
    int machines = 1;
    int cycles = 1;
    std::string merge_mode = "one-way";
    gm::PressureSchedule schedule;
    gm::GaParams ga;
    std::string out_path;
    std::string trace_path;
    std::string format = "json";

    gm::EngineParams engine() const {
        gm::EngineParams params;
        params.machines = machines;
        params.cycles = cycles;
        params.merge_mode = merge_mode == "broadcast" ? gm::MergeMode::Broadcast
                                                      : gm::MergeMode::OneWay;
        params.schedule = schedule;
        return params;
    }
};

void add_instance_flags(CLI::App* sub, Options& opt) {
    sub->add_option("--instance", opt.instance_path, "instance file")->required();
    sub->add_option("--kind", opt.kind, "instance file format")
        ->check(CLI::IsMember({"tsp-open", "assignment", "tsplib"}))
        ->capture_default_str();
}

// The two stopping-criterion options of one subcommand, exactly one given.
struct BudgetFlags {
    CLI::Option* evals = nullptr;
    CLI::Option* time = nullptr;

    gm::Budget budget(const Options& opt) const {
        if (evals->count() > 0) return gm::Budget::evaluations(opt.budget_evals);
        return gm::Budget::wall_clock_ms(opt.time_ms);
    }
};

BudgetFlags add_run_flags(CLI::App* sub, Options& opt) {
    auto* budget = sub->add_option_group("budget", "stopping criterion");
    BudgetFlags flags;
    flags.evals = budget->add_option("--budget-evals", opt.budget_evals,
                                     "stop after this many fitness evaluations");
    flags.time = budget->add_option("--time-ms", opt.time_ms,
                                    "stop after this many milliseconds");
    budget->require_option(1);

    sub->add_option("--machines", opt.machines, "cooperating machines")->capture_default_str();
    sub->add_option("--cycles", opt.cycles, "merge cycles")->capture_default_str();
    sub->add_option("--merge-mode", opt.merge_mode, "list exchange at cycle boundaries")
        ->check(CLI::IsMember({"one-way", "broadcast"}))
        ->capture_default_str();
    sub->add_option("--beta0", opt.schedule.beta0, "initial selection pressure")
        ->capture_default_str();
    sub->add_option("--beta1", opt.schedule.beta1, "final selection pressure")
        ->capture_default_str();

    sub->add_option("--ga-pop", opt.ga.population_size, "ga population size")
        ->capture_default_str();
    sub->add_option("--ga-tournament", opt.ga.tournament_k, "ga tournament size")
        ->capture_default_str();
    sub->add_option("--ga-cx", opt.ga.crossover_rate, "ga crossover rate")
        ->capture_default_str();
    sub->add_option("--ga-mut", opt.ga.mutation_rate, "ga mutation rate per offspring")
        ->capture_default_str();
    sub->add_option("--ga-elitism", opt.ga.elitism, "ga elite carryover")->capture_default_str();

    sub->add_option("--out", opt.out_path, "write the report here instead of stdout");
    sub->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--trace-out", opt.trace_path, "also write best-fitness traces as csv");
    return flags;
}

int do_solve(const Options& opt, const BudgetFlags& budget_flags) {
    gm::ExperimentConfig cfg;
    cfg.instance_path = opt.instance_path;
    cfg.format = gm::instance_format_from_name(opt.kind);
    cfg.algorithms = {gm::algo_from_name(opt.algo)};
    cfg.seeds = {opt.seed};
    cfg.budget = budget_flags.budget(opt);
    cfg.engine = opt.engine();
    cfg.ga = opt.ga;

    const gm::RunReport report = gm::run_experiment(cfg);
    const gm::CellResult& cell = report.cells.front();
    std::cout << "algorithm: " << gm::algo_name(cell.algo) << '\n'
              << "best fitness: " << gm::format_number(cell.best.fitness) << '\n'
              << "best permutation: " << gm::permutation_label(cell.best.genes) << '\n'
              << "evaluations: " << cell.evaluations << '\n';
    if (report.optimum)
        std::cout << "known optimum: " << gm::format_number(report.optimum->fitness) << '\n';
    if (!opt.out_path.empty()) write_file(opt.out_path, gm::emit_report(report, opt.format));
    if (!opt.trace_path.empty()) write_file(opt.trace_path, gm::traces_to_csv(report));
    return 0;
}

int do_compare(const Options& opt, const BudgetFlags& budget_flags, bool seeds_given) {
    gm::ExperimentConfig cfg;
    cfg.instance_path = opt.instance_path;
    cfg.format = gm::instance_format_from_name(opt.kind);
    if (opt.algos.empty()) {
        cfg.algorithms = {gm::Algo::GeneMachine, gm::Algo::Ga, gm::Algo::Random};
    } else {
        for (const std::string& name : opt.algos)
            cfg.algorithms.push_back(gm::algo_from_name(name));
    }
    cfg.seeds = seeds_given ? opt.seeds : std::vector<std::uint64_t>{opt.seed};
    cfg.budget = budget_flags.budget(opt);
    cfg.engine = opt.engine();
    cfg.ga = opt.ga;

    const gm::RunReport report = gm::run_experiment(cfg);
    const std::string text = gm::emit_report(report, opt.format);
    if (opt.out_path.empty())
        std::cout << text;
    else
        write_file(opt.out_path, text);
    if (!opt.trace_path.empty()) write_file(opt.trace_path, gm::traces_to_csv(report));
    return 0;
}

int do_oracle(const Options& opt) {
    const gm::ProblemInstance inst =
        gm::load_instance(opt.instance_path, gm::instance_format_from_name(opt.kind));
    const gm::Optimum opt_result = gm::brute_force_optimum(inst);
    std::cout << gm::format_number(opt_result.fitness) << ' '
              << gm::permutation_label(opt_result.perm) << '\n';
    return 0;
}

int do_merge_demo(const std::vector<std::string>& paths) {
    gm::FitnessList dst = gm::fitness_list_from_json(read_file(paths[0]));
    const gm::FitnessList src = gm::fitness_list_from_json(read_file(paths[1]));
    dst.merge_from(src);
    std::cout << gm::fitness_list_to_json(dst) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation optimizer driven by per-position block fitness memory"};
    app.set_version_flag("--version", std::string(gm::kVersion));
    app.require_subcommand(1);

    Options opt;

    CLI::App* solve = app.add_subcommand("solve", "run one algorithm on one instance");
    add_instance_flags(solve, opt);
    solve->add_option("--algo", opt.algo, "algorithm to run")
        ->check(CLI::IsMember({"gene-machine", "ga", "random"}))
        ->capture_default_str();
    solve->add_option("--seed", opt.seed, "rng seed")->capture_default_str();
    const BudgetFlags solve_budget = add_run_flags(solve, opt);

    CLI::App* compare = app.add_subcommand("compare", "run an algorithm/seed matrix");
    add_instance_flags(compare, opt);
    compare->add_option("--algo", opt.algos, "algorithms to include (repeatable)")
        ->check(CLI::IsMember({"gene-machine", "ga", "random"}));
    auto* seed_opt = compare->add_option("--seed", opt.seed, "single rng seed");
    auto* seeds_opt =
        compare->add_option("--seeds", opt.seeds, "comma separated rng seeds")->delimiter(',');
    seed_opt->excludes(seeds_opt);
    const BudgetFlags compare_budget = add_run_flags(compare, opt);

    CLI::App* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search");
    add_instance_flags(oracle, opt);

    CLI::App* seed_demo =
        app.add_subcommand("seed-demo", "walk through seeding on the built-in 4-city instance");

    CLI::App* demo_paper = app.add_subcommand(
        "demo-paper", "reproduce the built-in worked example and verify its block tables");

    std::vector<std::string> merge_paths;
    CLI::App* merge_demo =
        app.add_subcommand("merge-demo", "merge two serialized lists and print the result");
    merge_demo->add_option("lists", merge_paths, "two serialized fitness lists")
        ->expected(2)
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve) return do_solve(opt, solve_budget);
        if (*compare) return do_compare(opt, compare_budget, seeds_opt->count() > 0);
        if (*oracle) return do_oracle(opt);
        if (*seed_demo) {
            gm::run_seeding_demo(std::cout);
            return 0;
        }
        if (*demo_paper) return gm::run_reference_demo(std::cout) ? 0 : 1;
        if (*merge_demo) return do_merge_demo(merge_paths);
    } catch (const gm::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
