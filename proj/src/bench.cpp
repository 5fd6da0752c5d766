#include "gm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace gm {

namespace {

// Stream indices keep ga and random draws disjoint from the machine
// streams (0..k-1) derived from the same seed.
constexpr std::uint64_t kGaStream = std::uint64_t{1} << 20;
constexpr std::uint64_t kRandomStream = std::uint64_t{1} << 21;

constexpr double kSuccessTolerance = 1e-9;

}  // namespace

const char* algo_name(Algo algo) {
    switch (algo) {
        case Algo::GeneMachine: return "gene-machine";
        case Algo::Ga: return "ga";
        case Algo::Random: return "random";
    }
    return "unknown";
}

Algo algo_from_name(std::string_view name) {
    if (name == "gene-machine") return Algo::GeneMachine;
    if (name == "ga") return Algo::Ga;
    if (name == "random") return Algo::Random;
    throw invalid_argument_error("unknown algorithm \"" + std::string(name) +
                                 "\" (expected gene-machine, ga, or random)");
}

const char* instance_format_name(InstanceFormat format) {
    switch (format) {
        case InstanceFormat::TspOpenMatrix: return "tsp-open";
        case InstanceFormat::AssignmentMatrix: return "assignment";
        case InstanceFormat::TsplibEuc2d: return "tsplib";
    }
    return "unknown";
}

InstanceFormat instance_format_from_name(std::string_view name) {
    if (name == "tsp-open") return InstanceFormat::TspOpenMatrix;
    if (name == "assignment") return InstanceFormat::AssignmentMatrix;
    if (name == "tsplib") return InstanceFormat::TsplibEuc2d;
    throw invalid_argument_error("unknown instance format \"" + std::string(name) +
                                 "\" (expected tsp-open, assignment, or tsplib)");
}

ProblemInstance load_instance(const std::string& path, InstanceFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw not_found_error("cannot open instance file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    switch (format) {
        case InstanceFormat::TspOpenMatrix: return parse_distance_matrix(text);
        case InstanceFormat::AssignmentMatrix: return parse_assignment_matrix(text);
        case InstanceFormat::TsplibEuc2d: return parse_tsplib_euc2d(text);
    }
    throw invalid_argument_error("unknown instance format");
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.algorithms.empty()) throw invalid_argument_error("no algorithms configured");
    if (cfg.seeds.empty()) throw invalid_argument_error("no seeds configured");
    if (cfg.budget.limit == 0) throw budget_error("budget limit must be positive");
    const bool needs_evals =
        std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(),
                    [](Algo a) { return a == Algo::Ga || a == Algo::Random; });
    if (needs_evals && cfg.budget.kind != Budget::Kind::Evaluations)
        throw invalid_argument_error("ga and random runs need an evaluation budget");
    if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), Algo::GeneMachine) !=
        cfg.algorithms.end()) {
        validate(ParallelConfig{cfg.engine.machines, cfg.engine.cycles, cfg.budget,
                                cfg.engine.merge_mode});
        validate(cfg.engine.schedule);
    }
    if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), Algo::Ga) !=
        cfg.algorithms.end())
        validate(cfg.ga);
}

Chromosome random_search(Evaluator& eval, std::uint64_t budget, Rng& rng) {
    if (budget == 0) throw budget_error("random search budget must be positive");
    const int n = eval.instance().n;
    Chromosome best{random_permutation(n, rng), 0.0};
    best.fitness = eval.evaluate(best.genes);
    for (std::uint64_t i = 1; i < budget; ++i) {
        Permutation perm = random_permutation(n, rng);
        const double f = eval.evaluate(perm);
        if (f < best.fitness) best = Chromosome{std::move(perm), f};
    }
    return best;
}

CellResult run_cell(const ProblemInstance& inst, Algo algo, std::uint64_t seed,
                    const Budget& budget, const EngineParams& engine, const GaParams& ga) {
    const std::uint64_t stride = budget.kind == Budget::Kind::Evaluations
                                     ? std::max<std::uint64_t>(1, budget.limit / 200)
                                     : 100;
    Evaluator eval(inst, stride);

    CellResult cell;
    cell.algo = algo;
    cell.seed = seed;

    const auto start = std::chrono::steady_clock::now();
    switch (algo) {
        case Algo::GeneMachine: {
            const ParallelConfig cfg{engine.machines, engine.cycles, budget, engine.merge_mode};
            cell.best = run_parallel(eval, cfg, engine.schedule, seed).best;
            break;
        }
        case Algo::Ga: {
            if (budget.kind != Budget::Kind::Evaluations)
                throw invalid_argument_error("ga runs need an evaluation budget");
            Rng rng = derive_stream(seed, kGaStream);
            cell.best = run_ga(eval, ga, budget.limit, rng).best;
            break;
        }
        case Algo::Random: {
            if (budget.kind != Budget::Kind::Evaluations)
                throw invalid_argument_error("random search needs an evaluation budget");
            Rng rng = derive_stream(seed, kRandomStream);
            cell.best = random_search(eval, budget.limit, rng);
            break;
        }
    }
    const auto stop = std::chrono::steady_clock::now();

    eval.close_trace();
    cell.evaluations = eval.count();
    cell.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    cell.trace = eval.trace();
    return cell;
}

namespace {

AlgoSummary summarize(Algo algo, const std::vector<CellResult>& cells,
                      const std::optional<Optimum>& optimum) {
    AlgoSummary summary;
    summary.algo = algo;

    double sum = 0.0;
    int successes = 0;
    for (const CellResult& cell : cells) {
        if (cell.algo != algo) continue;
        const double f = cell.best.fitness;
        if (summary.runs == 0) {
            summary.min = f;
            summary.max = f;
        } else {
            summary.min = std::min(summary.min, f);
            summary.max = std::max(summary.max, f);
        }
        sum += f;
        if (optimum && f <= optimum->fitness + kSuccessTolerance) ++successes;
        ++summary.runs;
    }
    if (summary.runs == 0) return summary;

    summary.mean = sum / summary.runs;
    if (summary.runs > 1) {
        double ss = 0.0;
        for (const CellResult& cell : cells) {
            if (cell.algo != algo) continue;
            const double d = cell.best.fitness - summary.mean;
            ss += d * d;
        }
        summary.stddev = std::sqrt(ss / (summary.runs - 1));
    }
    if (optimum) summary.success_rate = static_cast<double>(successes) / summary.runs;
    return summary;
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& cfg, const ProblemInstance& inst) {
    validate(cfg);

    RunReport report;
    report.version = std::string(kVersion);
    report.instance_path = cfg.instance_path;
    report.format = cfg.format;
    report.kind = inst.kind;
    report.n = inst.n;
    report.budget = cfg.budget;
    report.engine = cfg.engine;
    report.ga = cfg.ga;
    report.seeds = cfg.seeds;
    std::sort(report.seeds.begin(), report.seeds.end());
    if (inst.n <= kBruteForceLimit) report.optimum = brute_force_optimum(inst);

    for (Algo algo : cfg.algorithms)
        for (std::uint64_t seed : report.seeds) {
            try {
                report.cells.push_back(run_cell(inst, algo, seed, cfg.budget, cfg.engine, cfg.ga));
            } catch (const error& e) {
                throw error(std::string(algo_name(algo)) + " seed " + std::to_string(seed) +
                            ": " + e.what());
            }
        }

    for (Algo algo : cfg.algorithms)
        report.summaries.push_back(summarize(algo, report.cells, report.optimum));
    return report;
}

RunReport run_experiment(const ExperimentConfig& cfg) {
    return run_experiment(cfg, load_instance(cfg.instance_path, cfg.format));
}

namespace {

nlohmann::json to_json(const Budget& budget) {
    return {{"kind", budget.kind == Budget::Kind::Evaluations ? "evaluations" : "wall-clock"},
            {"limit", budget.limit}};
}

nlohmann::json config_to_json(const RunReport& report) {
    nlohmann::json engine{{"machines", report.engine.machines},
                          {"cycles", report.engine.cycles},
                          {"merge_mode", merge_mode_name(report.engine.merge_mode)},
                          {"beta0", report.engine.schedule.beta0},
                          {"beta1", report.engine.schedule.beta1}};
    nlohmann::json ga{{"population_size", report.ga.population_size},
                      {"tournament_k", report.ga.tournament_k},
                      {"crossover_rate", report.ga.crossover_rate},
                      {"mutation_rate", report.ga.mutation_rate},
                      {"elitism", report.ga.elitism}};
    nlohmann::json instance{{"path", report.instance_path},
                            {"format", instance_format_name(report.format)},
                            {"kind", std::string(problem_kind_name(report.kind))},
                            {"n", report.n}};
    return {{"budget", to_json(report.budget)},
            {"engine", engine},
            {"ga", ga},
            {"instance", instance},
            {"seeds", report.seeds}};
}

}  // namespace

std::string emit_report_json(const RunReport& report) {
    nlohmann::json doc;
    doc["version"] = report.version;
    doc["config"] = config_to_json(report);

    if (report.optimum)
        doc["optimum"] = {{"fitness", report.optimum->fitness},
                          {"permutation", report.optimum->perm}};
    else
        doc["optimum"] = nullptr;

    doc["runs"] = nlohmann::json::array();
    for (const CellResult& cell : report.cells) {
        nlohmann::json trace = nlohmann::json::array();
        for (const TracePoint& point : cell.trace)
            trace.push_back({point.evaluations, point.best_fitness});
        doc["runs"].push_back({{"algorithm", algo_name(cell.algo)},
                               {"seed", cell.seed},
                               {"best_fitness", cell.best.fitness},
                               {"best_permutation", cell.best.genes},
                               {"evaluations", cell.evaluations},
                               {"wall_ms", cell.wall_ms},
                               {"trace", trace}});
    }

    doc["summary"] = nlohmann::json::array();
    for (const AlgoSummary& s : report.summaries) {
        nlohmann::json row{{"algorithm", algo_name(s.algo)}, {"runs", s.runs},
                           {"mean", s.mean},               {"stddev", s.stddev},
                           {"min", s.min},                 {"max", s.max}};
        row["success_rate"] = s.success_rate ? nlohmann::json(*s.success_rate)
                                             : nlohmann::json(nullptr);
        doc["summary"].push_back(row);
    }
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line += ',';
        line += fields[i];
    }
    line += '\n';
    return line;
}

}  // namespace

std::string emit_report_csv(const RunReport& report) {
    std::string out = csv_line({"record", "algorithm", "seed", "best_fitness", "evaluations",
                                "wall_ms", "optimal", "best_permutation", "mean", "stddev", "min",
                                "max", "success_rate", "runs"});
    for (const CellResult& cell : report.cells) {
        std::string optimal;
        if (report.optimum)
            optimal = cell.best.fitness <= report.optimum->fitness + kSuccessTolerance ? "1" : "0";
        out += csv_line({"run", algo_name(cell.algo), std::to_string(cell.seed),
                         format_number(cell.best.fitness), std::to_string(cell.evaluations),
                         format_number(cell.wall_ms), optimal, permutation_label(cell.best.genes),
                         "", "", "", "", "", ""});
    }
    for (const AlgoSummary& s : report.summaries)
        out += csv_line({"summary", algo_name(s.algo), "", "", "", "", "", "",
                         format_number(s.mean), format_number(s.stddev), format_number(s.min),
                         format_number(s.max),
                         s.success_rate ? format_number(*s.success_rate) : std::string(),
                         std::to_string(s.runs)});
    return out;
}

std::string emit_report(const RunReport& report, std::string_view format) {
    if (format == "json") return emit_report_json(report);
    if (format == "csv") return emit_report_csv(report);
    throw invalid_argument_error("unknown report format \"" + std::string(format) +
                                 "\" (expected json or csv)");
}

std::string traces_to_csv(const RunReport& report) {
    std::string out = csv_line({"algorithm", "seed", "evaluations", "best_fitness"});
    for (const CellResult& cell : report.cells)
        for (const TracePoint& point : cell.trace)
            out += csv_line({algo_name(cell.algo), std::to_string(cell.seed),
                             std::to_string(point.evaluations), format_number(point.best_fitness)});
    return out;
}

}  // namespace gm
