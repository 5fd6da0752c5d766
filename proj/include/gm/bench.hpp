#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gm/engine.hpp"
#include "gm/evaluator.hpp"
#include "gm/ga.hpp"
#include "gm/problem.hpp"

namespace gm {

enum class Algo { GeneMachine, Ga, Random };

const char* algo_name(Algo algo);
Algo algo_from_name(std::string_view name);  // invalid_argument_error on unknown names

enum class InstanceFormat { TspOpenMatrix, AssignmentMatrix, TsplibEuc2d };

const char* instance_format_name(InstanceFormat format);
InstanceFormat instance_format_from_name(std::string_view name);

ProblemInstance load_instance(const std::string& path, InstanceFormat format);

struct EngineParams {
    int machines = 1;
    int cycles = 1;
    MergeMode merge_mode = MergeMode::OneWay;
    PressureSchedule schedule;
};

struct ExperimentConfig {
    std::string instance_path;
    InstanceFormat format = InstanceFormat::TspOpenMatrix;
    std::vector<Algo> algorithms;
    std::vector<std::uint64_t> seeds;
    Budget budget;
    EngineParams engine;
    GaParams ga;
};

// At least one algorithm and one seed; a positive budget; an evaluation
// budget whenever ga or random is among the algorithms (those two have no
// wall-clock mode, which keeps comparisons equal-budget).
void validate(const ExperimentConfig& cfg);

struct CellResult {
    Algo algo = Algo::GeneMachine;
    std::uint64_t seed = 0;
    Chromosome best;
    std::uint64_t evaluations = 0;
    double wall_ms = 0.0;
    std::vector<TracePoint> trace;
};

struct AlgoSummary {
    Algo algo = Algo::GeneMachine;
    int runs = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation; 0 for a single run
    double min = 0.0;
    double max = 0.0;
    std::optional<double> success_rate;  // present only when the optimum is known
};

struct RunReport {
    std::string version;
    std::string instance_path;
    InstanceFormat format = InstanceFormat::TspOpenMatrix;
    ProblemKind kind = ProblemKind::OpenPathTsp;
    int n = 0;
    Budget budget;
    EngineParams engine;
    GaParams ga;
    std::vector<std::uint64_t> seeds;  // ascending, as executed
    std::optional<Optimum> optimum;    // attached when brute force is feasible
    std::vector<CellResult> cells;     // algorithm order as configured, seeds ascending
    std::vector<AlgoSummary> summaries;
};

// Samples `budget` uniform random permutations, keeping the best.
Chromosome random_search(Evaluator& eval, std::uint64_t budget, Rng& rng);

// One (algorithm, seed) cell under the shared fairness rules: identical
// budget, trace stride max(1, budget/200) evaluations (100 for wall-clock
// budgets), seed-derived rng streams.
CellResult run_cell(const ProblemInstance& inst, Algo algo, std::uint64_t seed,
                    const Budget& budget, const EngineParams& engine, const GaParams& ga);

RunReport run_experiment(const ExperimentConfig& cfg, const ProblemInstance& inst);
RunReport run_experiment(const ExperimentConfig& cfg);  // loads cfg.instance_path

std::string emit_report_json(const RunReport& report);
std::string emit_report_csv(const RunReport& report);
std::string emit_report(const RunReport& report, std::string_view format);  // "json" or "csv"

// Plot-ready long form: algorithm,seed,evaluations,best_fitness.
std::string traces_to_csv(const RunReport& report);

}  // namespace gm
