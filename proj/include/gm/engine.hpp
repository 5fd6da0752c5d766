#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gm/evaluator.hpp"
#include "gm/growing.hpp"
#include "gm/machine.hpp"
#include "gm/rng.hpp"

namespace gm {

// Runs one machine against the given budget: seeds first when the list is
// still empty, then repeats grow steps with the selection pressure ramping
// from beta0 to beta1 over the budget consumed by this call. Evaluation
// budgets are exact: the call performs exactly `limit` evaluations, seeding
// included. Wall clock budgets stop at the first step boundary past the
// deadline. Returns the machine's retained best.
const Chromosome& evolve(GeneMachine& machine, Evaluator& eval, const Budget& budget,
                         const PressureSchedule& sched, Rng& rng);

// How cooperating machines exchange lists at a cycle boundary. OneWay folds
// every worker list into machine 0 and leaves the workers untouched.
// Broadcast additionally copies the merged list back to every worker.
enum class MergeMode { OneWay, Broadcast };

const char* merge_mode_name(MergeMode mode);

struct ParallelConfig {
    int machines = 1;
    int cycles = 1;
    Budget budget = Budget::evaluations(1);
    MergeMode merge_mode = MergeMode::OneWay;
};

void validate(const ParallelConfig& cfg);

// Observes the machine bank at each cycle boundary.
using CycleHook = std::function<void(int cycle, const std::vector<GeneMachine>& machines)>;

struct ParallelResult {
    Chromosome best;          // machine 0's retained best
    Chromosome best_overall;  // best across all machines
    std::vector<GeneMachine> machines;
    std::uint64_t total_evaluations = 0;
};

// Splits the budget across cycles and machines, runs every machine for its
// share of each cycle, then merges lists into machine 0. Machines draw from
// independent random streams derived from `master_seed`, so results do not
// depend on scheduling. Machines run sequentially in machine order; with one
// machine and one cycle this reduces exactly to evolve() on a fresh machine
// with stream derive_stream(master_seed, 0).
ParallelResult run_parallel(Evaluator& eval, const ParallelConfig& cfg,
                            const PressureSchedule& sched, std::uint64_t master_seed,
                            const CycleHook& before_merge = nullptr,
                            const CycleHook& after_merge = nullptr);

}  // namespace gm
