#include "gm/engine.hpp"

#include <chrono>
#include <string>

#include "gm/seeding.hpp"

namespace gm {

const Chromosome& best_chromosome(const GeneMachine& machine) {
    if (!machine.seeded())
        throw invalid_state_error("machine has no best chromosome before seeding");
    return *machine.best;
}

namespace {

void check_compatible(const GeneMachine& machine, const Evaluator& eval) {
    if (eval.instance().n != machine.gene_count())
        throw incompatible_error("machine has " + std::to_string(machine.gene_count()) +
                                 " genes but the problem has " +
                                 std::to_string(eval.instance().n));
}

void evolve_evaluations(GeneMachine& machine, Evaluator& eval, std::uint64_t allowance,
                        const PressureSchedule& sched, Rng& rng) {
    std::uint64_t used = 0;
    if (!machine.seeded()) {
        const auto n = static_cast<std::uint64_t>(machine.gene_count());
        if (allowance < n)
            throw budget_error("evaluation budget " + std::to_string(allowance) +
                               " cannot cover seeding (" + std::to_string(n) + " evaluations)");
        seed(machine, eval, rng);
        used = n;
    }
    const double denom = static_cast<double>(allowance);
    while (used < allowance) {
        const double beta = pressure(static_cast<double>(used) / denom, sched);
        grow_step(machine, eval, beta, rng);
        ++used;
    }
}

void evolve_wall_clock(GeneMachine& machine, Evaluator& eval, std::uint64_t limit_ms,
                       const PressureSchedule& sched, Rng& rng) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const auto deadline = start + std::chrono::milliseconds(limit_ms);
    if (!machine.seeded()) seed(machine, eval, rng);
    const double denom = static_cast<double>(limit_ms);
    // The clock is sampled only between steps, so each step runs to
    // completion with whatever pressure it started with.
    for (auto now = clock::now(); now < deadline; now = clock::now()) {
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(now - start).count();
        const double fraction = std::min(static_cast<double>(elapsed) / denom, 1.0);
        grow_step(machine, eval, pressure(fraction, sched), rng);
    }
}

}  // namespace

const Chromosome& evolve(GeneMachine& machine, Evaluator& eval, const Budget& budget,
                         const PressureSchedule& sched, Rng& rng) {
    validate(sched);
    check_compatible(machine, eval);
    if (budget.kind == Budget::Kind::Evaluations)
        evolve_evaluations(machine, eval, budget.limit, sched, rng);
    else
        evolve_wall_clock(machine, eval, budget.limit, sched, rng);
    return best_chromosome(machine);
}

const char* merge_mode_name(MergeMode mode) {
    return mode == MergeMode::OneWay ? "one-way" : "broadcast";
}

void validate(const ParallelConfig& cfg) {
    if (cfg.machines < 1) throw invalid_argument_error("machine count must be at least 1");
    if (cfg.cycles < 1) throw invalid_argument_error("cycle count must be at least 1");
    if (cfg.budget.limit == 0) throw budget_error("budget limit must be positive");
}

ParallelResult run_parallel(Evaluator& eval, const ParallelConfig& cfg,
                            const PressureSchedule& sched, std::uint64_t master_seed,
                            const CycleHook& before_merge, const CycleHook& after_merge) {
    validate(cfg);
    validate(sched);

    const int n = eval.instance().n;
    const auto k = static_cast<std::uint64_t>(cfg.machines);
    const auto c = static_cast<std::uint64_t>(cfg.cycles);
    const bool eval_mode = cfg.budget.kind == Budget::Kind::Evaluations;

    // Evaluation budgets are a global resource split across cycles and then
    // across machines, remainders granted to the last cycle and last machine
    // so the total is conserved exactly. Wall clock budgets follow the
    // concurrent reading: every machine gets the full cycle window.
    const std::uint64_t per_cycle = cfg.budget.limit / c;
    const std::uint64_t cycle_remainder = cfg.budget.limit % c;
    if (eval_mode && per_cycle / k < static_cast<std::uint64_t>(n))
        throw budget_error("first-cycle share " + std::to_string(per_cycle / k) +
                           " per machine cannot cover seeding (" + std::to_string(n) +
                           " evaluations)");

    std::vector<GeneMachine> machines;
    std::vector<Rng> streams;
    machines.reserve(k);
    streams.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        machines.emplace_back(n);
        streams.push_back(derive_stream(master_seed, i));
    }

    const std::uint64_t start_count = eval.count();
    for (std::uint64_t cycle = 0; cycle < c; ++cycle) {
        const std::uint64_t cycle_budget = per_cycle + (cycle + 1 == c ? cycle_remainder : 0);
        for (std::uint64_t i = 0; i < k; ++i) {
            std::uint64_t share = cycle_budget;
            if (eval_mode) share = cycle_budget / k + (i + 1 == k ? cycle_budget % k : 0);
            if (share == 0) continue;
            const Budget slice =
                eval_mode ? Budget::evaluations(share) : Budget::wall_clock_ms(share);
            evolve(machines[i], eval, slice, sched, streams[i]);
        }

        if (before_merge) before_merge(static_cast<int>(cycle), machines);
        for (std::uint64_t j = 1; j < k; ++j) machines[0].list.merge_from(machines[j].list);
        if (cfg.merge_mode == MergeMode::Broadcast)
            for (std::uint64_t j = 1; j < k; ++j) machines[j].list = machines[0].list;
        if (after_merge) after_merge(static_cast<int>(cycle), machines);
    }

    ParallelResult result;
    result.best = best_chromosome(machines[0]);
    result.best_overall = result.best;
    for (const GeneMachine& m : machines)
        if (m.best && m.best->fitness < result.best_overall.fitness) result.best_overall = *m.best;
    result.total_evaluations = eval.count() - start_count;
    result.machines = std::move(machines);
    return result;
}

}  // namespace gm
