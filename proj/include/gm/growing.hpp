#pragma once

#include <span>

#include "gm/evaluator.hpp"
#include "gm/machine.hpp"
#include "gm/rng.hpp"
#include "gm/types.hpp"

namespace gm {

// Selection pressure ramps linearly from beta0 at the start of a budget to
// beta1 at its end. beta = 0 selects uniformly; large beta is near-greedy
// on block rank.
struct PressureSchedule {
    double beta0 = 1.0;
    double beta1 = 8.0;
};

inline constexpr PressureSchedule kDefaultSchedule{1.0, 8.0};

void validate(const PressureSchedule& sched);

// Linear interpolation over the consumed fraction of the budget.
double pressure(double elapsed_fraction, const PressureSchedule& sched);

// Samples one gene for `position` from `available`. Candidates get dense
// ranks by ascending stored fitness (ties share a rank), normalized to
// [0, 1], and weight exp(-beta * rank). Blocks in the same fitness bucket
// are indistinguishable, so they draw with equal probability.
Gene select_gene(const FitnessList& list, Position position, std::span<const Gene> available,
                 double beta, Rng& rng);

// Builds a permutation by visiting positions in a fresh random order and
// sampling each position's gene from the not-yet-used ones. Random visit
// order keeps late positions from being starved of good blocks.
Permutation construct_chromosome(const FitnessList& list, double beta, Rng& rng);

// One growing iteration: construct, evaluate (one evaluation), record the
// observation, keep the chromosome as best if strictly better. Returns the
// constructed chromosome.
Chromosome grow_step(GeneMachine& machine, Evaluator& eval, double beta, Rng& rng);

}  // namespace gm
