#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gm/evaluator.hpp"
#include "gm/rng.hpp"
#include "gm/types.hpp"

namespace gm {

// Textbook generational permutation GA used as the comparison baseline:
// tournament selection, order crossover, swap mutation, elitism.
struct GaParams {
    int population_size = 50;
    int tournament_k = 3;
    double crossover_rate = 0.9;
    double mutation_rate = 0.2;  // per offspring
    int elitism = 1;
};

void validate(const GaParams& params);

// OX1: the child copies p1[cut1..cut2); the remaining positions are filled
// starting at cut2 and wrapping, taking p2's genes in p2 order starting at
// cut2 and wrapping, skipping genes already present. Requires cut1 < cut2.
Permutation order_crossover(const Permutation& p1, const Permutation& p2, int cut1, int cut2);

Permutation swap_mutation(const Permutation& perm, int i, int j);

// k uniform draws with replacement; smallest fitness wins, ties going to
// the earliest draw.
const Chromosome& tournament_select(std::span<const Chromosome> population, int k, Rng& rng);

struct GaResult {
    Chromosome best;
    std::uint64_t evaluations = 0;
    // Best population fitness after each generation (index 0 = initial
    // random population). Non-increasing whenever elitism >= 1.
    std::vector<double> generation_best;
    // Fraction of the n^2 (gene, position) pairs present anywhere in the
    // population, per generation. Purely diagnostic.
    std::vector<double> block_coverage;
};

// Runs until the evaluation budget is exhausted; the final generation may
// be partial. Consumes exactly `budget_evals` evaluations.
GaResult run_ga(Evaluator& eval, const GaParams& params, std::uint64_t budget_evals, Rng& rng);

}  // namespace gm
