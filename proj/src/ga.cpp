#include "gm/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gm {

void validate(const GaParams& params) {
    if (params.population_size < 2)
        throw invalid_argument_error("population size must be at least 2");
    if (params.tournament_k < 1) throw invalid_argument_error("tournament size must be at least 1");
    if (!(params.crossover_rate >= 0.0 && params.crossover_rate <= 1.0))
        throw invalid_argument_error("crossover rate must lie in [0, 1]");
    if (!(params.mutation_rate >= 0.0 && params.mutation_rate <= 1.0))
        throw invalid_argument_error("mutation rate must lie in [0, 1]");
    if (params.elitism < 0) throw invalid_argument_error("elitism must be non-negative");
    if (params.elitism >= params.population_size)
        throw invalid_argument_error("elitism must be smaller than the population size");
}

Permutation order_crossover(const Permutation& p1, const Permutation& p2, int cut1, int cut2) {
    const auto n = static_cast<int>(p1.size());
    if (p2.size() != p1.size())
        throw incompatible_error("crossover parents have lengths " + std::to_string(p1.size()) +
                                 " and " + std::to_string(p2.size()));
    if (cut1 < 0 || cut1 >= cut2 || cut2 > n)
        throw invalid_argument_error("crossover cuts (" + std::to_string(cut1) + ", " +
                                     std::to_string(cut2) + ") must satisfy 0 <= cut1 < cut2 <= " +
                                     std::to_string(n));

    Permutation child(p1.size());
    std::vector<char> used(p1.size(), 0);
    for (int p = cut1; p < cut2; ++p) {
        child[static_cast<std::size_t>(p)] = p1[static_cast<std::size_t>(p)];
        used[static_cast<std::size_t>(p1[static_cast<std::size_t>(p)])] = 1;
    }
    int fill = cut2 % n;
    for (int step = 0; step < n; ++step) {
        const Gene g = p2[static_cast<std::size_t>((cut2 + step) % n)];
        if (used[static_cast<std::size_t>(g)]) continue;
        child[static_cast<std::size_t>(fill)] = g;
        used[static_cast<std::size_t>(g)] = 1;
        fill = (fill + 1) % n;
        if (fill == cut1) break;
    }
    return child;
}

Permutation swap_mutation(const Permutation& perm, int i, int j) {
    const auto n = static_cast<int>(perm.size());
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw invalid_argument_error("swap positions (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ") out of range for length " +
                                     std::to_string(n));
    Permutation out = perm;
    std::swap(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(j)]);
    return out;
}

const Chromosome& tournament_select(std::span<const Chromosome> population, int k, Rng& rng) {
    if (population.empty()) throw invalid_argument_error("tournament over an empty population");
    if (k < 1) throw invalid_argument_error("tournament size must be at least 1");
    std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
    const Chromosome* best = &population[pick(rng)];
    for (int draw = 1; draw < k; ++draw) {
        const Chromosome& c = population[pick(rng)];
        if (c.fitness < best->fitness) best = &c;
    }
    return *best;
}

namespace {

void note_generation(GaResult& result, const std::vector<Chromosome>& pop, int n) {
    double best = pop.front().fitness;
    for (const Chromosome& c : pop) best = std::min(best, c.fitness);
    result.generation_best.push_back(best);

    std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::size_t distinct = 0;
    for (const Chromosome& c : pop)
        for (int p = 0; p < n; ++p) {
            const auto slot = static_cast<std::size_t>(c.genes[static_cast<std::size_t>(p)]) *
                                  static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(p);
            if (!seen[slot]) {
                seen[slot] = 1;
                ++distinct;
            }
        }
    result.block_coverage.push_back(static_cast<double>(distinct) /
                                    static_cast<double>(seen.size()));
}

}  // namespace

GaResult run_ga(Evaluator& eval, const GaParams& params, std::uint64_t budget_evals, Rng& rng) {
    validate(params);
    const int n = eval.instance().n;
    const auto pop_size = static_cast<std::size_t>(params.population_size);
    if (budget_evals < pop_size)
        throw budget_error("evaluation budget " + std::to_string(budget_evals) +
                           " cannot cover the initial population (" + std::to_string(pop_size) +
                           ")");

    std::uint64_t used = 0;
    std::vector<Chromosome> pop;
    pop.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) {
        Chromosome c{random_permutation(n, rng), 0.0};
        c.fitness = eval.evaluate(c.genes);
        ++used;
        pop.push_back(std::move(c));
    }

    GaResult result;
    result.best = pop.front();
    for (const Chromosome& c : pop)
        if (c.fitness < result.best.fitness) result.best = c;
    note_generation(result, pop, n);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> cut_a(0, n);
    std::uniform_int_distribution<int> cut_b(0, n - 1);
    std::uniform_int_distribution<int> position(0, n - 1);

    std::vector<std::size_t> ranking(pop_size);
    while (used < budget_evals) {
        std::iota(ranking.begin(), ranking.end(), std::size_t{0});
        std::stable_sort(ranking.begin(), ranking.end(), [&pop](std::size_t a, std::size_t b) {
            return pop[a].fitness < pop[b].fitness;
        });

        std::vector<Chromosome> next;
        next.reserve(pop_size);
        for (int e = 0; e < params.elitism; ++e)
            next.push_back(pop[ranking[static_cast<std::size_t>(e)]]);

        while (next.size() < pop_size && used < budget_evals) {
            const Chromosome& parent1 = tournament_select(pop, params.tournament_k, rng);
            const Chromosome& parent2 = tournament_select(pop, params.tournament_k, rng);

            Chromosome child{parent1.genes, 0.0};
            if (unit(rng) < params.crossover_rate) {
                int a = cut_a(rng);
                int b = cut_b(rng);
                if (b >= a) ++b;
                child.genes = order_crossover(parent1.genes, parent2.genes, std::min(a, b),
                                              std::max(a, b));
            }
            if (unit(rng) < params.mutation_rate)
                child.genes = swap_mutation(child.genes, position(rng), position(rng));

            child.fitness = eval.evaluate(child.genes);
            ++used;
            if (child.fitness < result.best.fitness) result.best = child;
            next.push_back(std::move(child));
        }

        pop = std::move(next);
        note_generation(result, pop, n);
    }

    result.evaluations = used;
    return result;
}

}  // namespace gm
