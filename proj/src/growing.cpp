#include "gm/growing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gm {

void validate(const PressureSchedule& sched) {
    if (!std::isfinite(sched.beta0) || !std::isfinite(sched.beta1))
        throw invalid_argument_error("pressure schedule must be finite");
    if (sched.beta0 < 0.0 || sched.beta1 < sched.beta0)
        throw invalid_argument_error("pressure schedule requires 0 <= beta0 <= beta1");
}

double pressure(double elapsed_fraction, const PressureSchedule& sched) {
    validate(sched);
    if (!(elapsed_fraction >= 0.0 && elapsed_fraction <= 1.0))
        throw invalid_argument_error("elapsed fraction " + format_number(elapsed_fraction) +
                                     " outside [0, 1]");
    return sched.beta0 + (sched.beta1 - sched.beta0) * elapsed_fraction;
}

Gene select_gene(const FitnessList& list, Position position, std::span<const Gene> available,
                 double beta, Rng& rng) {
    if (available.empty()) throw invalid_argument_error("select_gene: no candidate genes");
    if (available.size() == 1) return available[0];

    thread_local std::vector<double> fitnesses;
    thread_local std::vector<double> sorted;
    thread_local std::vector<double> cumulative;

    fitnesses.clear();
    for (Gene g : available) fitnesses.push_back(list.fitness(g, position));

    // Dense ranks within the candidate set: ties share a rank. Ranks are
    // normalized by the largest rank a set of this size could attain
    // (count - 1), so ties compress the weight spread instead of
    // stretching the surviving ranks back out to full pressure.
    sorted = fitnesses;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const double max_rank = static_cast<double>(available.size() - 1);

    cumulative.clear();
    double total = 0.0;
    for (double f : fitnesses) {
        const auto rank = std::lower_bound(sorted.begin(), sorted.end(), f) - sorted.begin();
        total += std::exp(-beta * static_cast<double>(rank) / max_rank);
        cumulative.push_back(total);
    }

    const double u = std::uniform_real_distribution<double>(0.0, total)(rng);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t index = std::min(static_cast<std::size_t>(it - cumulative.begin()),
                                       available.size() - 1);
    return available[index];
}

Permutation construct_chromosome(const FitnessList& list, double beta, Rng& rng) {
    if (!list.seeded())
        throw invalid_state_error("cannot construct a chromosome from an unseeded list");

    const int n = list.gene_count();
    Permutation order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    Permutation available(static_cast<std::size_t>(n));
    std::iota(available.begin(), available.end(), 0);

    Permutation perm(static_cast<std::size_t>(n));
    for (Position p : order) {
        const Gene g = select_gene(list, p, available, beta, rng);
        perm[static_cast<std::size_t>(p)] = g;
        available.erase(std::find(available.begin(), available.end(), g));
    }
    return perm;
}

Chromosome grow_step(GeneMachine& machine, Evaluator& eval, double beta, Rng& rng) {
    if (!machine.seeded()) throw invalid_state_error("grow_step requires a seeded machine");
    if (eval.instance().n != machine.gene_count())
        throw incompatible_error("machine has " + std::to_string(machine.gene_count()) +
                                 " genes but the problem has " + std::to_string(eval.instance().n));

    Chromosome chrom{construct_chromosome(machine.list, beta, rng), 0.0};
    chrom.fitness = eval.evaluate(chrom.genes);
    ++machine.evals_used;
    machine.list.record_observation(chrom);
    if (chrom.fitness < machine.best->fitness) machine.best = chrom;
    return chrom;
}

}  // namespace gm
