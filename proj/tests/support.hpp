#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gm/fitness_list.hpp"
#include "gm/problem.hpp"
#include "gm/rng.hpp"
#include "gm/types.hpp"

namespace gmtest {

// (fitness, block labels) per bucket, canonical order: fitness ascending,
// labels by (gene, position) ascending.
using LabeledTable = std::vector<std::pair<double, std::vector<std::string>>>;

// Expected table for the built-in 4-city instance after seeding from base
// A C D B.
inline LabeledTable seeded_table() {
    return {{4.0, {"A2", "A4", "B1", "B3", "C1", "C3", "D2", "D4"}},
            {5.0, {"A1", "A3", "B2", "B4", "C2", "C4", "D1", "D3"}}};
}

// Expected table after additionally observing A B C D (fitness 3).
inline LabeledTable observed_table() {
    return {{3.0, {"A1", "B2", "C3", "D4"}},
            {4.0, {"A2", "A4", "B1", "B3", "C1", "D2"}},
            {5.0, {"A3", "B4", "C2", "C4", "D1", "D3"}}};
}

inline LabeledTable table_of(const gm::FitnessList& list) {
    LabeledTable table;
    for (const gm::FitnessBucket& bucket : list.ordered_buckets()) {
        std::vector<std::string> labels;
        labels.reserve(bucket.blocks.size());
        for (const gm::BuildingBlock& block : bucket.blocks)
            labels.push_back(gm::block_label(block.gene, block.position, list.gene_count()));
        table.emplace_back(bucket.fitness, std::move(labels));
    }
    return table;
}

// Symmetric integer distances in [1, 99], zero diagonal.
inline gm::ProblemInstance make_random_tsp(int n, gm::Rng& rng) {
    std::uniform_int_distribution<int> dist(1, 99);
    std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto d = static_cast<double>(dist(rng));
            m[static_cast<std::size_t>(i) * n + j] = d;
            m[static_cast<std::size_t>(j) * n + i] = d;
        }
    return gm::make_instance(gm::ProblemKind::OpenPathTsp, n, std::move(m));
}

// Integer costs uniform in [0, 99].
inline gm::ProblemInstance make_random_assignment(int n, gm::Rng& rng) {
    std::uniform_int_distribution<int> dist(0, 99);
    std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (double& v : m) v = static_cast<double>(dist(rng));
    return gm::make_instance(gm::ProblemKind::Assignment, n, std::move(m));
}

// |hits - trials*p| <= 3 * sqrt(trials*p*(1-p)), with a tiny slack so
// degenerate p in {0, 1} stays exact.
inline bool binomial_within_3sigma(std::uint64_t hits, std::uint64_t trials, double p) {
    const double mean = static_cast<double>(trials) * p;
    const double sigma = std::sqrt(static_cast<double>(trials) * p * (1.0 - p));
    return std::abs(static_cast<double>(hits) - mean) <= 3.0 * sigma + 1e-9;
}

// The selection weight definition, restated independently of the library:
// dense rank by ascending fitness within the candidate set, normalized by
// the candidate count minus one (the largest rank such a set could
// attain), weight exp(-beta * normalized rank). Ties share a rank and
// thereby soften the spread.
inline std::vector<double> selection_weights(const std::vector<double>& fitnesses, double beta) {
    std::vector<double> distinct = fitnesses;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto max_rank = static_cast<double>(fitnesses.size() - 1);

    std::vector<double> weights;
    weights.reserve(fitnesses.size());
    for (double f : fitnesses) {
        const auto rank = static_cast<double>(
            std::lower_bound(distinct.begin(), distinct.end(), f) - distinct.begin());
        weights.push_back(std::exp(-beta * (max_rank == 0.0 ? 0.0 : rank / max_rank)));
    }
    return weights;
}

// Exact probability that one construction from `list` at pressure beta
// produces `target`: average over all n! position visit orders of the
// per-step selection probabilities. Feasible for small n only.
inline double exact_construct_probability(const gm::FitnessList& list,
                                          const gm::Permutation& target, double beta) {
    const int n = list.gene_count();
    std::vector<gm::Position> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    double sum = 0.0;
    double orders = 0.0;
    do {
        double p = 1.0;
        std::vector<gm::Gene> available(static_cast<std::size_t>(n));
        std::iota(available.begin(), available.end(), 0);
        for (gm::Position pos : order) {
            std::vector<double> fitnesses;
            fitnesses.reserve(available.size());
            for (gm::Gene g : available) fitnesses.push_back(list.fitness(g, pos));
            const std::vector<double> weights = selection_weights(fitnesses, beta);
            const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
            const auto it = std::find(available.begin(), available.end(),
                                      target[static_cast<std::size_t>(pos)]);
            const auto index = static_cast<std::size_t>(it - available.begin());
            p *= weights[index] / total;
            available.erase(it);
        }
        sum += p;
        orders += 1.0;
    } while (std::next_permutation(order.begin(), order.end()));
    return sum / orders;
}

// Reference for list contents: replays observations keeping the min per
// (gene, position) key.
struct ReplayOracle {
    std::map<std::pair<gm::Gene, gm::Position>, double> entries;

    void observe(const gm::Chromosome& chrom) {
        for (std::size_t p = 0; p < chrom.genes.size(); ++p) {
            const auto key = std::make_pair(chrom.genes[p], static_cast<gm::Position>(p));
            const auto [it, inserted] = entries.emplace(key, chrom.fitness);
            if (!inserted) it->second = std::min(it->second, chrom.fitness);
        }
    }

    bool matches(const gm::FitnessList& list) const {
        if (entries.size() != list.size()) return false;
        for (const auto& [key, fitness] : entries)
            if (list.fitness(key.first, key.second) != fitness) return false;
        return true;
    }
};

// Fully populated list with integer fitness values in [0, 9]; the small
// range forces plenty of ties.
inline gm::FitnessList random_full_list(int n, gm::Rng& rng) {
    std::uniform_int_distribution<int> dist(0, 9);
    std::vector<gm::BuildingBlock> entries;
    entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (gm::Gene g = 0; g < n; ++g)
        for (gm::Position p = 0; p < n; ++p)
            entries.push_back({g, p, static_cast<double>(dist(rng))});
    return gm::FitnessList::from_entries(n, entries);
}

// Flat (gene, position)-ascending fitness values of a seeded list.
inline std::vector<double> list_values(const gm::FitnessList& list) {
    std::vector<double> values;
    const int n = list.gene_count();
    values.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (gm::Gene g = 0; g < n; ++g)
        for (gm::Position p = 0; p < n; ++p) values.push_back(list.fitness(g, p));
    return values;
}

}  // namespace gmtest
