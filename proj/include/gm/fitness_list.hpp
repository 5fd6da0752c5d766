#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gm/types.hpp"

namespace gm {

struct FitnessBucket {
    double fitness = 0.0;
    std::vector<BuildingBlock> blocks;  // (gene, position) ascending
};

// The algorithm's entire memory: one fitness slot per (gene, position)
// pair, holding the smallest fitness of any chromosome that block has
// appeared in. Chromosomes themselves are never stored.
//
// Entries only ever decrease (min-update). A list is "seeded" once all
// n^2 slots are filled; selection is meaningful only from that point on.
class FitnessList {
  public:
    explicit FitnessList(int gene_count);

    // Reconstruction from explicit entries (deserialization, tests).
    // Each key may appear at most once; fitness values must be finite.
    static FitnessList from_entries(int gene_count, const std::vector<BuildingBlock>& entries);

    int gene_count() const { return n_; }
    std::size_t size() const { return present_; }
    std::size_t capacity() const { return values_.size(); }
    bool seeded() const { return present_ == values_.size(); }

    bool contains(Gene gene, Position position) const;

    // Stored fitness for a block; not_found_error before the block is first observed.
    double fitness(Gene gene, Position position) const;

    // Min-update every block of the chromosome with its fitness; fills
    // empty slots during seeding.
    void record_observation(const Chromosome& chrom);

    // Elementwise min with src; src is left untouched.
    void merge_from(const FitnessList& src);

    // Buckets in strictly ascending fitness order; blocks within a bucket
    // iterate in (gene, position) order. Partitions all present entries.
    std::vector<FitnessBucket> ordered_buckets() const;

    friend bool operator==(const FitnessList& a, const FitnessList& b);

  private:
    std::size_t slot(Gene gene, Position position) const {
        return static_cast<std::size_t>(gene) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(position);
    }
    void check_key(Gene gene, Position position) const;

    int n_ = 0;
    std::size_t present_ = 0;
    std::vector<double> values_;  // NaN marks a slot not observed yet
};

// Canonical serialized form: {"n": N, "entries": [[gene, position, fitness], ...]}
// with entries sorted by (gene, position). Round-trips bit-exactly.
std::string fitness_list_to_json(const FitnessList& list);
FitnessList fitness_list_from_json(std::string_view text);

}  // namespace gm
