#pragma once

#include <cstdint>
#include <optional>

#include "gm/fitness_list.hpp"
#include "gm/types.hpp"

namespace gm {

// One machine = one fitness list plus the single best chromosome seen so
// far. No population: everything else the machine ever evaluated lives on
// only as block fitness values.
struct GeneMachine {
    explicit GeneMachine(int gene_count) : list(gene_count) {}

    // Reconstruct from parts (deserialized lists, test fixtures). The best
    // chromosome must be present iff the list is seeded.
    GeneMachine(FitnessList existing, std::optional<Chromosome> best_so_far)
        : list(std::move(existing)), best(std::move(best_so_far)) {
        if (best.has_value() != list.seeded())
            throw invalid_state_error("best chromosome must be present exactly when seeded");
        if (best) validate_permutation(best->genes, list.gene_count(), "GeneMachine");
    }

    int gene_count() const { return list.gene_count(); }
    bool seeded() const { return list.seeded(); }

    FitnessList list;
    std::optional<Chromosome> best;
    std::uint64_t evals_used = 0;
};

// The retained best solution; invalid_state_error on an unseeded machine.
const Chromosome& best_chromosome(const GeneMachine& machine);

struct Budget {
    enum class Kind { Evaluations, WallClock };

    static Budget evaluations(std::uint64_t count) { return make(Kind::Evaluations, count); }
    static Budget wall_clock_ms(std::uint64_t millis) { return make(Kind::WallClock, millis); }

    Kind kind = Kind::Evaluations;
    std::uint64_t limit = 0;  // evaluations, or milliseconds

  private:
    static Budget make(Kind kind, std::uint64_t limit) {
        if (limit == 0) throw budget_error("budget limit must be positive");
        return Budget{kind, limit};
    }
};

}  // namespace gm
