#include "gm/seeding.hpp"

namespace gm {

std::vector<Permutation> latin_square_rows(const Permutation& base) {
    const int n = static_cast<int>(base.size());
    if (n < 1) throw invalid_size_error("latin square needs at least 1 gene");
    validate_permutation(base, n, "latin_square_rows");

    std::vector<Permutation> rows(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Permutation& row = rows[static_cast<std::size_t>(k)];
        row.resize(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p)
            row[static_cast<std::size_t>(p)] = base[static_cast<std::size_t>(((p - k) % n + n) % n)];
    }
    return rows;
}

std::vector<Permutation> latin_square_chromosomes(int n, Rng& rng) {
    if (n < 1) throw invalid_size_error("latin square needs at least 1 gene");
    return latin_square_rows(random_permutation(n, rng));
}

void seed_with_base(GeneMachine& machine, Evaluator& eval, const Permutation& base) {
    if (machine.list.size() > 0) throw invalid_state_error("machine is already seeded");
    if (eval.instance().n != machine.gene_count())
        throw incompatible_error("machine has " + std::to_string(machine.gene_count()) +
                                 " genes but the problem has " + std::to_string(eval.instance().n));

    for (Permutation& row : latin_square_rows(base)) {
        Chromosome chrom{std::move(row), 0.0};
        chrom.fitness = eval.evaluate(chrom.genes);
        ++machine.evals_used;
        machine.list.record_observation(chrom);
        if (!machine.best || chrom.fitness < machine.best->fitness)
            machine.best = std::move(chrom);
    }
}

void seed(GeneMachine& machine, Evaluator& eval, Rng& rng) {
    seed_with_base(machine, eval, random_permutation(machine.gene_count(), rng));
}

}  // namespace gm
