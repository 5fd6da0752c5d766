#pragma once

#include <vector>

#include "gm/evaluator.hpp"
#include "gm/machine.hpp"
#include "gm/rng.hpp"
#include "gm/types.hpp"

namespace gm {

// The base permutation and its n-1 cyclic right-rotations. Every gene lands
// in every position exactly once across the rows, so evaluating the rows
// touches all n^2 building blocks with only n evaluations.
std::vector<Permutation> latin_square_rows(const Permutation& base);

// Random base permutation, then its rotations.
std::vector<Permutation> latin_square_chromosomes(int n, Rng& rng);

// Evaluates the n rows, feeds each observation into the machine's fitness
// list, and keeps the best row as the machine's first best chromosome. The
// rows themselves are discarded. Costs exactly n evaluations.
void seed_with_base(GeneMachine& machine, Evaluator& eval, const Permutation& base);
void seed(GeneMachine& machine, Evaluator& eval, Rng& rng);

}  // namespace gm
