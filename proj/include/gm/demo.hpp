#pragma once

#include <iosfwd>

#include "gm/fitness_list.hpp"
#include "gm/problem.hpp"

namespace gm {

// The built-in 4-city open-path instance the demos and several tests run
// on: cities on a line at unit spacing, d(i, j) = |i - j|.
ProblemInstance demo_instance();

// The base permutation (A C D B) whose rotations the demos seed with.
Permutation demo_forced_base();

// Bucket table in demo notation, one line per fitness value, blocks as
// letter + 1-based position ("A2").
void print_block_table(std::ostream& out, const FitnessList& list);

// Walks through seeding on the demo instance: the four chromosomes, their
// fitness values, and the resulting block table.
void run_seeding_demo(std::ostream& out);

// Seeding walkthrough plus one observation of A B C D, printing both block
// tables and checking them against the expected frozen tables. Returns
// false (after printing the differences) on any mismatch.
bool run_reference_demo(std::ostream& out);

}  // namespace gm
