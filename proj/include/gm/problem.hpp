#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gm/types.hpp"

namespace gm {

enum class ProblemKind {
    OpenPathTsp,  // fitness = path length without the closing edge
    Assignment,   // fitness = sum of c[gene][position] over all positions
};

std::string_view problem_kind_name(ProblemKind kind);

// Immutable after construction; evaluation is a pure function of (instance, perm).
struct ProblemInstance {
    ProblemKind kind = ProblemKind::OpenPathTsp;
    int n = 0;
    std::vector<double> matrix;  // n*n row-major: d[i][j] or c[gene][position]

    double at(int i, int j) const {
        return matrix[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)];
    }
};

// Validates the matrix invariants for the given kind (TSP: symmetric, zero
// diagonal, non-negative, finite; assignment: non-negative, finite).
ProblemInstance make_instance(ProblemKind kind, int n, std::vector<double> matrix);

double evaluate_open_path_tsp(const ProblemInstance& inst, const Permutation& perm);
double evaluate_assignment(const ProblemInstance& inst, const Permutation& perm);
double evaluate(const ProblemInstance& inst, const Permutation& perm);

// Numeric-grid format: first non-comment line is n, then n rows of n values.
// '#' starts a comment line.
ProblemInstance parse_distance_matrix(std::string_view text);
ProblemInstance parse_assignment_matrix(std::string_view text);

// Minimal TSPLIB subset: DIMENSION, EDGE_WEIGHT_TYPE EUC_2D, NODE_COORD_SECTION.
// Distances are rounded half-up to the nearest integer; the instance is
// evaluated as an open path.
ProblemInstance parse_tsplib_euc2d(std::string_view text);

// Canonical numeric-grid text for an instance; parse(to_matrix_text(inst))
// reproduces inst.
std::string to_matrix_text(const ProblemInstance& inst);

struct Optimum {
    double fitness = 0.0;
    Permutation perm;  // lexicographically smallest among the optima
};

inline constexpr int kBruteForceLimit = 10;

// Exhaustive search over all n! permutations; n <= kBruteForceLimit.
Optimum brute_force_optimum(const ProblemInstance& inst);

}  // namespace gm
