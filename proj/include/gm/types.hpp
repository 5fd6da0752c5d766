#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gm {

inline constexpr std::string_view kVersion = "0.1.0";

// Genes and positions are 0-based indices in [0, n). The letter notation
// used by the demos (A1 = gene A in position 1) is 1-based and exists only
// in printed output.
using Gene = std::int32_t;
using Position = std::int32_t;
using Permutation = std::vector<Gene>;

// Inverse fitness everywhere: smaller is better.
struct Chromosome {
    Permutation genes;
    double fitness = 0.0;
};

struct BuildingBlock {
    Gene gene = 0;
    Position position = 0;
    double fitness = 0.0;
};

class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class invalid_size_error : public error {
  public:
    using error::error;
};

class invalid_state_error : public error {
  public:
    using error::error;
};

class invalid_chromosome_error : public error {
  public:
    using error::error;
};

class invalid_argument_error : public error {
  public:
    using error::error;
};

class not_found_error : public error {
  public:
    using error::error;
};

class incompatible_error : public error {
  public:
    using error::error;
};

class budget_error : public error {
  public:
    using error::error;
};

class parse_error : public error {
  public:
    parse_error(int line, std::string message)
        : error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

  private:
    int line_ = 0;
};

inline bool is_permutation(const Permutation& perm, int n) {
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Gene g : perm) {
        if (g < 0 || g >= n || seen[static_cast<std::size_t>(g)]) return false;
        seen[static_cast<std::size_t>(g)] = true;
    }
    return true;
}

inline void validate_permutation(const Permutation& perm, int n, const char* what) {
    if (!is_permutation(perm, n))
        throw invalid_chromosome_error(std::string(what) + ": not a permutation of " +
                                       std::to_string(n) + " genes");
}

// Shortest round-trip decimal form ("3", "4.5"); keeps all printed numbers
// deterministic without locale involvement.
inline std::string format_number(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

// Genes print as letters while the alphabet lasts, indices afterwards.
inline std::string gene_label(Gene g, int n) {
    if (n <= 26) return std::string(1, static_cast<char>('A' + g));
    return std::to_string(g);
}

// Block label in demo notation: gene letter plus 1-based position.
inline std::string block_label(Gene g, Position p, int n) {
    return gene_label(g, n) + std::to_string(p + 1);
}

inline std::string permutation_label(const Permutation& perm) {
    std::string out;
    const int n = static_cast<int>(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i > 0) out += ' ';
        out += gene_label(perm[i], n);
    }
    return out;
}

}  // namespace gm
