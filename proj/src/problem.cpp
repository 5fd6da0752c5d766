#include "gm/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace gm {

namespace {

void check_kind(const ProblemInstance& inst, ProblemKind expected, const char* what) {
    if (inst.kind != expected)
        throw invalid_argument_error(std::string(what) + ": instance kind is " +
                                     std::string(problem_kind_name(inst.kind)));
}

struct Line {
    int number = 0;  // 1-based
    std::string_view text;
};

// Non-comment, non-blank lines with their original line numbers.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++number;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;
        const std::size_t last = line.find_last_not_of(" \t\r");
        lines.push_back({number, line.substr(first, last - first + 1)});
    }
    return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        std::size_t end = pos;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
        if (end > pos) tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

double parse_double(std::string_view token, int line, int column) {
    double value = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw parse_error(line, "column " + std::to_string(column) + ": '" + std::string(token) +
                                    "' is not a number");
    return value;
}

long parse_long(std::string_view token, int line, int column) {
    long value = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw parse_error(line, "column " + std::to_string(column) + ": '" + std::string(token) +
                                    "' is not an integer");
    return value;
}

// Shared grid reader for both matrix formats.
ProblemInstance parse_matrix_grid(std::string_view text, ProblemKind kind) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw parse_error(1, "empty input, expected a size line");

    const auto header = split_tokens(lines[0].text);
    if (header.size() != 1)
        throw parse_error(lines[0].number, "expected a single size value, got " +
                                               std::to_string(header.size()) + " tokens");
    const long n_long = parse_long(header[0], lines[0].number, 1);
    if (n_long < 1) throw parse_error(lines[0].number, "size must be at least 1");
    const int n = static_cast<int>(n_long);

    if (static_cast<int>(lines.size()) - 1 != n)
        throw parse_error(lines.back().number, "expected " + std::to_string(n) + " matrix rows, got " +
                                                   std::to_string(lines.size() - 1));

    std::vector<double> matrix(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Line& row = lines[static_cast<std::size_t>(i) + 1];
        const auto tokens = split_tokens(row.text);
        if (static_cast<int>(tokens.size()) != n)
            throw parse_error(row.number, "expected " + std::to_string(n) + " values, got " +
                                              std::to_string(tokens.size()));
        for (int j = 0; j < n; ++j)
            matrix[static_cast<std::size_t>(i) * n + j] = parse_double(tokens[j], row.number, j + 1);
    }

    try {
        return make_instance(kind, n, std::move(matrix));
    } catch (const error& e) {
        throw parse_error(lines[0].number, e.what());
    }
}

}  // namespace

std::string_view problem_kind_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::OpenPathTsp: return "open-path-tsp";
        case ProblemKind::Assignment: return "assignment";
    }
    return "unknown";
}

ProblemInstance make_instance(ProblemKind kind, int n, std::vector<double> matrix) {
    if (n < 1) throw invalid_size_error("instance needs at least 1 gene");
    if (matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw invalid_size_error("matrix must hold n*n values");

    ProblemInstance inst{kind, n, std::move(matrix)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = inst.at(i, j);
            if (!std::isfinite(v))
                throw invalid_argument_error("matrix entry (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") is not finite");
            if (v < 0.0)
                throw invalid_argument_error("matrix entry (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") is negative");
        }
    }
    if (kind == ProblemKind::OpenPathTsp) {
        for (int i = 0; i < n; ++i) {
            if (inst.at(i, i) != 0.0)
                throw invalid_argument_error("diagonal entry (" + std::to_string(i) + "," +
                                             std::to_string(i) + ") must be zero");
            for (int j = i + 1; j < n; ++j) {
                if (inst.at(i, j) != inst.at(j, i))
                    throw invalid_argument_error("asymmetric distances at (" + std::to_string(i) +
                                                 "," + std::to_string(j) + ")");
            }
        }
    }
    return inst;
}

double evaluate_open_path_tsp(const ProblemInstance& inst, const Permutation& perm) {
    check_kind(inst, ProblemKind::OpenPathTsp, "evaluate_open_path_tsp");
    validate_permutation(perm, inst.n, "evaluate_open_path_tsp");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) total += inst.at(perm[i], perm[i + 1]);
    return total;
}

double evaluate_assignment(const ProblemInstance& inst, const Permutation& perm) {
    check_kind(inst, ProblemKind::Assignment, "evaluate_assignment");
    validate_permutation(perm, inst.n, "evaluate_assignment");
    double total = 0.0;
    for (std::size_t p = 0; p < perm.size(); ++p) total += inst.at(perm[p], static_cast<int>(p));
    return total;
}

double evaluate(const ProblemInstance& inst, const Permutation& perm) {
    return inst.kind == ProblemKind::OpenPathTsp ? evaluate_open_path_tsp(inst, perm)
                                                 : evaluate_assignment(inst, perm);
}

ProblemInstance parse_distance_matrix(std::string_view text) {
    return parse_matrix_grid(text, ProblemKind::OpenPathTsp);
}

ProblemInstance parse_assignment_matrix(std::string_view text) {
    return parse_matrix_grid(text, ProblemKind::Assignment);
}

ProblemInstance parse_tsplib_euc2d(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);

    int n = -1;
    bool weight_type_seen = false;
    std::size_t coord_start = lines.size();

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.text == "NODE_COORD_SECTION") {
            coord_start = i + 1;
            break;
        }
        if (line.text == "EOF") break;

        const std::size_t colon = line.text.find(':');
        std::string_view key = colon == std::string_view::npos ? line.text : line.text.substr(0, colon);
        std::string_view value = colon == std::string_view::npos
                                     ? std::string_view{}
                                     : line.text.substr(colon + 1);
        const auto trim = [](std::string_view s) {
            const std::size_t a = s.find_first_not_of(" \t");
            if (a == std::string_view::npos) return std::string_view{};
            const std::size_t b = s.find_last_not_of(" \t");
            return s.substr(a, b - a + 1);
        };
        key = trim(key);
        value = trim(value);

        if (key == "DIMENSION") {
            n = static_cast<int>(parse_long(value, line.number, 2));
            if (n < 1) throw parse_error(line.number, "DIMENSION must be at least 1");
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value != "EUC_2D")
                throw parse_error(line.number,
                                  "unsupported EDGE_WEIGHT_TYPE '" + std::string(value) + "'");
            weight_type_seen = true;
        }
        // NAME, TYPE, COMMENT and other keys are ignored.
    }

    if (n < 0) throw parse_error(1, "missing DIMENSION");
    if (!weight_type_seen) throw parse_error(1, "missing EDGE_WEIGHT_TYPE: EUC_2D");
    if (coord_start >= lines.size()) throw parse_error(1, "missing NODE_COORD_SECTION");

    std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int read = 0;
    for (std::size_t i = coord_start; i < lines.size() && read < n; ++i, ++read) {
        const Line& line = lines[i];
        if (line.text == "EOF") break;
        const auto tokens = split_tokens(line.text);
        if (tokens.size() != 3)
            throw parse_error(line.number, "expected 'index x y', got " +
                                               std::to_string(tokens.size()) + " tokens");
        const long index = parse_long(tokens[0], line.number, 1);
        if (index < 1 || index > n)
            throw parse_error(line.number, "node index " + std::to_string(index) +
                                               " outside 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(index - 1)])
            throw parse_error(line.number, "duplicate node index " + std::to_string(index));
        seen[static_cast<std::size_t>(index - 1)] = true;
        xs[static_cast<std::size_t>(index - 1)] = parse_double(tokens[1], line.number, 2);
        ys[static_cast<std::size_t>(index - 1)] = parse_double(tokens[2], line.number, 3);
    }
    if (read != n)
        throw parse_error(lines.back().number,
                          "expected " + std::to_string(n) + " coordinate lines, got " +
                              std::to_string(read));

    std::vector<double> matrix(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
            const double dy = ys[static_cast<std::size_t>(i)] - ys[static_cast<std::size_t>(j)];
            const double d = std::floor(std::sqrt(dx * dx + dy * dy) + 0.5);  // TSPLIB nint
            matrix[static_cast<std::size_t>(i) * n + j] = d;
            matrix[static_cast<std::size_t>(j) * n + i] = d;
        }
    }
    return make_instance(ProblemKind::OpenPathTsp, n, std::move(matrix));
}

std::string to_matrix_text(const ProblemInstance& inst) {
    std::string out = std::to_string(inst.n);
    out += '\n';
    for (int i = 0; i < inst.n; ++i) {
        for (int j = 0; j < inst.n; ++j) {
            if (j > 0) out += ' ';
            out += format_number(inst.at(i, j));
        }
        out += '\n';
    }
    return out;
}

Optimum brute_force_optimum(const ProblemInstance& inst) {
    if (inst.n > kBruteForceLimit)
        throw invalid_argument_error("brute force is limited to n <= " +
                                     std::to_string(kBruteForceLimit) + ", got n = " +
                                     std::to_string(inst.n));
    Permutation perm(static_cast<std::size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) perm[static_cast<std::size_t>(i)] = i;

    // next_permutation walks lexicographic order, so keeping strict
    // improvements only yields the lexicographically smallest optimum.
    Optimum best{evaluate(inst, perm), perm};
    while (std::next_permutation(perm.begin(), perm.end())) {
        const double f = evaluate(inst, perm);
        if (f < best.fitness) best = {f, perm};
    }
    return best;
}

}  // namespace gm
