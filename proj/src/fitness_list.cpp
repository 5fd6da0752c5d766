#include "gm/fitness_list.hpp"

#include <cmath>
#include <limits>
#include <map>

#include <json.hpp>

namespace gm {

namespace {
constexpr double kAbsent = std::numeric_limits<double>::quiet_NaN();
}

FitnessList::FitnessList(int gene_count) : n_(gene_count) {
    if (gene_count < 1) throw invalid_size_error("fitness list needs at least 1 gene");
    values_.assign(static_cast<std::size_t>(gene_count) * static_cast<std::size_t>(gene_count),
                   kAbsent);
}

FitnessList FitnessList::from_entries(int gene_count, const std::vector<BuildingBlock>& entries) {
    FitnessList list(gene_count);
    for (const BuildingBlock& block : entries) {
        list.check_key(block.gene, block.position);
        if (!std::isfinite(block.fitness))
            throw invalid_argument_error("entry (" + std::to_string(block.gene) + "," +
                                         std::to_string(block.position) +
                                         ") has a non-finite fitness");
        double& v = list.values_[list.slot(block.gene, block.position)];
        if (!std::isnan(v))
            throw invalid_argument_error("duplicate entry (" + std::to_string(block.gene) + "," +
                                         std::to_string(block.position) + ")");
        v = block.fitness;
        ++list.present_;
    }
    return list;
}

void FitnessList::check_key(Gene gene, Position position) const {
    if (gene < 0 || gene >= n_ || position < 0 || position >= n_)
        throw invalid_argument_error("building block (" + std::to_string(gene) + "," +
                                     std::to_string(position) + ") outside a " +
                                     std::to_string(n_) + "-gene list");
}

bool FitnessList::contains(Gene gene, Position position) const {
    check_key(gene, position);
    return !std::isnan(values_[slot(gene, position)]);
}

double FitnessList::fitness(Gene gene, Position position) const {
    check_key(gene, position);
    const double v = values_[slot(gene, position)];
    if (std::isnan(v))
        throw not_found_error("building block (" + std::to_string(gene) + "," +
                              std::to_string(position) + ") has not been observed");
    return v;
}

void FitnessList::record_observation(const Chromosome& chrom) {
    validate_permutation(chrom.genes, n_, "record_observation");
    if (!std::isfinite(chrom.fitness))
        throw invalid_chromosome_error("record_observation: fitness is not finite");

    for (Position p = 0; p < n_; ++p) {
        double& v = values_[slot(chrom.genes[static_cast<std::size_t>(p)], p)];
        if (std::isnan(v)) {
            v = chrom.fitness;
            ++present_;
        } else if (chrom.fitness < v) {
            v = chrom.fitness;
        }
    }
}

void FitnessList::merge_from(const FitnessList& src) {
    if (src.n_ != n_)
        throw incompatible_error("cannot merge a " + std::to_string(src.n_) +
                                 "-gene list into a " + std::to_string(n_) + "-gene list");
    if (!seeded() || !src.seeded())
        throw invalid_state_error("merge requires both lists to be fully seeded");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (src.values_[i] < values_[i]) values_[i] = src.values_[i];
}

std::vector<FitnessBucket> FitnessList::ordered_buckets() const {
    std::map<double, std::vector<BuildingBlock>> groups;
    for (Gene g = 0; g < n_; ++g) {
        for (Position p = 0; p < n_; ++p) {
            const double v = values_[slot(g, p)];
            if (!std::isnan(v)) groups[v].push_back({g, p, v});
        }
    }
    std::vector<FitnessBucket> buckets;
    buckets.reserve(groups.size());
    for (auto& [fitness, blocks] : groups) buckets.push_back({fitness, std::move(blocks)});
    return buckets;
}

bool operator==(const FitnessList& a, const FitnessList& b) {
    if (a.n_ != b.n_ || a.present_ != b.present_) return false;
    for (std::size_t i = 0; i < a.values_.size(); ++i) {
        const bool absent_a = std::isnan(a.values_[i]);
        const bool absent_b = std::isnan(b.values_[i]);
        if (absent_a != absent_b) return false;
        if (!absent_a && a.values_[i] != b.values_[i]) return false;
    }
    return true;
}

std::string fitness_list_to_json(const FitnessList& list) {
    nlohmann::json entries = nlohmann::json::array();
    const int n = list.gene_count();
    for (Gene g = 0; g < n; ++g)
        for (Position p = 0; p < n; ++p)
            if (list.contains(g, p)) entries.push_back({g, p, list.fitness(g, p)});
    return nlohmann::json{{"n", n}, {"entries", std::move(entries)}}.dump();
}

FitnessList fitness_list_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(1, std::string("invalid fitness list JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
        throw parse_error(1, "fitness list JSON needs 'n' and 'entries'");

    int n = 0;
    std::vector<BuildingBlock> entries;
    try {
        n = doc["n"].get<int>();
        for (const auto& entry : doc["entries"]) {
            if (!entry.is_array() || entry.size() != 3)
                throw parse_error(1, "each entry must be [gene, position, fitness]");
            entries.push_back(
                {entry[0].get<Gene>(), entry[1].get<Position>(), entry[2].get<double>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(1, std::string("invalid fitness list JSON: ") + e.what());
    }
    try {
        return FitnessList::from_entries(n, entries);
    } catch (const error& e) {
        throw parse_error(1, e.what());
    }
}

}  // namespace gm
