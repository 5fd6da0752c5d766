#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "gm/problem.hpp"
#include "gm/types.hpp"

namespace gm {

struct TracePoint {
    std::uint64_t evaluations = 0;
    double best_fitness = 0.0;
};

// Counting wrapper around an instance: every fitness evaluation in the
// library flows through one of these, which is what makes evaluation
// budgets exact and traces cheap. Owns its copy of the instance. Not safe
// for concurrent use.
class Evaluator {
  public:
    explicit Evaluator(ProblemInstance inst, std::uint64_t trace_stride = 0)
        : inst_(std::move(inst)), stride_(trace_stride) {}

    double evaluate(const Permutation& perm) {
        const double f = gm::evaluate(inst_, perm);
        ++count_;
        if (f < best_) best_ = f;
        if (stride_ > 0 && count_ % stride_ == 0) trace_.push_back({count_, best_});
        return f;
    }

    const ProblemInstance& instance() const { return inst_; }
    std::uint64_t count() const { return count_; }
    double best_seen() const { return best_; }
    const std::vector<TracePoint>& trace() const { return trace_; }

    // Appends the final running best so traces always end at the last evaluation.
    void close_trace() {
        if (stride_ > 0 && count_ > 0 && (trace_.empty() || trace_.back().evaluations != count_))
            trace_.push_back({count_, best_});
    }

  private:
    ProblemInstance inst_;
    std::uint64_t stride_;
    std::uint64_t count_ = 0;
    double best_ = std::numeric_limits<double>::infinity();
    std::vector<TracePoint> trace_;
};

}  // namespace gm
