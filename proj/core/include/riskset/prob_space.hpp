#pragma once

#include <memory>
#include <span>
#include <vector>

namespace riskset {

class ProbSpace;
using ProbSpacePtr = std::shared_ptr<const ProbSpace>;

/// Finite outcome space with strictly positive weights summing to one.
/// Immutable after construction.
class ProbSpace {
 public:
  explicit ProbSpace(std::vector<double> probs);

  static ProbSpacePtr make(std::vector<double> probs);
  static ProbSpacePtr uniform(std::size_t n);
  /// Product space; outcome (i, j) maps to flat index i * b->size() + j.
  static ProbSpacePtr product(const ProbSpacePtr& a, const ProbSpacePtr& b);

  std::size_t size() const { return probs_.size(); }
  std::span<const double> probs() const { return probs_; }
  double prob(std::size_t i) const { return probs_[i]; }
  double min_prob() const;

 private:
  std::vector<double> probs_;
};

/// Spaces are interchangeable when their weight vectors are identical.
bool same_space(const ProbSpace& a, const ProbSpace& b);
bool same_space(const ProbSpacePtr& a, const ProbSpacePtr& b);

}  // namespace riskset
