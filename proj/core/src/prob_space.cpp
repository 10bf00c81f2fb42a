#include "riskset/prob_space.hpp"

#include <algorithm>
#include <cmath>

#include "riskset/errors.hpp"

namespace riskset {

namespace {
constexpr double kSumTol = 1e-12;
}

ProbSpace::ProbSpace(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw DimensionError("ProbSpace: need at least one outcome");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p > 0.0) || !std::isfinite(p))
      throw DomainError("ProbSpace: weights must be strictly positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTol)
    throw DomainError("ProbSpace: weights must sum to 1 within 1e-12");
}

ProbSpacePtr ProbSpace::make(std::vector<double> probs) {
  return std::make_shared<const ProbSpace>(std::move(probs));
}

ProbSpacePtr ProbSpace::uniform(std::size_t n) {
  if (n == 0) throw DimensionError("ProbSpace::uniform: n must be positive");
  return make(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbSpacePtr ProbSpace::product(const ProbSpacePtr& a, const ProbSpacePtr& b) {
  std::vector<double> probs;
  probs.reserve(a->size() * b->size());
  for (double pa : a->probs())
    for (double pb : b->probs()) probs.push_back(pa * pb);
  return make(std::move(probs));
}

double ProbSpace::min_prob() const {
  return *std::min_element(probs_.begin(), probs_.end());
}

bool same_space(const ProbSpace& a, const ProbSpace& b) {
  if (&a == &b) return true;
  if (a.size() != b.size()) return false;
  return std::equal(a.probs().begin(), a.probs().end(), b.probs().begin());
}

bool same_space(const ProbSpacePtr& a, const ProbSpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_space(*a, *b);
}

}  // namespace riskset
