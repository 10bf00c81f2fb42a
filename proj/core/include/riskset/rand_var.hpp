#pragma once

#include <span>
#include <vector>

#include "riskset/prob_space.hpp"

namespace riskset {

/// A real payoff per outcome, bound to its probability space.
/// Immutable after construction; all arithmetic returns fresh values.
class RandVar {
 public:
  RandVar(ProbSpacePtr space, std::vector<double> values);

  static RandVar constant(ProbSpacePtr space, double c);

  std::size_t size() const { return values_.size(); }
  const ProbSpacePtr& space() const { return space_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  ProbSpacePtr space_;
  std::vector<double> values_;
};

/// Throws DimensionError unless both variables live on the same space.
void require_same_space(const RandVar& x, const RandVar& y);

RandVar operator+(const RandVar& x, const RandVar& y);
RandVar operator-(const RandVar& x, const RandVar& y);
RandVar operator+(const RandVar& x, double c);
RandVar operator-(const RandVar& x, double c);
RandVar operator*(double a, const RandVar& x);

double norm_inf(const RandVar& x);

double expectation(const RandVar& x);
double covariance(const RandVar& x, const RandVar& y);
double variance(const RandVar& x);

}  // namespace riskset
