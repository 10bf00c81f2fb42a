#include "riskset/rand_var.hpp"

#include <cmath>

#include "riskset/errors.hpp"

namespace riskset {

RandVar::RandVar(ProbSpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw DimensionError("RandVar: null space");
  if (values_.size() != space_->size())
    throw DimensionError("RandVar: value count does not match outcome count");
  for (double v : values_)
    if (!std::isfinite(v)) throw DomainError("RandVar: values must be finite");
}

RandVar RandVar::constant(ProbSpacePtr space, double c) {
  std::size_t n = space->size();
  return RandVar(std::move(space), std::vector<double>(n, c));
}

void require_same_space(const RandVar& x, const RandVar& y) {
  if (!same_space(x.space(), y.space()))
    throw DimensionError("random variables live on different spaces");
}

RandVar operator+(const RandVar& x, const RandVar& y) {
  require_same_space(x, y);
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = x[i] + y[i];
  return RandVar(x.space(), std::move(v));
}

RandVar operator-(const RandVar& x, const RandVar& y) {
  require_same_space(x, y);
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = x[i] - y[i];
  return RandVar(x.space(), std::move(v));
}

RandVar operator+(const RandVar& x, double c) {
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = x[i] + c;
  return RandVar(x.space(), std::move(v));
}

RandVar operator-(const RandVar& x, double c) { return x + (-c); }

RandVar operator*(double a, const RandVar& x) {
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * x[i];
  return RandVar(x.space(), std::move(v));
}

double norm_inf(const RandVar& x) {
  double m = 0.0;
  for (double v : x.values()) m = std::max(m, std::abs(v));
  return m;
}

double expectation(const RandVar& x) {
  const auto& p = x.space()->probs();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += p[i] * x[i];
  return s;
}

double covariance(const RandVar& x, const RandVar& y) {
  require_same_space(x, y);
  const double mx = expectation(x), my = expectation(y);
  const auto& p = x.space()->probs();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += p[i] * (x[i] - mx) * (y[i] - my);
  return s;
}

double variance(const RandVar& x) { return covariance(x, x); }

}  // namespace riskset
