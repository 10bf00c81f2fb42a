#include "riskset/comonotone.hpp"

#include <cmath>
#include <numeric>

#include "riskset/errors.hpp"

namespace riskset {

bool is_comonotonic(const RandVar& x, const RandVar& y) {
  require_same_space(x, y);
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((x[i] - x[j]) * (y[i] - y[j]) < 0.0) return false;
  return true;
}

bool is_constant(const RandVar& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] != x[0]) return false;
  return true;
}

RandVar cone_element(const RandVar& x, const RandVar& y,
                     const ConeElementSpec& spec) {
  require_same_space(x, y);
  if (!(spec.gamma >= 0.0 && spec.gamma <= 1.0) || !std::isfinite(spec.gamma))
    throw DomainError("cone_element: gamma must lie in [0, 1]");
  if (!(spec.lambda >= 0.0) || !std::isfinite(spec.lambda))
    throw DomainError("cone_element: lambda must be nonnegative");
  if (!(spec.delta >= 0.0) || !std::isfinite(spec.delta))
    throw DomainError("cone_element: delta must be nonnegative");
  const double a = spec.gamma * spec.lambda;
  const double b = (1.0 - spec.gamma) * spec.delta;
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * x[i] + b * y[i];
  return RandVar(x.space(), std::move(v));
}

ConeElementSpec sample_cone_spec(Rng& rng) {
  ConeElementSpec s{};
  const double g = rng.uniform01();
  if (g < 0.1)
    s.gamma = 0.0;
  else if (g < 0.2)
    s.gamma = 1.0;
  else
    s.gamma = rng.uniform(0.05, 0.95);
  s.lambda = rng.coin(0.1) ? 0.0 : rng.uniform(0.1, 4.0);
  s.delta = rng.coin(0.1) ? 0.0 : rng.uniform(0.1, 4.0);
  return s;
}

RandVar random_var(const ProbSpacePtr& space, Rng& rng, double lo, double hi) {
  std::vector<double> v(space->size());
  for (double& vi : v) vi = rng.uniform(lo, hi);
  return RandVar(space, std::move(v));
}

std::pair<RandVar, RandVar> sample_comonotonic_pair(const ProbSpacePtr& space,
                                                    Rng& rng) {
  const std::size_t n = space->size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.index(i)]);

  // Increment scales vary over roughly [0.3, 5] so conditioned sampling
  // reaches both small and large dispersion regimes.
  const double sx = std::pow(10.0, rng.uniform(-0.5, 0.7));
  const double sy = std::pow(10.0, rng.uniform(-0.5, 0.7));
  double ax = rng.uniform(-4.0, 4.0);
  double ay = rng.uniform(-4.0, 4.0);
  std::vector<double> xs(n), ys(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[perm[k]] = ax;
    ys[perm[k]] = ay;
    if (k + 1 < n) {
      ax += sx * rng.uniform01();
      ay += sy * rng.uniform01();
    }
  }
  return {RandVar(space, std::move(xs)), RandVar(space, std::move(ys))};
}

RandVar lift_factor_one(const ProbSpacePtr& prod,
                        const std::vector<double>& xs, std::size_t n2) {
  if (n2 == 0 || prod->size() != xs.size() * n2)
    throw DimensionError("lift_factor_one: factor sizes do not match product");
  std::vector<double> v(prod->size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < n2; ++j) v[i * n2 + j] = xs[i];
  return RandVar(prod, std::move(v));
}

RandVar lift_factor_two(const ProbSpacePtr& prod,
                        const std::vector<double>& ys, std::size_t n2) {
  if (n2 != ys.size() || prod->size() % n2 != 0)
    throw DimensionError("lift_factor_two: factor sizes do not match product");
  const std::size_t n1 = prod->size() / n2;
  std::vector<double> v(prod->size());
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) v[i * n2 + j] = ys[j];
  return RandVar(prod, std::move(v));
}

IndependentPair sample_independent_pair(const ProbSpacePtr& a,
                                        const ProbSpacePtr& b, Rng& rng) {
  auto prod = ProbSpace::product(a, b);
  std::vector<double> xs(a->size()), ys(b->size());
  for (double& v : xs) v = rng.uniform(-4.0, 4.0);
  for (double& v : ys) v = rng.uniform(-4.0, 4.0);
  return {prod, lift_factor_one(prod, xs, b->size()),
          lift_factor_two(prod, ys, b->size())};
}

PairSampler comonotonic_pair_sampler(ProbSpacePtr space) {
  return [space = std::move(space)](Rng& rng) {
    return sample_comonotonic_pair(space, rng);
  };
}

PairSampler unrestricted_pair_sampler(ProbSpacePtr space) {
  return [space = std::move(space)](Rng& rng) {
    RandVar x = random_var(space, rng);
    RandVar y = random_var(space, rng);
    return std::make_pair(std::move(x), std::move(y));
  };
}

}  // namespace riskset
