#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riskset/comonotone.hpp"
#include "riskset/errors.hpp"
#include "riskset/measures.hpp"

using namespace riskset;

namespace {

RandVar rv(const ProbSpacePtr& s, std::vector<double> v) {
  return RandVar(s, std::move(v));
}

// Independent oracle for expected shortfall: integrate the lower-quantile
// staircase over (0, alpha] directly from the sorted atoms.
double es_by_quantile_integral(const RandVar& x, double alpha) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
  const auto& p = x.space()->probs();
  double used = 0.0, integral = 0.0;
  for (std::size_t k = 0; k < n && used < alpha; ++k) {
    const double take = std::min(p[order[k]], alpha - used);
    integral += take * x[order[k]];
    used += take;
  }
  return -integral / alpha;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(MeasureSpec::es(0.0), DomainError);
  CHECK_THROWS_AS(MeasureSpec::es(1.0), DomainError);
  CHECK_THROWS_AS(MeasureSpec::var(-0.1), DomainError);
  CHECK_THROWS_AS(MeasureSpec::entropic(0.0), DomainError);
}

TEST_CASE("designed values") {
  auto s4 = ProbSpace::uniform(4);
  RandVar x = rv(s4, {-4, -2, 0, 2});
  CHECK(evaluate(MeasureSpec::es(0.5), x) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(evaluate(MeasureSpec::var(0.25), x) == doctest::Approx(4.0));
  auto s2 = ProbSpace::uniform(2);
  CHECK(evaluate(MeasureSpec::sd(), rv(s2, {-1, 1})) == doctest::Approx(1.0));
  const double expected = std::log((1.0 + std::exp(-1.0)) / 2.0);
  CHECK(evaluate(MeasureSpec::entropic(1.0), rv(s2, {0, 1})) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("expected shortfall matches the quantile-integral oracle") {
  Rng root(21);
  for (std::size_t t = 0; t < 400; ++t) {
    Rng r = root.child(t);
    const std::size_t n = 2 + r.index(7);
    auto s = ProbSpace::uniform(n);
    RandVar x = random_var(s, r);
    for (double alpha : {0.05, 0.1, 0.25, 0.3, 0.5, 0.9}) {
      CHECK(expected_shortfall(x, alpha) ==
            doctest::Approx(es_by_quantile_integral(x, alpha)).epsilon(1e-10));
    }
  }
}

TEST_CASE("lower quantile convention on ties and atoms") {
  auto s4 = ProbSpace::uniform(4);
  RandVar x = rv(s4, {0, 0, 1, 2});
  CHECK(lower_quantile(x, 0.5) == 0.0);   // P(X <= 0) = 0.5 >= 0.5
  CHECK(lower_quantile(x, 0.51) == 1.0);
  CHECK(lower_quantile(x, 0.25) == 0.0);
}

TEST_CASE("risk axioms hold on randomized inputs") {
  Rng root(22);
  const std::vector<MeasureSpec> risk_kinds = {
      MeasureSpec::neg_expectation(), MeasureSpec::var(0.3),
      MeasureSpec::es(0.25), MeasureSpec::entropic(1.0)};
  for (std::size_t t = 0; t < 200; ++t) {
    Rng r = root.child(t);
    auto s = ProbSpace::uniform(2 + r.index(5));
    RandVar x = random_var(s, r);
    const double c = r.uniform(-5.0, 5.0);
    for (const auto& spec : risk_kinds) {
      // cash invariance
      CHECK(evaluate(spec, x + c) ==
            doctest::Approx(evaluate(spec, x) - c).epsilon(1e-11));
      // monotonicity under a nonnegative bump
      std::vector<double> bump(s->size());
      for (auto& b : bump) b = r.uniform(0.0, 3.0);
      CHECK(evaluate(spec, x + RandVar(s, bump)) <=
            evaluate(spec, x) + 1e-12);
      // normalization
      CHECK(std::abs(evaluate(spec, RandVar::constant(s, 0.0))) <= 1e-12);
    }
    for (const auto& spec : {MeasureSpec::sd(), MeasureSpec::mad()}) {
      CHECK(evaluate(spec, x + c) ==
            doctest::Approx(evaluate(spec, x)).epsilon(1e-11));
      const double lam = r.uniform(0.0, 4.0);
      CHECK(evaluate(spec, lam * x) ==
            doctest::Approx(lam * evaluate(spec, x)).epsilon(1e-11));
      CHECK(evaluate(spec, x) >= 0.0);
    }
  }
}

TEST_CASE("expected shortfall dominates value at risk") {
  Rng root(23);
  for (std::size_t t = 0; t < 300; ++t) {
    Rng r = root.child(t);
    auto s = ProbSpace::uniform(2 + r.index(7));
    RandVar x = random_var(s, r);
    for (double alpha : {0.05, 0.25, 0.5, 0.8})
      CHECK(expected_shortfall(x, alpha) >= value_at_risk(x, alpha) - 1e-12);
  }
}

TEST_CASE("comonotonic additivity defects") {
  auto s2 = ProbSpace::uniform(2);
  RandVar x01 = rv(s2, {0, 1});

  SUBCASE("expected shortfall is additive on comonotonic pairs") {
    Rng root(24);
    double max_defect = 0.0;
    for (std::size_t t = 0; t < 10000; ++t) {
      Rng r = root.child(t);
      auto s = ProbSpace::uniform(2 + r.index(7));
      auto [x, y] = sample_comonotonic_pair(s, r);
      for (double alpha : {0.05, 0.5}) {
        max_defect = std::max(
            max_defect,
            std::abs(comonotonic_additivity_defect(MeasureSpec::es(alpha), x, y)));
      }
    }
    CHECK(max_defect <= 1e-9);
  }

  SUBCASE("entropic risk is not additive; the designed pair has the "
          "predicted defect") {
    const double expected = std::log((1.0 + std::exp(-2.0)) / 2.0) -
                            2.0 * std::log((1.0 + std::exp(-1.0)) / 2.0);
    const double defect =
        comonotonic_additivity_defect(MeasureSpec::entropic(1.0), x01, x01);
    CHECK(defect == doctest::Approx(expected).epsilon(1e-12));
    CHECK(defect > 0.19);
  }

  SUBCASE("negated expectation is additive") {
    Rng root(25);
    for (std::size_t t = 0; t < 500; ++t) {
      Rng r = root.child(t);
      auto s = ProbSpace::uniform(3);
      auto [x, y] = sample_comonotonic_pair(s, r);
      CHECK(std::abs(comonotonic_additivity_defect(
                MeasureSpec::neg_expectation(), x, y)) <= 1e-12);
    }
  }

  SUBCASE("non-comonotonic inputs are a contract violation") {
    CHECK_THROWS_AS(comonotonic_additivity_defect(MeasureSpec::es(0.5),
                                                  rv(s2, {1, 2}), rv(s2, {2, 1})),
                    ContractError);
  }

  SUBCASE("sd and mad are additive on two-outcome spaces only") {
    // n = 2: additive for every comonotonic pair
    Rng root(26);
    for (std::size_t t = 0; t < 500; ++t) {
      Rng r = root.child(t);
      auto [x, y] = sample_comonotonic_pair(s2, r);
      CHECK(std::abs(comonotonic_additivity_defect(MeasureSpec::mad(), x, y)) <=
            1e-12);
      CHECK(std::abs(comonotonic_additivity_defect(MeasureSpec::sd(), x, y)) <=
            1e-12);
    }
    // n = 3: the designed pair breaks additivity for both
    auto s3 = ProbSpace::uniform(3);
    RandVar a = rv(s3, {0, 1, 1}), b = rv(s3, {0, 0, 1});
    CHECK(comonotonic_additivity_defect(MeasureSpec::mad(), a, b) ==
          doctest::Approx(-2.0 / 9.0).epsilon(1e-12));
    CHECK(comonotonic_additivity_defect(MeasureSpec::sd(), a, b) <
          -0.1);
  }
}

TEST_CASE("value at risk is additive for comonotonic pairs") {
  Rng root(27);
  double max_defect = 0.0;
  for (std::size_t t = 0; t < 5000; ++t) {
    Rng r = root.child(t);
    auto s = ProbSpace::uniform(2 + r.index(7));
    auto [x, y] = sample_comonotonic_pair(s, r);
    max_defect = std::max(
        max_defect,
        std::abs(comonotonic_additivity_defect(MeasureSpec::var(0.3), x, y)));
  }
  CHECK(max_defect <= 1e-9);
}
