#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riskset/comonotone.hpp"
#include "riskset/errors.hpp"

using namespace riskset;

namespace {

RandVar rv(const ProbSpacePtr& s, std::vector<double> v) {
  return RandVar(s, std::move(v));
}

// Brute-force oracle: comonotonic iff some single outcome permutation makes
// both value lists nondecreasing. Only feasible for small n.
bool comonotonic_by_sorting(const RandVar& x, const RandVar& y) {
  const std::size_t n = x.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t k = 0; k + 1 < n && ok; ++k) {
      ok = x[perm[k]] <= x[perm[k + 1]] && y[perm[k]] <= y[perm[k + 1]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("probability space invariants") {
  CHECK_THROWS_AS(ProbSpace::make({0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(ProbSpace::make({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(ProbSpace::make({}), DimensionError);
  auto s = ProbSpace::uniform(3);
  CHECK(s->size() == 3);
  CHECK(s->prob(0) == doctest::Approx(1.0 / 3));
  auto prod = ProbSpace::product(ProbSpace::uniform(2), ProbSpace::uniform(2));
  CHECK(prod->size() == 4);
  CHECK(prod->prob(0) == doctest::Approx(0.25));
}

TEST_CASE("random variable invariants") {
  auto s = ProbSpace::uniform(2);
  CHECK_THROWS_AS(rv(s, {1.0}), DimensionError);
  CHECK_THROWS_AS(rv(s, {1.0, std::nan("")}), DomainError);
  auto t = ProbSpace::uniform(3);
  CHECK_THROWS_AS(rv(s, {1.0, 2.0}) + rv(t, {1.0, 2.0, 3.0}), DimensionError);
}

TEST_CASE("is_comonotonic on designed examples") {
  auto s3 = ProbSpace::uniform(3);
  CHECK(is_comonotonic(rv(s3, {1, 2, 3}), rv(s3, {0, 0, 5})));
  auto s2 = ProbSpace::uniform(2);
  CHECK_FALSE(is_comonotonic(rv(s2, {1, 2}), rv(s2, {2, 1})));
  // constants are comonotonic to everything
  CHECK(is_comonotonic(rv(s3, {7, 7, 7}), rv(s3, {3, -1, 9})));
}

TEST_CASE("is_constant") {
  auto s3 = ProbSpace::uniform(3);
  CHECK(is_constant(rv(s3, {5, 5, 5})));
  CHECK_FALSE(is_constant(rv(ProbSpace::uniform(2), {0, 1})));
  CHECK(is_constant(rv(ProbSpace::uniform(1), {3})));
}

TEST_CASE("is_comonotonic is symmetric and matches the sorting oracle") {
  Rng root(7);
  for (std::size_t t = 0; t < 300; ++t) {
    Rng r = root.child(t);
    const std::size_t n = 2 + r.index(4);  // n in {2..5}
    auto s = ProbSpace::uniform(n);
    // small integer grids make ties common
    std::vector<double> xv(n), yv(n);
    for (auto& v : xv) v = static_cast<double>(r.index(4));
    for (auto& v : yv) v = static_cast<double>(r.index(4));
    RandVar x = rv(s, xv), y = rv(s, yv);
    const bool fast = is_comonotonic(x, y);
    CHECK(fast == is_comonotonic(y, x));
    CHECK(fast == comonotonic_by_sorting(x, y));
  }
}

TEST_CASE("cone_element examples and validation") {
  auto s2 = ProbSpace::uniform(2);
  RandVar x = rv(s2, {0, 1}), y = rv(s2, {0, 2});
  RandVar a = cone_element(x, y, {1.0, 3.0, 0.0});
  CHECK(a[0] == 0.0);
  CHECK(a[1] == 3.0);
  RandVar zero = cone_element(x, y, {0.5, 0.0, 0.0});
  CHECK(is_constant(zero));
  CHECK(zero[0] == 0.0);
  RandVar m = cone_element(rv(s2, {0, 1}), rv(s2, {1, 3}), {0.5, 2.0, 1.0});
  CHECK(m[0] == doctest::Approx(0.5));
  CHECK(m[1] == doctest::Approx(2.5));
  CHECK_THROWS_AS(cone_element(x, y, {1.5, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(cone_element(x, y, {0.5, -1.0, 1.0}), DomainError);
}

TEST_CASE("comonotonic pair sampler: construction, determinism, degenerate") {
  auto s = ProbSpace::uniform(5);
  Rng root(11);
  for (std::size_t t = 0; t < 200; ++t) {
    Rng r = root.child(t);
    auto [x, y] = sample_comonotonic_pair(s, r);
    CHECK(is_comonotonic(x, y));
  }
  Rng r1 = Rng(123).child(5), r2 = Rng(123).child(5);
  auto p1 = sample_comonotonic_pair(s, r1);
  auto p2 = sample_comonotonic_pair(s, r2);
  CHECK(std::equal(p1.first.values().begin(), p1.first.values().end(),
                   p2.first.values().begin()));
  CHECK(std::equal(p1.second.values().begin(), p1.second.values().end(),
                   p2.second.values().begin()));

  Rng r3(9);
  auto [cx, cy] = sample_comonotonic_pair(ProbSpace::uniform(1), r3);
  CHECK(is_constant(cx));
  CHECK(is_constant(cy));
}

TEST_CASE("independent pair sampler: product weights and zero covariance") {
  Rng root(13);
  auto a = ProbSpace::uniform(2), b = ProbSpace::uniform(2);
  {
    Rng r = root.child(0);
    auto ip = sample_independent_pair(a, b, r);
    CHECK(ip.space->size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(ip.space->prob(i) == doctest::Approx(0.25));
  }
  for (std::size_t t = 0; t < 100; ++t) {
    Rng r = root.child(t);
    auto ip = sample_independent_pair(ProbSpace::uniform(3),
                                      ProbSpace::uniform(4), r);
    CHECK(std::abs(covariance(ip.x, ip.y)) <= 1e-12);
  }
  Rng r1 = Rng(77).child(3), r2 = Rng(77).child(3);
  auto i1 = sample_independent_pair(a, b, r1);
  auto i2 = sample_independent_pair(a, b, r2);
  CHECK(std::equal(i1.x.values().begin(), i1.x.values().end(),
                   i2.x.values().begin()));
}

TEST_CASE("expectation and covariance") {
  auto s2 = ProbSpace::uniform(2);
  CHECK(expectation(rv(s2, {-1, 1})) == doctest::Approx(0.0));
  CHECK(covariance(rv(s2, {-1, 1}), rv(s2, {-1, 1})) == doctest::Approx(1.0));
  CHECK(covariance(rv(s2, {3, 9}), RandVar::constant(s2, 4.0)) ==
        doctest::Approx(0.0));
  auto s3 = ProbSpace::uniform(3);
  CHECK_THROWS_AS(covariance(rv(s2, {1, 2}), rv(s3, {1, 2, 3})),
                  DimensionError);
}

TEST_CASE("span of a comonotonic pair: pairwise comonotonicity, exact") {
  auto s = ProbSpace::uniform(4);
  Rng root(42);
  std::size_t checked = 0;
  for (std::size_t t = 0; t < 1200; ++t) {
    Rng r = root.child(t);
    auto [x, y] = sample_comonotonic_pair(s, r);
    RandVar z = cone_element(x, y, sample_cone_spec(r));
    RandVar w = cone_element(x, y, sample_cone_spec(r));
    CHECK(is_comonotonic(z, w));
    ++checked;
  }
  CHECK(checked >= 1000);
}

TEST_CASE("span meets the constants only at zero for non-constant generators") {
  auto s = ProbSpace::uniform(3);
  Rng root(43);
  for (std::size_t t = 0; t < 1000; ++t) {
    Rng r = root.child(t);
    auto [x, y] = sample_comonotonic_pair(s, r);
    if (is_constant(x) || is_constant(y)) continue;
    ConeElementSpec spec = sample_cone_spec(r);
    RandVar z = cone_element(x, y, spec);
    const double a = spec.gamma * spec.lambda;
    const double b = (1.0 - spec.gamma) * spec.delta;
    if (a > 0.0 || b > 0.0) {
      CHECK_FALSE(is_constant(z));
    } else {
      CHECK(is_constant(z));
      CHECK(z[0] == 0.0);
    }
  }
}

TEST_CASE("the set comonotonic-to-X is a convex cone") {
  auto s = ProbSpace::uniform(4);
  Rng root(44);
  for (std::size_t t = 0; t < 500; ++t) {
    Rng r = root.child(t);
    auto [x, y] = sample_comonotonic_pair(s, r);
    auto [x2, z] = sample_comonotonic_pair(s, r);
    // z is comonotonic to x2, not necessarily to x; rebuild a pair sharing x
    // by reusing the latent order of (x, y): scale y two ways instead.
    const double lam = r.uniform(0.0, 5.0);
    CHECK(is_comonotonic(x, lam * y));
    const double beta = r.uniform01();
    if (is_comonotonic(x, z)) {
      RandVar mix = beta * y + (1.0 - beta) * z;
      CHECK(is_comonotonic(x, mix));
    }
    (void)x2;
  }
}

TEST_CASE("rng child streams are order-independent") {
  Rng a(5);
  (void)a.next_u64();
  (void)a.next_u64();
  Rng b(5);
  CHECK(a.child(17).next_u64() == b.child(17).next_u64());
}
