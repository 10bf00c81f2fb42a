#include <doctest.h>

#include <cmath>

#include "riskset/catalog.hpp"
#include "riskset/comonotone.hpp"
#include "riskset/errors.hpp"
#include "riskset/gauge.hpp"
#include "riskset/measures.hpp"

using namespace riskset;

namespace {

RandVar rv(const ProbSpacePtr& s, std::vector<double> v) {
  return RandVar(s, std::move(v));
}

// closed form for the two-outcome star-shaped catalog set
double fig1_gauge(double u, double v) { return std::max(v - std::abs(u), 0.0); }

}  // namespace

TEST_CASE("rho on designed examples") {
  auto s2 = ProbSpace::uniform(2);
  AcceptanceSet exp_set = expectation_set(s2);
  GaugeResult g = rho(exp_set, rv(s2, {-0.5, -0.1}), 1e-9);  // E = -0.3
  CHECK(g.status == GaugeStatus::converged);
  CHECK(g.value == doctest::Approx(0.3).epsilon(1e-8));
  CHECK(g.bracket <= 2e-9);

  auto s4 = ProbSpace::uniform(4);
  AcceptanceSet es = es_set(s4, 0.5);
  CHECK(rho(es, rv(s4, {-4, -2, 0, 2}), 1e-9).value ==
        doctest::Approx(3.0).epsilon(1e-8));

  // normalized + closed: constants have rho(c) = -c
  CHECK(rho(es, RandVar::constant(s4, 5.0), 1e-9).value ==
        doctest::Approx(-5.0).epsilon(1e-8));
}

TEST_CASE("psi mirrors rho; infinite cases carry status") {
  auto s2 = ProbSpace::uniform(2);
  AcceptanceSet exp_set = expectation_set(s2);
  CHECK(psi_complement(exp_set, rv(s2, {-0.5, -0.1}), 1e-9).value ==
        doctest::Approx(0.3).epsilon(1e-8));

  AcceptanceSet full("full", s2, [](const RandVar&) { return true; },
                     FlagSet{Flag::monotone});
  GaugeResult g = psi_complement(full, rv(s2, {1, 2}), 1e-9);
  CHECK(g.status == GaugeStatus::infinite);
  CHECK(g.value == -std::numeric_limits<double>::infinity());

  AcceptanceSet never("never", s2, [](const RandVar&) { return false; },
                      FlagSet{Flag::monotone});
  GaugeResult h = rho(never, rv(s2, {1, 2}), 1e-9);
  CHECK(h.status == GaugeStatus::infinite);
  CHECK(h.value == std::numeric_limits<double>::infinity());
}

TEST_CASE("minkowski gauge on designed examples") {
  auto s2 = ProbSpace::uniform(2);
  AcceptanceSet fig1 = fig1_set(s2);
  GaugeResult w = minkowski_dev(fig1, rv(s2, {1, 2}), 1e-9);
  CHECK(w.status == GaugeStatus::converged);
  CHECK(w.value == doctest::Approx(1.0).epsilon(1e-8));

  GaugeResult z = minkowski_dev(fig1, rv(s2, {1, 1}), 1e-9);
  CHECK(z.status == GaugeStatus::degenerate_zero);
  CHECK(z.value == 0.0);

  auto s4 = ProbSpace::uniform(4);
  AcceptanceSet ball = sd_ball(s4, 1.0);
  Rng root(51);
  for (std::size_t t = 0; t < 200; ++t) {
    Rng r = root.child(t);
    RandVar x = random_var(s4, r);
    CHECK(minkowski_dev(ball, x, 1e-9).value ==
          doctest::Approx(std_dev(x)).epsilon(1e-7));
  }

  // constants gauge to zero on scalar-stable sets
  CHECK(minkowski_dev(ball, RandVar::constant(s4, 7.0), 1e-9).value == 0.0);

  // direction with a negative coordinate never scales into the simplex
  AcceptanceSet simplex = simplex_q1_set(s2);
  GaugeResult inf_g = minkowski_dev(simplex, rv(s2, {-1.0, 0.5}), 1e-9);
  CHECK(inf_g.status == GaugeStatus::infinite);
  CHECK(inf_g.value == std::numeric_limits<double>::infinity());

  // first-quadrant directions gauge to the coordinate sum
  Rng sroot(61);
  for (std::size_t t = 0; t < 100; ++t) {
    Rng r = sroot.child(t);
    RandVar x = rv(s2, {r.uniform(0.01, 4.0), r.uniform(0.01, 4.0)});
    CHECK(minkowski_dev(simplex, x, 1e-9).value ==
          doctest::Approx(x[0] + x[1]).epsilon(1e-7));
  }
}

TEST_CASE("cogauge on designed examples") {
  auto s2 = ProbSpace::uniform(2);
  AcceptanceSet fig1 = fig1_set(s2);
  CHECK(cogauge_complement(fig1, rv(s2, {1, 2}), 1e-9).value ==
        doctest::Approx(1.0).epsilon(1e-8));
  GaugeResult empty = cogauge_complement(fig1, rv(s2, {1, 1}), 1e-9);
  CHECK(empty.status == GaugeStatus::degenerate_zero);
  CHECK(empty.value == 0.0);
}

TEST_CASE("gauge matches the closed form for the two-outcome star set") {
  auto s2 = ProbSpace::uniform(2);
  AcceptanceSet fig1 = fig1_set(s2);
  Rng root(52);
  for (std::size_t t = 0; t < 300; ++t) {
    Rng r = root.child(t);
    RandVar x = random_var(s2, r);
    const double expected = fig1_gauge(x[0], x[1]);
    GaugeResult g = minkowski_dev(fig1, x, 1e-9);
    if (expected == 0.0) {
      CHECK(g.value <= 1e-9);
    } else {
      CHECK(g.value == doctest::Approx(expected).epsilon(1e-7));
    }
  }
}

TEST_CASE("contract errors on missing declared flags") {
  auto s2 = ProbSpace::uniform(2);
  AcceptanceSet fig1 = fig1_set(s2);  // not monotone
  CHECK_THROWS_AS(rho(fig1, rv(s2, {0, 0}), 1e-9), ContractError);
  CHECK_THROWS_AS(psi_complement(fig1, rv(s2, {0, 0}), 1e-9), ContractError);
  auto s4 = ProbSpace::uniform(4);
  AcceptanceSet nostar =
      es_set(s4, 0.5).with_declared(FlagSet{Flag::monotone});
  CHECK_THROWS_AS(minkowski_dev(nostar, rv(s4, {1, 2, 3, 4}), 1e-9),
                  ContractError);
  CHECK_THROWS_AS(rho(es_set(s4, 0.5), rv(s4, {1, 2, 3, 4}), 0.0), DomainError);
}

TEST_CASE("cash invariance and monotonicity of rho") {
  auto s4 = ProbSpace::uniform(4);
  Rng root(53);
  for (const char* name : {"expectation", "es?alpha=0.25", "var?alpha=0.3",
                           "entropic?theta=1"}) {
    AcceptanceSet set = catalog(name, s4);
    for (std::size_t t = 0; t < 100; ++t) {
      Rng r = root.child(t);
      RandVar x = random_var(s4, r);
      const double c = r.uniform(-5.0, 5.0);
      CHECK(std::abs(rho(set, x + c, 1e-9).value -
                     (rho(set, x, 1e-9).value - c)) <= 2e-9);
      std::vector<double> bump(4);
      for (auto& b : bump) b = r.uniform(0.0, 2.0);
      CHECK(rho(set, x + RandVar(s4, bump), 1e-9).value <=
            rho(set, x, 1e-9).value + 2e-9);
    }
  }
}

TEST_CASE("gauge identities on random inputs") {
  auto s4 = ProbSpace::uniform(4);
  Rng root(54);
  for (const char* name : {"expectation", "es?alpha=0.05", "var?alpha=0.25",
                           "entropic?theta=1"}) {
    AcceptanceSet set = catalog(name, s4);
    for (std::size_t t = 0; t < 150; ++t) {
      Rng r = root.child(t);
      RandVar x = random_var(s4, r);
      CHECK(std::abs(rho(set, x, 1e-9).value -
                     psi_complement(set, x, 1e-9).value) <= 2e-9);
    }
  }
  for (const char* name : {"sd_ball?r=1", "mad_ball?r=1"}) {
    AcceptanceSet set = catalog(name, s4);
    for (std::size_t t = 0; t < 150; ++t) {
      Rng r = root.child(1000 + t);
      RandVar x = random_var(s4, r);
      const double a = minkowski_dev(set, x, 1e-9).value;
      const double b = cogauge_complement(set, x, 1e-9).value;
      CHECK(std::abs(a - b) <= 2e-9);
    }
  }
}

TEST_CASE("positive homogeneity and translation insensitivity of the gauge") {
  auto s4 = ProbSpace::uniform(4);
  AcceptanceSet ball = mad_ball(s4, 1.0);
  Rng root(55);
  for (std::size_t t = 0; t < 100; ++t) {
    Rng r = root.child(t);
    RandVar x = random_var(s4, r);
    const double dx = minkowski_dev(ball, x, 1e-9).value;
    for (double lam : {0.5, 2.0, 10.0}) {
      CHECK(std::abs(minkowski_dev(ball, lam * x, 1e-9).value - lam * dx) <=
            1e-9 * (1.0 + lam));
    }
    const double c = r.uniform(-5.0, 5.0);
    CHECK(std::abs(minkowski_dev(ball, x + c, 1e-9).value - dx) <= 2e-9);
  }
}

TEST_CASE("sandwich inclusions with tol buffers") {
  auto s4 = ProbSpace::uniform(4);
  AcceptanceSet es = es_set(s4, 0.5);
  AcceptanceSet ball = sd_ball(s4, 1.0);
  Rng root(56);
  for (std::size_t t = 0; t < 300; ++t) {
    Rng r = root.child(t);
    RandVar x = random_var(s4, r);
    const double rv_ = rho(es, x, 1e-9).value;
    if (rv_ < -2e-9) CHECK(es.contains(x));
    if (es.contains(x)) CHECK(rv_ <= 2e-9);
    const double dv = minkowski_dev(ball, x, 1e-9).value;
    if (dv < 1.0 - 2e-9) CHECK(ball.contains(x));
    if (ball.contains(x)) CHECK(dv <= 1.0 + 2e-9);
  }
}

TEST_CASE("bisection is oracle-consistent across the returned bracket") {
  auto s4 = ProbSpace::uniform(4);
  AcceptanceSet es = es_set(s4, 0.25);
  Rng root(57);
  for (std::size_t t = 0; t < 100; ++t) {
    Rng r = root.child(t);
    RandVar x = random_var(s4, r);
    GaugeResult g = rho(es, x, 1e-9);
    REQUIRE(g.status == GaugeStatus::converged);
    CHECK(es.contains(x + (g.value + 1e-9)));
    CHECK_FALSE(es.contains(x + (g.value - 1e-9)));
  }
}

TEST_CASE("induced sets compose with gauges") {
  auto s4 = ProbSpace::uniform(4);

  SUBCASE("acceptance_from_rho reproduces the functional") {
    auto es_fn = [](const RandVar& x) { return expected_shortfall(x, 0.5); };
    AcceptanceSet induced = acceptance_from_rho(es_fn, s4, "es-0.5");
    AcceptanceSet cat = es_set(s4, 0.5);
    Rng root(58);
    for (std::size_t t = 0; t < 1000; ++t) {
      Rng r = root.child(t);
      RandVar x = random_var(s4, r);
      CHECK(induced.contains(x) == cat.contains(x));
    }
    for (std::size_t t = 0; t < 100; ++t) {
      Rng r = root.child(10000 + t);
      RandVar x = random_var(s4, r);
      CHECK(std::abs(rho(induced, x, 1e-9).value - es_fn(x)) <= 2e-9);
    }
    AcceptanceSet neg_mean = acceptance_from_rho(
        [](const RandVar& x) { return -expectation(x); }, s4, "neg-mean");
    CHECK(neg_mean.contains(rv(s4, {-1, -1, 1, 1})));
  }

  SUBCASE("sublevel_from_dev reproduces the functional") {
    AcceptanceSet level = sublevel_from_dev(
        [](const RandVar& x) { return std_dev(x); }, 1.0, s4, "sd");
    AcceptanceSet cat = sd_ball(s4, 1.0);
    Rng root(59);
    for (std::size_t t = 0; t < 1000; ++t) {
      Rng r = root.child(t);
      RandVar x = random_var(s4, r);
      CHECK(level.contains(x) == cat.contains(x));
    }
    for (std::size_t t = 0; t < 100; ++t) {
      Rng r = root.child(10000 + t);
      RandVar x = random_var(s4, r);
      CHECK(std::abs(minkowski_dev(level, x, 1e-9).value - std_dev(x)) <= 2e-9);
    }
    // boundary inclusion under the closed convention
    auto s2 = ProbSpace::uniform(2);
    AcceptanceSet fig1 = fig1_set(s2);
    auto fig1_dev = [fig1](const RandVar& x) {
      return minkowski_dev(fig1, x, 1e-9).value;
    };
    AcceptanceSet lvl = sublevel_from_dev(fig1_dev, 1.0, s2, "fig1");
    CHECK(lvl.contains(rv(s2, {1, 2})));
  }
}

TEST_CASE("rho of a convex set is convex on sampled triples") {
  auto s4 = ProbSpace::uniform(4);
  AcceptanceSet es = es_set(s4, 0.25);
  Rng root(60);
  for (std::size_t t = 0; t < 200; ++t) {
    Rng r = root.child(t);
    RandVar x = random_var(s4, r);
    RandVar y = random_var(s4, r);
    const double lam = r.uniform01();
    const double mix = rho(es, lam * x + (1.0 - lam) * y, 1e-9).value;
    const double combo =
        lam * rho(es, x, 1e-9).value + (1.0 - lam) * rho(es, y, 1e-9).value;
    CHECK(mix <= combo + 3e-9);
  }
}
