#include <doctest.h>

#include <cmath>

#include "riskset/catalog.hpp"
#include "riskset/theorems.hpp"

using namespace riskset;

namespace {
const SuiteConfig kSmoke{1000, 42, 1e-9};
}

TEST_CASE("risk-corisk identity suite") {
  auto s4 = ProbSpace::uniform(4);
  PropertyReport es = verify_risk_corisk(es_set(s4, 0.5), kSmoke);
  CHECK(es.verdict == Verdict::pass);
  CHECK(es.stats.max_defect <= 2e-9);

  PropertyReport exp_rep = verify_risk_corisk(expectation_set(s4), kSmoke);
  CHECK(exp_rep.verdict == Verdict::pass);

  PropertyReport ball = verify_risk_corisk(sd_ball(s4, 1.0), kSmoke);
  CHECK(ball.verdict == Verdict::inconclusive);
}

TEST_CASE("gauge-cogauge identity suite") {
  auto s2 = ProbSpace::uniform(2);
  CHECK(verify_gauge_cogauge(fig1_set(s2), kSmoke).verdict == Verdict::pass);
  auto s4 = ProbSpace::uniform(4);
  CHECK(verify_gauge_cogauge(mad_ball(s4, 1.0), kSmoke).verdict ==
        Verdict::pass);
}

TEST_CASE("sandwich suite") {
  auto s4 = ProbSpace::uniform(4);
  CHECK(verify_sandwich(es_set(s4, 0.5), kSmoke).verdict == Verdict::pass);

  auto s2 = ProbSpace::uniform(2);
  CHECK(verify_sandwich(fig1_set(s2), kSmoke).verdict == Verdict::pass);

  // open variant: the sandwich still holds, but the boundary probe is
  // flagged as a closure gap
  AcceptanceSet open_fig1(
      "open-fig1", s2,
      [](const RandVar& x) { return x[1] - std::abs(x[0]) < 1.0; },
      FlagSet{Flag::star_shaped});
  std::vector<RandVar> probes = {RandVar(s2, {1.0, 2.0})};
  PropertyReport open_rep = verify_sandwich(open_fig1, kSmoke, probes);
  CHECK(open_rep.verdict == Verdict::pass);
  bool gap_note = false;
  for (const auto& note : open_rep.notes)
    if (note.find("closure gap") != std::string::npos) gap_note = true;
  CHECK(gap_note);

  // closed variant: the same probe is a member, no gap note
  PropertyReport closed_rep = verify_sandwich(fig1_set(s2), kSmoke, probes);
  bool closed_gap = false;
  for (const auto& note : closed_rep.notes)
    if (note.find("closure gap") != std::string::npos) closed_gap = true;
  CHECK_FALSE(closed_gap);
}

TEST_CASE("span suite is exact") {
  PropertyReport rep = verify_cone_comono(ProbSpace::uniform(4), kSmoke);
  CHECK(rep.verdict == Verdict::pass);
  CHECK(rep.stats.max_defect == 0.0);
  // degenerate one-outcome space: constants only, sub-check skipped
  PropertyReport deg =
      verify_cone_comono(ProbSpace::uniform(1), SuiteConfig{100, 42, 1e-9});
  CHECK(deg.verdict == Verdict::pass);
  bool skipped_note = false;
  for (const auto& note : deg.notes)
    if (note.find("skipped") != std::string::npos) skipped_note = true;
  CHECK(skipped_note);
}

TEST_CASE("comonotonic additivity equivalence suite") {
  auto s4 = ProbSpace::uniform(4);

  SUBCASE("true positives") {
    for (const char* name : {"es?alpha=0.5", "var?alpha=0.3", "expectation"}) {
      PropertyReport rep = verify_main_theorem(catalog(name, s4), kSmoke);
      INFO("set=", name);
      CHECK(rep.verdict == Verdict::pass);
      CHECK(rep.stats.max_defect <= 1e-8);
    }
  }

  SUBCASE("entropic risk: consistent contrapositive") {
    auto s2 = ProbSpace::uniform(2);
    PropertyReport rep =
        verify_main_theorem(entropic_set(s2, 1.0), SuiteConfig{3000, 42, 1e-9});
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.stats.max_defect >= 1e-3);
    bool witness_found = false;
    for (const auto& sub : rep.subresults) {
      if (sub.name == "audit-comonotonic-convex-complement") {
        CHECK(sub.verdict == Verdict::fail);
        REQUIRE(sub.counterexample.has_value());
        CHECK(replay_reproduces(*sub.counterexample, 1e-9));
        witness_found = true;
      }
    }
    CHECK(witness_found);
  }
}

TEST_CASE("class additivity suite over scalar-addition-stable classes") {
  auto s4 = ProbSpace::uniform(4);

  SUBCASE("expected shortfall on comonotonic spans is additive") {
    PropertyReport rep = verify_main_lemma(
        es_set(s4, 0.5), ConeKind::comonotonic_span, SuiteConfig{2000, 42, 1e-9});
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.stats.max_defect <= 1e-8);
  }

  SUBCASE("entropic risk on comonotonic spans: convex-only branch") {
    PropertyReport rep =
        verify_main_lemma(entropic_set(s4, 1.0), ConeKind::comonotonic_span,
                          SuiteConfig{2000, 42, 1e-9});
    CHECK(rep.verdict == Verdict::pass);
    bool convex_only = false;
    for (const auto& note : rep.notes)
      if (note.find("convex-only=") != std::string::npos &&
          note.find("convex-only=0") == std::string::npos)
        convex_only = true;
    CHECK(convex_only);
    bool defect_observed = false;
    for (const auto& sub : rep.subresults)
      if (sub.name == "additivity-defect-observed") {
        defect_observed = true;
        REQUIRE(sub.counterexample.has_value());
        CHECK(replay_reproduces(*sub.counterexample, 1e-9));
      }
    CHECK(defect_observed);
  }

  SUBCASE("expectation is additive over independent and uncorrelated classes") {
    for (ConeKind kind : {ConeKind::independent, ConeKind::uncorrelated,
                          ConeKind::covariance_one}) {
      PropertyReport rep = verify_main_lemma(expectation_set(s4), kind,
                                             SuiteConfig{1000, 42, 1e-9});
      INFO("cone=", cone_kind_name(kind));
      CHECK(rep.verdict == Verdict::pass);
      CHECK(rep.stats.max_defect <= 1e-8);
    }
  }

  SUBCASE("expected shortfall over the uncorrelated class is not additive "
          "and the complement intersection audit notices") {
    PropertyReport rep = verify_main_lemma(
        es_set(s4, 0.25), ConeKind::uncorrelated, SuiteConfig{2000, 42, 1e-9});
    CHECK(rep.verdict == Verdict::pass);
    bool nonadditive = false;
    for (const auto& note : rep.notes)
      if (note.find("convex-only=") != std::string::npos &&
          note.find("convex-only=0 ") == std::string::npos)
        nonadditive = true;
    CHECK(nonadditive);
  }
}

TEST_CASE("gauge additivity suite") {
  SUBCASE("two-outcome dispersion ball: fully additive") {
    auto s2 = ProbSpace::uniform(2);
    PropertyReport rep =
        verify_dev_additive(mad_ball(s2, 1.0), SuiteConfig{2000, 42, 1e-9});
    CHECK(rep.verdict == Verdict::pass);
  }
  SUBCASE("four-outcome dispersion ball: spans are not complement-convex") {
    auto s4 = ProbSpace::uniform(4);
    PropertyReport rep =
        verify_dev_additive(sd_ball(s4, 1.0), SuiteConfig{2000, 42, 1e-9});
    CHECK(rep.verdict == Verdict::pass);
    bool nonconvex_spans = false;
    for (const auto& note : rep.notes)
      if (note.find("nonconvex=") != std::string::npos &&
          note.find("nonconvex=0 ") == std::string::npos)
        nonconvex_spans = true;
    CHECK(nonconvex_spans);
  }
  SUBCASE("star-shaped set with convex complement: superadditive on the "
          "complement cone") {
    auto s2 = ProbSpace::uniform(2);
    PropertyReport rep =
        verify_dev_additive(fig1_set(s2), SuiteConfig{2000, 42, 1e-9});
    CHECK(rep.verdict == Verdict::pass);
  }
}

TEST_CASE("deviation main suite") {
  SUBCASE("mad ball on a two-outcome space: additive regime") {
    auto s2 = ProbSpace::uniform(2);
    PropertyReport rep =
        verify_coro_como(mad_ball(s2, 1.0), SuiteConfig{2000, 42, 1e-9});
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.stats.max_defect <= 1e-8);
    for (const auto& sub : rep.subresults)
      if (sub.name != "additivity-defect-observed")
        CHECK(sub.verdict == Verdict::pass);
  }
  SUBCASE("sd ball on a four-outcome space: consistent contrapositive") {
    auto s4 = ProbSpace::uniform(4);
    PropertyReport rep =
        verify_coro_como(sd_ball(s4, 1.0), SuiteConfig{2000, 42, 1e-9});
    CHECK(rep.verdict == Verdict::pass);
    bool witness = false, defect = rep.stats.max_defect > 1e-8;
    for (const auto& sub : rep.subresults)
      if (sub.name == "audit-comonotonic-convex-complement" &&
          sub.verdict == Verdict::fail && sub.counterexample)
        witness = true;
    CHECK((witness || defect));
    CHECK(witness);  // the four-outcome complement genuinely fails
  }
}

TEST_CASE("fig1 counterexample values") {
  PropertyReport rep = counterexample_fig1(1e-9);
  CHECK(rep.verdict == Verdict::pass);
  REQUIRE(rep.counterexample.has_value());
  const auto& ce = *rep.counterexample;
  CHECK(std::abs(ce.scalar("dev_y")) <= 1e-6);
  CHECK(std::abs(ce.scalar("dev_z")) <= 1e-6);
  CHECK(ce.scalar("dev_w") == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(ce.scalar("lambda") == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(ce.scalar("concavity_defect") ==
        doctest::Approx(-1.0 / 3.0).epsilon(1e-6));
  CHECK(replay_reproduces(ce, 1e-9));
}

TEST_CASE("consistency meta-property across the catalog at seed 42") {
  // A suite verdict of fail would mean the equivalence itself was violated:
  // both convexity audits passing alongside a material additivity defect,
  // or a clean defect sweep alongside a gauge-thick convexity witness.
  // Across the catalog this must never happen.
  const SuiteConfig cfg{10000, 42, 1e-9};
  auto s4 = ProbSpace::uniform(4);
  for (const char* name : {"expectation", "var?alpha=0.25", "es?alpha=0.25",
                           "entropic?theta=1"}) {
    PropertyReport rep = verify_main_theorem(catalog(name, s4), cfg);
    INFO("set=", name);
    CHECK(rep.verdict == Verdict::pass);
  }
  auto s2 = ProbSpace::uniform(2);
  const std::vector<std::pair<const char*, ProbSpacePtr>> star_sets = {
      {"sd_ball?r=1", s2}, {"sd_ball?r=1", s4}, {"mad_ball?r=1", s2},
      {"mad_ball?r=1", s4}, {"fig1", s2},       {"simplex_q1", s2}};
  for (const auto& [name, space] : star_sets) {
    PropertyReport rep = verify_coro_como(catalog(name, space), cfg);
    INFO("set=", name, " n=", space->size());
    CHECK(rep.verdict == Verdict::pass);
  }
}

TEST_CASE("reports are byte-identical for identical configs") {
  auto s4 = ProbSpace::uniform(4);
  const SuiteConfig cfg{500, 42, 1e-9};
  const std::string a = report_to_json(verify_main_theorem(es_set(s4, 0.5), cfg));
  const std::string b = report_to_json(verify_main_theorem(es_set(s4, 0.5), cfg));
  CHECK(a == b);
  const std::string c =
      report_to_json(verify_main_theorem(es_set(s4, 0.5), SuiteConfig{500, 7, 1e-9}));
  CHECK(a != c);
}

TEST_CASE("csv defect sweep has the documented columns") {
  auto s4 = ProbSpace::uniform(4);
  PropertyReport rep =
      verify_main_theorem(es_set(s4, 0.5), SuiteConfig{50, 42, 1e-9});
  const std::string csv = defects_to_csv(rep);
  CHECK(csv.rfind("trial,defect,seed-path\n", 0) == 0);
  CHECK(csv.find("42/sweep/0") != std::string::npos);
}
