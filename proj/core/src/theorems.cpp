#include "riskset/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riskset/catalog.hpp"
#include "riskset/errors.hpp"

namespace riskset {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlackEps = 1e-12;

double slack(double tol, int ops) { return ops * tol + kSlackEps; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return Rng(seed).child(0xA0000 + salt).seed();
}

std::string path(std::uint64_t seed, const std::string& stage, std::size_t t) {
  return std::to_string(seed) + "/" + stage + "/" + std::to_string(t);
}

std::vector<double> probs_of(const ProbSpacePtr& space) {
  auto p = space->probs();
  return {p.begin(), p.end()};
}

std::vector<double> vals(const RandVar& x) {
  auto v = x.values();
  return {v.begin(), v.end()};
}

SubResult sub_from_audit(std::string name, const AxiomAudit& audit) {
  SubResult s;
  s.name = std::move(name);
  s.verdict = audit.verdict;
  s.note = audit.note;
  if (audit.witness) s.counterexample = audit.witness;
  return s;
}

bool gauge_finite(const GaugeResult& g) {
  return g.status != GaugeStatus::infinite;
}

/// |a - b| with infinities of the same sign treated as equal.
double gauge_diff(const GaugeResult& a, const GaugeResult& b) {
  const bool ia = !gauge_finite(a), ib = !gauge_finite(b);
  if (ia || ib) {
    if (ia && ib && std::signbit(a.value) == std::signbit(b.value)) return 0.0;
    return kInf;
  }
  return std::abs(a.value - b.value);
}

TheoremCheck make_check(std::string id, const AcceptanceSet* a,
                        std::string sampler, std::size_t n,
                        const SuiteConfig& cfg) {
  TheoremCheck c;
  c.id = std::move(id);
  if (a) c.set_name = a->name();
  c.sampler = std::move(sampler);
  c.n = n;
  c.trials = cfg.trials;
  c.seed = cfg.seed;
  c.tol = cfg.tol;
  return c;
}

void fail_with(PropertyReport& rep, Counterexample ce) {
  rep.verdict = Verdict::fail;
  if (!rep.counterexample) rep.counterexample = std::move(ce);
}

}  // namespace

const char* cone_kind_name(ConeKind k) {
  switch (k) {
    case ConeKind::comonotonic_span: return "comonotonic-span";
    case ConeKind::independent: return "independent";
    case ConeKind::uncorrelated: return "uncorrelated";
    case ConeKind::covariance_one: return "covariance-one";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// lemma-2.6: rho == psi on monotone sets
// ---------------------------------------------------------------------------

PropertyReport verify_risk_corisk(const AcceptanceSet& a,
                                  const SuiteConfig& cfg) {
  PropertyReport rep;
  const auto& space = a.space();
  rep.check = make_check("lemma-2.6", &a, "uniform-coords", space->size(), cfg);

  const std::size_t pre_trials = std::min<std::size_t>(cfg.trials, 2000);
  AxiomAudit pre = check_monotone(a, derive_seed(cfg.seed, 1), pre_trials);
  rep.subresults.push_back(sub_from_audit("precondition-monotone", pre));
  if (!a.declares(Flag::monotone) || pre.verdict != Verdict::pass) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back(
        "monotonicity precondition not established; identity not asserted");
    return rep;
  }

  Rng root(cfg.seed);
  const double bound = slack(cfg.tol, 2);
  rep.verdict = Verdict::pass;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng r = root.child(t);
    RandVar x = random_var(space, r);
    GaugeResult ga = rho(a, x, cfg.tol);
    GaugeResult gb = psi_complement(a, x, cfg.tol);
    const double d = gauge_diff(ga, gb);
    rep.defect_rows.push_back({t, d, path(cfg.seed, "sweep", t)});
    rep.stats.max_defect = std::max(rep.stats.max_defect, d);
    rep.stats.trials = t + 1;
    if (d > bound) {
      fail_with(rep, Counterexample{"identity-risk-corisk",
                                    a.name(),
                                    probs_of(space),
                                    {{"X", vals(x)}},
                                    {{"rho", ga.value},
                                     {"psi", gb.value},
                                     {"defect", d},
                                     {"bound", bound}},
                                    path(cfg.seed, "sweep", t)});
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// lemma-3.6: gauge == cogauge of the complement on star-shaped sets
// ---------------------------------------------------------------------------

PropertyReport verify_gauge_cogauge(const AcceptanceSet& a,
                                    const SuiteConfig& cfg) {
  PropertyReport rep;
  const auto& space = a.space();
  rep.check = make_check("lemma-3.6", &a, "uniform-coords", space->size(), cfg);

  const std::size_t pre_trials = std::min<std::size_t>(cfg.trials, 2000);
  AxiomAudit pre = check_star_shaped(a, derive_seed(cfg.seed, 1), pre_trials);
  rep.subresults.push_back(sub_from_audit("precondition-star-shaped", pre));
  if (!a.declares(Flag::star_shaped) || pre.verdict != Verdict::pass) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back(
        "star-shapedness precondition not established; identity not asserted");
    return rep;
  }

  Rng root(cfg.seed);
  const double bound = slack(cfg.tol, 2);
  rep.verdict = Verdict::pass;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng r = root.child(t);
    RandVar x = random_var(space, r);
    GaugeResult ga = minkowski_dev(a, x, cfg.tol);
    GaugeResult gb = cogauge_complement(a, x, cfg.tol);
    const double d = gauge_diff(ga, gb);
    rep.defect_rows.push_back({t, d, path(cfg.seed, "sweep", t)});
    rep.stats.max_defect = std::max(rep.stats.max_defect, d);
    rep.stats.trials = t + 1;
    if (d > bound) {
      fail_with(rep, Counterexample{"identity-dev-cogauge",
                                    a.name(),
                                    probs_of(space),
                                    {{"X", vals(x)}},
                                    {{"dev", ga.value},
                                     {"cogauge", gb.value},
                                     {"defect", d},
                                     {"bound", bound}},
                                    path(cfg.seed, "sweep", t)});
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// lemma-2.4: sandwich inclusions
// ---------------------------------------------------------------------------

PropertyReport verify_sandwich(const AcceptanceSet& a, const SuiteConfig& cfg,
                               const std::vector<RandVar>& probes) {
  PropertyReport rep;
  const auto& space = a.space();
  rep.check = make_check("lemma-2.4", &a, "uniform-coords", space->size(), cfg);

  const std::size_t pre_trials = std::min<std::size_t>(cfg.trials, 2000);
  bool risk_form = a.declares(Flag::monotone);
  bool dev_form = a.declares(Flag::star_shaped);
  if (risk_form) {
    AxiomAudit pre = check_monotone(a, derive_seed(cfg.seed, 1), pre_trials);
    rep.subresults.push_back(sub_from_audit("precondition-monotone", pre));
    risk_form = pre.verdict == Verdict::pass;
  }
  if (dev_form) {
    AxiomAudit pre = check_star_shaped(a, derive_seed(cfg.seed, 2), pre_trials);
    rep.subresults.push_back(sub_from_audit("precondition-star-shaped", pre));
    dev_form = pre.verdict == Verdict::pass;
  }
  if (!risk_form && !dev_form) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back("neither the risk nor the deviation form applies");
    return rep;
  }
  rep.notes.push_back(std::string("forms: ") + (risk_form ? "risk" : "") +
                      (risk_form && dev_form ? "+" : "") +
                      (dev_form ? "deviation" : ""));

  const double buffer = slack(cfg.tol, 2);
  std::size_t gap_points = 0;
  rep.verdict = Verdict::pass;

  auto check_point = [&](const RandVar& x, const std::string& where,
                         std::size_t t) {
    const bool member = a.contains(x);
    if (risk_form) {
      GaugeResult g = rho(a, x, cfg.tol);
      if (gauge_finite(g)) {
        const bool lower_violated = g.value < -buffer && !member;
        const bool upper_violated = member && g.value > buffer;
        if (member)
          rep.stats.max_defect =
              std::max(rep.stats.max_defect, std::max(g.value, 0.0));
        if (lower_violated || upper_violated) {
          fail_with(rep, Counterexample{"sandwich-risk",
                                        a.name(),
                                        probs_of(space),
                                        {{"X", vals(x)}},
                                        {{"rho", g.value},
                                         {"member", member ? 1.0 : 0.0},
                                         {"bound", buffer}},
                                        path(cfg.seed, where, t)});
          return false;
        }
      }
    }
    if (dev_form) {
      GaugeResult g = minkowski_dev(a, x, cfg.tol);
      const double dv = gauge_finite(g) ? g.value : kInf;
      const bool lower_violated = dv < 1.0 - buffer && !member;
      const bool upper_violated = member && dv > 1.0 + buffer;
      if (member && std::isfinite(dv))
        rep.stats.max_defect =
            std::max(rep.stats.max_defect, std::max(dv - 1.0, 0.0));
      if (std::abs(dv - 1.0) <= buffer && !member) ++gap_points;
      if (lower_violated || upper_violated) {
        fail_with(rep, Counterexample{"sandwich-dev",
                                      a.name(),
                                      probs_of(space),
                                      {{"X", vals(x)}},
                                      {{"dev", dv},
                                       {"member", member ? 1.0 : 0.0},
                                       {"bound", buffer}},
                                      path(cfg.seed, where, t)});
        return false;
      }
    }
    return true;
  };

  Rng root(cfg.seed);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng r = root.child(t);
    rep.stats.trials = t + 1;
    if (!check_point(random_var(space, r), "sweep", t)) break;
  }
  if (rep.verdict != Verdict::fail) {
    for (std::size_t k = 0; k < probes.size(); ++k)
      if (!check_point(probes[k], "probe", k)) break;
  }
  if (gap_points > 0)
    rep.notes.push_back(
        "closure gap: " + std::to_string(gap_points) +
        " point(s) sit at gauge level 1 without set membership (the set is a "
        "proper subset of its level-one closure there)");
  return rep;
}

// ---------------------------------------------------------------------------
// lemma-2.9: the convex-conic span of a comonotonic pair
// ---------------------------------------------------------------------------

PropertyReport verify_cone_comono(const ProbSpacePtr& space,
                                  const SuiteConfig& cfg) {
  PropertyReport rep;
  rep.check = make_check("lemma-2.9", nullptr, "comonotonic-pairs",
                         space->size(), cfg);
  Rng root(cfg.seed);
  std::size_t skipped_constant = 0;
  rep.verdict = Verdict::pass;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng r = root.child(t);
    auto [x, y] = sample_comonotonic_pair(space, r);
    ConeElementSpec s1 = sample_cone_spec(r);
    ConeElementSpec s2 = sample_cone_spec(r);
    RandVar z = cone_element(x, y, s1);
    RandVar w = cone_element(x, y, s2);
    rep.stats.trials = t + 1;
    if (!is_comonotonic(z, w)) {
      fail_with(rep, Counterexample{"cone-comonotonicity",
                                    "",
                                    probs_of(space),
                                    {{"X", vals(x)},
                                     {"Y", vals(y)},
                                     {"Z", vals(z)},
                                     {"W", vals(w)}},
                                    {{"gamma1", s1.gamma},
                                     {"lambda1", s1.lambda},
                                     {"delta1", s1.delta},
                                     {"gamma2", s2.gamma},
                                     {"lambda2", s2.lambda},
                                     {"delta2", s2.delta}},
                                    path(cfg.seed, "sweep", t)});
      break;
    }
    if (is_constant(x) || is_constant(y)) {
      ++skipped_constant;
      continue;
    }
    bool bad = false;
    for (const auto& [spec, elem] : {std::pair{s1, z}, std::pair{s2, w}}) {
      const double ca = spec.gamma * spec.lambda;
      const double cb = (1.0 - spec.gamma) * spec.delta;
      if ((ca > 0.0 || cb > 0.0) && is_constant(elem)) {
        fail_with(rep,
                  Counterexample{"cone-constant",
                                 "",
                                 probs_of(space),
                                 {{"X", vals(x)}, {"Y", vals(y)},
                                  {"Z", vals(elem)}},
                                 {{"gamma", spec.gamma},
                                  {"lambda", spec.lambda},
                                  {"delta", spec.delta}},
                                 path(cfg.seed, "sweep", t)});
        bad = true;
        break;
      }
    }
    if (bad) break;
  }
  if (skipped_constant > 0)
    rep.notes.push_back("span-constants sub-check skipped for " +
                        std::to_string(skipped_constant) +
                        " constant-generator trial(s)");
  return rep;
}

// ---------------------------------------------------------------------------
// thm-2.10: comonotonic additivity <-> comonotonic convexity of A and A^c
// ---------------------------------------------------------------------------

PropertyReport verify_main_theorem(const AcceptanceSet& a,
                                   const SuiteConfig& cfg) {
  PropertyReport rep;
  const auto& space = a.space();
  rep.check =
      make_check("thm-2.10", &a, "comonotonic-pairs", space->size(), cfg);

  const std::size_t pre_trials = std::min<std::size_t>(cfg.trials, 2000);
  AxiomAudit pre = check_monotone(a, derive_seed(cfg.seed, 1), pre_trials);
  rep.subresults.push_back(sub_from_audit("precondition-monotone", pre));
  if (!a.declares(Flag::monotone) || pre.verdict != Verdict::pass) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back("monotonicity precondition not established");
    return rep;
  }

  AxiomAudit audit_a =
      audit_flag(a, Flag::comonotonic_convex, derive_seed(cfg.seed, 2),
                 cfg.trials);
  AxiomAudit audit_c =
      audit_flag(a, Flag::complement_comonotonic_convex,
                 derive_seed(cfg.seed, 3), cfg.trials);
  rep.subresults.push_back(sub_from_audit("audit-comonotonic-convex-A", audit_a));
  rep.subresults.push_back(
      sub_from_audit("audit-comonotonic-convex-complement", audit_c));
  if (audit_a.verdict == Verdict::inconclusive ||
      audit_c.verdict == Verdict::inconclusive) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back("convexity audits did not resolve");
    return rep;
  }

  Rng root(cfg.seed);
  double maxd = 0.0;
  std::optional<Counterexample> worst;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng r = root.child(t);
    auto [x, y] = sample_comonotonic_pair(space, r);
    GaugeResult rx = rho(a, x, cfg.tol);
    GaugeResult ry = rho(a, y, cfg.tol);
    GaugeResult rxy = rho(a, x + y, cfg.tol);
    const double d = std::abs(rxy.value - rx.value - ry.value);
    rep.defect_rows.push_back({t, d, path(cfg.seed, "sweep", t)});
    rep.stats.trials = t + 1;
    if (d > maxd) {
      maxd = d;
      worst = Counterexample{"rho-additivity",
                             a.name(),
                             probs_of(space),
                             {{"X", vals(x)}, {"Y", vals(y)}},
                             {{"rho_x", rx.value},
                              {"rho_y", ry.value},
                              {"rho_xy", rxy.value},
                              {"defect", d},
                              {"bound", slack(cfg.tol, 3)}},
                             path(cfg.seed, "sweep", t)};
    }
  }
  rep.stats.max_defect = maxd;

  const bool audits_pass = audit_a.verdict == Verdict::pass &&
                           audit_c.verdict == Verdict::pass;
  const double add_bound = slack(cfg.tol, 3);
  const double material = 10.0 * cfg.tol;
  rep.verdict = Verdict::pass;
  if (audits_pass) {
    if (maxd > add_bound) {
      rep.notes.push_back(
          "inconsistent: both comonotonic-convexity audits pass yet an "
          "additivity defect exceeds the bound");
      fail_with(rep, *worst);
    } else {
      rep.notes.push_back("additive regime: both comonotonic-convexity audits "
                          "pass and the defect sweep is clean");
    }
    return rep;
  }

  // At least one audit produced a witness; the defect sweep must agree.
  if (maxd > material) {
    rep.notes.push_back(
        "contrapositive regime: additivity defect and convexity witness are "
        "both present, as the equivalence requires");
    if (worst) {
      SubResult defect_sub;
      defect_sub.name = "additivity-defect-observed";
      defect_sub.verdict = Verdict::fail;
      defect_sub.note = "largest comonotonic additivity defect: " +
                        fmt_double(maxd);
      defect_sub.counterexample = *worst;
      rep.subresults.push_back(std::move(defect_sub));
    }
    return rep;
  }

  // Sweep is clean: any convexity witness must itself be gauge-thin.
  for (const AxiomAudit* audit : {&audit_a, &audit_c}) {
    if (audit->verdict != Verdict::fail || !audit->witness) continue;
    const auto& w = *audit->witness;
    const auto* px = w.point("X");
    const auto* py = w.point("Y");
    if (!px || !py) continue;
    RandVar x(space, *px), y(space, *py);
    const double lam = w.scalar("lambda");
    GaugeResult gm = rho(a, lam * x + (1.0 - lam) * y, cfg.tol);
    GaugeResult gx = rho(a, x, cfg.tol);
    GaugeResult gy = rho(a, y, cfg.tol);
    const double wd =
        std::abs(gm.value - lam * gx.value - (1.0 - lam) * gy.value);
    if (wd > material) {
      rep.notes.push_back(
          "inconsistent: clean additivity sweep but a convexity witness with "
          "a material gauge defect");
      fail_with(rep, w);
      return rep;
    }
  }
  rep.notes.push_back(
      "convexity witness is gauge-thin and the defect sweep is clean");
  return rep;
}

// ---------------------------------------------------------------------------
// thm-2.7: convexity/concavity/additivity over scalar-addition-stable classes
// ---------------------------------------------------------------------------

namespace {

struct ConeClass {
  std::function<RandVar(Rng&)> sample;
  bool scale_stable = true;
  bool usable = true;
  std::string note;
};

RandVar project_covariance(const RandVar& raw, const RandVar& pivot,
                           double target) {
  const double v = variance(pivot);
  const double c = covariance(pivot, raw);
  const double beta = (target - c) / v;
  const double mu = expectation(pivot);
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    out[i] = raw[i] + beta * (pivot[i] - mu);
  return RandVar(raw.space(), std::move(out));
}

ConeClass make_cone_class(ConeKind kind, const ProbSpacePtr& space, Rng& r) {
  ConeClass cls;
  switch (kind) {
    case ConeKind::comonotonic_span: {
      auto [x, y] = sample_comonotonic_pair(space, r);
      cls.sample = [x = std::move(x), y = std::move(y)](Rng& rr) {
        return cone_element(x, y, sample_cone_spec(rr)) + rr.uniform(-4.0, 4.0);
      };
      return cls;
    }
    case ConeKind::independent: {
      const std::size_t n = space->size();
      if (n % 2 != 0) {
        cls.usable = false;
        cls.note = "independent class needs an even product dimension";
        return cls;
      }
      const std::size_t n2 = n / 2;
      auto uniform_check = ProbSpace::product(ProbSpace::uniform(2),
                                              ProbSpace::uniform(n2));
      if (!same_space(uniform_check, space)) {
        cls.usable = false;
        cls.note = "independent class needs a uniform 2 x n/2 product space";
        return cls;
      }
      cls.sample = [space, n2](Rng& rr) {
        std::vector<double> ys(n2);
        for (double& v : ys) v = rr.uniform(-4.0, 4.0);
        const double c = rr.uniform(-4.0, 4.0);
        std::vector<double> out(space->size());
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < n2; ++j) out[i * n2 + j] = ys[j] + c;
        return RandVar(space, std::move(out));
      };
      return cls;
    }
    case ConeKind::uncorrelated:
    case ConeKind::covariance_one: {
      RandVar pivot = random_var(space, r);
      for (int k = 0; k < 8 && is_constant(pivot); ++k)
        pivot = random_var(space, r);
      const double target = kind == ConeKind::uncorrelated ? 0.0 : 1.0;
      cls.scale_stable = kind == ConeKind::uncorrelated;
      cls.sample = [pivot = std::move(pivot), target](Rng& rr) {
        RandVar raw = random_var(pivot.space(), rr);
        return project_covariance(raw, pivot, target) + rr.uniform(-4.0, 4.0);
      };
      return cls;
    }
  }
  cls.usable = false;
  return cls;
}

std::optional<RandVar> cash_into(const AcceptanceSet& a, const RandVar& x) {
  for (int k = 0; k <= 21; ++k) {
    for (double sign : {1.0, -1.0}) {
      RandVar cand = x + sign * std::exp2(k);
      if (a.contains(cand)) return cand;
    }
  }
  return std::nullopt;
}

/// Class-respecting conditioned sampling: cash rescues and cash pulls stay
/// inside every scalar-addition-stable class; scaling pulls are used only
/// when the class is a cone.
std::optional<RandVar> sample_class_member(const AcceptanceSet& a,
                                           const ConeClass& cls, Rng& r,
                                           std::size_t& budget, int strategy) {
  while (budget > 0) {
    --budget;
    RandVar e = cls.sample(r);
    std::optional<RandVar> inside;
    if (a.contains(e))
      inside = std::move(e);
    else if (strategy >= 1)
      inside = cash_into(a, e);
    if (!inside) continue;
    if (strategy == 1) return pull_cash(a, *inside, r);
    if (strategy == 2 && cls.scale_stable) return pull_scale(a, *inside, r);
    return inside;
  }
  return std::nullopt;
}

struct ClassAudit {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Counterexample> witness;
};

ClassAudit audit_class_convex(const AcceptanceSet& a, const ConeClass& cls,
                              std::uint64_t seed, std::size_t trials,
                              const std::string& label) {
  ClassAudit out;
  Rng root(seed);
  std::size_t budget = 50 * trials;
  std::size_t completed = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng r = root.child(t);
    auto e1 = sample_class_member(a, cls, r, budget, static_cast<int>(t % 3));
    if (!e1) break;
    auto e2 = sample_class_member(a, cls, r, budget, static_cast<int>(t % 3));
    if (!e2) break;
    const double lam = r.uniform01();
    RandVar mix = lam * *e1 + (1.0 - lam) * *e2;
    ++completed;
    if (!a.contains(mix)) {
      out.verdict = Verdict::fail;
      auto p = a.space()->probs();
      out.witness = Counterexample{"set-mixture",
                                   a.name(),
                                   {p.begin(), p.end()},
                                   {{"X", vals(*e1)}, {"Y", vals(*e2)}},
                                   {{"lambda", lam}},
                                   path(seed, label, t)};
      return out;
    }
  }
  out.verdict = completed == trials ? Verdict::pass : Verdict::inconclusive;
  return out;
}

}  // namespace

PropertyReport verify_main_lemma(const AcceptanceSet& a, ConeKind kind,
                                 const SuiteConfig& cfg) {
  PropertyReport rep;
  const auto& space = a.space();
  rep.check = make_check("thm-2.7", &a, cone_kind_name(kind), space->size(),
                         cfg);

  const std::size_t pre_trials = std::min<std::size_t>(cfg.trials, 2000);
  AxiomAudit pre = check_monotone(a, derive_seed(cfg.seed, 1), pre_trials);
  rep.subresults.push_back(sub_from_audit("precondition-monotone", pre));
  if (!a.declares(Flag::monotone) || pre.verdict != Verdict::pass) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back("monotonicity precondition not established");
    return rep;
  }

  const std::size_t cones = std::max<std::size_t>(1, cfg.trials / 200);
  const std::size_t inner_audit = 100;
  const std::size_t inner_assert = 10;
  const double add_bound = slack(cfg.tol, 3);
  const double side_bound = slack(cfg.tol, 3);

  Rng root(cfg.seed);
  AcceptanceSet comp = complement_view(a);
  std::size_t additive = 0, convex_only = 0, concave_only = 0, neither = 0,
              unresolved = 0, unusable = 0;
  std::size_t sweep_index = 0;
  rep.verdict = Verdict::pass;

  for (std::size_t k = 0; k < cones && rep.verdict == Verdict::pass; ++k) {
    Rng r = root.child(k);
    ConeClass cls = make_cone_class(kind, space, r);
    if (!cls.usable) {
      ++unusable;
      if (std::find(rep.notes.begin(), rep.notes.end(), cls.note) ==
          rep.notes.end())
        rep.notes.push_back(cls.note);
      continue;
    }
    ClassAudit in_a = audit_class_convex(a, cls, derive_seed(cfg.seed, 100 + k),
                                         inner_audit, "class-A");
    ClassAudit in_c = audit_class_convex(comp, cls,
                                         derive_seed(cfg.seed, 500 + k),
                                         inner_audit, "class-complement");
    if (in_a.verdict == Verdict::inconclusive ||
        in_c.verdict == Verdict::inconclusive) {
      ++unresolved;
      continue;
    }
    const bool conv_a = in_a.verdict == Verdict::pass;
    const bool conv_c = in_c.verdict == Verdict::pass;
    if (conv_a && conv_c)
      ++additive;
    else if (conv_a)
      ++convex_only;
    else if (conv_c)
      ++concave_only;
    else
      ++neither;
    if (convex_only + concave_only + neither == 1 && (!conv_a || !conv_c)) {
      // surface the first class-convexity witness alongside the counts
      const ClassAudit& failed = conv_a ? in_c : in_a;
      if (failed.witness) {
        SubResult sub;
        sub.name = "class-convexity-witness";
        sub.verdict = Verdict::fail;
        sub.note = std::string(conv_a ? "complement" : "set") +
                   " intersection with the class is not convex (cone " +
                   std::to_string(k) + ")";
        sub.counterexample = failed.witness;
        rep.subresults.push_back(std::move(sub));
      }
    }

    Rng ar = root.child(1000000 + k);
    for (std::size_t t = 0; t < inner_assert; ++t) {
      RandVar e1 = cls.sample(ar);
      RandVar e2 = cls.sample(ar);
      const double lam = ar.uniform01();
      GaugeResult g1 = rho(a, e1, cfg.tol);
      GaugeResult g2 = rho(a, e2, cfg.tol);
      if (!gauge_finite(g1) || !gauge_finite(g2)) continue;
      if (conv_a || conv_c) {
        GaugeResult gm = rho(a, lam * e1 + (1.0 - lam) * e2, cfg.tol);
        const double combo = lam * g1.value + (1.0 - lam) * g2.value;
        if (conv_a && gm.value > combo + side_bound) {
          fail_with(rep, Counterexample{"rho-convexity",
                                        a.name(),
                                        probs_of(space),
                                        {{"X", vals(e1)}, {"Y", vals(e2)}},
                                        {{"lambda", lam},
                                         {"rho_mix", gm.value},
                                         {"combo", combo},
                                         {"defect", gm.value - combo},
                                         {"bound", side_bound}},
                                        path(cfg.seed, "cone-" +
                                                           std::to_string(k),
                                             t)});
          break;
        }
        if (conv_c && gm.value < combo - side_bound) {
          fail_with(rep, Counterexample{"rho-concavity",
                                        a.name(),
                                        probs_of(space),
                                        {{"X", vals(e1)}, {"Y", vals(e2)}},
                                        {{"lambda", lam},
                                         {"rho_mix", gm.value},
                                         {"combo", combo},
                                         {"defect", combo - gm.value},
                                         {"bound", side_bound}},
                                        path(cfg.seed, "cone-" +
                                                           std::to_string(k),
                                             t)});
          break;
        }
      }
      GaugeResult gs = rho(a, e1 + e2, cfg.tol);
      const double d = std::abs(gs.value - g1.value - g2.value);
      rep.defect_rows.push_back(
          {sweep_index, d, path(cfg.seed, "cone-" + std::to_string(k), t)});
      ++sweep_index;
      if (conv_a && conv_c) {
        rep.stats.max_defect = std::max(rep.stats.max_defect, d);
        if (d > add_bound) {
          rep.notes.push_back(
              "inconsistent: both class convexity audits pass yet additivity "
              "fails in cone " +
              std::to_string(k));
          fail_with(rep, Counterexample{"rho-additivity",
                                        a.name(),
                                        probs_of(space),
                                        {{"X", vals(e1)}, {"Y", vals(e2)}},
                                        {{"rho_x", g1.value},
                                         {"rho_y", g2.value},
                                         {"rho_xy", gs.value},
                                         {"defect", d},
                                         {"bound", add_bound}},
                                        path(cfg.seed, "cone-" +
                                                           std::to_string(k),
                                             t)});
          break;
        }
      } else if (d > 10.0 * cfg.tol && !rep.counterexample) {
        // Record the observed non-additivity alongside the failed audit.
        SubResult sub;
        sub.name = "additivity-defect-observed";
        sub.verdict = Verdict::fail;
        sub.note = "class additivity defect " + fmt_double(d) + " in cone " +
                   std::to_string(k) + " (consistent: a class convexity audit "
                   "also failed)";
        sub.counterexample = Counterexample{"rho-additivity",
                                            a.name(),
                                            probs_of(space),
                                            {{"X", vals(e1)}, {"Y", vals(e2)}},
                                            {{"rho_x", g1.value},
                                             {"rho_y", g2.value},
                                             {"rho_xy", gs.value},
                                             {"defect", d},
                                             {"bound", 10.0 * cfg.tol}},
                                            path(cfg.seed, "cone-" +
                                                               std::to_string(k),
                                                 t)};
        bool already = false;
        for (const auto& s : rep.subresults)
          if (s.name == sub.name) already = true;
        if (!already) rep.subresults.push_back(std::move(sub));
      }
    }
    rep.stats.trials = k + 1;
  }

  rep.notes.push_back("cones: additive=" + std::to_string(additive) +
                      " convex-only=" + std::to_string(convex_only) +
                      " concave-only=" + std::to_string(concave_only) +
                      " neither=" + std::to_string(neither) +
                      " unresolved=" + std::to_string(unresolved));
  if (unusable == cones) rep.verdict = Verdict::inconclusive;
  if (rep.verdict == Verdict::pass && unresolved > cones / 2) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back("too many cones unresolved by the sampling budget");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// thm-3.7: sub/super-linearity and cone additivity of the gauge
// ---------------------------------------------------------------------------

namespace {

/// Membership of X in cone(A^c): some positive scaling lands in A^c.
bool in_cone_of_complement(const AcceptanceSet& a, const RandVar& x) {
  for (int k = -20; k <= 20; ++k)
    if (!a.contains(std::exp2(k) * x)) return true;
  return false;
}

struct SpanCone {
  RandVar x;
  RandVar y;
  RandVar element(Rng& r) const {
    return cone_element(x, y, sample_cone_spec(r));
  }
};

}  // namespace

PropertyReport verify_dev_additive(const AcceptanceSet& a,
                                   const SuiteConfig& cfg) {
  PropertyReport rep;
  const auto& space = a.space();
  rep.check =
      make_check("thm-3.7", &a, "comonotonic-spans", space->size(), cfg);
  if (!a.declares(Flag::star_shaped)) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back("set does not declare the star-shaped flag the gauge "
                        "requires");
    return rep;
  }
  rep.verdict = Verdict::pass;

  auto dev = [&](const RandVar& x) { return minkowski_dev(a, x, cfg.tol); };
  const double bound3 = slack(cfg.tol, 3);
  Rng root(cfg.seed);

  // Positive homogeneity holds for every star-shaped set.
  {
    SubResult sub;
    sub.name = "positive-homogeneity";
    sub.verdict = Verdict::pass;
    Rng r = root.child(1);
    const std::size_t n_hom = std::max<std::size_t>(20, cfg.trials / 100);
    for (std::size_t t = 0; t < n_hom && sub.verdict == Verdict::pass; ++t) {
      RandVar x = random_var(space, r);
      GaugeResult gx = dev(x);
      if (!gauge_finite(gx)) continue;
      for (double lam : {0.5, 2.0, 10.0}) {
        GaugeResult gl = dev(lam * x);
        const double d = std::abs(gl.value - lam * gx.value);
        const double hom_bound = cfg.tol * (1.0 + lam) + kSlackEps;
        if (gauge_finite(gl) && d > hom_bound) {
          sub.verdict = Verdict::fail;
          sub.counterexample = Counterexample{"dev-homogeneity",
                                              a.name(),
                                              probs_of(space),
                                              {{"X", vals(x)}},
                                              {{"lambda", lam},
                                               {"dev_x", gx.value},
                                               {"dev_lx", gl.value},
                                               {"defect", d},
                                               {"bound", hom_bound}},
                                              path(cfg.seed, "homogeneity", t)};
          fail_with(rep, *sub.counterexample);
          break;
        }
      }
    }
    rep.subresults.push_back(std::move(sub));
  }

  // Item 1: convex set => sub-linear gauge.
  AxiomAudit conv_a = audit_flag(a, Flag::convex, derive_seed(cfg.seed, 2),
                                 cfg.trials);
  rep.subresults.push_back(sub_from_audit("audit-convex-A", conv_a));
  if (conv_a.verdict == Verdict::pass && rep.verdict == Verdict::pass) {
    Rng r = root.child(2);
    const std::size_t n_mix = std::max<std::size_t>(50, cfg.trials / 20);
    for (std::size_t t = 0; t < n_mix; ++t) {
      RandVar x = random_var(space, r);
      RandVar y = random_var(space, r);
      const double lam = r.uniform01();
      GaugeResult gx = dev(x), gy = dev(y);
      if (!gauge_finite(gx) || !gauge_finite(gy)) continue;
      GaugeResult gm = dev(lam * x + (1.0 - lam) * y);
      const double combo = lam * gx.value + (1.0 - lam) * gy.value;
      if (gm.value > combo + bound3) {
        fail_with(rep, Counterexample{"dev-sublinearity",
                                      a.name(),
                                      probs_of(space),
                                      {{"X", vals(x)}, {"Y", vals(y)}},
                                      {{"lambda", lam},
                                       {"dev_mix", gm.value},
                                       {"combo", combo},
                                       {"defect", gm.value - combo},
                                       {"bound", bound3}},
                                      path(cfg.seed, "sublinearity", t)});
        break;
      }
    }
  }

  // Item 2: convex complement => super-additivity on cone(A^c).
  AxiomAudit conv_c = audit_flag(complement_view(a), Flag::convex,
                                 derive_seed(cfg.seed, 3), cfg.trials);
  rep.subresults.push_back(sub_from_audit("audit-convex-complement", conv_c));
  if (conv_c.verdict == Verdict::pass && rep.verdict == Verdict::pass) {
    Rng r = root.child(3);
    const std::size_t n_sup = std::max<std::size_t>(50, cfg.trials / 20);
    std::size_t found = 0, attempts = 0;
    while (found < n_sup && attempts < 50 * n_sup) {
      ++attempts;
      RandVar x = random_var(space, r);
      RandVar y = random_var(space, r);
      if (!in_cone_of_complement(a, x) || !in_cone_of_complement(a, y))
        continue;
      ++found;
      GaugeResult gx = dev(x), gy = dev(y);
      GaugeResult gs = dev(x + y);
      if (!gauge_finite(gx) || !gauge_finite(gy) || !gauge_finite(gs)) continue;
      if (gs.value < gx.value + gy.value - bound3) {
        fail_with(rep,
                  Counterexample{"dev-superadditivity",
                                 a.name(),
                                 probs_of(space),
                                 {{"X", vals(x)}, {"Y", vals(y)}},
                                 {{"dev_x", gx.value},
                                  {"dev_y", gy.value},
                                  {"dev_xy", gs.value},
                                  {"defect", gx.value + gy.value - gs.value},
                                  {"bound", bound3}},
                                 path(cfg.seed, "superadditivity", found)});
        break;
      }
    }
    rep.notes.push_back("cone-of-complement pairs sampled: " +
                        std::to_string(found));
  }

  // Items 3 and 4 over comonotonic spans.
  const std::size_t cones = std::max<std::size_t>(1, cfg.trials / 500);
  const std::size_t level_cones = std::min<std::size_t>(cones, 8);
  std::size_t additive_cones = 0, nonconvex_cones = 0, skipped_cones = 0;
  AcceptanceSet comp = complement_view(a);
  for (std::size_t k = 0; k < cones && rep.verdict == Verdict::pass; ++k) {
    Rng r = root.child(10000 + k);
    auto [cx, cy] = sample_comonotonic_pair(space, r);
    if (is_constant(cx) || is_constant(cy)) {
      ++skipped_cones;
      continue;
    }
    // Item 3 requires the cone to sit inside cone(A^c).
    if (!in_cone_of_complement(a, cx) || !in_cone_of_complement(a, cy)) {
      ++skipped_cones;
      continue;
    }
    SpanCone cone{cx, cy};

    // Convexity of A n C and A^c n C, conditioning by scaling only: the
    // span is a cone but not scalar-addition stable, so cash moves would
    // leave it.
    auto span_audit = [&](const AcceptanceSet& target, std::uint64_t seed,
                          const std::string& label) {
      ClassAudit out;
      Rng ar(seed);
      const std::size_t inner = 100;
      std::size_t budget = 50 * inner;
      auto draw_member = [&](Rng& cr, bool pull) -> std::optional<RandVar> {
        while (budget > 0) {
          --budget;
          RandVar e = cone.element(cr);
          std::optional<RandVar> inside;
          if (target.contains(e)) {
            inside = std::move(e);
          } else {
            for (int kk = 1; kk <= 20 && !inside; ++kk) {
              RandVar down = std::exp2(-kk) * e;
              if (target.contains(down)) {
                inside = std::move(down);
                break;
              }
              RandVar up = std::exp2(kk) * e;
              if (target.contains(up)) inside = std::move(up);
            }
          }
          if (!inside) continue;
          return pull ? pull_scale(target, *inside, cr) : *inside;
        }
        return std::nullopt;
      };
      std::size_t completed = 0;
      for (std::size_t t = 0; t < inner; ++t) {
        Rng cr = ar.child(t);
        auto e1 = draw_member(cr, t % 2 == 0);
        auto e2 = draw_member(cr, t % 2 == 0);
        if (!e1 || !e2) break;
        const double lam = cr.uniform01();
        RandVar mix = lam * *e1 + (1.0 - lam) * *e2;
        ++completed;
        if (!target.contains(mix)) {
          out.verdict = Verdict::fail;
          out.witness = Counterexample{"set-mixture",
                                       target.name(),
                                       probs_of(space),
                                       {{"X", vals(*e1)}, {"Y", vals(*e2)}},
                                       {{"lambda", lam}},
                                       path(seed, label, t)};
          return out;
        }
      }
      out.verdict = completed == inner ? Verdict::pass : Verdict::inconclusive;
      return out;
    };

    ClassAudit in_a =
        span_audit(a, derive_seed(cfg.seed, 2000 + k), "span-A");
    ClassAudit in_c =
        span_audit(comp, derive_seed(cfg.seed, 3000 + k), "span-complement");
    if (in_a.verdict == Verdict::inconclusive ||
        in_c.verdict == Verdict::inconclusive) {
      ++skipped_cones;
      continue;
    }
    const bool both = in_a.verdict == Verdict::pass &&
                      in_c.verdict == Verdict::pass;
    if (!both) {
      ++nonconvex_cones;
      if (nonconvex_cones == 1) {
        const ClassAudit& failed =
            in_a.verdict == Verdict::pass ? in_c : in_a;
        if (failed.witness) {
          SubResult sub;
          sub.name = "span-convexity-witness";
          sub.verdict = Verdict::fail;
          sub.note = "a span intersection is not convex (span " +
                     std::to_string(k) + ")";
          sub.counterexample = failed.witness;
          rep.subresults.push_back(std::move(sub));
        }
      }
    }

    // Measure additivity of the gauge on the span.
    Rng ar = root.child(20000 + k);
    double cone_maxd = 0.0;
    std::optional<Counterexample> cone_worst;
    for (std::size_t t = 0; t < 10; ++t) {
      RandVar e1 = cone.element(ar);
      RandVar e2 = cone.element(ar);
      GaugeResult g1 = dev(e1), g2 = dev(e2), gs = dev(e1 + e2);
      if (!gauge_finite(g1) || !gauge_finite(g2) || !gauge_finite(gs)) continue;
      const double d = std::abs(gs.value - g1.value - g2.value);
      rep.defect_rows.push_back(
          {rep.defect_rows.size(), d,
           path(cfg.seed, "span-" + std::to_string(k), t)});
      if (d > cone_maxd) {
        cone_maxd = d;
        cone_worst = Counterexample{"dev-additivity",
                                    a.name(),
                                    probs_of(space),
                                    {{"X", vals(e1)}, {"Y", vals(e2)}},
                                    {{"dev_x", g1.value},
                                     {"dev_y", g2.value},
                                     {"dev_xy", gs.value},
                                     {"defect", d},
                                     {"bound", bound3}},
                                    path(cfg.seed,
                                         "span-" + std::to_string(k), t)};
      }
    }
    rep.stats.max_defect = std::max(rep.stats.max_defect, cone_maxd);
    if (both && cone_maxd > bound3) {
      rep.notes.push_back(
          "inconsistent: both span convexity audits pass yet gauge additivity "
          "fails in span " +
          std::to_string(k));
      fail_with(rep, *cone_worst);
      break;
    }

    // Item 4: where the gauge is additive on the span, sub-level
    // intersections and their in-span complements must be convex.
    if (cone_maxd <= 10.0 * cfg.tol) ++additive_cones;
    if (cone_maxd <= 10.0 * cfg.tol && k < level_cones) {
      Rng lr = root.child(30000 + k);
      const double margin = 10.0 * cfg.tol;
      for (double level : {0.5, 1.0, 2.0}) {
        for (std::size_t t = 0; t < 30 && rep.verdict == Verdict::pass; ++t) {
          RandVar e1 = cone.element(lr);
          RandVar e2 = cone.element(lr);
          GaugeResult g1 = dev(e1), g2 = dev(e2);
          if (!gauge_finite(g1) || !gauge_finite(g2)) continue;
          if (g1.value <= cfg.tol || g2.value <= cfg.tol) continue;
          const bool below = t % 2 == 0;
          // Scale both strictly to one side of the level.
          const double u1 = lr.uniform(0.05, 0.5);
          const double u2 = lr.uniform(0.05, 0.5);
          const double s1 =
              below ? level * (1.0 - u1) / g1.value : level * (1.0 + u1) / g1.value;
          const double s2 =
              below ? level * (1.0 - u2) / g2.value : level * (1.0 + u2) / g2.value;
          RandVar f1 = s1 * e1;
          RandVar f2 = s2 * e2;
          GaugeResult h1 = dev(f1), h2 = dev(f2);
          if (!gauge_finite(h1) || !gauge_finite(h2)) continue;
          const bool ok1 = below ? h1.value <= level - margin
                                 : h1.value >= level + margin;
          const bool ok2 = below ? h2.value <= level - margin
                                 : h2.value >= level + margin;
          if (!ok1 || !ok2) continue;
          const double lam = lr.uniform01();
          GaugeResult hm = dev(lam * f1 + (1.0 - lam) * f2);
          if (!gauge_finite(hm)) continue;
          const bool violated = below ? hm.value > level + margin
                                      : hm.value < level - margin;
          if (violated) {
            fail_with(rep,
                      Counterexample{"sublevel-mixture",
                                     a.name(),
                                     probs_of(space),
                                     {{"X", vals(f1)}, {"Y", vals(f2)}},
                                     {{"lambda", lam},
                                      {"level", level},
                                      {"side", below ? 1.0 : -1.0},
                                      {"dev_x", h1.value},
                                      {"dev_y", h2.value},
                                      {"dev_mix", hm.value},
                                      {"bound", margin}},
                                     path(cfg.seed,
                                          "level-" + std::to_string(k), t)});
            rep.notes.push_back(
                "inconsistent: gauge additive on span " + std::to_string(k) +
                " but a sub-level intersection is not convex");
            break;
          }
        }
      }
    }
    rep.stats.trials = k + 1;
  }

  rep.notes.push_back("spans: additive=" + std::to_string(additive_cones) +
                      " nonconvex=" + std::to_string(nonconvex_cones) +
                      " skipped=" + std::to_string(skipped_cones));
  return rep;
}

// ---------------------------------------------------------------------------
// thm-3.8: deviation main result
// ---------------------------------------------------------------------------

PropertyReport verify_coro_como(const AcceptanceSet& a,
                                const SuiteConfig& cfg) {
  PropertyReport rep;
  const auto& space = a.space();
  rep.check =
      make_check("thm-3.8", &a, "comonotonic-pairs", space->size(), cfg);
  if (!a.declares(Flag::star_shaped)) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back("set does not declare the star-shaped flag the gauge "
                        "requires");
    return rep;
  }

  AxiomAudit rb = audit_flag(a, Flag::radially_bounded,
                             derive_seed(cfg.seed, 1), cfg.trials);
  AxiomAudit ss = audit_flag(a, Flag::scalar_stable, derive_seed(cfg.seed, 2),
                             cfg.trials);
  AxiomAudit cc_a = audit_flag(a, Flag::comonotonic_convex,
                               derive_seed(cfg.seed, 3), cfg.trials);
  AxiomAudit cc_c = audit_flag(a, Flag::complement_comonotonic_convex,
                               derive_seed(cfg.seed, 4), cfg.trials);
  AxiomAudit star = check_star_shaped(a, derive_seed(cfg.seed, 5), cfg.trials);
  rep.subresults.push_back(sub_from_audit("audit-radially-bounded", rb));
  rep.subresults.push_back(sub_from_audit("audit-scalar-stable", ss));
  rep.subresults.push_back(sub_from_audit("audit-comonotonic-convex-A", cc_a));
  rep.subresults.push_back(
      sub_from_audit("audit-comonotonic-convex-complement", cc_c));
  rep.subresults.push_back(sub_from_audit("audit-star-shaped", star));
  for (const AxiomAudit* audit : {&rb, &ss, &cc_a, &cc_c}) {
    if (audit->verdict == Verdict::inconclusive) {
      rep.verdict = Verdict::inconclusive;
      rep.notes.push_back("structural audits did not resolve");
      return rep;
    }
  }

  // Defect sweep over non-constant comonotonic pairs.
  Rng root(cfg.seed);
  double maxd = 0.0;
  std::optional<Counterexample> worst;
  std::size_t skipped = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng r = root.child(t);
    auto [x, y] = sample_comonotonic_pair(space, r);
    if (is_constant(x) || is_constant(y)) {
      ++skipped;
      continue;
    }
    GaugeResult gx = minkowski_dev(a, x, cfg.tol);
    GaugeResult gy = minkowski_dev(a, y, cfg.tol);
    GaugeResult gs = minkowski_dev(a, x + y, cfg.tol);
    if (!gauge_finite(gx) || !gauge_finite(gy) || !gauge_finite(gs)) {
      ++skipped;
      continue;
    }
    const double d = std::abs(gs.value - gx.value - gy.value);
    rep.defect_rows.push_back({t, d, path(cfg.seed, "sweep", t)});
    rep.stats.trials = t + 1;
    if (d > maxd) {
      maxd = d;
      worst = Counterexample{"dev-additivity",
                             a.name(),
                             probs_of(space),
                             {{"X", vals(x)}, {"Y", vals(y)}},
                             {{"dev_x", gx.value},
                              {"dev_y", gy.value},
                              {"dev_xy", gs.value},
                              {"defect", d},
                              {"bound", slack(cfg.tol, 3)}},
                             path(cfg.seed, "sweep", t)};
    }
  }
  rep.stats.max_defect = maxd;
  if (skipped > 0)
    rep.notes.push_back("skipped " + std::to_string(skipped) +
                        " degenerate sweep trial(s)");

  const bool all_pass =
      rb.verdict == Verdict::pass && ss.verdict == Verdict::pass &&
      cc_a.verdict == Verdict::pass && cc_c.verdict == Verdict::pass;
  const double material = 10.0 * cfg.tol;
  rep.verdict = Verdict::pass;

  if (all_pass) {
    if (star.verdict != Verdict::pass) {
      rep.notes.push_back(
          "inconsistent: star-shapedness must follow from comonotonic "
          "convexity at the origin");
      if (star.witness) fail_with(rep, *star.witness);
      return rep;
    }
    if (maxd > slack(cfg.tol, 3)) {
      rep.notes.push_back(
          "inconsistent: structural audits pass yet the gauge is not "
          "comonotonic additive");
      fail_with(rep, *worst);
      return rep;
    }
    rep.notes.push_back("additive regime: all structural audits pass and the "
                        "gauge defect sweep is clean");
  } else {
    const bool convexity_failed = cc_a.verdict == Verdict::fail ||
                                  cc_c.verdict == Verdict::fail;
    if (maxd > material && convexity_failed) {
      rep.notes.push_back(
          "contrapositive regime: gauge additivity defect and "
          "comonotonic-convexity witness are both present, as the "
          "equivalence requires");
      if (worst) {
        SubResult sub;
        sub.name = "additivity-defect-observed";
        sub.verdict = Verdict::fail;
        sub.note =
            "largest comonotonic additivity defect: " + fmt_double(maxd);
        sub.counterexample = *worst;
        rep.subresults.push_back(std::move(sub));
      }
    } else if (maxd > material) {
      rep.notes.push_back(
          "structural preconditions fail (not the convexity ones); the "
          "theorem does not apply and the defect is unconstrained");
    } else if (convexity_failed) {
      // Clean sweep + convexity witness: only consistent when the witness
      // is gauge-thin.
      for (const AxiomAudit* audit : {&cc_a, &cc_c}) {
        if (audit->verdict != Verdict::fail || !audit->witness) continue;
        const auto& w = *audit->witness;
        const auto* px = w.point("X");
        const auto* py = w.point("Y");
        if (!px || !py) continue;
        RandVar x(space, *px), y(space, *py);
        const double lam = w.scalar("lambda");
        GaugeResult gm = minkowski_dev(a, lam * x + (1.0 - lam) * y, cfg.tol);
        GaugeResult gx = minkowski_dev(a, x, cfg.tol);
        GaugeResult gy = minkowski_dev(a, y, cfg.tol);
        if (!gauge_finite(gm) || !gauge_finite(gx) || !gauge_finite(gy))
          continue;
        const double wd =
            std::abs(gm.value - lam * gx.value - (1.0 - lam) * gy.value);
        if (wd > material) {
          rep.notes.push_back(
              "inconsistent: clean gauge additivity sweep but a convexity "
              "witness with a material gauge defect");
          fail_with(rep, w);
          return rep;
        }
      }
      rep.notes.push_back("convexity witness is gauge-thin and the sweep is "
                          "clean");
    } else {
      rep.notes.push_back("structural preconditions fail; theorem not "
                          "applicable");
    }
  }

  // Converse: when the gauge is comonotonic additive, sub-level sets and
  // their complements are comonotonic convex.
  if (maxd <= material) {
    auto dev_fn = [&](const RandVar& x) {
      GaugeResult g = minkowski_dev(a, x, cfg.tol);
      return gauge_finite(g) ? g.value : kInf;
    };
    const double margin = 10.0 * cfg.tol;
    Rng lr = root.child(5000000);
    bool converse_ok = true;
    std::optional<Counterexample> converse_ce;
    for (double level : {0.5, 1.0, 2.0}) {
      const std::size_t inner = std::min<std::size_t>(cfg.trials, 300);
      for (std::size_t t = 0; t < inner; ++t) {
        auto [x, y] = sample_comonotonic_pair(space, lr);
        if (is_constant(x) || is_constant(y)) continue;
        const double dx = dev_fn(x), dy = dev_fn(y);
        if (!std::isfinite(dx) || !std::isfinite(dy) || dx <= cfg.tol ||
            dy <= cfg.tol)
          continue;
        const bool below = t % 2 == 0;
        const double u1 = lr.uniform(0.05, 0.5);
        const double u2 = lr.uniform(0.05, 0.5);
        const double s1 = below ? level * (1.0 - u1) / dx : level * (1.0 + u1) / dx;
        const double s2 = below ? level * (1.0 - u2) / dy : level * (1.0 + u2) / dy;
        RandVar f1 = s1 * x;  // positive scaling preserves comonotonicity
        RandVar f2 = s2 * y;
        const double h1 = dev_fn(f1), h2 = dev_fn(f2);
        const bool ok1 = below ? h1 <= level - margin : h1 >= level + margin;
        const bool ok2 = below ? h2 <= level - margin : h2 >= level + margin;
        if (!ok1 || !ok2) continue;
        const double lam = lr.uniform01();
        const double hm = dev_fn(lam * f1 + (1.0 - lam) * f2);
        const bool violated =
            below ? hm > level + margin : hm < level - margin;
        if (violated) {
          converse_ok = false;
          converse_ce = Counterexample{"sublevel-mixture",
                                       a.name(),
                                       probs_of(space),
                                       {{"X", vals(f1)}, {"Y", vals(f2)}},
                                       {{"lambda", lam},
                                        {"level", level},
                                        {"side", below ? 1.0 : -1.0},
                                        {"dev_x", h1},
                                        {"dev_y", h2},
                                        {"dev_mix", hm},
                                        {"bound", margin}},
                                       path(cfg.seed, "converse", t)};
          break;
        }
      }
      if (!converse_ok) break;
    }
    SubResult sub;
    sub.name = "converse-sublevel-comonotonic-convex";
    sub.verdict = converse_ok ? Verdict::pass : Verdict::fail;
    if (!converse_ok) {
      sub.counterexample = converse_ce;
      rep.notes.push_back(
          "inconsistent: gauge comonotonic additive but a sub-level set is "
          "not comonotonic convex");
      fail_with(rep, *converse_ce);
    }
    rep.subresults.push_back(std::move(sub));
  } else {
    rep.notes.push_back(
        "converse sub-level check skipped: gauge not comonotonic additive");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// fig1 counterexample
// ---------------------------------------------------------------------------

PropertyReport counterexample_fig1(double tol) {
  PropertyReport rep;
  auto space = ProbSpace::uniform(2);
  AcceptanceSet a = fig1_set(space);
  SuiteConfig cfg{1, 0, tol};
  rep.check = make_check("fig1-counterexample", &a, "designed-points", 2, cfg);

  const RandVar y(space, {1.0, 0.5});
  const RandVar z(space, {1.0, 1.0});
  const RandVar w(space, {1.0, 2.0});

  GaugeResult dy = minkowski_dev(a, y, tol);
  GaugeResult dz = minkowski_dev(a, z, tol);
  GaugeResult dw = minkowski_dev(a, w, tol);

  const double lambda = (z[1] - y[1]) / (w[1] - y[1]);
  RandVar mix = lambda * w + (1.0 - lambda) * y;
  const double mix_err =
      std::max(std::abs(mix[0] - z[0]), std::abs(mix[1] - z[1]));
  const double defect = dz.value - (lambda * dw.value + (1.0 - lambda) * dy.value);

  const double tol_pts = 1e-6;
  struct Assert {
    const char* name;
    bool ok;
  } asserts[] = {
      {"dev(Y) == 0", std::abs(dy.value) <= tol_pts},
      {"dev(Z) == 0", std::abs(dz.value) <= tol_pts},
      {"dev(W) == 1", std::abs(dw.value - 1.0) <= tol_pts},
      {"dev(Z) < dev(W)", dz.value < dw.value},
      {"Z == lambda*W + (1-lambda)*Y", mix_err <= 1e-12},
      {"lambda == 1/3", std::abs(lambda - 1.0 / 3.0) <= 1e-12},
      {"concavity defect == -1/3", std::abs(defect + 1.0 / 3.0) <= tol_pts},
  };

  rep.verdict = Verdict::pass;
  for (const auto& as : asserts) {
    SubResult sub;
    sub.name = as.name;
    sub.verdict = as.ok ? Verdict::pass : Verdict::fail;
    rep.subresults.push_back(std::move(sub));
    if (!as.ok) rep.verdict = Verdict::fail;
  }
  rep.stats.trials = 1;
  rep.stats.max_defect = std::abs(defect);
  rep.counterexample = Counterexample{
      "concavity-counterexample",
      a.name(),
      probs_of(space),
      {{"Y", vals(y)}, {"Z", vals(z)}, {"W", vals(w)}},
      {{"dev_y", dy.value},
       {"dev_z", dz.value},
       {"dev_w", dw.value},
       {"lambda", lambda},
       {"concavity_defect", defect},
       {"bound", tol_pts}},
      ""};
  rep.notes.push_back("gauge values (dev_y, dev_z, dev_w) = (" +
                      fmt_double(dy.value) + ", " + fmt_double(dz.value) +
                      ", " + fmt_double(dw.value) + "); concavity defect " +
                      fmt_double(defect));
  return rep;
}

// ---------------------------------------------------------------------------
// counterexample replay
// ---------------------------------------------------------------------------

namespace {

bool close(double a, double b) { return std::abs(a - b) <= 1e-6 * (1.0 + std::abs(b)); }

}  // namespace

bool replay_reproduces(const Counterexample& ce, double tol) {
  auto space = ProbSpace::make(ce.probs);
  auto var_of = [&](const std::string& name) {
    const auto* p = ce.point(name);
    if (!p) throw DomainError("replay: missing point '" + name + "'");
    return RandVar(space, *p);
  };

  if (ce.kind.rfind("set-", 0) == 0) {
    AcceptanceSet a = set_from_name(ce.set_name, space);
    return replay_violates(a, ce);
  }

  if (ce.kind == "cone-comonotonicity") {
    return !is_comonotonic(var_of("Z"), var_of("W"));
  }
  if (ce.kind == "cone-constant") {
    RandVar z = var_of("Z");
    const double ca = ce.scalar("gamma") * ce.scalar("lambda");
    const double cb = (1.0 - ce.scalar("gamma")) * ce.scalar("delta");
    return (ca > 0.0 || cb > 0.0) && is_constant(z);
  }

  AcceptanceSet a = set_from_name(ce.set_name, space);
  const double bound = ce.scalar("bound", slack(tol, 3));

  if (ce.kind == "identity-risk-corisk") {
    const double d =
        gauge_diff(rho(a, var_of("X"), tol), psi_complement(a, var_of("X"), tol));
    return d > bound && close(d, ce.scalar("defect"));
  }
  if (ce.kind == "identity-dev-cogauge") {
    const double d = gauge_diff(minkowski_dev(a, var_of("X"), tol),
                                cogauge_complement(a, var_of("X"), tol));
    return d > bound && close(d, ce.scalar("defect"));
  }
  if (ce.kind == "sandwich-risk") {
    RandVar x = var_of("X");
    GaugeResult g = rho(a, x, tol);
    const bool member = a.contains(x);
    return (g.value < -bound && !member) || (member && g.value > bound);
  }
  if (ce.kind == "sandwich-dev") {
    RandVar x = var_of("X");
    GaugeResult g = minkowski_dev(a, x, tol);
    const double dv = gauge_finite(g) ? g.value : kInf;
    const bool member = a.contains(x);
    return (dv < 1.0 - bound && !member) || (member && dv > 1.0 + bound);
  }
  if (ce.kind == "rho-additivity") {
    RandVar x = var_of("X"), y = var_of("Y");
    const double d = std::abs(rho(a, x + y, tol).value - rho(a, x, tol).value -
                              rho(a, y, tol).value);
    return d > bound && close(d, ce.scalar("defect"));
  }
  if (ce.kind == "dev-additivity") {
    RandVar x = var_of("X"), y = var_of("Y");
    const double d = std::abs(minkowski_dev(a, x + y, tol).value -
                              minkowski_dev(a, x, tol).value -
                              minkowski_dev(a, y, tol).value);
    return d > bound && close(d, ce.scalar("defect"));
  }
  if (ce.kind == "rho-convexity" || ce.kind == "rho-concavity") {
    RandVar x = var_of("X"), y = var_of("Y");
    const double lam = ce.scalar("lambda");
    const double m = rho(a, lam * x + (1.0 - lam) * y, tol).value;
    const double combo =
        lam * rho(a, x, tol).value + (1.0 - lam) * rho(a, y, tol).value;
    const double d = ce.kind == "rho-convexity" ? m - combo : combo - m;
    return d > bound;
  }
  if (ce.kind == "dev-sublinearity") {
    RandVar x = var_of("X"), y = var_of("Y");
    const double lam = ce.scalar("lambda");
    const double m = minkowski_dev(a, lam * x + (1.0 - lam) * y, tol).value;
    const double combo = lam * minkowski_dev(a, x, tol).value +
                         (1.0 - lam) * minkowski_dev(a, y, tol).value;
    return m - combo > bound;
  }
  if (ce.kind == "dev-superadditivity") {
    RandVar x = var_of("X"), y = var_of("Y");
    const double d = minkowski_dev(a, x, tol).value +
                     minkowski_dev(a, y, tol).value -
                     minkowski_dev(a, x + y, tol).value;
    return d > bound;
  }
  if (ce.kind == "dev-homogeneity") {
    RandVar x = var_of("X");
    const double lam = ce.scalar("lambda");
    const double d = std::abs(minkowski_dev(a, lam * x, tol).value -
                              lam * minkowski_dev(a, x, tol).value);
    return d > bound;
  }
  if (ce.kind == "sublevel-mixture") {
    RandVar x = var_of("X"), y = var_of("Y");
    const double lam = ce.scalar("lambda");
    const double level = ce.scalar("level");
    const bool below = ce.scalar("side") > 0.0;
    const double hm =
        minkowski_dev(a, lam * x + (1.0 - lam) * y, tol).value;
    const double h1 = minkowski_dev(a, x, tol).value;
    const double h2 = minkowski_dev(a, y, tol).value;
    const bool sides_ok = below
                              ? h1 <= level - bound && h2 <= level - bound
                              : h1 >= level + bound && h2 >= level + bound;
    const bool violated = below ? hm > level + bound : hm < level - bound;
    return sides_ok && violated;
  }
  if (ce.kind == "concavity-counterexample") {
    RandVar y = var_of("Y"), z = var_of("Z"), w = var_of("W");
    const double lam = ce.scalar("lambda");
    const double defect =
        minkowski_dev(a, z, tol).value -
        (lam * minkowski_dev(a, w, tol).value +
         (1.0 - lam) * minkowski_dev(a, y, tol).value);
    return defect < -ce.scalar("bound", 1e-6) &&
           close(defect, ce.scalar("concavity_defect"));
  }
  throw DomainError("replay: unknown counterexample kind '" + ce.kind + "'");
}

}  // namespace riskset
