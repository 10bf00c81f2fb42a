#include "riskset/audits.hpp"

#include <cmath>
#include <limits>

#include "riskset/errors.hpp"

namespace riskset {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

constexpr double kGuard = 1e12;

std::vector<double> probs_of(const AcceptanceSet& a) {
  auto p = a.space()->probs();
  return {p.begin(), p.end()};
}

std::vector<double> vals(const RandVar& x) {
  auto v = x.values();
  return {v.begin(), v.end()};
}

std::string path(std::uint64_t seed, const std::string& stage, std::size_t t) {
  return std::to_string(seed) + "/" + stage + "/" + std::to_string(t);
}

/// Rescue a rejected draw by scaling: probe delta = 2^{+-k} and return the
/// first scaled member. Alternates directions so both star-shaped sets and
/// their complements are reachable.
std::optional<RandVar> scale_into(const AcceptanceSet& a, const RandVar& x) {
  for (int k = 1; k <= 20; ++k) {
    RandVar down = std::exp2(-k) * x;
    if (a.contains(down)) return down;
    RandVar up = std::exp2(k) * x;
    if (a.contains(up)) return up;
  }
  return std::nullopt;
}

/// Rescue by a cash shift, smallest magnitudes first; effective for
/// monotone sets and their complements.
std::optional<RandVar> cash_rescue(const AcceptanceSet& a, const RandVar& x) {
  for (int k = 0; k <= 21; ++k) {
    for (double sign : {1.0, -1.0}) {
      RandVar cand = x + sign * std::exp2(k);
      if (a.contains(cand)) return cand;
    }
  }
  return std::nullopt;
}

std::optional<RandVar> rescue_into(const AcceptanceSet& a, const RandVar& x) {
  auto scaled = scale_into(a, x);
  if (scaled) return scaled;
  return cash_rescue(a, x);
}

}  // namespace

RandVar pull_cash(const AcceptanceSet& a, const RandVar& x, Rng& rng) {
  const double dir = rng.coin() ? 1.0 : -1.0;
  double t_out = 0.0;
  bool found = false;
  for (double sign : {dir, -dir}) {
    for (int k = 0; k <= 21 && !found; ++k) {
      double t = sign * std::exp2(k);
      if (!a.contains(x + t)) {
        t_out = t;
        found = true;
      }
    }
    if (found) break;
  }
  if (!found) return x;  // no membership boundary along the cash direction

  double t_in = 0.0;
  for (int i = 0; i < 40; ++i) {
    double mid = 0.5 * (t_in + t_out);
    (a.contains(x + mid) ? t_in : t_out) = mid;
  }
  // Randomized clearance keeps conditioned samples off the exact boundary.
  const double u = std::pow(10.0, rng.uniform(-6.0, -0.3));
  RandVar cand = x + t_in * (1.0 - u);
  return a.contains(cand) ? cand : x;
}

RandVar pull_scale(const AcceptanceSet& a, const RandVar& x, Rng& rng) {
  const double dir = rng.coin() ? 1.0 : -1.0;
  double l_out = 0.0;
  bool found = false;
  for (double sign : {dir, -dir}) {
    for (int k = 1; k <= 21 && !found; ++k) {
      double l = sign * k;
      if (!a.contains(std::exp2(l) * x)) {
        l_out = l;
        found = true;
      }
    }
    if (found) break;
  }
  if (!found) return x;

  double l_in = 0.0;
  for (int i = 0; i < 40; ++i) {
    double mid = 0.5 * (l_in + l_out);
    (a.contains(std::exp2(mid) * x) ? l_in : l_out) = mid;
  }
  const double u = std::pow(10.0, rng.uniform(-6.0, -0.3));
  RandVar cand = std::exp2(l_in * (1.0 - u)) * x;
  return a.contains(cand) ? cand : x;
}

std::optional<RandVar> sample_member(const AcceptanceSet& a, Rng& rng,
                                     std::size_t& budget, int strategy,
                                     const AuditOptions& opts) {
  while (budget > 0) {
    --budget;
    RandVar x = random_var(a.space(), rng, opts.coord_lo, opts.coord_hi);
    std::optional<RandVar> inside;
    if (a.contains(x))
      inside = std::move(x);
    else
      inside = rescue_into(a, x);
    if (!inside) continue;
    if (opts.boundary_pull && strategy == 1) return pull_cash(a, *inside, rng);
    if (opts.boundary_pull && strategy == 2) return pull_scale(a, *inside, rng);
    return inside;
  }
  return std::nullopt;
}

std::optional<std::pair<RandVar, RandVar>> sample_member_pair(
    const AcceptanceSet& a, const PairSampler& sampler, Rng& rng,
    std::size_t& budget, int strategy, const AuditOptions& opts) {
  while (budget > 0) {
    --budget;
    auto [x, y] = sampler(rng);
    std::optional<RandVar> ix, iy;
    if (a.contains(x))
      ix = std::move(x);
    else
      ix = rescue_into(a, x);
    if (!ix) continue;
    if (a.contains(y))
      iy = std::move(y);
    else
      iy = rescue_into(a, y);
    if (!iy) continue;
    if (opts.boundary_pull && strategy == 1) {
      ix = pull_cash(a, *ix, rng);
      iy = pull_cash(a, *iy, rng);
    } else if (opts.boundary_pull && strategy == 2) {
      ix = pull_scale(a, *ix, rng);
      iy = pull_scale(a, *iy, rng);
    }
    return std::make_pair(std::move(*ix), std::move(*iy));
  }
  return std::nullopt;
}

namespace {

AxiomAudit start_audit(const AcceptanceSet& a, std::string axiom,
                       std::size_t trials) {
  AxiomAudit audit;
  audit.axiom = std::move(axiom);
  audit.set_name = a.name();
  audit.trials_requested = trials;
  return audit;
}

void finish_audit(AxiomAudit& audit) {
  if (audit.witness) {
    audit.verdict = Verdict::fail;
  } else if (audit.trials_completed == audit.trials_requested) {
    audit.verdict = Verdict::pass;
  } else {
    audit.verdict = Verdict::inconclusive;
    audit.note = "sampling budget exhausted after " +
                 std::to_string(audit.trials_completed) + " trials";
  }
}

}  // namespace

AxiomAudit check_monotone(const AcceptanceSet& a, std::uint64_t seed,
                          std::size_t trials, const AuditOptions& opts) {
  AxiomAudit audit = start_audit(a, "monotone", trials);
  Rng root(seed);
  std::size_t budget = opts.budget_factor * trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng r = root.child(t);
    auto x = sample_member(a, r, budget, static_cast<int>(t % 3), opts);
    if (!x) break;
    const double scale = std::pow(10.0, r.uniform(-1.0, 1.0));
    std::vector<double> bump(a.space()->size());
    for (double& b : bump) b = scale * r.uniform01();
    RandVar b(a.space(), std::move(bump));
    ++audit.trials_completed;
    if (!a.contains(*x + b)) {
      audit.witness = Counterexample{"set-bump",
                                     a.name(),
                                     probs_of(a),
                                     {{"X", vals(*x)}, {"B", vals(b)}},
                                     {},
                                     path(seed, "monotone", t)};
      break;
    }
  }
  finish_audit(audit);
  return audit;
}

AxiomAudit check_normalized(const AcceptanceSet& a) {
  AxiomAudit audit = start_audit(a, "normalized", 0);
  const auto& space = a.space();
  auto member = [&](double m) {
    return a.contains(RandVar::constant(space, m));
  };

  // Locate a member constant, preferring small magnitudes.
  bool have_member = false;
  double m0 = 0.0;
  if (member(0.0)) {
    have_member = true;
  } else {
    for (int k = 0; k <= 40 && !have_member; ++k) {
      for (double sign : {1.0, -1.0}) {
        double m = sign * std::exp2(k);
        if (member(m)) {
          m0 = m;
          have_member = true;
          break;
        }
      }
    }
  }
  const double inf = std::numeric_limits<double>::infinity();
  if (!have_member) {
    audit.note = "no member constants up to +-1e12; threshold +inf";
    audit.witness = Counterexample{
        "set-threshold", a.name(), probs_of(a), {}, {{"threshold", inf}}, ""};
    audit.verdict = Verdict::fail;
    return audit;
  }

  // Walk down for a non-member constant.
  bool have_lower = false;
  double m_lo = m0;
  for (int k = 0; k <= 41; ++k) {
    double m = m0 - std::exp2(k);
    if (!member(m)) {
      m_lo = m;
      have_lower = true;
      break;
    }
  }
  if (!have_lower) {
    audit.note = "all constants down to -1e12 accepted; threshold -inf";
    audit.witness = Counterexample{
        "set-threshold", a.name(), probs_of(a), {}, {{"threshold", -inf}}, ""};
    audit.verdict = Verdict::fail;
    return audit;
  }

  double lo = m_lo, hi = m0;  // !member(lo), member(hi)
  for (int i = 0; i < 100 && hi - lo > 1e-13; ++i) {
    double mid = 0.5 * (lo + hi);
    (member(mid) ? hi : lo) = mid;
  }
  const double threshold = 0.5 * (lo + hi);
  if (std::abs(threshold) <= 1e-9) {
    audit.verdict = Verdict::pass;
  } else {
    audit.witness = Counterexample{"set-threshold",
                                   a.name(),
                                   probs_of(a),
                                   {},
                                   {{"threshold", threshold}},
                                   ""};
    audit.verdict = Verdict::fail;
  }
  return audit;
}

AxiomAudit check_convex_on_pairs(const AcceptanceSet& a,
                                 const PairSampler& sampler,
                                 std::uint64_t seed, std::size_t trials,
                                 const AuditOptions& opts,
                                 const std::string& label) {
  AxiomAudit audit = start_audit(a, label, trials);
  Rng root(seed);
  std::size_t budget = opts.budget_factor * trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng r = root.child(t);
    auto pr =
        sample_member_pair(a, sampler, r, budget, static_cast<int>(t % 3), opts);
    if (!pr) break;
    const double lam = r.uniform01();
    RandVar mix = lam * pr->first + (1.0 - lam) * pr->second;
    ++audit.trials_completed;
    if (!a.contains(mix)) {
      audit.witness =
          Counterexample{"set-mixture",
                         a.name(),
                         probs_of(a),
                         {{"X", vals(pr->first)}, {"Y", vals(pr->second)}},
                         {{"lambda", lam}},
                         path(seed, label, t)};
      break;
    }
  }
  finish_audit(audit);
  return audit;
}

AxiomAudit check_star_shaped(const AcceptanceSet& a, std::uint64_t seed,
                             std::size_t trials, const AuditOptions& opts) {
  AxiomAudit audit = start_audit(a, "star-shaped", trials);
  Rng root(seed);
  std::size_t budget = opts.budget_factor * trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng r = root.child(t);
    auto x = sample_member(a, r, budget, static_cast<int>(t % 3), opts);
    if (!x) break;
    const double lam = r.coin(0.1) ? 0.0 : r.uniform01();
    ++audit.trials_completed;
    if (!a.contains(lam * *x)) {
      audit.witness = Counterexample{"set-scale",
                                     a.name(),
                                     probs_of(a),
                                     {{"X", vals(*x)}},
                                     {{"lambda", lam}},
                                     path(seed, "star-shaped", t)};
      break;
    }
  }
  finish_audit(audit);
  return audit;
}

AxiomAudit check_scalar_stable(const AcceptanceSet& a, std::uint64_t seed,
                               std::size_t trials, const AuditOptions& opts) {
  AxiomAudit audit = start_audit(a, "scalar-stable", trials);
  Rng root(seed);
  std::size_t budget = opts.budget_factor * trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng r = root.child(t);
    auto x = sample_member(a, r, budget, static_cast<int>(t % 3), opts);
    if (!x) break;
    const double c = r.uniform(-10.0, 10.0);
    ++audit.trials_completed;
    if (!a.contains(*x + c)) {
      audit.witness = Counterexample{"set-shift",
                                     a.name(),
                                     probs_of(a),
                                     {{"X", vals(*x)}},
                                     {{"c", c}},
                                     path(seed, "scalar-stable", t)};
      break;
    }
  }
  finish_audit(audit);
  return audit;
}

AxiomAudit check_radially_bounded(const AcceptanceSet& a, std::uint64_t seed,
                                  std::size_t trials,
                                  const AuditOptions& opts) {
  AxiomAudit audit = start_audit(a, "radially-bounded", trials);
  Rng root(seed);
  std::size_t budget = opts.budget_factor * trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng r = root.child(t);
    std::optional<RandVar> x;
    while (budget > 0) {
      x = sample_member(a, r, budget, static_cast<int>(t % 3), opts);
      if (!x || !is_constant(*x)) break;
      x.reset();
    }
    if (!x) break;
    bool exits = false;
    for (double delta = 1.0; delta <= kGuard; delta *= 2.0) {
      if (!a.contains(delta * *x)) {
        exits = true;
        break;
      }
    }
    ++audit.trials_completed;
    if (!exits) {
      audit.witness = Counterexample{"set-radial",
                                     a.name(),
                                     probs_of(a),
                                     {{"X", vals(*x)}},
                                     {},
                                     path(seed, "radially-bounded", t)};
      break;
    }
  }
  finish_audit(audit);
  return audit;
}

AxiomAudit audit_flag(const AcceptanceSet& a, Flag flag, std::uint64_t seed,
                      std::size_t trials, const AuditOptions& opts) {
  switch (flag) {
    case Flag::monotone:
      return check_monotone(a, seed, trials, opts);
    case Flag::normalized:
      return check_normalized(a);
    case Flag::convex:
      return check_convex_on_pairs(a, unrestricted_pair_sampler(a.space()),
                                   seed, trials, opts, "convex");
    case Flag::comonotonic_convex:
      return check_convex_on_pairs(a, comonotonic_pair_sampler(a.space()),
                                   seed, trials, opts, "comonotonic-convex");
    case Flag::complement_comonotonic_convex:
      return check_convex_on_pairs(
          complement_view(a), comonotonic_pair_sampler(a.space()), seed,
          trials, opts, "complement-comonotonic-convex");
    case Flag::star_shaped:
      return check_star_shaped(a, seed, trials, opts);
    case Flag::scalar_stable:
      return check_scalar_stable(a, seed, trials, opts);
    case Flag::radially_bounded:
      return check_radially_bounded(a, seed, trials, opts);
    case Flag::closed: {
      AxiomAudit audit = start_audit(a, "closed", 0);
      audit.verdict = Verdict::inconclusive;
      audit.note = "closedness is not black-box auditable";
      return audit;
    }
  }
  throw DomainError("audit_flag: unknown flag");
}

bool replay_violates(const AcceptanceSet& a, const Counterexample& w) {
  auto var_of = [&](const std::string& name) {
    const auto* p = w.point(name);
    if (!p) throw DomainError("witness replay: missing point '" + name + "'");
    return RandVar(a.space(), *p);
  };
  if (w.kind == "set-mixture") {
    RandVar x = var_of("X"), y = var_of("Y");
    const double lam = w.scalar("lambda");
    return a.contains(x) && a.contains(y) &&
           !a.contains(lam * x + (1.0 - lam) * y);
  }
  if (w.kind == "set-bump") {
    RandVar x = var_of("X"), b = var_of("B");
    return a.contains(x) && !a.contains(x + b);
  }
  if (w.kind == "set-scale") {
    RandVar x = var_of("X");
    return a.contains(x) && !a.contains(w.scalar("lambda") * x);
  }
  if (w.kind == "set-shift") {
    RandVar x = var_of("X");
    return a.contains(x) && !a.contains(x + w.scalar("c"));
  }
  if (w.kind == "set-radial") {
    RandVar x = var_of("X");
    if (!a.contains(x) || is_constant(x)) return false;
    for (double delta = 1.0; delta <= kGuard; delta *= 2.0)
      if (!a.contains(delta * x)) return false;
    return true;
  }
  if (w.kind == "set-threshold") {
    AxiomAudit again = check_normalized(a);
    if (again.verdict == Verdict::pass || !again.witness) return false;
    const double recorded = w.scalar("threshold");
    const double now = again.witness->scalar("threshold");
    if (std::isinf(recorded) || std::isinf(now))
      return std::isinf(recorded) && std::isinf(now) &&
             std::signbit(recorded) == std::signbit(now);
    return std::abs(recorded - now) <= 1e-6;
  }
  throw DomainError("witness replay: unknown kind '" + w.kind + "'");
}

}  // namespace riskset
