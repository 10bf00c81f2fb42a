#include "riskset/gauge.hpp"

#include <cmath>
#include <limits>

#include "riskset/errors.hpp"

namespace riskset {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("gauge: tol must be positive");
}
}  // namespace

const char* gauge_status_name(GaugeStatus s) {
  switch (s) {
    case GaugeStatus::converged: return "converged";
    case GaugeStatus::infinite: return "infinite";
    case GaugeStatus::degenerate_zero: return "degenerate-zero";
  }
  return "?";
}

GaugeResult rho(const AcceptanceSet& a, const RandVar& x, double tol) {
  if (!a.declares(Flag::monotone))
    throw ContractError("rho: set '" + a.name() +
                        "' is not declared monotone; audit it first");
  require_tol(tol);
  auto inside = [&](double m) { return a.contains(x + m); };

  const double r0 = norm_inf(x) + 1.0;
  double lo = -r0, hi = r0;
  int iters = 0;

  while (!inside(hi)) {
    hi *= 2.0;
    ++iters;
    if (hi > kDivergenceGuard)
      return {kInf, iters, 0.0, GaugeStatus::infinite};  // inf of empty set
  }
  while (inside(lo)) {
    lo *= 2.0;
    ++iters;
    if (lo < -kDivergenceGuard)
      return {-kInf, iters, 0.0, GaugeStatus::infinite};
  }

  // Invariant: !inside(lo), inside(hi).
  while (hi - lo > tol && iters < kMaxBisectIters) {
    double mid = 0.5 * (lo + hi);
    ++iters;
    (inside(mid) ? hi : lo) = mid;
  }
  if (hi - lo > tol)
    throw OracleError("rho: bisection failed to converge on '" + a.name() +
                      "'");
  if (inside(lo) || !inside(hi))
    throw OracleError("rho: membership oracle inconsistent across bracket on '" +
                      a.name() + "'");
  return {0.5 * (lo + hi), iters, hi - lo, GaugeStatus::converged};
}

GaugeResult psi_complement(const AcceptanceSet& a, const RandVar& x,
                           double tol) {
  if (!a.declares(Flag::monotone))
    throw ContractError("psi_complement: set '" + a.name() +
                        "' is not declared monotone; audit it first");
  require_tol(tol);
  auto outside = [&](double m) { return !a.contains(x + m); };

  const double r0 = norm_inf(x) + 1.0;
  double lo = -r0, hi = r0;
  int iters = 0;

  while (!outside(lo)) {
    lo *= 2.0;
    ++iters;
    if (lo < -kDivergenceGuard)
      return {-kInf, iters, 0.0, GaugeStatus::infinite};  // sup of empty set
  }
  while (outside(hi)) {
    hi *= 2.0;
    ++iters;
    if (hi > kDivergenceGuard) return {kInf, iters, 0.0, GaugeStatus::infinite};
  }

  // Invariant: outside(lo), !outside(hi).
  while (hi - lo > tol && iters < kMaxBisectIters) {
    double mid = 0.5 * (lo + hi);
    ++iters;
    (outside(mid) ? lo : hi) = mid;
  }
  if (hi - lo > tol)
    throw OracleError("psi_complement: bisection failed to converge on '" +
                      a.name() + "'");
  if (!outside(lo) || outside(hi))
    throw OracleError(
        "psi_complement: membership oracle inconsistent across bracket on '" +
        a.name() + "'");
  return {0.5 * (lo + hi), iters, hi - lo, GaugeStatus::converged};
}

GaugeResult minkowski_dev(const AcceptanceSet& a, const RandVar& x,
                          double tol) {
  if (!a.declares(Flag::star_shaped))
    throw ContractError("minkowski_dev: set '" + a.name() +
                        "' is not declared star-shaped; audit it first");
  require_tol(tol);
  auto inside = [&](double m) { return a.contains((1.0 / m) * x); };

  double lo, hi;
  int iters = 0;
  if (inside(1.0)) {
    hi = 1.0;
    lo = 0.5;
    while (inside(lo)) {
      hi = lo;
      lo *= 0.5;
      ++iters;
      if (lo < kZeroGuard)
        return {0.0, iters, lo, GaugeStatus::degenerate_zero};
    }
  } else {
    lo = 1.0;
    hi = 2.0;
    while (!inside(hi)) {
      lo = hi;
      hi *= 2.0;
      ++iters;
      if (hi > kDivergenceGuard)
        return {kInf, iters, 0.0, GaugeStatus::infinite};  // inf of empty set
    }
  }

  // Invariant: !inside(lo), inside(hi).
  while (hi - lo > tol && iters < kMaxBisectIters) {
    double mid = 0.5 * (lo + hi);
    ++iters;
    (inside(mid) ? hi : lo) = mid;
  }
  if (hi - lo > tol)
    throw OracleError("minkowski_dev: bisection failed to converge on '" +
                      a.name() + "'");
  return {0.5 * (lo + hi), iters, hi - lo, GaugeStatus::converged};
}

GaugeResult cogauge_complement(const AcceptanceSet& a, const RandVar& x,
                               double tol) {
  if (!a.declares(Flag::star_shaped))
    throw ContractError("cogauge_complement: set '" + a.name() +
                        "' is not declared star-shaped; audit it first");
  require_tol(tol);
  auto outside = [&](double m) { return !a.contains((1.0 / m) * x); };

  double lo, hi;
  int iters = 0;
  if (outside(1.0)) {
    lo = 1.0;
    hi = 2.0;
    while (outside(hi)) {
      lo = hi;
      hi *= 2.0;
      ++iters;
      if (hi > kDivergenceGuard) return {kInf, iters, 0.0, GaugeStatus::infinite};
    }
  } else {
    hi = 1.0;
    lo = 0.5;
    while (!outside(lo)) {
      hi = lo;
      lo *= 0.5;
      ++iters;
      if (lo < kZeroGuard)
        return {0.0, iters, lo, GaugeStatus::degenerate_zero};  // sup of empty set
    }
  }

  // Invariant: outside(lo), !outside(hi).
  while (hi - lo > tol && iters < kMaxBisectIters) {
    double mid = 0.5 * (lo + hi);
    ++iters;
    (outside(mid) ? lo : hi) = mid;
  }
  if (hi - lo > tol)
    throw OracleError("cogauge_complement: bisection failed to converge on '" +
                      a.name() + "'");
  return {0.5 * (lo + hi), iters, hi - lo, GaugeStatus::converged};
}

AcceptanceSet acceptance_from_rho(RiskFunctional risk, ProbSpacePtr space,
                                  std::string name, FlagSet declared) {
  if (!risk) throw DomainError("acceptance_from_rho: null functional");
  auto member = [risk = std::move(risk)](const RandVar& x) {
    return risk(x) <= 0.0;
  };
  return AcceptanceSet("induced:" + name, std::move(space), std::move(member),
                       declared);
}

AcceptanceSet sublevel_from_dev(RiskFunctional dev, double k,
                                ProbSpacePtr space, std::string name,
                                FlagSet declared) {
  if (!dev) throw DomainError("sublevel_from_dev: null functional");
  if (!(k > 0.0)) throw DomainError("sublevel_from_dev: level must be positive");
  auto member = [dev = std::move(dev), k](const RandVar& x) {
    return dev(x) <= k;
  };
  return AcceptanceSet("sublevel:" + name, std::move(space), std::move(member),
                       declared);
}

}  // namespace riskset
