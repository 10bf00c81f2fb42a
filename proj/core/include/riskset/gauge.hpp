#pragma once

#include <functional>
#include <string>

#include "riskset/acceptance_set.hpp"

namespace riskset {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kMaxBisectIters = 200;
inline constexpr double kDivergenceGuard = 1e12;
inline constexpr double kZeroGuard = 1e-12;

enum class GaugeStatus {
  converged,        // value bracketed to within tol
  infinite,         // search crossed the 1e12 guard; value is +-infinity
  degenerate_zero,  // zero by convention (feasible all the way to the 1e-12
                    // guard, or an empty supremum)
};

const char* gauge_status_name(GaugeStatus s);

struct GaugeResult {
  double value = 0.0;
  int iterations = 0;
  double bracket = 0.0;  // final interval width, same units as value
  GaugeStatus status = GaugeStatus::converged;
};

/// inf{ m : X + m in A }. Requires a monotone-declared set, so the feasible
/// cash amounts form an up-closed interval; the bracket starts at
/// [-(|X|_inf+1), |X|_inf+1] and doubles outward until it straddles the
/// membership boundary.
GaugeResult rho(const AcceptanceSet& a, const RandVar& x,
                double tol = kDefaultTol);

/// sup{ m : X + m in the complement of A }; mirror-image bisection on the
/// complement oracle. Empty complement yields -infinity.
GaugeResult psi_complement(const AcceptanceSet& a, const RandVar& x,
                           double tol = kDefaultTol);

/// inf{ m > 0 : X/m in A } for a star-shaped-declared set. Returns 0 with
/// status degenerate_zero when X/m stays in A down to the 1e-12 guard, and
/// +infinity when no feasible m exists up to 1e12 (inf of the empty set).
GaugeResult minkowski_dev(const AcceptanceSet& a, const RandVar& x,
                          double tol = kDefaultTol);

/// sup{ m > 0 : X/m in the complement of A }; sup of the empty set is 0.
GaugeResult cogauge_complement(const AcceptanceSet& a, const RandVar& x,
                               double tol = kDefaultTol);

using RiskFunctional = std::function<double(const RandVar&)>;

/// {X : risk(X) <= 0}, tagged "induced". Risk functionals are monotone by
/// contract, so the result carries the monotone claim by default.
AcceptanceSet acceptance_from_rho(RiskFunctional risk, ProbSpacePtr space,
                                  std::string name = "induced",
                                  FlagSet declared = {Flag::monotone});

/// {X : dev(X) <= k}, tagged "sublevel". Deviation functionals are
/// positively homogeneous and translation insensitive by contract, so the
/// sublevel set is star-shaped, scalar stable and radially bounded.
AcceptanceSet sublevel_from_dev(RiskFunctional dev, double k,
                                ProbSpacePtr space,
                                std::string name = "sublevel",
                                FlagSet declared = {Flag::star_shaped,
                                                    Flag::scalar_stable,
                                                    Flag::radially_bounded});

}  // namespace riskset
