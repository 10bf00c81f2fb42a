#pragma once

#include <cstdint>
#include <vector>

#include "riskset/gauge.hpp"
#include "riskset/report.hpp"

namespace riskset {

struct SuiteConfig {
  std::size_t trials = 10000;
  std::uint64_t seed = 42;
  double tol = kDefaultTol;
};

/// Scalar-addition-stable classes over which the induced risk measure is
/// checked for convexity/concavity/additivity.
enum class ConeKind {
  comonotonic_span,  // conv(cone({X} u {Y})) + R for a comonotonic pair
  independent,       // payoffs measurable in the second product factor
  uncorrelated,      // payoffs with zero covariance against a pivot
  covariance_one,    // payoffs with unit covariance against a pivot
};

const char* cone_kind_name(ConeKind k);

/// rho equals the complement functional psi on monotone sets.
PropertyReport verify_risk_corisk(const AcceptanceSet& a,
                                  const SuiteConfig& cfg);

/// The Minkowski gauge equals the cogauge of the complement on star-shaped
/// sets.
PropertyReport verify_gauge_cogauge(const AcceptanceSet& a,
                                    const SuiteConfig& cfg);

/// Sandwich inclusions: {rho < 0} inside A inside {rho <= 0}, and the
/// level-one deviation analogue for star-shaped sets, with tol-buffered
/// comparisons. Probe points get the same checks plus a closure-gap note
/// when a point sits on the gauge boundary yet outside the set.
PropertyReport verify_sandwich(const AcceptanceSet& a, const SuiteConfig& cfg,
                               const std::vector<RandVar>& probes = {});

/// Convexity/concavity/additivity of the induced risk measure over
/// scalar-addition-stable classes whose intersections with the set and its
/// complement are audited for convexity.
PropertyReport verify_main_lemma(const AcceptanceSet& a, ConeKind kind,
                                 const SuiteConfig& cfg);

/// Pairwise comonotonicity inside the convex-conic span of a comonotonic
/// pair, and the span-meets-constants-only-at-zero property. Exact checks.
PropertyReport verify_cone_comono(const ProbSpacePtr& space,
                                  const SuiteConfig& cfg);

/// Comonotonic additivity of the induced risk measure iff the set and its
/// complement are comonotonic convex; checks the forward implication and
/// the contrapositive consistency of the reverse one.
PropertyReport verify_main_theorem(const AcceptanceSet& a,
                                   const SuiteConfig& cfg);

/// Sub-/super-linearity and cone-restricted additivity of the Minkowski
/// gauge, and convexity of the sub-level intersections when the gauge is
/// additive on a cone.
PropertyReport verify_dev_additive(const AcceptanceSet& a,
                                   const SuiteConfig& cfg);

/// Deviation main result: comonotonic additivity of the gauge under the
/// radial-boundedness, scalar-stability, and two comonotonic-convexity
/// audits, plus the converse on sub-level sets.
PropertyReport verify_coro_como(const AcceptanceSet& a, const SuiteConfig& cfg);

/// The two-outcome star-shaped set with convex complement on which the
/// gauge fails to be concave: gauge values (0, 0, 1) at the three designed
/// points, mixing weight 1/3, concavity defect -1/3.
PropertyReport counterexample_fig1(double tol = kDefaultTol);

/// Re-evaluates any counterexample produced by the suites or audits.
/// Reconstructs the arena and the set from the record and returns true when
/// the violation reproduces at the given tolerance.
bool replay_reproduces(const Counterexample& ce, double tol = kDefaultTol);

}  // namespace riskset
