#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "riskset/acceptance_set.hpp"
#include "riskset/comonotone.hpp"
#include "riskset/witness.hpp"

namespace riskset {

/// Outcome of a sampled axiom check. A "pass" means no counterexample was
/// found in the completed trials; a "fail" carries a witness that replays
/// through the raw membership predicate. "inconclusive" means the
/// conditioning budget ran out before the requested trials completed.
struct AxiomAudit {
  std::string axiom;
  std::string set_name;
  std::size_t trials_requested = 0;
  std::size_t trials_completed = 0;
  Verdict verdict = Verdict::inconclusive;
  std::optional<Counterexample> witness;
  std::string note;
};

struct AuditOptions {
  /// Candidate draws allowed per requested trial when conditioning into the
  /// set; exhausting the budget yields an inconclusive verdict, never a pass.
  std::size_t budget_factor = 50;
  double coord_lo = -4.0;
  double coord_hi = 4.0;
  /// Rotate in boundary-hugging strategies (cash and scaling pulls) that
  /// condition samples near the membership boundary.
  bool boundary_pull = true;
};

/// X in A and B >= 0 must keep X+B in A.
AxiomAudit check_monotone(const AcceptanceSet& a, std::uint64_t seed,
                          std::size_t trials, const AuditOptions& opts = {});

/// Locates inf{m : m*1 in A} by a doubling search plus bisection and
/// passes iff the threshold is within 1e-9 of zero. Deterministic.
AxiomAudit check_normalized(const AcceptanceSet& a);

/// Conditions sampled pairs into A and checks mixtures stay in A. With a
/// comonotonic pair sampler this audits comonotonic convexity.
AxiomAudit check_convex_on_pairs(const AcceptanceSet& a,
                                 const PairSampler& sampler,
                                 std::uint64_t seed, std::size_t trials,
                                 const AuditOptions& opts = {},
                                 const std::string& label = "convex-on-pairs");

/// lambda*X stays in A for X in A, lambda in [0, 1].
AxiomAudit check_star_shaped(const AcceptanceSet& a, std::uint64_t seed,
                             std::size_t trials, const AuditOptions& opts = {});

/// X + c stays in A for X in A and real c.
AxiomAudit check_scalar_stable(const AcceptanceSet& a, std::uint64_t seed,
                               std::size_t trials,
                               const AuditOptions& opts = {});

/// Every sampled non-constant member direction must exit the set under
/// doubling; a direction that survives past the 1e12 guard is a witness.
AxiomAudit check_radially_bounded(const AcceptanceSet& a, std::uint64_t seed,
                                  std::size_t trials,
                                  const AuditOptions& opts = {});

/// Dispatch on the flag; Flag::closed is not black-box auditable and yields
/// an inconclusive audit.
AxiomAudit audit_flag(const AcceptanceSet& a, Flag flag, std::uint64_t seed,
                      std::size_t trials, const AuditOptions& opts = {});

/// Re-evaluates a set-level witness through the raw membership predicate.
/// Returns true when the recorded violation reproduces exactly.
bool replay_violates(const AcceptanceSet& a, const Counterexample& w);

/// Conditioned sampling used by the audits and the theorem suites: draws
/// from the coordinate-wise uniform distribution and conditions into A by
/// rejection, rescuing rejected draws whose ray meets A by scaling. For
/// strategies 1/2 the sample is then pulled toward the membership boundary
/// along the cash (resp. scaling) direction; both pulls preserve
/// comonotonicity. Returns nullopt when the budget is exhausted.
std::optional<RandVar> sample_member(const AcceptanceSet& a, Rng& rng,
                                     std::size_t& budget, int strategy,
                                     const AuditOptions& opts = {});

/// Pair version: conditions both components of a sampled pair into A.
std::optional<std::pair<RandVar, RandVar>> sample_member_pair(
    const AcceptanceSet& a, const PairSampler& sampler, Rng& rng,
    std::size_t& budget, int strategy, const AuditOptions& opts = {});

/// Boundary pulls (exposed for the theorem suites). Both assume
/// a.contains(x) and return a point that is still a member.
RandVar pull_cash(const AcceptanceSet& a, const RandVar& x, Rng& rng);
RandVar pull_scale(const AcceptanceSet& a, const RandVar& x, Rng& rng);

}  // namespace riskset
