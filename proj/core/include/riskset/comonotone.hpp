#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "riskset/rand_var.hpp"
#include "riskset/rng.hpp"

namespace riskset {

/// Exact all-pairs test: (X(w)-X(w'))(Y(w)-Y(w')) >= 0 for every ordered
/// outcome pair. No tolerance; atoms have positive mass, so the almost-sure
/// quantifier is an all-pairs quantifier.
bool is_comonotonic(const RandVar& x, const RandVar& y);

/// Exact equality of all values.
bool is_constant(const RandVar& x);

/// Coefficients for an element gamma*(lambda*X) + (1-gamma)*(delta*Y) of the
/// convex-conic span of {X, Y}.
struct ConeElementSpec {
  double gamma;   // in [0, 1]
  double lambda;  // >= 0
  double delta;   // >= 0
};

RandVar cone_element(const RandVar& x, const RandVar& y,
                     const ConeElementSpec& spec);

/// Spec with gamma in {0,1} or [0.05,0.95] and lambda/delta in {0} or
/// [0.1,4]. Coefficients are either exactly zero or bounded away from it,
/// which keeps the exact comonotonicity and non-constancy checks stable.
ConeElementSpec sample_cone_spec(Rng& rng);

/// One coordinate-wise uniform draw on [lo, hi].
RandVar random_var(const ProbSpacePtr& space, Rng& rng, double lo = -4.0,
                   double hi = 4.0);

/// Draws a comonotonic pair: a latent outcome permutation, two independent
/// nonnegative-increment cumulative sequences laid along it, and scalar
/// shifts. The pair passes is_comonotonic exactly, by construction.
std::pair<RandVar, RandVar> sample_comonotonic_pair(const ProbSpacePtr& space,
                                                    Rng& rng);

struct IndependentPair {
  ProbSpacePtr space;  // product of the two factor spaces
  RandVar x;           // depends on the first coordinate only
  RandVar y;           // depends on the second coordinate only
};

/// Lifts two independently drawn factor variables onto the product space.
IndependentPair sample_independent_pair(const ProbSpacePtr& a,
                                        const ProbSpacePtr& b, Rng& rng);

/// Lift a factor-one (resp. factor-two) payoff onto a product space whose
/// second factor has n2 outcomes.
RandVar lift_factor_one(const ProbSpacePtr& prod,
                        const std::vector<double>& xs, std::size_t n2);
RandVar lift_factor_two(const ProbSpacePtr& prod,
                        const std::vector<double>& ys, std::size_t n2);

using PairSampler = std::function<std::pair<RandVar, RandVar>(Rng&)>;

PairSampler comonotonic_pair_sampler(ProbSpacePtr space);
/// Two independent coordinate-wise uniform draws; no dependence restriction.
PairSampler unrestricted_pair_sampler(ProbSpacePtr space);

}  // namespace riskset
