#pragma once

#include <map>
#include <string>

#include "riskset/acceptance_set.hpp"

namespace riskset {

/// Parsed form of a catalog string such as "es?alpha=0.05".
struct CatalogSpec {
  std::string name;
  std::map<std::string, double> params;
};

CatalogSpec parse_catalog_spec(const std::string& text);

/// Builds a named acceptance set bound to the given space.
///
/// Names: expectation, var?alpha=, es?alpha=, entropic?theta=, fig1,
/// simplex_q1, sd_ball?r=, mad_ball?r= (r defaults to 1). fig1 and
/// simplex_q1 require a two-outcome space.
///
/// Declared flags follow the theory for the bound space. Two of them are
/// dimension-dependent:
///  - var is convex iff alpha <= min weight (the set is then an orthant);
///  - sd_ball / mad_ball have comonotonic-convex complements iff the space
///    has exactly two outcomes, where sd and mad are additive for
///    comonotonic pairs; on larger spaces both are strictly subadditive
///    somewhere.
AcceptanceSet catalog(const CatalogSpec& spec, const ProbSpacePtr& space);
AcceptanceSet catalog(const std::string& text, const ProbSpacePtr& space);

/// Reconstructs a set from a report name: accepts "catalog:..." optionally
/// wrapped in "complement(...)" layers.
AcceptanceSet set_from_name(const std::string& name, const ProbSpacePtr& space);

/// Typed factories.
AcceptanceSet expectation_set(const ProbSpacePtr& space);
AcceptanceSet var_set(const ProbSpacePtr& space, double alpha);
AcceptanceSet es_set(const ProbSpacePtr& space, double alpha);
AcceptanceSet entropic_set(const ProbSpacePtr& space, double theta);
AcceptanceSet fig1_set(const ProbSpacePtr& space);
AcceptanceSet simplex_q1_set(const ProbSpacePtr& space);
AcceptanceSet sd_ball(const ProbSpacePtr& space, double r);
AcceptanceSet mad_ball(const ProbSpacePtr& space, double r);

}  // namespace riskset
