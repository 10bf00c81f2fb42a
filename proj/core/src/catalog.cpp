#include "riskset/catalog.hpp"

#include <charconv>
#include <cmath>

#include "riskset/errors.hpp"
#include "riskset/measures.hpp"

namespace riskset {

namespace {

double parse_number(const std::string& text) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw DomainError("catalog: malformed numeric parameter '" + text + "'");
  return value;
}

double require_param(const CatalogSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw DomainError("catalog: " + spec.name + " requires parameter '" + key +
                      "'");
  return it->second;
}

double param_or(const CatalogSpec& spec, const std::string& key, double dflt) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? dflt : it->second;
}

std::string format_param(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

void require_two_outcomes(const std::string& name, const ProbSpacePtr& space) {
  if (space->size() != 2)
    throw DimensionError("catalog: " + name +
                         " is defined on two-outcome spaces only");
}

}  // namespace

CatalogSpec parse_catalog_spec(const std::string& text) {
  CatalogSpec spec;
  auto q = text.find('?');
  spec.name = text.substr(0, q);
  if (q == std::string::npos) return spec;
  std::string rest = text.substr(q + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto amp = rest.find('&', pos);
    std::string kv = rest.substr(pos, amp == std::string::npos ? std::string::npos
                                                               : amp - pos);
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw DomainError("catalog: malformed parameter '" + kv + "'");
    spec.params[kv.substr(0, eq)] = parse_number(kv.substr(eq + 1));
    if (amp == std::string::npos) break;
    pos = amp + 1;
  }
  return spec;
}

AcceptanceSet expectation_set(const ProbSpacePtr& space) {
  auto member = [](const RandVar& x) { return expectation(x) >= 0.0; };
  return AcceptanceSet("catalog:expectation", space, member,
                       {Flag::monotone, Flag::normalized, Flag::convex,
                        Flag::comonotonic_convex,
                        Flag::complement_comonotonic_convex, Flag::star_shaped,
                        Flag::closed});
}

AcceptanceSet var_set(const ProbSpacePtr& space, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("catalog: var alpha must lie in (0, 1)");
  auto member = [alpha](const RandVar& x) {
    return value_at_risk(x, alpha) <= 0.0;
  };
  FlagSet flags{Flag::monotone, Flag::normalized, Flag::comonotonic_convex,
                Flag::complement_comonotonic_convex, Flag::star_shaped,
                Flag::closed};
  // With alpha below every atom the set is {all outcomes >= 0}, an orthant.
  if (alpha <= space->min_prob()) flags.add(Flag::convex);
  return AcceptanceSet("catalog:var?alpha=" + format_param(alpha), space,
                       member, flags);
}

AcceptanceSet es_set(const ProbSpacePtr& space, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("catalog: es alpha must lie in (0, 1)");
  auto member = [alpha](const RandVar& x) {
    return expected_shortfall(x, alpha) <= 0.0;
  };
  return AcceptanceSet("catalog:es?alpha=" + format_param(alpha), space,
                       member,
                       {Flag::monotone, Flag::normalized, Flag::convex,
                        Flag::comonotonic_convex,
                        Flag::complement_comonotonic_convex, Flag::star_shaped,
                        Flag::closed});
}

AcceptanceSet entropic_set(const ProbSpacePtr& space, double theta) {
  if (!(theta > 0.0))
    throw DomainError("catalog: entropic theta must be positive");
  auto member = [theta](const RandVar& x) {
    return entropic_risk(x, theta) <= 0.0;
  };
  // The complement is not comonotonic convex: entropic risk is strictly
  // convex along non-constant rays, hence not comonotonic additive.
  return AcceptanceSet("catalog:entropic?theta=" + format_param(theta), space,
                       member,
                       {Flag::monotone, Flag::normalized, Flag::convex,
                        Flag::comonotonic_convex, Flag::star_shaped,
                        Flag::closed});
}

AcceptanceSet fig1_set(const ProbSpacePtr& space) {
  require_two_outcomes("fig1", space);
  auto member = [](const RandVar& x) { return x[1] - std::abs(x[0]) <= 1.0; };
  return AcceptanceSet("catalog:fig1", space, member,
                       {Flag::star_shaped, Flag::complement_comonotonic_convex,
                        Flag::closed});
}

AcceptanceSet simplex_q1_set(const ProbSpacePtr& space) {
  require_two_outcomes("simplex_q1", space);
  auto member = [](const RandVar& x) {
    return x[0] >= 0.0 && x[1] >= 0.0 && x[0] + x[1] <= 1.0;
  };
  return AcceptanceSet("catalog:simplex_q1", space, member,
                       {Flag::normalized, Flag::convex,
                        Flag::comonotonic_convex, Flag::star_shaped,
                        Flag::radially_bounded, Flag::closed});
}

namespace {
FlagSet dispersion_ball_flags(const ProbSpacePtr& space) {
  FlagSet flags{Flag::convex, Flag::comonotonic_convex, Flag::star_shaped,
                Flag::scalar_stable, Flag::radially_bounded, Flag::closed};
  // sd and mad are comonotonic additive exactly on two-outcome spaces,
  // where both reduce to a multiple of |x1 - x0|.
  if (space->size() == 2) flags.add(Flag::complement_comonotonic_convex);
  return flags;
}
}  // namespace

AcceptanceSet sd_ball(const ProbSpacePtr& space, double r) {
  if (!(r > 0.0)) throw DomainError("catalog: sd_ball radius must be positive");
  auto member = [r](const RandVar& x) { return std_dev(x) <= r; };
  return AcceptanceSet("catalog:sd_ball?r=" + format_param(r), space, member,
                       dispersion_ball_flags(space));
}

AcceptanceSet mad_ball(const ProbSpacePtr& space, double r) {
  if (!(r > 0.0))
    throw DomainError("catalog: mad_ball radius must be positive");
  auto member = [r](const RandVar& x) { return mean_abs_dev(x) <= r; };
  return AcceptanceSet("catalog:mad_ball?r=" + format_param(r), space, member,
                       dispersion_ball_flags(space));
}

AcceptanceSet catalog(const CatalogSpec& spec, const ProbSpacePtr& space) {
  if (spec.name == "expectation") return expectation_set(space);
  if (spec.name == "var") return var_set(space, require_param(spec, "alpha"));
  if (spec.name == "es") return es_set(space, require_param(spec, "alpha"));
  if (spec.name == "entropic")
    return entropic_set(space, require_param(spec, "theta"));
  if (spec.name == "fig1") return fig1_set(space);
  if (spec.name == "simplex_q1") return simplex_q1_set(space);
  if (spec.name == "sd_ball") return sd_ball(space, param_or(spec, "r", 1.0));
  if (spec.name == "mad_ball") return mad_ball(space, param_or(spec, "r", 1.0));
  throw DomainError("catalog: unknown set '" + spec.name + "'");
}

AcceptanceSet catalog(const std::string& text, const ProbSpacePtr& space) {
  return catalog(parse_catalog_spec(text), space);
}

AcceptanceSet set_from_name(const std::string& name,
                            const ProbSpacePtr& space) {
  const std::string comp_prefix = "complement(";
  if (name.rfind(comp_prefix, 0) == 0 && name.back() == ')') {
    std::string inner =
        name.substr(comp_prefix.size(), name.size() - comp_prefix.size() - 1);
    return complement_view(set_from_name(inner, space));
  }
  const std::string cat_prefix = "catalog:";
  if (name.rfind(cat_prefix, 0) == 0)
    return catalog(name.substr(cat_prefix.size()), space);
  throw DomainError("cannot reconstruct acceptance set from name '" + name +
                    "'");
}

}  // namespace riskset
