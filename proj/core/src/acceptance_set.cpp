#include "riskset/acceptance_set.hpp"

#include "riskset/errors.hpp"

namespace riskset {

const char* flag_name(Flag f) {
  switch (f) {
    case Flag::monotone: return "monotone";
    case Flag::normalized: return "normalized";
    case Flag::convex: return "convex";
    case Flag::comonotonic_convex: return "comonotonic-convex";
    case Flag::complement_comonotonic_convex:
      return "complement-comonotonic-convex";
    case Flag::star_shaped: return "star-shaped";
    case Flag::scalar_stable: return "scalar-stable";
    case Flag::radially_bounded: return "radially-bounded";
    case Flag::closed: return "closed";
  }
  return "?";
}

const std::vector<Flag>& all_flags() {
  static const std::vector<Flag> flags = {
      Flag::monotone,
      Flag::normalized,
      Flag::convex,
      Flag::comonotonic_convex,
      Flag::complement_comonotonic_convex,
      Flag::star_shaped,
      Flag::scalar_stable,
      Flag::radially_bounded,
      Flag::closed,
  };
  return flags;
}

Flag flag_from_name(const std::string& name) {
  for (Flag f : all_flags())
    if (name == flag_name(f)) return f;
  throw DomainError("unknown structural flag: " + name);
}

AcceptanceSet::AcceptanceSet(std::string name, ProbSpacePtr space,
                             Member member, FlagSet declared)
    : name_(std::move(name)),
      space_(std::move(space)),
      member_(std::move(member)),
      declared_(declared) {
  if (!space_) throw DimensionError("AcceptanceSet: null space");
  if (!member_) throw DomainError("AcceptanceSet: null membership oracle");
}

bool AcceptanceSet::contains(const RandVar& x) const {
  if (!same_space(x.space(), space_))
    throw DimensionError("AcceptanceSet '" + name_ +
                         "': query on a different space");
  return member_(x);
}

AcceptanceSet AcceptanceSet::with_declared(FlagSet flags) const {
  return AcceptanceSet(name_, space_, member_, flags);
}

AcceptanceSet complement_view(const AcceptanceSet& a) {
  return AcceptanceSet(
      "complement(" + a.name() + ")", a.space(),
      [a](const RandVar& x) { return !a.contains(x); }, FlagSet{});
}

AcceptanceSet halfspace(const RandVar& z, double c) {
  auto member = [z, c](const RandVar& x) {
    require_same_space(z, x);
    const auto& p = x.space()->probs();
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += p[i] * z[i] * x[i];
    return s >= c;
  };
  return AcceptanceSet("halfspace", z.space(), std::move(member),
                       FlagSet{Flag::convex, Flag::comonotonic_convex,
                               Flag::complement_comonotonic_convex,
                               Flag::closed});
}

AcceptanceSet mean_halfspace(const ProbSpacePtr& space, double c) {
  auto member = [c](const RandVar& x) { return expectation(x) >= c; };
  FlagSet flags{Flag::monotone, Flag::convex, Flag::comonotonic_convex,
                Flag::complement_comonotonic_convex, Flag::closed};
  if (c == 0.0) flags.add(Flag::normalized);
  return AcceptanceSet("mean-halfspace", space, std::move(member), flags);
}

AcceptanceSet intersect(const AcceptanceSet& a, const AcceptanceSet& b) {
  if (!same_space(a.space(), b.space()))
    throw DimensionError("intersect: sets live on different spaces");
  return AcceptanceSet(
      "intersect(" + a.name() + "," + b.name() + ")", a.space(),
      [a, b](const RandVar& x) { return a.contains(x) && b.contains(x); },
      FlagSet{});
}

AcceptanceSet unite(const AcceptanceSet& a, const AcceptanceSet& b) {
  if (!same_space(a.space(), b.space()))
    throw DimensionError("unite: sets live on different spaces");
  return AcceptanceSet(
      "unite(" + a.name() + "," + b.name() + ")", a.space(),
      [a, b](const RandVar& x) { return a.contains(x) || b.contains(x); },
      FlagSet{});
}

}  // namespace riskset
