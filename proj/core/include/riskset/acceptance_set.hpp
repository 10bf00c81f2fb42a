#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "riskset/rand_var.hpp"

namespace riskset {

/// Structural claims attached to a set. Claims are audited by the checkers
/// in audits.hpp; theorem suites never trust them silently.
enum class Flag : unsigned {
  monotone = 1u << 0,
  normalized = 1u << 1,
  convex = 1u << 2,
  comonotonic_convex = 1u << 3,
  complement_comonotonic_convex = 1u << 4,
  star_shaped = 1u << 5,
  scalar_stable = 1u << 6,
  radially_bounded = 1u << 7,
  closed = 1u << 8,
};

class FlagSet {
 public:
  FlagSet() = default;
  FlagSet(std::initializer_list<Flag> flags) {
    for (Flag f : flags) add(f);
  }
  void add(Flag f) { bits_ |= static_cast<unsigned>(f); }
  bool contains(Flag f) const { return (bits_ & static_cast<unsigned>(f)) != 0; }
  bool empty() const { return bits_ == 0; }

 private:
  unsigned bits_ = 0;
};

const char* flag_name(Flag f);
/// All flags in declaration order.
const std::vector<Flag>& all_flags();
/// Inverse of flag_name; throws DomainError on unknown names.
Flag flag_from_name(const std::string& name);

/// A membership oracle over payoffs on one fixed probability space, plus
/// declared structural flags.
class AcceptanceSet {
 public:
  using Member = std::function<bool(const RandVar&)>;

  AcceptanceSet(std::string name, ProbSpacePtr space, Member member,
                FlagSet declared);

  const std::string& name() const { return name_; }
  const ProbSpacePtr& space() const { return space_; }
  bool declares(Flag f) const { return declared_.contains(f); }
  const FlagSet& declared() const { return declared_; }

  /// Membership query; rejects variables on a different space.
  bool contains(const RandVar& x) const;

  /// Same membership with replaced claims.
  AcceptanceSet with_declared(FlagSet flags) const;

 private:
  std::string name_;
  ProbSpacePtr space_;
  Member member_;
  FlagSet declared_;
};

/// Logical negation of membership. Declared flags are cleared: nothing is
/// inferable from the original set's claims.
AcceptanceSet complement_view(const AcceptanceSet& a);

/// {X : E[Z X] >= c} for a weighting payoff Z.
AcceptanceSet halfspace(const RandVar& z, double c);
/// {X : E[X] >= c}.
AcceptanceSet mean_halfspace(const ProbSpacePtr& space, double c);

AcceptanceSet intersect(const AcceptanceSet& a, const AcceptanceSet& b);
AcceptanceSet unite(const AcceptanceSet& a, const AcceptanceSet& b);

}  // namespace riskset
