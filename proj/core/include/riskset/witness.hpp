#pragma once

#include <string>
#include <utility>
#include <vector>

namespace riskset {

enum class Verdict { pass, fail, inconclusive };

const char* verdict_name(Verdict v);

/// Replayable record of a violated predicate: the arena weights, the named
/// payoff vectors involved, and the scalars (mixture weights, observed
/// values) needed to re-run the check.
struct Counterexample {
  std::string kind;
  std::string set_name;  // empty for space-level predicates
  std::vector<double> probs;
  std::vector<std::pair<std::string, std::vector<double>>> points;
  std::vector<std::pair<std::string, double>> scalars;
  std::string seed_path;

  double scalar(const std::string& name, double dflt = 0.0) const {
    for (const auto& [k, v] : scalars)
      if (k == name) return v;
    return dflt;
  }
  const std::vector<double>* point(const std::string& name) const {
    for (const auto& [k, v] : points)
      if (k == name) return &v;
    return nullptr;
  }
};

}  // namespace riskset
