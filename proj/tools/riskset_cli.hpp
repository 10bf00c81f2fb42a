#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace riskset::cli {

/// One resolved invocation. Identical configs (including seed) produce
/// byte-identical reports.
struct RunConfig {
  enum class Command { eval, gauge, verify, counterexample, audit, replay };
  Command command = Command::eval;

  // eval
  std::string measure;
  std::optional<double> alpha;
  std::optional<double> theta;

  // gauge / verify / audit
  std::string set_spec;        // "catalog:NAME?key=value"
  std::string kind = "dev";    // rho | psi | dev | cogauge
  std::string theorem_id;
  std::string cone = "comonotonic-span";
  std::string axiom;
  std::string counterexample_name = "fig1";
  std::size_t n = 0;           // 0 picks the set's natural dimension
  std::size_t trials = 10000;
  std::uint64_t seed = 42;
  double tol = 1e-9;

  // io
  std::string input_path;
  std::string vector_inline;   // comma-separated payoffs
  std::string probs_inline;    // comma-separated weights
  std::string var_name = "X";
  std::string report_path;
  std::string format = "json";  // json | csv
};

/// Exit status: 0 all verdicts pass, 1 at least one fail (counterexample in
/// the report), 2 usage/config error, 3 inconclusive verdicts present.
int run(const RunConfig& config);

/// Parses argv (CLI11) and dispatches to run(). RISKSET_SEED is the
/// fallback seed when --seed is not given.
int main_with_args(int argc, const char* const* argv);

}  // namespace riskset::cli
