#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riskset/audits.hpp"
#include "riskset/witness.hpp"

namespace riskset {

/// Identity of one theorem suite run. Suite ids are stable public strings.
struct TheoremCheck {
  std::string id;
  std::string set_name;  // empty for space-level suites
  std::string sampler;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
};

struct SubResult {
  std::string name;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
  std::optional<Counterexample> counterexample;
};

struct DefectRow {
  std::size_t trial = 0;
  double defect = 0.0;
  std::string seed_path;
};

struct ReportStats {
  std::size_t trials = 0;
  double max_defect = 0.0;
};

/// Outcome of one randomized theorem check. The top-level verdict states
/// whether the observations are consistent with the theorem; subresults
/// carry the individual audits and sweeps, including witnesses for
/// properties that genuinely fail on the set under test.
struct PropertyReport {
  TheoremCheck check;
  Verdict verdict = Verdict::inconclusive;
  ReportStats stats;
  std::vector<SubResult> subresults;
  std::vector<std::string> notes;
  std::optional<Counterexample> counterexample;
  /// Per-trial defect sweep; written to CSV on request, never into JSON.
  std::vector<DefectRow> defect_rows;
};

/// Shortest round-trip decimal form; deterministic across runs.
std::string fmt_double(double v);

/// Deterministic JSON rendering (schema "riskset-report/1"). Identical
/// inputs produce byte-identical output. Non-finite values are encoded as
/// the strings "inf", "-inf".
std::string report_to_json(const PropertyReport& report, int indent = 2);

std::string counterexample_to_json(const Counterexample& ce, int indent = 2);

/// CSV defect sweep with header trial,defect,seed-path.
std::string defects_to_csv(const PropertyReport& report);

}  // namespace riskset
