#include "riskset/report.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace riskset {

namespace {

using Json = nlohmann::ordered_json;

Json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Json to_json(const Counterexample& ce) {
  Json j;
  j["kind"] = ce.kind;
  if (!ce.set_name.empty()) j["set"] = ce.set_name;
  j["probs"] = ce.probs;
  Json points = Json::object();
  for (const auto& [name, values] : ce.points) points[name] = values;
  j["points"] = std::move(points);
  Json scalars = Json::object();
  for (const auto& [name, value] : ce.scalars)
    scalars[name] = number_or_string(value);
  j["scalars"] = std::move(scalars);
  if (!ce.seed_path.empty()) j["seed_path"] = ce.seed_path;
  return j;
}

Json to_json(const SubResult& sub) {
  Json j;
  j["name"] = sub.name;
  j["verdict"] = verdict_name(sub.verdict);
  if (!sub.note.empty()) j["note"] = sub.note;
  if (sub.counterexample) j["counterexample"] = to_json(*sub.counterexample);
  return j;
}

}  // namespace

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string report_to_json(const PropertyReport& report, int indent) {
  Json j;
  j["schema"] = "riskset-report/1";
  Json check;
  check["id"] = report.check.id;
  if (!report.check.set_name.empty()) check["set"] = report.check.set_name;
  check["sampler"] = report.check.sampler;
  check["n"] = report.check.n;
  check["trials"] = report.check.trials;
  check["seed"] = report.check.seed;
  check["tol"] = report.check.tol;
  j["check"] = std::move(check);
  j["verdict"] = verdict_name(report.verdict);
  Json stats;
  stats["trials"] = report.stats.trials;
  stats["max_defect"] = number_or_string(report.stats.max_defect);
  j["stats"] = std::move(stats);
  if (!report.subresults.empty()) {
    Json subs = Json::array();
    for (const auto& sub : report.subresults) subs.push_back(to_json(sub));
    j["subresults"] = std::move(subs);
  }
  if (!report.notes.empty()) j["notes"] = report.notes;
  if (report.counterexample)
    j["counterexample"] = to_json(*report.counterexample);
  return j.dump(indent) + "\n";
}

std::string counterexample_to_json(const Counterexample& ce, int indent) {
  return to_json(ce).dump(indent) + "\n";
}

std::string defects_to_csv(const PropertyReport& report) {
  std::string out = "trial,defect,seed-path\n";
  for (const auto& row : report.defect_rows) {
    out += std::to_string(row.trial);
    out += ',';
    out += fmt_double(row.defect);
    out += ',';
    out += row.seed_path;
    out += '\n';
  }
  return out;
}

}  // namespace riskset
