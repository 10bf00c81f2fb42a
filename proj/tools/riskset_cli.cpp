#include "riskset_cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riskset/catalog.hpp"
#include "riskset/errors.hpp"
#include "riskset/measures.hpp"
#include "riskset/theorems.hpp"

namespace riskset::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    // trim spaces
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (!tok.empty()) {
      double v = 0.0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size())
        throw DomainError("malformed number '" + tok + "' in list");
      out.push_back(v);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct InputData {
  ProbSpacePtr space;
  std::map<std::string, std::vector<double>> vectors;
};

InputData load_input(const RunConfig& config) {
  InputData data;
  if (!config.vector_inline.empty()) {
    auto values = parse_csv_doubles(config.vector_inline);
    data.space = config.probs_inline.empty()
                     ? ProbSpace::uniform(values.size())
                     : ProbSpace::make(parse_csv_doubles(config.probs_inline));
    data.vectors["X"] = std::move(values);
    return data;
  }
  if (config.input_path.empty())
    throw DomainError("no input: pass --vector or --input");
  std::ifstream in(config.input_path);
  if (!in) throw DomainError("cannot open input file " + config.input_path);
  Json j = Json::parse(in);  // parse errors carry line/column diagnostics
  if (j.contains("vectors")) {
    for (auto& [name, values] : j.at("vectors").items())
      data.vectors[name] = values.get<std::vector<double>>();
  } else if (j.contains("values")) {
    data.vectors["X"] = j.at("values").get<std::vector<double>>();
  } else {
    throw DomainError("input file needs a 'vectors' object or a 'values' array");
  }
  if (data.vectors.empty()) throw DomainError("input file has no vectors");
  if (j.contains("probs")) {
    data.space = ProbSpace::make(j.at("probs").get<std::vector<double>>());
  } else {
    data.space = ProbSpace::uniform(data.vectors.begin()->second.size());
  }
  return data;
}

RandVar input_var(const InputData& data, const std::string& name) {
  auto it = data.vectors.find(name);
  if (it == data.vectors.end())
    throw DomainError("input has no vector named '" + name + "'");
  return RandVar(data.space, it->second);
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write report file " + path);
    out << content;
  }
  fs::rename(tmp, target);
}

std::string strip_catalog_prefix(const std::string& spec) {
  const std::string prefix = "catalog:";
  return spec.rfind(prefix, 0) == 0 ? spec.substr(prefix.size()) : spec;
}

std::size_t default_dimension(const std::string& set_spec) {
  const std::string name = strip_catalog_prefix(set_spec);
  if (name.rfind("fig1", 0) == 0 || name.rfind("simplex_q1", 0) == 0) return 2;
  return 4;
}

AcceptanceSet make_set(const RunConfig& config, const ProbSpacePtr& space) {
  if (config.set_spec.empty()) throw DomainError("missing --set");
  return catalog(strip_catalog_prefix(config.set_spec), space);
}

/// Appends the replay invocation when the report carries counterexamples.
std::string finalize_report_json(const std::string& report_json,
                                 const std::string& report_path) {
  Json j = Json::parse(report_json);
  bool has_ce = j.contains("counterexample");
  if (!has_ce && j.contains("subresults"))
    for (const auto& sub : j.at("subresults"))
      if (sub.contains("counterexample")) has_ce = true;
  if (has_ce && !report_path.empty())
    j["replay"] = "riskset replay --report " + report_path;
  return j.dump(2) + "\n";
}

int exit_of(Verdict v) {
  switch (v) {
    case Verdict::pass: return kExitPass;
    case Verdict::fail: return kExitFail;
    case Verdict::inconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

int emit_report(const PropertyReport& report, const RunConfig& config) {
  if (!config.report_path.empty()) {
    if (config.format == "csv")
      write_atomic(config.report_path, defects_to_csv(report));
    else
      write_atomic(config.report_path,
                   finalize_report_json(report_to_json(report),
                                        config.report_path));
  }
  std::cout << report.check.id << ": " << verdict_name(report.verdict)
            << " (trials=" << report.stats.trials
            << ", max_defect=" << fmt_double(report.stats.max_defect) << ")\n";
  for (const auto& note : report.notes) std::cout << "  note: " << note << "\n";
  return exit_of(report.verdict);
}

int run_eval(const RunConfig& config) {
  MeasureSpec spec = [&] {
    if (config.measure == "neg-expectation") return MeasureSpec::neg_expectation();
    if (config.measure == "var") {
      if (!config.alpha) throw DomainError("var needs --alpha");
      return MeasureSpec::var(*config.alpha);
    }
    if (config.measure == "es") {
      if (!config.alpha) throw DomainError("es needs --alpha");
      return MeasureSpec::es(*config.alpha);
    }
    if (config.measure == "entropic") {
      if (!config.theta) throw DomainError("entropic needs --theta");
      return MeasureSpec::entropic(*config.theta);
    }
    if (config.measure == "sd") return MeasureSpec::sd();
    if (config.measure == "mad") return MeasureSpec::mad();
    throw DomainError("unknown measure '" + config.measure + "'");
  }();
  InputData data = load_input(config);
  const double value = evaluate(spec, input_var(data, config.var_name));
  std::cout << fmt_double(value) << "\n";
  if (!config.report_path.empty()) {
    if (config.format == "csv") {
      write_atomic(config.report_path, "value\n" + fmt_double(value) + "\n");
    } else {
      Json j;
      j["value"] = value;
      write_atomic(config.report_path, j.dump(2) + "\n");
    }
  }
  return kExitPass;
}

int run_gauge(const RunConfig& config) {
  InputData data = load_input(config);
  AcceptanceSet set = make_set(config, data.space);
  RandVar x = input_var(data, config.var_name);
  GaugeResult g = [&] {
    if (config.kind == "rho") return rho(set, x, config.tol);
    if (config.kind == "psi") return psi_complement(set, x, config.tol);
    if (config.kind == "dev") return minkowski_dev(set, x, config.tol);
    if (config.kind == "cogauge") return cogauge_complement(set, x, config.tol);
    throw DomainError("unknown gauge kind '" + config.kind + "'");
  }();
  Json j;
  if (std::isfinite(g.value))
    j["value"] = g.value;
  else
    j["value"] = g.value > 0 ? "inf" : "-inf";
  j["status"] = gauge_status_name(g.status);
  j["iterations"] = g.iterations;
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!config.report_path.empty()) write_atomic(config.report_path, text);
  return kExitPass;
}

ConeKind parse_cone(const std::string& name) {
  if (name == "comonotonic-span" || name == "comonotonic")
    return ConeKind::comonotonic_span;
  if (name == "independent") return ConeKind::independent;
  if (name == "uncorrelated") return ConeKind::uncorrelated;
  if (name == "covariance-one") return ConeKind::covariance_one;
  throw DomainError("unknown cone class '" + name + "'");
}

int run_verify(const RunConfig& config) {
  SuiteConfig cfg{config.trials, config.seed, config.tol};
  const std::string& id = config.theorem_id;
  PropertyReport report;
  if (id == "lemma-2.9") {
    const std::size_t n = config.n ? config.n : 4;
    report = verify_cone_comono(ProbSpace::uniform(n), cfg);
  } else {
    const std::size_t n =
        config.n ? config.n : default_dimension(config.set_spec);
    auto space = ProbSpace::uniform(n);
    AcceptanceSet set = make_set(config, space);
    if (id == "lemma-2.4")
      report = verify_sandwich(set, cfg);
    else if (id == "lemma-2.6")
      report = verify_risk_corisk(set, cfg);
    else if (id == "lemma-3.6")
      report = verify_gauge_cogauge(set, cfg);
    else if (id == "thm-2.7")
      report = verify_main_lemma(set, parse_cone(config.cone), cfg);
    else if (id == "thm-2.10")
      report = verify_main_theorem(set, cfg);
    else if (id == "thm-3.7")
      report = verify_dev_additive(set, cfg);
    else if (id == "thm-3.8")
      report = verify_coro_como(set, cfg);
    else
      throw DomainError("unknown theorem id '" + id +
                        "' (expected lemma-2.4, lemma-2.6, lemma-2.9, "
                        "lemma-3.6, thm-2.7, thm-2.10, thm-3.7, thm-3.8)");
  }
  return emit_report(report, config);
}

int run_counterexample(const RunConfig& config) {
  if (config.counterexample_name != "fig1")
    throw DomainError("unknown counterexample '" + config.counterexample_name +
                      "'");
  PropertyReport report = counterexample_fig1(config.tol);
  return emit_report(report, config);
}

int run_audit(const RunConfig& config) {
  const std::size_t n =
      config.n ? config.n : default_dimension(config.set_spec);
  auto space = ProbSpace::uniform(n);
  AcceptanceSet set = make_set(config, space);
  Flag flag = flag_from_name(config.axiom);
  AxiomAudit audit = audit_flag(set, flag, config.seed, config.trials);

  PropertyReport report;
  report.check.id = "audit-" + config.axiom;
  report.check.set_name = set.name();
  report.check.sampler = "uniform-coords";
  report.check.n = n;
  report.check.trials = config.trials;
  report.check.seed = config.seed;
  report.check.tol = config.tol;
  report.verdict = audit.verdict;
  report.stats.trials = audit.trials_completed;
  SubResult sub;
  sub.name = audit.axiom;
  sub.verdict = audit.verdict;
  sub.note = audit.note;
  sub.counterexample = audit.witness;
  report.subresults.push_back(std::move(sub));
  if (audit.witness) report.counterexample = audit.witness;
  if (!audit.note.empty()) report.notes.push_back(audit.note);
  return emit_report(report, config);
}

Counterexample counterexample_from_json(const Json& j) {
  Counterexample ce;
  ce.kind = j.at("kind").get<std::string>();
  if (j.contains("set")) ce.set_name = j.at("set").get<std::string>();
  ce.probs = j.at("probs").get<std::vector<double>>();
  if (j.contains("points"))
    for (auto& [name, values] : j.at("points").items())
      ce.points.emplace_back(name, values.get<std::vector<double>>());
  if (j.contains("scalars")) {
    for (auto& [name, value] : j.at("scalars").items()) {
      double v = 0.0;
      if (value.is_string()) {
        const std::string s = value.get<std::string>();
        v = s == "inf" ? std::numeric_limits<double>::infinity()
                       : s == "-inf" ? -std::numeric_limits<double>::infinity()
                                     : std::nan("");
      } else {
        v = value.get<double>();
      }
      ce.scalars.emplace_back(name, v);
    }
  }
  if (j.contains("seed_path")) ce.seed_path = j.at("seed_path").get<std::string>();
  return ce;
}

int run_replay(const RunConfig& config) {
  if (config.report_path.empty()) throw DomainError("replay needs --report");
  std::ifstream in(config.report_path);
  if (!in) throw DomainError("cannot open report file " + config.report_path);
  Json j = Json::parse(in);
  std::vector<std::pair<std::string, Counterexample>> found;
  if (j.contains("counterexample"))
    found.emplace_back("report", counterexample_from_json(j.at("counterexample")));
  if (j.contains("subresults")) {
    for (const auto& sub : j.at("subresults"))
      if (sub.contains("counterexample"))
        found.emplace_back(sub.value("name", "subresult"),
                           counterexample_from_json(sub.at("counterexample")));
  }
  if (found.empty()) {
    std::cout << "replay: no counterexamples in report\n";
    return kExitInconclusive;
  }
  const double tol = j.contains("check") && j.at("check").contains("tol")
                         ? j.at("check").at("tol").get<double>()
                         : config.tol;
  bool all_ok = true;
  for (const auto& [where, ce] : found) {
    const bool ok = replay_reproduces(ce, tol);
    std::cout << "replay " << where << " [" << ce.kind
              << "]: " << (ok ? "reproduced" : "NOT reproduced") << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? kExitPass : kExitFail;
}

}  // namespace

int run(const RunConfig& config) {
  try {
    if (config.trials < 1) throw DomainError("trials must be at least 1");
    if (!(config.tol > 0.0)) throw DomainError("tol must be positive");
    switch (config.command) {
      case RunConfig::Command::eval: return run_eval(config);
      case RunConfig::Command::gauge: return run_gauge(config);
      case RunConfig::Command::verify: return run_verify(config);
      case RunConfig::Command::counterexample: return run_counterexample(config);
      case RunConfig::Command::audit: return run_audit(config);
      case RunConfig::Command::replay: return run_replay(config);
    }
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

int main_with_args(int argc, const char* const* argv) {
  CLI::App app{"acceptance-set risk and deviation measures on finite spaces"};
  app.require_subcommand(1);
  RunConfig config;
  bool seed_given = false;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", config.input_path, "input JSON file");
    cmd->add_option("--vector", config.vector_inline,
                    "inline payoff vector, e.g. \"1,2\"");
    cmd->add_option("--probs", config.probs_inline, "inline outcome weights");
    cmd->add_option("--var", config.var_name, "vector name within the input");
    cmd->add_option("--format", config.format, "json | csv");
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "random seed")
        ->each([&](const std::string&) { seed_given = true; });
    cmd->add_option("--trials", config.trials, "trial count");
    cmd->add_option("--tol", config.tol, "bisection tolerance");
    cmd->add_option("--n", config.n, "outcome count (0 = set default)");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a closed-form measure");
  eval->add_option("--measure", config.measure,
                   "neg-expectation | var | es | entropic | sd | mad")
      ->required();
  eval->add_option_function<double>(
          "--alpha", [&](double v) { config.alpha = v; }, "tail level for var/es");
  eval->add_option_function<double>(
          "--theta", [&](double v) { config.theta = v; },
          "entropic risk aversion");
  eval->add_option("--out", config.report_path, "write the value here");
  add_io(eval);

  auto* gauge = app.add_subcommand("gauge", "compute an induced functional");
  gauge->add_option("--set", config.set_spec, "catalog set, e.g. catalog:fig1")
      ->required();
  gauge->add_option("--kind", config.kind, "rho | psi | dev | cogauge");
  gauge->add_option("--tol", config.tol, "bisection tolerance");
  gauge->add_option("--out", config.report_path, "write the JSON result here");
  add_io(gauge);

  auto* verify = app.add_subcommand("verify", "run a theorem property suite");
  verify->add_option("--theorem", config.theorem_id, "suite id")->required();
  verify->add_option("--set", config.set_spec, "catalog set");
  verify->add_option("--cone", config.cone,
                     "comonotonic-span | independent | uncorrelated | "
                     "covariance-one");
  verify->add_option("--report", config.report_path, "report path");
  verify->add_option("--format", config.format, "json | csv (defect sweep)");
  add_seed(verify);

  auto* counter =
      app.add_subcommand("counterexample", "reproduce a designed counterexample");
  counter->add_option("name", config.counterexample_name, "fig1");
  counter->add_option("--report", config.report_path, "report path");
  counter->add_option("--tol", config.tol, "bisection tolerance");

  auto* audit = app.add_subcommand("audit", "run one structural-flag audit");
  audit->add_option("--set", config.set_spec, "catalog set")->required();
  audit->add_option("--axiom", config.axiom, "structural flag name")
      ->required();
  audit->add_option("--report", config.report_path, "report path");
  add_seed(audit);

  auto* replay = app.add_subcommand("replay", "re-run report counterexamples");
  replay->add_option("--report", config.report_path, "report path")
      ->required();
  replay->add_option("--tol", config.tol, "bisection tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitPass;
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!seed_given) {
    if (const char* env = std::getenv("RISKSET_SEED")) {
      char* end = nullptr;
      config.seed = std::strtoull(env, &end, 10);
    }
  }

  if (eval->parsed()) config.command = RunConfig::Command::eval;
  if (gauge->parsed()) config.command = RunConfig::Command::gauge;
  if (verify->parsed()) config.command = RunConfig::Command::verify;
  if (counter->parsed()) config.command = RunConfig::Command::counterexample;
  if (audit->parsed()) config.command = RunConfig::Command::audit;
  if (replay->parsed()) config.command = RunConfig::Command::replay;
  return riskset::cli::run(config);
}

}  // namespace riskset::cli
