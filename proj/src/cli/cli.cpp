#include "catk/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "catk/conditions.hpp"
#include "catk/error.hpp"
#include "catk/io.hpp"
#include "catk/properties.hpp"
#include "catk/spaces.hpp"

namespace catk {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string input;
  std::string output;
  std::string format = "text";
  double tolerance = kDefaultTolerance;
  std::size_t witnesses = 10;
  bool all_witnesses = false;
  unsigned jobs = 0;
};

struct Loaded {
  InputDocument doc;
  std::string digest;
};

Loaded load(const std::string& path) {
  const std::string bytes = read_input_file(path);
  return {parse_input(bytes), sha256_hex(bytes)};
}

std::string num(double v) { return fmt::format("{:.10g}", v); }

Json margin_json(const std::optional<double>& m) { return m ? Json(*m) : Json(nullptr); }

Json witness_json(const Witness& w) {
  return Json{{"points", w.points}, {"case", w.case_label}, {"value", w.value}};
}

Json report_json(const ConditionReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["worst_margin"] = margin_json(r.worst_margin);
  j["admissible"] = r.admissible_count;
  j["skipped"] = r.skipped_count;
  j["violations"] = r.violation_count;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = ws;
  j["extremal"] = r.extremal ? witness_json(*r.extremal) : Json(nullptr);
  return j;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

void report_text(std::ostream& os, const ConditionReport& r, const std::string& indent) {
  os << indent << "verdict: " << to_string(r.verdict) << "\n";
  os << indent << "worst margin: " << (r.worst_margin ? num(*r.worst_margin) : "n/a") << "\n";
  os << indent << "configurations: " << r.admissible_count << " admissible, " << r.skipped_count
     << " skipped, " << r.violation_count << " violating\n";
  if (r.extremal) {
    os << indent << "extremal: " << join(r.extremal->points) << " [" << r.extremal->case_label
       << "] value " << num(r.extremal->value) << "\n";
  }
  if (!r.witnesses.empty()) {
    os << indent << "witnesses (" << r.witnesses.size() << " of " << r.violation_count << "):\n";
    for (const auto& w : r.witnesses)
      os << indent << "  " << join(w.points) << " [" << w.case_label << "] value "
         << num(w.value) << "\n";
  }
}

// Writes to --output when given, otherwise to out.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw Error(ErrorKind::Usage, "cannot write output file '" + c.output + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ScanOptions scan_options(const Common& c) {
  ScanOptions o;
  o.tolerance = c.tolerance;
  o.jobs = c.jobs;
  o.max_witnesses = c.all_witnesses ? std::numeric_limits<std::size_t>::max() : c.witnesses;
  return o;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Holds: return kExitOk;
    case Verdict::Fails: return kExitFails;
    case Verdict::Vacuous: return kExitVacuous;
  }
  return kExitFails;
}

int cmd_validate(const Common& c, std::ostream& out) {
  const Loaded in = load(c.input);
  const SemimetricSpace s = in.doc.to_space();
  const ConditionReport r = check_metric(s, scan_options(c));
  const bool metric = !r.fails();
  if (c.format == "json") {
    Json j;
    j["command"] = "validate";
    j["input_digest"] = in.digest;
    j["points"] = s.size();
    j["metric"] = metric;
    j["verdict"] = metric ? "metric" : "not-metric";
    j["worst_margin"] = margin_json(r.worst_margin);
    j["triples"] = r.admissible_count;
    j["violations"] = r.violation_count;
    Json ws = Json::array();
    for (const auto& w : r.witnesses)
      ws.push_back(Json{{"points", w.points}, {"deficit", w.value}});
    j["witnesses"] = ws;
    emit(c, out, dump(j));
  } else {
    std::ostringstream os;
    os << "points: " << s.size() << "\n";
    os << (metric ? "metric: yes" : "metric: no (triangle inequality violated)") << "\n";
    os << "triples: " << r.admissible_count << ", violating: " << r.violation_count << "\n";
    for (const auto& w : r.witnesses)
      os << "  |" << w.points[0] << w.points[2] << "| exceeds |" << w.points[0] << w.points[1]
         << "| + |" << w.points[1] << w.points[2] << "| by " << num(w.value) << "\n";
    emit(c, out, os.str());
  }
  return metric ? kExitOk : kExitNotMetric;
}

Curvature require_curvature(const std::optional<double>& flag, const InputDocument& doc) {
  const std::optional<double> k = flag ? flag : doc.curvature;
  if (!k) throw Error(ErrorKind::Usage, "curvature is required (--curvature or input document)");
  if (*k == 0.0) throw Error(ErrorKind::Usage, "the scanned conditions require K != 0");
  return Curvature(*k);
}

int cmd_scan(const Common& c, const std::optional<double>& kflag, const std::string& condition,
             std::ostream& out) {
  const Loaded in = load(c.input);
  const SemimetricSpace s = in.doc.to_space();
  const Curvature k = require_curvature(kflag, in.doc);
  const ScanOptions opts = scan_options(c);

  Json j;
  j["command"] = "scan";
  j["input_digest"] = in.digest;
  j["curvature"] = k.K();
  j["condition"] = condition;
  j["tolerance"] = c.tolerance;
  std::ostringstream os;
  os << "condition: " << condition << ", K = " << num(k.K()) << ", tolerance " << num(c.tolerance)
     << "\n";
  Verdict verdict = Verdict::Vacuous;
  if (condition == "one-sided") {
    const OneSidedReport r = check_one_sided(k, s, opts);
    verdict = r.verdict;
    j["verdict"] = to_string(r.verdict);
    std::optional<double> best;
    for (const auto* part : {&r.upper, &r.lower})
      if (part->worst_margin && (!best || *part->worst_margin < *best)) best = part->worst_margin;
    j["worst_margin"] = margin_json(best);
    j["admissible"] = r.upper.admissible_count;
    j["skipped"] = r.upper.skipped_count;
    j["witnesses"] = Json::array();
    j["upper"] = report_json(r.upper);
    j["lower"] = report_json(r.lower);
    os << "verdict: " << to_string(r.verdict) << "\n";
    os << "upper:\n";
    report_text(os, r.upper, "  ");
    os << "lower:\n";
    report_text(os, r.lower, "  ");
  } else {
    ConditionReport r;
    if (condition == "upper")
      r = check_upper(k, s, opts);
    else if (condition == "lower")
      r = check_lower(k, s, opts);
    else if (condition == "euler")
      r = check_k_euler(k, s, opts);
    else if (condition == "gromov-plus")
      r = check_gromov_class(k, GromovSign::Plus, s, opts);
    else
      r = check_gromov_class(k, GromovSign::Minus, s, opts);
    verdict = r.verdict;
    const Json body = report_json(r);
    for (const auto& [key, value] : body.items()) j[key] = value;
    report_text(os, r, "");
  }
  emit(c, out, c.format == "json" ? dump(j) : os.str());
  return exit_for(verdict);
}

struct ExampleOutcome {
  Json json;
  bool pass = true;
};

ExampleOutcome reproduce_one(const NamedExample& ex, std::ostream& os) {
  ExampleOutcome o;
  o.json["name"] = ex.name;
  o.json["description"] = ex.description;
  o.json["curvature"] = ex.curvature.K();
  os << ex.name << ": " << ex.description << "\n";
  Json numeric = Json::array();
  int num_ok = 0;
  for (const auto& e : ex.numeric) {
    const double v = e.compute();
    const bool ok = std::abs(v - e.expected) <= e.tolerance;
    num_ok += ok;
    o.pass = o.pass && ok;
    numeric.push_back(Json{{"what", e.what},
                           {"source", e.source},
                           {"expected", e.expected_text},
                           {"computed", v},
                           {"tolerance", e.tolerance},
                           {"pass", ok}});
    os << fmt::format("  {:<8} {:<42} computed {:>14.8f}  expected {} (tol {:.1g})\n",
                      ok ? "ok" : "MISMATCH", e.what, v, e.expected_text, e.tolerance);
  }
  Json verdicts = Json::array();
  int ver_ok = 0;
  for (const auto& e : ex.verdicts) {
    const Verdict v = e.compute();
    const bool ok = v == e.expected;
    ver_ok += ok;
    o.pass = o.pass && ok;
    verdicts.push_back(Json{{"what", e.what},
                            {"source", e.source},
                            {"expected", to_string(e.expected)},
                            {"computed", to_string(v)},
                            {"pass", ok}});
    os << fmt::format("  {:<8} {:<42} {} (expected {})\n", ok ? "ok" : "MISMATCH", e.what,
                      to_string(v), to_string(e.expected));
  }
  os << fmt::format("  {}/{} values, {}/{} verdicts\n", num_ok, ex.numeric.size(), ver_ok,
                    ex.verdicts.size());
  o.json["numeric"] = numeric;
  o.json["verdicts"] = verdicts;
  o.json["pass"] = o.pass;
  return o;
}

int cmd_reproduce(const Common& c, const std::string& name, bool all, bool list,
                  std::ostream& out) {
  const std::vector<NamedExample> reg = registry();
  std::string names;
  for (const auto& e : reg) names += (names.empty() ? "" : ", ") + e.name;
  if (list) {
    std::ostringstream os;
    for (const auto& e : reg) os << e.name << "\n";
    emit(c, out, os.str());
    return kExitOk;
  }
  if (all == !name.empty())
    throw Error(ErrorKind::Usage, "give exactly one of --example NAME or --all");
  std::vector<const NamedExample*> chosen;
  for (const auto& e : reg)
    if (all || e.name == name) chosen.push_back(&e);
  if (chosen.empty())
    throw Error(ErrorKind::Usage, "unknown example '" + name + "'; available: " + names);

  std::ostringstream os;
  Json examples = Json::array();
  bool pass = true;
  for (const auto* e : chosen) {
    ExampleOutcome o = reproduce_one(*e, os);
    pass = pass && o.pass;
    examples.push_back(std::move(o.json));
  }
  os << (pass ? "all expectations reproduced" : "some expectations did not reproduce") << "\n";
  Json j;
  j["command"] = "reproduce";
  j["examples"] = examples;
  j["pass"] = pass;
  emit(c, out, c.format == "json" ? dump(j) : os.str());
  return pass ? kExitOk : kExitFails;
}

int cmd_sample(const Common& c, double K, int dim, int n, std::uint64_t seed,
               const std::optional<double>& cap, const std::string& check_name,
               std::ostream& out) {
  const Curvature k(K);
  const PropertyCheck check = parse_property_check(check_name);
  if (dim != 2 && dim != 3) throw Error(ErrorKind::Usage, "--dim must be 2 or 3");
  if (cap && (!(*cap > 0.0) || (k.positive() && *cap > 0.5 * k.diameter_bound())))
    throw Error(ErrorKind::Usage, "--diam-cap must lie in (0, pi/(2 kappa)]");
  const PropertyRun r = run_property(k, check, n, seed, c.tolerance, dim, cap);
  const bool pass = r.failures == 0;
  if (c.format == "json") {
    Json j;
    j["command"] = "sample";
    j["curvature"] = K;
    j["check"] = to_string(check);
    j["dim"] = dim;
    j["n"] = n;
    j["seed"] = seed;
    j["diam_cap"] = cap ? Json(*cap) : Json(nullptr);
    j["tolerance"] = c.tolerance;
    j["trials"] = r.trials;
    j["skipped"] = r.skipped;
    j["failures"] = r.failures;
    j["max_residual"] = r.max_residual;
    j["first_failure_seed"] = r.first_failure_seed ? Json(*r.first_failure_seed) : Json(nullptr);
    j["pass"] = pass;
    emit(c, out, dump(j));
  } else {
    std::ostringstream os;
    os << "check: " << to_string(check) << ", K = " << num(K) << ", dim " << dim << ", seed "
       << seed << "\n";
    os << "trials: " << r.trials << " (" << r.skipped << " skipped), failures: " << r.failures
       << "\n";
    os << "max residual: " << fmt::format("{:.3e}", r.max_residual) << " (tolerance "
       << num(c.tolerance) << ")\n";
    if (r.first_failure_seed) os << "first counterexample seed: " << *r.first_failure_seed << "\n";
    os << (pass ? "pass" : "FAIL") << "\n";
    emit(c, out, os.str());
  }
  return pass ? kExitOk : kExitFails;
}

void add_common(CLI::App* sub, Common& c, bool needs_input) {
  if (needs_input) sub->add_option("-i,--input", c.input, "Input CSV or JSON file ('-' for stdin)")->required();
  sub->add_option("-o,--output", c.output, "Write the report to this file");
  sub->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--tolerance", c.tolerance, "Numeric tolerance")
      ->envname("CATK_TOLERANCE")
      ->capture_default_str();
}

void add_scan_flags(CLI::App* sub, Common& c) {
  sub->add_option("--witnesses", c.witnesses, "Maximum number of witnesses reported")
      ->capture_default_str();
  sub->add_flag("--all-witnesses", c.all_witnesses, "Report every violating configuration");
  sub->add_option("--jobs", c.jobs, "Worker threads (0: one per hardware thread)")
      ->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature-condition checks for finite distance data and model spaces", "catk"};
  app.require_subcommand(1);
  Common common;

  CLI::App* validate = app.add_subcommand("validate", "Check that the input is a metric");
  add_common(validate, common, true);
  add_scan_flags(validate, common);

  CLI::App* scan = app.add_subcommand("scan", "Scan a four-point or curvature-class condition");
  add_common(scan, common, true);
  add_scan_flags(scan, common);
  std::optional<double> kflag;
  std::string condition;
  scan->add_option("-k,--curvature", kflag, "Curvature K (overrides the input document)");
  scan->add_option("-c,--condition", condition, "Condition to scan")
      ->required()
      ->check(CLI::IsMember({"upper", "lower", "one-sided", "euler", "gromov-plus", "gromov-minus"}));

  CLI::App* reproduce = app.add_subcommand("reproduce", "Reproduce the built-in worked examples");
  add_common(reproduce, common, false);
  std::string example;
  bool all = false;
  bool list = false;
  reproduce->add_option("-e,--example", example, "Example name");
  reproduce->add_flag("--all", all, "Reproduce every example");
  reproduce->add_flag("--list", list, "List example names");

  CLI::App* sample = app.add_subcommand("sample", "Run a randomized model-space property");
  add_common(sample, common, false);
  double K = 0.0;
  int dim = 3;
  int n = 1000;
  std::uint64_t seed = 1;
  std::optional<double> cap;
  std::string check;
  sample->add_option("-k,--curvature", K, "Curvature K")->required();
  sample->add_option("--dim", dim, "Model dimension (2 or 3)")->capture_default_str();
  sample->add_option("-n,--n", n, "Number of trials")->capture_default_str();
  sample->add_option("--seed", seed, "Seed of the first trial")->capture_default_str();
  sample->add_option("--diam-cap", cap, "Diameter cap for sampled configurations");
  sample->add_option("--check", check, "Property to check")
      ->required()
      ->check(CLI::IsMember({"bound", "halving", "euler-eq", "transport"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(common, out);
    if (*scan) return cmd_scan(common, kflag, condition, out);
    if (*reproduce) return cmd_reproduce(common, example, all, list, out);
    return cmd_sample(common, K, dim, n, seed, cap, check, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::Usage ? kExitUsage : kExitMalformed;
  }
}

}  // namespace catk
