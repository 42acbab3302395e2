#include "itensor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "itensor/error.hpp"
#include "itensor/interval_classifiers.hpp"
#include "itensor/io.hpp"
#include "itensor/oracle.hpp"
#include "itensor/point.hpp"

namespace itensor {

namespace {

constexpr std::size_t kDefaultFalsifyBudget = 10000;

struct Options {
  std::string class_id;
  std::string method;
  std::string input;
  std::string output;
  std::string format = "json";
  std::string structure = "general";
  double epsilon = 0.0;
  std::uint64_t seed = 7;
  std::uint64_t budget = 0;
  std::size_t trials = 1000;
  int order = 3;
  Index dim = 2;
};

struct Outcome {
  Verdict verdict;
  /// Extra report fields, merged after the verdict.
  Json extra = Json::object();
};

const std::vector<std::string> kPointClasses = {"b", "double-b", "z", "sdd", "circulant-b", "p-sufficient", "p-falsify"};
const std::vector<std::string> kIntervalClasses = {"interval-b", "interval-double-b", "interval-z",
                                                   "interval-circulant", "interval-p-sufficient"};

bool is_point_class(const std::string& c) {
  return std::find(kPointClasses.begin(), kPointClasses.end(), c) != kPointClasses.end();
}
bool is_interval_class(const std::string& c) {
  return std::find(kIntervalClasses.begin(), kIntervalClasses.end(), c) != kIntervalClasses.end();
}

[[noreturn]] void bad_method(const std::string& cls, const std::string& method) {
  throw InputError("class " + cls + " has no method '" + method + "'");
}

void require_no_method(const std::string& cls, const std::string& method) {
  if (!method.empty()) bad_method(cls, method);
}

Outcome evaluate_point(const std::string& cls, const std::string& method, const Tensor& a, const Options& o) {
  const CheckOptions opt{Tolerance{o.epsilon}, true};
  if (cls == "b") {
    BMethod m = BMethod::Definition;
    if (method == "rowsum_gamma") {
      m = BMethod::RowsumGamma;
    } else if (method == "slack") {
      m = BMethod::Slack;
    } else if (!method.empty() && method != "definition") {
      bad_method(cls, method);
    }
    return {check_b(a, m, opt)};
  }
  if (cls == "double-b") {
    require_no_method(cls, method);
    return {check_double_b(a, opt)};
  }
  if (cls == "z") {
    require_no_method(cls, method);
    return {check_z(a, opt)};
  }
  if (cls == "sdd") {
    if (!method.empty() && method != "strict" && method != "weak") bad_method(cls, method);
    return {check_dd(a, method != "weak", opt)};
  }
  if (cls == "circulant-b") {
    require_no_method(cls, method);
    return {check_b_circulant(a, opt)};
  }
  if (cls == "p-sufficient") {
    require_no_method(cls, method);
    return {p_sufficient(a, opt)};
  }
  if (cls == "p-falsify") {
    require_no_method(cls, method);
    const std::size_t budget = o.budget ? o.budget : kDefaultFalsifyBudget;
    const auto res = falsify_p(a, budget, o.seed);
    Outcome out;
    out.verdict.method = "p-falsify";
    out.extra["samples_used"] = res.samples_used;
    if (res.falsified) {
      out.verdict.status = Status::Fails;
      Witness w;
      w.condition = "p";
      w.lhs = res.max_product.value_or(0.0);
      w.rhs = 0.0;
      w.relation = Relation::Greater;
      out.verdict.witness = w;
      if (res.counterexample) out.extra["counterexample"] = *res.counterexample;
    } else {
      out.verdict.status = Status::Inconclusive;
      out.verdict.notes.push_back("no falsifying vector among " + std::to_string(res.samples_used) + " candidates");
    }
    return out;
  }
  throw InputError("unknown class '" + cls + "'");
}

Outcome evaluate_interval(const std::string& cls, const std::string& method, const IntervalTensor& ai,
                          const Options& o) {
  const CheckOptions opt{Tolerance{o.epsilon}, true};
  OracleOptions oopt;
  oopt.tolerance = opt.tolerance;
  oopt.member_seed = o.seed;
  if (o.budget) oopt.budget = o.budget;

  if (cls == "interval-b") {
    if (method.empty() || method == "theorem") return {check_interval_b(ai, IntervalBMethod::Theorem, opt)};
    if (method == "compact") return {check_interval_b(ai, IntervalBMethod::Compact, opt)};
    if (method == "slack") return {check_interval_b(ai, IntervalBMethod::Slack, opt)};
    if (method == "pairwise") return {check_interval_b(ai, IntervalBMethod::Pairwise, opt)};
    if (method == "zfast") return {check_interval_b_zfast(ai, opt)};
    if (method == "necessary") return {interval_b_necessary(ai, opt)};
    if (method == "oracle") return {oracle_interval_b(ai, oopt)};
    bad_method(cls, method);
  }
  if (cls == "interval-double-b") {
    if (method.empty() || method == "theorem") return {check_interval_double_b(ai, opt)};
    if (method == "necessary-extremes") return {interval_double_b_necessary(ai, NecessaryVariant::Extremes, opt)};
    if (method == "necessary-rowmax") return {interval_double_b_necessary(ai, NecessaryVariant::Rowmax, opt)};
    if (method == "dominance") return {check_interval_double_b_dominance(ai, opt)};
    if (method == "zfast") return {check_interval_double_b_zfast(ai, opt)};
    if (method == "hat") return {check_interval_double_b_hat_sufficient(ai, opt)};
    if (method == "oracle") return {oracle_interval_double_b(ai, oopt)};
    bad_method(cls, method);
  }
  if (cls == "interval-z") {
    require_no_method(cls, method);
    // Every member is Z exactly when the upper bound is.
    auto v = check_z(ai.upper(), opt);
    v.method = "interval-z";
    return {std::move(v)};
  }
  if (cls == "interval-circulant") {
    require_no_method(cls, method);
    return {check_interval_circulant(ai, opt)};
  }
  if (cls == "interval-p-sufficient") {
    require_no_method(cls, method);
    return {interval_p_sufficient(ai, opt)};
  }
  throw InputError("unknown class '" + cls + "'");
}

Outcome evaluate_dichotomy(const Json& j, InputKind kind, const Options& o) {
  const CheckOptions opt{Tolerance{o.epsilon}, false};
  Outcome out;
  out.verdict.method = "dichotomy";
  Json d;
  if (kind == InputKind::Tensor) {
    const Tensor a = tensor_from_json(j);
    const auto r = classify_double_b_dichotomy(a, opt);
    d["kind"] = dichotomy_name(r.kind);
    d["critical_row"] = r.critical_row ? Json(*r.critical_row + 1) : Json(nullptr);
    Json rows = Json::array();
    for (Index i : r.equality_rows) rows.push_back(i + 1);
    d["equality_rows"] = std::move(rows);
    out.verdict.status = r.kind == PointDichotomy::Kind::NotDoubleB ? Status::Fails : Status::Holds;
    if (r.equality_rows.size() > 1) out.verdict.notes.push_back("more than one row at slack equality");
  } else {
    const IntervalTensor ai = interval_from_json(j);
    const auto r = classify_interval_double_b_dichotomy(ai, opt);
    d["kind"] = dichotomy_name(r.kind);
    d["critical_row"] = r.critical_row ? Json(*r.critical_row + 1) : Json(nullptr);
    Json rows = Json::array();
    for (const auto& f : r.failing_rows) {
      Json fj;
      fj["row"] = f.row + 1;
      fj["mode"] = f.mode == IntervalDichotomy::Mode::NonpositiveRowSum ? "NonpositiveRowSum" : "SlackEquality";
      if (f.tail) {
        Json idx = Json::array();
        for (Index digit : ai.shape().tail_digits(*f.tail)) idx.push_back(digit + 1);
        fj["index"] = std::move(idx);
      }
      rows.push_back(std::move(fj));
    }
    d["failing_rows"] = std::move(rows);
    out.verdict.status = r.kind == IntervalDichotomy::Kind::NotDoubleB ? Status::Fails : Status::Holds;
    if (r.failing_rows.size() > 1) out.verdict.notes.push_back("more than one failing row");
  }
  if (out.verdict.status == Status::Fails) out.verdict.notes.push_back("not double B; dichotomy does not apply");
  out.extra["dichotomy"] = std::move(d);
  return out;
}

Shape shape_of(const Json& j, InputKind kind) {
  return kind == InputKind::Tensor ? tensor_from_json(j).shape() : interval_from_json(j).shape();
}

Outcome evaluate(const std::string& cls, const std::string& method, const Json& j, InputKind kind, const Options& o) {
  if (cls == "dichotomy") {
    require_no_method(cls, method);
    return evaluate_dichotomy(j, kind, o);
  }
  if (is_point_class(cls)) {
    if (kind != InputKind::Tensor) throw InputError("class " + cls + " needs a tensor file (\"entries\")");
    return evaluate_point(cls, method, tensor_from_json(j), o);
  }
  if (is_interval_class(cls)) {
    if (kind != InputKind::Interval) throw InputError("class " + cls + " needs an interval file (\"lower\"/\"upper\")");
    return evaluate_interval(cls, method, interval_from_json(j), o);
  }
  throw InputError("unknown class '" + cls + "'");
}

int exit_code(Status s) {
  switch (s) {
    case Status::Holds: return kExitHolds;
    case Status::Fails: return kExitFails;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitError;
}

Json input_block(const Options& o, const std::string& text, InputKind kind) {
  Json in;
  in["path"] = o.input;
  in["sha256"] = sha256_hex(text);
  in["kind"] = kind == InputKind::Tensor ? "tensor" : "interval";
  return in;
}

void emit(const Options& o, const std::string& body, std::ostream& out) {
  if (o.output.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw InputError("cannot write " + o.output);
  f << body;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_check(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(o.input);
  const Json j = parse_json_text(text, o.input);
  const InputKind kind = detect_kind(j);
  const Shape shape = shape_of(j, kind);
  const Outcome r = evaluate(o.class_id, o.method, j, kind, o);

  const std::string summary = verdict_summary(r.verdict, shape, o.class_id);
  if (o.format == "text") {
    emit(o, summary, out);
  } else {
    Json report = verdict_to_json(r.verdict, shape, o.class_id);
    for (const auto& [k, v] : r.extra.items()) report[k] = v;
    report["input"] = input_block(o, text, kind);
    report["epsilon"] = o.epsilon;
    report["seed"] = o.seed;
    report["budget"] = o.budget;
    emit(o, dump(report), out);
    err << summary;
  }
  return exit_code(r.verdict.status);
}

int run_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(o.input);
  const Json j = parse_json_text(text, o.input);
  const InputKind kind = detect_kind(j);
  const Shape shape = shape_of(j, kind);

  std::vector<std::string> classes;
  if (kind == InputKind::Tensor) {
    const Tensor a = tensor_from_json(j);
    classes = {"b", "double-b", "z", "sdd"};
    if (is_circulant(a)) classes.push_back("circulant-b");
    classes.push_back("p-sufficient");
  } else {
    const IntervalTensor ai = interval_from_json(j);
    classes = {"interval-b", "interval-double-b", "interval-z"};
    if (is_circulant(ai.lower()) && is_circulant(ai.upper())) classes.push_back("interval-circulant");
    classes.push_back("interval-p-sufficient");
  }
  classes.push_back("dichotomy");

  Json results = Json::array();
  std::string summary;
  for (const auto& c : classes) {
    const Outcome r = evaluate(c, "", j, kind, o);
    Json v = verdict_to_json(r.verdict, shape, c);
    for (const auto& [k, val] : r.extra.items()) v[k] = val;
    results.push_back(std::move(v));
    summary += verdict_summary(r.verdict, shape, c);
  }
  if (o.format == "text") {
    emit(o, summary, out);
  } else {
    Json report;
    report["results"] = std::move(results);
    report["input"] = input_block(o, text, kind);
    report["epsilon"] = o.epsilon;
    report["seed"] = o.seed;
    emit(o, dump(report), out);
    err << summary;
  }
  return kExitHolds;
}

int run_generate(const Options& o, std::ostream& out) {
  GeneratorSpec spec;
  spec.order = o.order;
  spec.dim = o.dim;
  spec.seed = o.seed;
  spec.structure = parse_structure(o.structure);
  emit(o, dump(to_json(random_interval_tensor(spec))), out);
  return kExitHolds;
}

std::string suite_summary(const SuiteReport& r) {
  std::ostringstream os;
  os << r.suite << ": " << r.trials << " trials, seed " << r.config.seed << "\n";
  for (const auto& [id, t] : r.properties) {
    os << "  " << id << ": " << t.agreements << "/" << t.applicable << "\n";
  }
  const auto& p = r.probe;
  os << "  double B but not B: " << p.double_b_not_b << " (manufactured boundary: " << p.manufactured_double_b_not_b
     << "); double-B => B " << (p.double_b_implies_b_refuted() ? "refuted" : "unrefuted") << "\n";
  os << "  counterexamples: " << r.total_counterexamples() << "\n";
  return os.str();
}

int run_cross_validate(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.order = o.order;
  cfg.dim = o.dim;
  cfg.structure = parse_structure(o.structure);
  if (o.budget) cfg.vertex_budget = o.budget;
  const SuiteReport r = equivalence_suite(cfg);
  const std::string summary = suite_summary(r);
  if (o.format == "text") {
    emit(o, summary, out);
  } else {
    emit(o, dump(suite_report_to_json(r)), out);
    err << summary;
  }
  return r.total_counterexamples() == 0 ? kExitHolds : kExitFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structured tensor and interval tensor classifier", "itensor"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "text"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--epsilon", o.epsilon, "Comparison tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--budget", o.budget, "Sample or vertex budget");
    sub->add_option("--output", o.output, "Write the report here instead of stdout");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember(formats));
  };

  auto* check = app.add_subcommand("check", "Run one classifier on a tensor or interval file");
  check->add_option("--class", o.class_id, "Class id")->required();
  check->add_option("--method", o.method, "Classifier variant");
  check->add_option("input", o.input, "Input JSON file")->required();
  common(check);

  auto* classify = app.add_subcommand("classify", "Run every applicable classifier");
  classify->add_option("input", o.input, "Input JSON file")->required();
  common(classify);

  auto* generate = app.add_subcommand("generate", "Write a random interval tensor");
  generate->add_option("--m", o.order, "Order")->check(CLI::Range(2, 64));
  generate->add_option("--n", o.dim, "Dimension")->check(CLI::PositiveNumber);
  generate->add_option("--structure", o.structure, "general, z, circulant or symmetric");
  common(generate);

  auto* cross = app.add_subcommand("cross-validate", "Check the classifiers against the vertex oracle");
  cross->add_option("--trials", o.trials, "Number of generated instances");
  cross->add_option("--m", o.order, "Order")->check(CLI::Range(2, 64));
  cross->add_option("--n", o.dim, "Dimension")->check(CLI::PositiveNumber);
  cross->add_option("--structure", o.structure, "general, z, circulant or symmetric");
  common(cross);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (check->parsed()) return run_check(o, out, err);
    if (classify->parsed()) return run_classify(o, out, err);
    if (generate->parsed()) return run_generate(o, out);
    return run_cross_validate(o, out, err);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (pass --budget >= 2^" << e.required_exponent() << ")\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace itensor
