#ifndef ASMKIT_CLI_APP_HPP
#define ASMKIT_CLI_APP_HPP

// Command-line front end. Kept in a header so the tests can drive it with
// in-memory streams.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "asmkit/asmkit.hpp"
#include "json.hpp"

namespace asmkit::cli {

using Json = nlohmann::ordered_json;

enum Exit : int { ok = 0, check_failed = 1, usage = 2 };

// Bad flag combination detected after parsing but before any work starts.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

inline const std::map<std::string, std::string>& synopses() {
  static const std::map<std::string, std::string> s{
      {"enumerate", "asmkit enumerate --class asm|dsasm|osasm --order N [--output text|json] [--cap N]"},
      {"count", "asmkit count --class asm|dsasm|osasm --order N [--output text|json] [--cap N]"},
      {"genfunc", "asmkit genfunc --class dsasm|osasm --order N [--output text|json] [--cap N]"},
      {"eval-partition",
       "asmkit eval-partition --order N [--model general|specialized|osasm] [--field rational|cyclo12] "
       "[--u a,b,...] [--q Q] [--s S] [--alpha A --beta B --gamma C --delta D] [--method direct|pfaffian] "
       "[--output text|json] [--cap N]"},
      {"dump-config",
       "asmkit dump-config (--matrix \"r1;r2;...\" | --order N [--class dsasm|osasm]) [--output text|json] [--cap N]"},
      {"check", "asmkit check ID [--size N] [--trials T] [--seed S] [--field F] [--output text|json] [--cap N]"},
      {"report", "asmkit report [--max-order N] [--seed S] [--trials T] [--output json|csv] [--cap N]"},
  };
  return s;
}

inline std::string synopsis_for(const std::string& cmd) {
  if (auto it = synopses().find(cmd); it != synopses().end()) return "usage: " + it->second;
  std::string all = "usage:";
  for (const auto& [k, v] : synopses()) all += "\n  " + v;
  return all;
}

struct Options {
  std::string cls = "dsasm";
  int order = 0;
  std::optional<int> size;
  int trials = 5;
  std::uint64_t seed = 42;
  std::string field;
  std::string output = "json";
  std::optional<int> cap;
  std::string identity;
  std::string model = "specialized";
  std::string method = "direct";
  std::string u, q, s, alpha, beta, gamma, delta;
  std::string matrix;
};

inline EnumerationCaps caps_of(const Options& o) {
  auto caps = EnumerationCaps::from_env();
  return o.cap ? caps.raised_to(*o.cap) : caps;
}

inline void require_output(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (o.output == a) return;
  }
  throw UsageError("--output " + o.output + " is not supported by this command");
}

inline Json matrix_json(const AsmMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.order(); ++i) {
    Json r = Json::array();
    for (int j = 0; j < a.order(); ++j) r.push_back(a.at(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline void print(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// ---- enumerate / count / genfunc ----------------------------------------

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  require_output(o, {"text", "json"});
  auto cls = parse_class(o.cls);
  auto caps = caps_of(o);
  caps.check(o.order, cls);
  if (o.output == "text") {
    bool first = true;
    for_each_asm(o.order, cls, [&](const AsmMatrix& a) {
      if (!first) out << '\n';
      first = false;
      out << a.to_text();
    }, caps);
    return ok;
  }
  Json mats = Json::array();
  for_each_asm(o.order, cls, [&](const AsmMatrix& a) { mats.push_back(matrix_json(a)); }, caps);
  Json j;
  j["class"] = o.cls;
  j["order"] = o.order;
  j["count"] = std::to_string(mats.size());
  j["matrices"] = std::move(mats);
  print(out, j);
  return ok;
}

inline int cmd_count(const Options& o, std::ostream& out) {
  require_output(o, {"text", "json"});
  auto cls = parse_class(o.cls);
  auto n = count(o.order, cls, caps_of(o));
  if (o.output == "text") {
    out << n << '\n';
  } else {
    Json j;
    j["class"] = o.cls;
    j["order"] = o.order;
    j["count"] = std::to_string(n);
    print(out, j);
  }
  return ok;
}

inline int cmd_genfunc(const Options& o, std::ostream& out) {
  require_output(o, {"text", "json"});
  auto cls = parse_class(o.cls);
  if (cls == SymmetryClass::ASM) throw UsageError("genfunc needs --class dsasm or osasm");
  auto caps = caps_of(o);
  auto p = cls == SymmetryClass::DSASM ? genfunc_dsasm(o.order, caps) : genfunc_osasm(o.order, caps);
  if (o.output == "text") {
    out << p.to_string() << '\n';
  } else {
    Json j;
    j["class"] = o.cls;
    j["order"] = o.order;
    j["variables"] = p.variables();
    j["polynomial"] = p.to_string();
    print(out, j);
  }
  return ok;
}

// ---- eval-partition ------------------------------------------------------

template <ExactField F>
F parse_value(const std::string& text, const char* flag) {
  try {
    if constexpr (std::is_same_v<F, Rational>) {
      return Rational::parse(text);
    } else {
      return Cyclo12::parse(text);
    }
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

template <ExactField F>
std::vector<F> parse_list(const std::string& text, int n) {
  if (text.empty()) return std::vector<F>(static_cast<std::size_t>(n), F(1));
  std::vector<F> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(parse_value<F>(item, "--u"));
  if (static_cast<int>(vals.size()) != n) {
    throw UsageError("--u has " + std::to_string(vals.size()) + " values, expected " + std::to_string(n));
  }
  return vals;
}

template <ExactField F>
F eval_partition(const Options& o) {
  auto caps = caps_of(o);
  auto u = parse_list<F>(o.u, o.order);
  F q;
  if (!o.q.empty()) {
    q = parse_value<F>(o.q, "--q");
  } else if constexpr (std::is_same_v<F, Cyclo12>) {
    q = Cyclo12::zeta();
  } else {
    throw UsageError("--q is required over the rationals");
  }
  auto opt = [](const std::string& v, const char* flag) { return v.empty() ? F(1) : parse_value<F>(v, flag); };
  if (o.model == "osasm") {
    if (o.method != "direct") throw UsageError("--model osasm supports only --method direct");
    return osasm_partition(o.order, u, q, caps);
  }
  WeightParams<F> p = o.model == "specialized"
                          ? WeightParams<F>::specialized(opt(o.s, "--s"), q)
                          : WeightParams<F>{opt(o.alpha, "--alpha"), opt(o.beta, "--beta"), opt(o.gamma, "--gamma"),
                                            opt(o.delta, "--delta"), q, PhiForm::one};
  return o.method == "pfaffian" ? partition_pfaffian(o.order, u, p) : partition_direct(o.order, u, p, caps);
}

inline int cmd_eval_partition(const Options& o, std::ostream& out) {
  require_output(o, {"text", "json"});
  std::string field = o.field.empty() ? "cyclo12" : o.field;
  if (o.order < 1) throw UsageError("--order must be positive");
  if (o.model != "general" && (!o.alpha.empty() || !o.beta.empty() || !o.gamma.empty() || !o.delta.empty())) {
    throw UsageError("--alpha/--beta/--gamma/--delta need --model general");
  }
  if (o.model != "specialized" && !o.s.empty()) throw UsageError("--s needs --model specialized");
  std::string value = field == "rational" ? eval_partition<Rational>(o).to_string() : eval_partition<Cyclo12>(o).to_string();
  if (o.output == "text") {
    out << value << '\n';
  } else {
    Json j;
    j["order"] = o.order;
    j["field"] = field;
    j["model"] = o.model;
    j["method"] = o.method;
    j["value"] = value;
    print(out, j);
  }
  return ok;
}

// ---- dump-config ---------------------------------------------------------

inline Json config_json(const AsmMatrix& a) {
  auto c = dsasm_to_config(a);
  Json sites = Json::array();
  for (const auto& [v, k] : c.sites()) {
    Json s;
    s["vertex"] = {v.first, v.second};
    s["config"] = config_name(k);
    sites.push_back(std::move(s));
  }
  Json j;
  j["matrix"] = matrix_json(a);
  j["sites"] = std::move(sites);
  return j;
}

inline int cmd_dump_config(const Options& o, std::ostream& out) {
  require_output(o, {"text", "json"});
  std::vector<AsmMatrix> mats;
  if (!o.matrix.empty()) {
    if (o.order != 0) throw UsageError("--matrix and --order are mutually exclusive");
    std::string text = o.matrix;
    for (char& ch : text) {
      if (ch == ';') ch = '\n';
    }
    try {
      mats.push_back(AsmMatrix::parse_text(text));
    } catch (const std::exception& e) {
      throw UsageError(std::string("--matrix: ") + e.what());
    }
    auto rep = validate(mats.back().rows(), SymmetryClass::DSASM);
    if (!rep.ok) throw UsageError("--matrix is not a DSASM: " + rep.message);
  } else {
    if (o.order == 0) throw UsageError("dump-config needs --matrix or --order");
    auto cls = parse_class(o.cls);
    if (cls == SymmetryClass::ASM) throw UsageError("dump-config needs --class dsasm or osasm");
    mats = enumerate(o.order, cls, caps_of(o));
  }
  if (o.output == "text") {
    bool first = true;
    for (const auto& a : mats) {
      if (!first) out << '\n';
      first = false;
      out << a.to_text() << dsasm_to_config(a).dump();
    }
  } else {
    Json all = Json::array();
    for (const auto& a : mats) all.push_back(config_json(a));
    print(out, all);
  }
  return ok;
}

// ---- check / report ------------------------------------------------------

inline void print_report_text(std::ostream& out, const CheckReport& r) {
  out << r.id << " size=" << r.size << " trials=" << r.trials << " seed=" << r.seed << " field=" << r.field << ": "
      << r.status << '\n';
  for (const auto& w : r.witnesses) {
    if (!w.error.empty()) {
      out << "  size " << w.size << ": " << w.error << '\n';
    } else {
      out << "  size " << w.size << " trial " << w.trial << " at " << w.point << "\n    lhs = " << w.lhs
          << "\n    rhs = " << w.rhs << '\n';
    }
  }
}

inline int cmd_check(const Options& o, std::ostream& out) {
  require_output(o, {"text", "json"});
  IdentityId id;
  try {
    id = parse_identity(o.identity);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string expected(field_name(identity_field(id)));
  if (!o.field.empty() && o.field != expected) {
    throw UsageError(o.identity + " is checked over " + expected + ", not " + o.field);
  }
  auto caps = caps_of(o);
  auto rep = o.size ? run_check(id, *o.size, o.trials, o.seed, caps)
                    : run_range(id, default_sizes(id), o.trials, o.seed, caps);
  if (o.output == "text") {
    print_report_text(out, rep);
  } else {
    print(out, rep.to_json());
  }
  return rep.passed() ? ok : check_failed;
}

struct CountTable {
  std::vector<std::string> dsasm, osasm, osasm_formula, asm_, asm_formula, xo;
};

inline CountTable count_table(int max_order, const EnumerationCaps& caps) {
  CountTable t;
  for (int n = 1; n <= max_order; ++n) {
    t.dsasm.push_back(std::to_string(count(n, SymmetryClass::DSASM, caps)));
    t.osasm.push_back(std::to_string(count(n, SymmetryClass::OSASM, caps)));
    t.osasm_formula.push_back((n % 2 == 0 ? count_osasm_even(n / 2) : count_osasm_odd(n / 2)).get_str());
    t.asm_formula.push_back(count_asm(n).get_str());
    if (n <= caps.asm_max) t.asm_.push_back(std::to_string(count(n, SymmetryClass::ASM, caps)));
    t.xo.push_back(genfunc_osasm(n, caps).eval<Rational>({{"r", Rational(1)}, {"t", Rational(-1)}}).to_string());
  }
  return t;
}

inline int cmd_report(const Options& o, std::ostream& out) {
  require_output(o, {"json", "csv"});
  auto caps = caps_of(o);
  int max_order = o.order == 0 ? 8 : o.order;
  caps.check(max_order, SymmetryClass::DSASM);
  auto t = count_table(max_order, caps);
  if (o.output == "csv") {
    out << "n,dsasm,osasm,osasm_formula,asm,asm_formula,xo_minus_one\n";
    for (int n = 1; n <= max_order; ++n) {
      auto k = static_cast<std::size_t>(n - 1);
      out << n << ',' << t.dsasm[k] << ',' << t.osasm[k] << ',' << t.osasm_formula[k] << ','
          << (k < t.asm_.size() ? t.asm_[k] : "") << ',' << t.asm_formula[k] << ',' << t.xo[k] << '\n';
    }
    return ok;
  }
  auto checks = run_all({}, o.seed, o.trials, caps);
  Json j;
  j["max_order"] = max_order;
  j["seed"] = o.seed;
  j["trials"] = o.trials;
  j["dsasm"] = t.dsasm;
  j["osasm"] = t.osasm;
  j["osasm_formula"] = t.osasm_formula;
  j["asm"] = t.asm_;
  j["asm_formula"] = t.asm_formula;
  j["xo_minus_one"] = t.xo;
  Json cj = Json::array();
  bool all_pass = true;
  for (const auto& r : checks) {
    all_pass = all_pass && r.passed();
    cj.push_back(r.to_json(false));
  }
  j["checks"] = std::move(cj);
  out << j.dump(2) << '\n';
  return all_pass ? ok : check_failed;
}

// ---- entry point ---------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and identity checks for symmetric alternating sign matrices", "asmkit"};
  app.require_subcommand(1, 1);
  Options o;

  const std::vector<std::string> classes{"asm", "dsasm", "osasm"};
  const std::vector<std::string> fields{"rational", "cyclo12"};
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "raise the enumeration limit to N")->check(CLI::PositiveNumber);
  };
  auto add_output = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--output", o.output, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_class_order = [&](CLI::App* sub, bool order_required) {
    sub->add_option("--class", o.cls, "matrix class")->check(CLI::IsMember(classes));
    auto* opt = sub->add_option("--order", o.order, "matrix order")->check(CLI::PositiveNumber);
    if (order_required) opt->required();
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every matrix of a class and order");
  add_class_order(enumerate_cmd, true);
  add_output(enumerate_cmd, {"text", "json", "csv"});
  add_cap(enumerate_cmd);

  auto* count_cmd = app.add_subcommand("count", "count the matrices of a class and order");
  add_class_order(count_cmd, true);
  add_output(count_cmd, {"text", "json", "csv"});
  add_cap(count_cmd);

  auto* genfunc_cmd = app.add_subcommand("genfunc", "generating function X_n or X^O_n");
  add_class_order(genfunc_cmd, true);
  add_output(genfunc_cmd, {"text", "json", "csv"});
  add_cap(genfunc_cmd);

  auto* eval_cmd = app.add_subcommand("eval-partition", "evaluate a six-vertex partition function");
  eval_cmd->add_option("--order", o.order, "order n")->required()->check(CLI::PositiveNumber);
  eval_cmd->add_option("--model", o.model, "weights")->check(CLI::IsMember({"general", "specialized", "osasm"}));
  eval_cmd->add_option("--method", o.method, "summation or Pfaffian")->check(CLI::IsMember({"direct", "pfaffian"}));
  eval_cmd->add_option("--field", o.field, "coefficient field")->check(CLI::IsMember(fields));
  eval_cmd->add_option("--u", o.u, "comma-separated spectral parameters (default all 1)");
  eval_cmd->add_option("--q", o.q, "crossing parameter (default z over cyclo12)");
  eval_cmd->add_option("--s", o.s, "boundary weight of the specialized model (default 1)");
  eval_cmd->add_option("--alpha", o.alpha);
  eval_cmd->add_option("--beta", o.beta);
  eval_cmd->add_option("--gamma", o.gamma);
  eval_cmd->add_option("--delta", o.delta);
  add_output(eval_cmd, {"text", "json", "csv"});
  add_cap(eval_cmd);

  auto* dump_cmd = app.add_subcommand("dump-config", "six-vertex configurations of DSASMs");
  add_class_order(dump_cmd, false);
  dump_cmd->add_option("--matrix", o.matrix, "rows separated by ';', entries by spaces");
  add_output(dump_cmd, {"text", "json", "csv"});
  add_cap(dump_cmd);

  auto* check_cmd = app.add_subcommand("check", "run one named identity check");
  check_cmd->add_option("id", o.identity, "identity id")->required();
  check_cmd->add_option("--size", o.size, "size parameter (default: the whole default range)")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--trials", o.trials, "random points per size")->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", o.seed, "master seed");
  check_cmd->add_option("--field", o.field, "must match the identity's field")->check(CLI::IsMember(fields));
  add_output(check_cmd, {"text", "json", "csv"});
  add_cap(check_cmd);

  auto* report_cmd = app.add_subcommand("report", "count tables and the full check suite");
  report_cmd->add_option("--max-order,--order", o.order, "largest order in the tables (default 8)")
      ->check(CLI::PositiveNumber);
  report_cmd->add_option("--seed", o.seed, "master seed");
  report_cmd->add_option("--trials", o.trials, "random points per size")->check(CLI::PositiveNumber);
  add_output(report_cmd, {"json", "csv"});
  add_cap(report_cmd);

  std::string cmd;
  try {
    app.parse(argc, argv);
    auto subs = app.get_subcommands();
    cmd = subs.empty() ? "" : subs.front()->get_name();
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return ok;
  } catch (const CLI::ParseError& e) {
    auto subs = app.get_subcommands();
    err << "error: " << e.what() << '\n' << synopsis_for(subs.empty() ? "" : subs.front()->get_name()) << '\n';
    return usage;
  }

  // Output text is written only after the command succeeds so that a usage
  // error never leaves partial output behind.
  std::ostringstream buf;
  try {
    int rc = ok;
    if (cmd == "enumerate") rc = cmd_enumerate(o, buf);
    else if (cmd == "count") rc = cmd_count(o, buf);
    else if (cmd == "genfunc") rc = cmd_genfunc(o, buf);
    else if (cmd == "eval-partition") rc = cmd_eval_partition(o, buf);
    else if (cmd == "dump-config") rc = cmd_dump_config(o, buf);
    else if (cmd == "check") rc = cmd_check(o, buf);
    else if (cmd == "report") rc = cmd_report(o, buf);
    out << buf.str();
    return rc;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise it with --cap or ASMKIT_MAX_ORDER)\n" << synopsis_for(cmd) << '\n';
    return usage;
  } catch (const DivisionByZero& e) {
    err << "error: the requested point is a pole: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << synopsis_for(cmd) << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return check_failed;
  }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"asmkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace asmkit::cli

#endif
