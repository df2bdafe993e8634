#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "kleinian/cartan.hpp"
#include "kleinian/fock.hpp"
#include "kleinian/glcases.hpp"
#include "kleinian/json_io.hpp"
#include "kleinian/parallel.hpp"
#include "kleinian/partitions.hpp"
#include "kleinian/patterns.hpp"
#include "kleinian/series.hpp"
#include "kleinian/youngwalls.hpp"

namespace kleinian::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  int r = 1;
  std::vector<int> J;
  std::optional<int> m;
  std::optional<int> a;
  std::optional<int> max;
  bool json = false;
  bool csv = false;
  std::string out_file;
  std::string partition;
  bool serre = false;
  int threads = 0;
  bool timing = false;
};

struct Outcome {
  bool pass = true;
  Json witness = nullptr;
  Json constants = Json::object();
  Json details = Json::object();

  void fail(Json w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
};

int require_max(const Options& o) {
  if (!o.max) throw UsageError("--max is required");
  if (*o.max < 0) throw UsageError("--max must be non-negative");
  return *o.max;
}

int modulus(const Options& o) {
  const int m = o.m.value_or(o.r + 1);
  if (m < 1) throw UsageError("--m must be positive");
  return m;
}

std::vector<int> labels_or(const Options& o, std::vector<int> fallback) {
  return o.J.empty() ? fallback : o.J;
}

Json series_witness(const IntSeries& lhs, const IntSeries& rhs, const Exponents& e) {
  return Json{{"exp", to_json(e)}, {"lhs", to_json(lhs.coefficient(e))}, {"rhs", to_json(rhs.coefficient(e))}};
}

void compare_series(Outcome& out, const IntSeries& lhs, const IntSeries& rhs) {
  if (auto e = IntSeries::first_difference(lhs, rhs)) out.fail(series_witness(lhs, rhs, *e));
  out.details["terms"] = lhs.size();
}

// ---- verify kinds

Outcome verify_littlewood(const Options& o) {
  const int d = require_max(o);
  const int m = modulus(o);
  Outcome out;
  std::size_t checked = 0;
  for_each_partition(d, [&](const Partition& p) {
    ++checked;
    const auto data = littlewood_decompose(p, m);
    int qw = 0;
    for (const auto& q : data.quotients) qw += q.weight();
    if (littlewood_compose(data, m) != p)
      out.fail(Json{{"partition", to_json(p)}, {"relation", "roundtrip"}});
    else if (p.weight() != data.core.weight() + m * qw)
      out.fail(Json{{"partition", to_json(p)}, {"relation", "weight"}});
    else if (data.core != core(p, m))
      out.fail(Json{{"partition", to_json(p)}, {"relation", "core"}});
  });
  out.details["m"] = m;
  out.details["partitions_checked"] = checked;
  return out;
}

Outcome verify_core_confluence(const Options& o) {
  const int d = require_max(o);
  const int m = modulus(o);
  Outcome out;
  const auto parts = partitions_up_to(d);
  const auto cores = parallel_map(parts.size(), [&](std::size_t i) { return all_cores(parts[i], m); });
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (cores[i].size() != 1) {
      Json reached = Json::array();
      for (const auto& c : cores[i]) reached.push_back(to_json(c));
      out.fail(Json{{"partition", to_json(parts[i])}, {"cores", reached}});
    }
  out.details["m"] = m;
  out.details["partitions_checked"] = parts.size();
  return out;
}

Outcome verify_zr(const Options& o) {
  const int d = require_max(o);
  if (o.r < 0) throw UsageError("--r must be non-negative");
  Outcome out;
  compare_series(out, brute_force_Zr(o.r, d), formula_Zr(o.r, d));
  return out;
}

Outcome verify_jacobi(const Options& o) {
  const int d = require_max(o);
  Outcome out;
  compare_series(out, formula_Zr(1, d), jacobi_product(d));
  return out;
}

Outcome verify_boulet(const Options& o) {
  const int d = require_max(o);
  Outcome out;
  const auto rep = kleinian::verify_boulet(d, d);
  if (rep.product_mismatch)
    out.fail(Json{{"relation", "product"}, {"exp", to_json(*rep.product_mismatch)}});
  if (rep.specialization_mismatch)
    out.fail(Json{{"relation", "specialization"}, {"exp", to_json(*rep.specialization_mismatch)}});
  out.details["product_matched"] = rep.product_matched;
  out.details["specialization_matched"] = rep.specialization_matched;
  return out;
}

Outcome verify_qbinom_root(const Options& o) {
  const int d = require_max(o);
  if (d < 1) throw UsageError("--max must be at least 1");
  Outcome out;
  const auto rep = check_q_binomial_roots(d);
  if (!rep.passed()) {
    Json w{{"relation", rep.sign_rule ? "value at a primitive root" : "no consistent sign rule"}};
    if (rep.witness) {
      w["a"] = (*rep.witness)[0];
      w["b"] = (*rep.witness)[1];
      w["root_exponent"] = (*rep.witness)[2];
    }
    out.fail(w);
  }
  out.constants["sign_rule"] = rep.sign_rule ? Json(*rep.sign_rule) : Json(nullptr);
  out.details["pairs_checked"] = rep.pairs_checked;
  out.details["roots_checked"] = rep.roots_checked;
  return out;
}

void substitution_outcome(Outcome& out, const SubstitutionReport& rep) {
  if (!rep.passed()) {
    Json w{{"exp", rep.first_mismatch ? to_json(*rep.first_mismatch) : Json(nullptr)}};
    if (rep.first_mismatch) {
      w["lhs"] = rep.lhs_coefficient ? to_json(*rep.lhs_coefficient) : Json(nullptr);
      w["rhs"] = rep.rhs_coefficient ? to_json(*rep.rhs_coefficient) : Json(nullptr);
    }
    if (!rep.c_order) w["relation"] = "constant is not a root of unity";
    if (rep.fibers_matched && !*rep.fibers_matched) w["relation"] = "fiberwise substitution";
    out.fail(w);
  }
  out.constants["c"] = rep.c ? to_json(*rep.c) : Json(nullptr);
  out.constants["c_order"] = rep.c_order ? Json(*rep.c_order) : Json(nullptr);
  out.details = to_json(rep);
}

Outcome verify_subst_a(const Options& o) {
  const int d = require_max(o);
  if (o.r < 1) throw UsageError("--r must be at least 1");
  Outcome out;
  substitution_outcome(out, verify_substitution_A(o.r, labels_or(o, {0}), d));
  return out;
}

Outcome verify_subst_d(const Options& o) {
  const int d = require_max(o);
  Outcome out;
  substitution_outcome(out, verify_substitution_D(o.r, labels_or(o, {0}), d));
  return out;
}

Outcome verify_fock(const Options& o) {
  const int d = require_max(o);
  Outcome out;
  const auto rep = commutator_report(o.r, d, o.serre);
  if (!rep.passed()) {
    Json w = rep.witness ? Json{{"relation", rep.witness->relation},
                                {"c", rep.witness->c},
                                {"c2", rep.witness->c2},
                                {"partition", to_json(rep.witness->partition)}}
                         : Json{{"relation", "graded trace"}};
    out.fail(w);
  }
  out.constants["h_range"] = {rep.h_min, rep.h_max};
  out.details = to_json(rep);
  return out;
}

Outcome verify_wall_confluence(const Options& o) {
  const int d = require_max(o);
  Outcome out;
  const auto rep = check_wall_identities(o.r, d);
  if (!rep.passed()) out.fail(Json{{"relation", rep.relation}, {"wall", wall_to_json(*rep.witness, o.r)}});
  out.details["walls_checked"] = rep.walls_checked;
  out.details["bars_checked"] = rep.bars_checked;
  out.details["confluent"] = rep.confluent;
  out.details["weight_identity"] = rep.weight_identity;
  out.details["bar_content"] = rep.bar_content;
  return out;
}

Outcome verify_zdr(const Options& o) {
  const int d = require_max(o);
  Outcome out;
  compare_series(out, brute_force_ZDr(o.r, d), formula_ZDr(o.r, d));
  return out;
}

Outcome verify_ze_positivity(const Options& o) {
  const int d = require_max(o);
  Outcome out;
  const auto rep = substitute_E(o.r, labels_or(o, {0}), d);
  if (!rep.constant)
    out.fail(Json{{"relation", "no constant term"}});
  else if (!rep.nonnegative_integral)
    out.fail(Json{{"relation", "normalized coefficient is not a non-negative integer"},
                  {"exp", rep.witness ? to_json(*rep.witness) : Json(nullptr)}});
  out.constants["constant"] = rep.constant ? to_json(*rep.constant) : Json(nullptr);
  out.details = to_json(rep);
  return out;
}

const std::map<std::string, std::function<Outcome(const Options&)>>& verifiers() {
  static const std::map<std::string, std::function<Outcome(const Options&)>> table{
      {"littlewood", verify_littlewood},
      {"core-confluence", verify_core_confluence},
      {"zr", verify_zr},
      {"jacobi", verify_jacobi},
      {"boulet", verify_boulet},
      {"qbinom-root", verify_qbinom_root},
      {"subst-a", verify_subst_a},
      {"subst-d", verify_subst_d},
      {"fock", verify_fock},
      {"wall-confluence", verify_wall_confluence},
      {"zdr", verify_zdr},
      {"ze-positivity", verify_ze_positivity}};
  return table;
}

Json parameters(const Options& o) {
  Json p;
  p["r"] = o.r;
  p["J"] = o.J;
  p["m"] = o.m ? Json(*o.m) : Json(nullptr);
  p["a"] = o.a ? Json(*o.a) : Json(nullptr);
  p["max"] = o.max ? Json(*o.max) : Json(nullptr);
  if (o.kind == "fock") p["serre"] = o.serre;
  return p;
}

int run_verify(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Outcome res = verifiers().at(o.kind)(o);
  Json report;
  report["command"] = "verify " + o.kind;
  report["parameters"] = parameters(o);
  report["status"] = res.pass ? "pass" : "fail";
  report["witness"] = res.witness;
  report["constants"] = res.constants;
  report["details"] = res.details;
  if (o.timing)
    report["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  out << report.dump(2) << "\n";
  return res.pass ? 0 : 1;
}

// ---- enumerate

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

struct Row {
  Json json;
  std::vector<std::string> csv;
};

int run_enumerate(const Options& o, std::ostream& out) {
  const int d = require_max(o);
  if (o.json && o.csv) throw UsageError("--json and --csv are exclusive");
  std::vector<std::string> header;
  std::vector<Row> rows;
  if (o.kind == "partitions" || o.kind == "cores") {
    const int m = modulus(o);
    const bool cores = o.kind == "cores";
    header = {"weight", "parts", "multiweight"};
    for_each_partition(d, [&](const Partition& p) {
      if (cores && !is_core(p, m)) return;
      const auto mw = multiweight(p, m - 1);
      rows.push_back({Json{{"weight", p.weight()}, {"parts", to_json(p)}, {"multiweight", mw}},
                      {std::to_string(p.weight()), join_ints(p.parts(), ' '), join_ints(mw, ' ')}});
    });
  } else if (o.kind == "walls") {
    header = {"weight", "multiweight", "columns"};
    for (const auto& w : enumerate_walls(o.r, d)) {
      const auto mw = multiweight_wall(w, o.r);
      const Json cols = wall_to_json(w, o.r);
      std::vector<std::string> col_text;
      for (const auto& c : cols)
        col_text.push_back(std::to_string(c["complete_rows"].get<int>()) + ":" + c["top"].get<std::string>());
      std::string joined;
      for (std::size_t i = 0; i < col_text.size(); ++i) joined += (i ? " " : "") + col_text[i];
      rows.push_back({Json{{"weight", wall_weight(w, o.r)}, {"multiweight", mw}, {"columns", cols}},
                      {std::to_string(wall_weight(w, o.r)), join_ints(mw, ' '), joined}});
    }
  } else {
    if (o.r < 1) throw UsageError("--r must be at least 1");
    const PatternAJ pat(o.r, labels_or(o, {0}));
    header = {"weight", "rows", "multiweight"};
    for (const auto& t : enumerate_truncated(pat, d)) {
      const auto mw = t.multiweight(pat);
      rows.push_back({to_json(t, pat), {std::to_string(t.weight()), join_ints(t.rows, ' '), join_ints(mw, ' ')}});
    }
  }
  if (o.csv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.csv.size(); ++i) out << (i ? "," : "") << row.csv[i];
      out << "\n";
    }
  } else {
    for (const auto& row : rows) out << row.json.dump() << "\n";
  }
  return 0;
}

// ---- series

int run_series(const Options& o, std::ostream& out, std::ostream& err) {
  const int d = require_max(o);
  IntSeries s = int_series({"q"}, 0);
  if (o.kind == "zr") {
    s = brute_force_Zr(o.r, d);
  } else if (o.kind == "zcore") {
    if (o.r < 0) throw UsageError("--r must be non-negative");
    s = int_series(indexed_variables(o.r + 1), d);
    for_each_partition(d, [&](const Partition& p) {
      if (!is_core(p, o.r + 1)) return;
      const auto mw = multiweight(p, o.r);
      s.add_term(Exponents(mw.begin(), mw.end()), 1);
    });
  } else if (o.kind == "zdr") {
    s = brute_force_ZDr(o.r, d);
  } else if (o.kind == "boulet") {
    s = boulet_brute(d);
  } else if (o.kind == "zrr") {
    s = zrr_brute(o.r, d);
  } else if (o.kind == "glqa") {
    if (!o.a) throw UsageError("--a is required for glqa");
    const CyclicWeightedLabelling lab{o.r, *o.a};
    if (!lab.in_stated_range()) err << "warning: a = " << *o.a << " is outside 1 < a < r - 2\n";
    s = glqa_brute(o.r, *o.a, d);
  } else {
    s = conjectural_ZE(o.r, d);
  }
  const std::string text = to_json(s).dump(2) + "\n";
  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) throw UsageError("cannot open " + o.out_file);
    f << text;
  }
  return 0;
}

// ---- decompose

int run_decompose(const Options& o, std::ostream& out) {
  const int m = modulus(o);
  const Partition p = Partition::parse(o.partition);
  Json j = to_json(littlewood_decompose(p, m), m);
  j["partition"] = to_json(p);
  j["weight"] = p.weight();
  out << j.dump(2) << "\n";
  return 0;
}

void common_options(CLI::App* sub, Options& o) {
  sub->add_option("--r", o.r, "Rank");
  sub->add_option("--J", o.J, "Labels in J, comma separated")->delimiter(',');
  sub->add_option("--m", o.m, "Strip length (default r + 1)");
  sub->add_option("--max", o.max, "Maximal weight or total degree");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact enumeration and generating function checks for Kleinian singularities", "kleinian"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", o.timing, "Add wall-clock duration to verify reports");

  auto* enumerate = app.add_subcommand("enumerate", "Stream combinatorial objects");
  enumerate->add_option("kind", o.kind)->required()->check(CLI::IsMember({"partitions", "cores", "walls", "truncated"}));
  common_options(enumerate, o);
  enumerate->add_flag("--json", o.json, "JSON lines (default)");
  enumerate->add_flag("--csv", o.csv, "CSV with header");

  auto* series = app.add_subcommand("series", "Write a generating function as JSON");
  series->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"zr", "zcore", "zdr", "boulet", "zrr", "glqa", "ze"}));
  common_options(series, o);
  series->add_option("--a", o.a, "Weight of the second coordinate (glqa)");
  series->add_option("--out", o.out_file, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check an identity and print a report");
  std::vector<std::string> kinds;
  for (const auto& [k, f] : verifiers()) kinds.push_back(k);
  verify->add_option("kind", o.kind)->required()->check(CLI::IsMember(kinds));
  common_options(verify, o);
  verify->add_flag("--serre", o.serre, "Also check Serre relations (fock)");

  auto* decompose = app.add_subcommand("decompose", "Littlewood decomposition of a partition");
  decompose->add_option("--r", o.r, "Rank; strips have length r + 1");
  decompose->add_option("--m", o.m, "Strip length");
  decompose->add_option("--partition", o.partition, "Parts, e.g. \"4,2,2,1\"")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  set_thread_count(o.threads);
  try {
    if (*enumerate) return run_enumerate(o, out);
    if (*series) return run_series(o, out, err);
    if (*verify) return run_verify(o, out);
    return run_decompose(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "unsupported: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace kleinian::cli
