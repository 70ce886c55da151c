#include "moser/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "moser/equivalence.hpp"
#include "moser/error.hpp"
#include "moser/inequalities.hpp"
#include "moser/optimizer.hpp"
#include "moser/rearrangement.hpp"
#include "moser/sequences.hpp"
#include "moser/serialization.hpp"

namespace moser::cli {

namespace {

using nlohmann::json;

constexpr const char* version = "0.1.0";

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct Output {
  json body;
  std::optional<Table> table;
  int code = ok;
  std::string failure;  // first failing check, for stderr
};

struct Globals {
  std::string out;
  std::string format = "auto";
  std::uint64_t seed = 0;
  double tol = default_tolerance;
};

std::string cell(const json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string to_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + cell(row[i]);
    s += '\n';
  }
  return s;
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --profile FILE or --family NAME with its parameters
struct ProfileArgs {
  std::string path;
  std::string family;
  SequenceSpec spec;

  void attach(CLI::App* sub, bool with_T = true) {
    sub->add_option("--profile", path, "Profile JSON {t_support, knots}");
    sub->add_option("--family", family, "moser|counterexample|alvino|cap|zygmund|modified-moser");
    sub->add_option("--n", spec.n, "Index n (moser, counterexample, modified-moser)");
    sub->add_option("--k", spec.k, "Index k (cap, zygmund)");
    sub->add_option("--R", spec.R, "Radius R (cap)");
    if (with_T) sub->add_option("--T", spec.T, "Support measure T (alvino)");
    sub->add_option("--delta", spec.delta, "Ratio delta > 1 (alvino)");
  }

  RadialProfile load() const {
    if (!path.empty() && !family.empty()) throw usage_error("give either --profile or --family");
    if (!path.empty()) return parse_profile(read_file(path));
    if (family.empty()) throw usage_error("a profile is required: --profile FILE or --family NAME");
    const auto f = parse_family(family);
    if (!f) throw usage_error("unknown family '" + family + "'");
    SequenceSpec s = spec;
    s.family = *f;
    return build(s);
  }
};

// ---------------------------------------------------------------- oracles

struct OracleRow {
  SequenceSpec spec;
  std::string quantity;
  double oracle = 0.0;
};

json spec_params(const SequenceSpec& s) {
  switch (s.family) {
    case Family::moser:
    case Family::counterexample:
    case Family::modified_moser:
      return json{{"n", s.n}};
    case Family::alvino_extremal:
      return json{{"T", s.T}, {"delta", s.delta}};
    case Family::cap:
      return json{{"k", s.k}, {"R", s.R}};
    case Family::zygmund_optimal:
      return json{{"k", s.k}};
  }
  return json::object();
}

std::string params_text(const json& params) {
  std::string s;
  for (const auto& [key, value] : params.items()) {
    s += (s.empty() ? "" : ";") + key + "=" + format_double(value.get<double>());
  }
  return s;
}

std::vector<OracleRow> default_oracles() {
  std::vector<SequenceSpec> specs;
  for (double n : {10.0, 1e2, 1e4, 1e6}) {
    for (Family f : {Family::moser, Family::counterexample, Family::modified_moser}) {
      SequenceSpec s;
      s.family = f;
      s.n = n;
      specs.push_back(s);
    }
  }
  for (double k : {1.0, 4.0, 16.0, 64.0}) {
    SequenceSpec z;
    z.family = Family::zygmund_optimal;
    z.k = k;
    specs.push_back(z);
    for (double R : {1.0, 2.0}) {
      SequenceSpec c;
      c.family = Family::cap;
      c.k = k;
      c.R = R;
      specs.push_back(c);
    }
  }
  for (double T : {pi, 10.0}) {
    for (double delta : {std::exp(1.0), std::exp(4.0)}) {
      SequenceSpec a;
      a.family = Family::alvino_extremal;
      a.T = T;
      a.delta = delta;
      specs.push_back(a);
    }
  }
  std::vector<OracleRow> rows;
  for (const SequenceSpec& s : specs) {
    const ClosedForm cf = closed_form(s);
    rows.push_back({s, "dirichlet_sq", cf.dirichlet_sq});
    rows.push_back({s, "l2_sq", cf.l2_sq});
  }
  return rows;
}

std::vector<OracleRow> load_oracles(const std::string& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_object() && j.contains("rows")) j = j["rows"];
  if (!j.is_array()) throw usage_error("oracle file must hold a JSON array of rows");
  std::vector<OracleRow> rows;
  for (const json& r : j) {
    if (!r.contains("family") || !r.contains("quantity") || !r.contains("oracle")) {
      throw usage_error("oracle rows need family, quantity and oracle");
    }
    const auto f = parse_family(r["family"].get<std::string>());
    if (!f) throw usage_error("unknown family in oracle file");
    OracleRow row;
    row.spec.family = *f;
    const json params = r.value("params", json::object());
    row.spec.n = params.value("n", row.spec.n);
    row.spec.k = params.value("k", row.spec.k);
    row.spec.R = params.value("R", row.spec.R);
    row.spec.T = params.value("T", row.spec.T);
    row.spec.delta = params.value("delta", row.spec.delta);
    row.quantity = r["quantity"].get<std::string>();
    if (row.quantity != "dirichlet_sq" && row.quantity != "l2_sq") {
      throw usage_error("oracle quantity must be dirichlet_sq or l2_sq");
    }
    row.oracle = r["oracle"].get<double>();
    rows.push_back(row);
  }
  return rows;
}

Output cmd_oracles(const std::string& oracle_file) {
  const std::vector<OracleRow> rows = oracle_file.empty() ? default_oracles() : load_oracles(oracle_file);
  Output o;
  Table t{{"family", "params", "quantity", "computed", "oracle", "rel_error", "pass"}, {}};
  json body = json::array();
  for (const OracleRow& row : rows) {
    const RadialProfile p = build(row.spec);
    const double computed = row.quantity == "dirichlet_sq" ? dirichlet_norm_sq(p) : l2_norm_sq(p);
    const double scale = row.oracle != 0.0 ? std::abs(row.oracle) : 1.0;
    const double rel = std::abs(computed - row.oracle) / scale;
    const bool pass = rel <= 1e-10;
    const json params = spec_params(row.spec);
    const std::string family(family_name(row.spec.family));
    t.rows.push_back({family, params_text(params), row.quantity, computed, row.oracle, rel, pass});
    body.push_back(json{{"family", family},
                        {"params", params},
                        {"quantity", row.quantity},
                        {"computed", number(computed)},
                        {"oracle", number(row.oracle)},
                        {"rel_error", number(rel)},
                        {"pass", pass}});
    if (!pass && o.code == ok) {
      o.code = check_failed;
      o.failure = "oracle mismatch: " + family + " " + params_text(params) + " " + row.quantity +
                  " computed " + format_double(computed) + " vs oracle " + format_double(row.oracle);
    }
  }
  o.body = json{{"pass", o.code == ok}, {"rows", std::move(body)}};
  o.table = std::move(t);
  return o;
}

// ------------------------------------------------------------- single rows

Table one_row(const json& flat) {
  Table t;
  std::vector<json> row;
  for (const auto& [key, value] : flat.items()) {
    if (value.is_structured()) continue;
    t.columns.push_back(key);
    row.push_back(value);
  }
  t.rows.push_back(std::move(row));
  return t;
}

Output cmd_eval(const ProfileArgs& pa, double beta, const Globals& g) {
  const RadialProfile p = pa.load();
  const FunctionalReport r = tm_functional(p, beta, g.tol);
  Output o;
  o.body = to_json(r);
  o.table = one_row(o.body);
  o.body["profile"] = to_json(p);
  return o;
}

Output cmd_rearrange(const std::string& in_path) {
  std::ifstream in(in_path);
  if (!in) throw usage_error("cannot open " + in_path);
  const RadialProfile p = decreasing_rearrangement(parse_samples_csv(in));
  Output o;
  o.body = to_json(p);
  Table t{{"s", "v", "kind", "t"}, {}};
  for (const Knot& k : p.knots()) {
    t.rows.push_back({k.s, k.v, k.kind == KnotKind::jump ? "jump" : "linear", p.measure(k.s)});
  }
  o.table = std::move(t);
  return o;
}

Output cmd_verify(const std::string& which, ProfileArgs pa, double beta,
                  std::optional<double> window, double lambda, const Globals& g) {
  if (window) pa.spec.T = *window;
  const RadialProfile p = pa.load();
  const double T = window.value_or(p.t_support());
  InequalityReport r;
  json extra = json::object();
  if (which == "alvino") {
    r = alvino_ratio_sup(p, T);
  } else if (which == "limine") {
    r = check_limine(p);
  } else if (which == "adachi") {
    if (!(beta > 0.0 && beta < four_pi)) throw usage_error("--beta must lie in (0, 4pi) for adachi");
    r = compare(adachi_ratio(p, beta, g.tol), at_quadratic_bound(beta), 0.0);
    extra["at_constant_best_eps"] = number(at_constant_eps(beta, best_eps(beta)));
  } else if (which == "zcharact") {
    const QuasiNorm z = zygmund_quasinorm(p);
    const ZcharactBound b = zcharact_bound(p, lambda, g.tol);
    r = compare(z.value, b.bound, z.t, z.window);
    extra["exp_integral"] = number(b.exp_integral);
  } else {
    throw usage_error("unknown inequality '" + which + "'");
  }
  Output o;
  o.body = to_json(r);
  o.body["inequality"] = which;
  for (const auto& [key, value] : extra.items()) o.body[key] = value;
  json flat = o.body;
  flat["witness_t"] = o.body["witness"]["t"];
  if (o.body["witness"].contains("T")) flat["witness_T"] = o.body["witness"]["T"];
  o.table = one_row(flat);
  if (!r.holds) {
    o.code = check_failed;
    o.failure = which + " violated: lhs " + format_double(r.lhs) + " > rhs " + format_double(r.rhs);
  }
  return o;
}

Output cmd_equivalence(const std::string& direction, const ProfileArgs& pa, double beta,
                       std::optional<double> d4pi) {
  const RadialProfile p = pa.load();
  EquivalenceTrace trace;
  if (direction == "ruf-to-at") {
    trace = ruf_normalize(p, beta);
  } else if (direction == "at-to-ruf") {
    trace = adachi_split(p);
  } else {
    throw usage_error("--direction must be ruf-to-at or at-to-ruf");
  }
  Output o;
  o.body = to_json(trace);
  if (d4pi && trace.tag == BoundTag::d_4pi) {
    // empirical substitute, clearly labelled as such
    o.body["bound"]["d_4pi_substituted"] = number(*d4pi);
    o.body["bound"]["value"] = number(trace.coefficient * *d4pi);
  }
  Table t{{"step", "dirichlet_sq", "l2_sq", "constraint", "constrained", "limit", "satisfied"}, {}};
  for (const TraceStep& s : trace.steps) {
    t.rows.push_back({s.name, s.dirichlet_sq, s.l2_sq, s.constraint, s.constrained, s.limit, s.satisfied});
  }
  o.table = std::move(t);
  return o;
}

Output cmd_optimize(const std::string& kind, double beta, double delta, double K, double tau,
                    std::size_t knots, std::size_t budget, const Globals& g, double& wall_time) {
  ConstraintSet c;
  if (kind == "reduced") {
    c = ConstraintSet::reduced(delta, K);
  } else if (kind == "ruf") {
    c = ConstraintSet::ruf(tau);
  } else if (kind == "norm-sum") {
    c = ConstraintSet::norm_sum();
  } else {
    throw usage_error("--constraint must be reduced, ruf or norm-sum");
  }
  OptimizationOptions opt;
  opt.knots = knots;
  opt.budget = budget;
  opt.seed = g.seed;
  opt.final_tol = g.tol;
  const OptimizationResult r = maximize(c, beta, opt);
  wall_time = r.wall_time;
  Output o;
  o.body = to_json(r);
  o.body["constraint"] = json{{"kind", constraint_name(c.kind)}, {"delta", c.delta}, {"K", c.K}, {"tau", c.tau}};
  o.body["beta"] = beta;
  Table t{{"iteration", "incumbent"}, {}};
  for (std::size_t i = 0; i < r.objective_trace.size(); ++i) {
    t.rows.push_back({i, r.objective_trace[i]});
  }
  o.table = std::move(t);
  return o;
}

Output blowup_output(double delta, double K, const std::vector<double>& betas,
                     const std::vector<double>& ns, const Globals& g) {
  const double tol = std::max(g.tol, 1e-8);
  Output o;
  Table t{{"beta", "n", "j_beta", "lower_bound"}, {}};
  json body = json::array();
  for (const BlowupRow& r : blowup_scan(delta, K, betas, ns, tol)) {
    t.rows.push_back({r.beta, r.n, number(r.j_beta), number(r.lower_bound)});
    body.push_back(json{{"beta", r.beta}, {"n", r.n}, {"j_beta", number(r.j_beta)},
                        {"lower_bound", number(r.lower_bound)}});
  }
  o.body = json{{"delta", delta}, {"K", K}, {"rows", std::move(body)}};
  o.table = std::move(t);
  return o;
}

const std::vector<double> default_blowup_betas{2.0 * pi, four_pi};
const std::vector<double> default_blowup_ns{1e3, 1e4, 1e5, 1e6};

Output cmd_table(const std::string& name, const Globals& g) {
  if (name == "blowup") return blowup_output(0.0, 1.0, default_blowup_betas, default_blowup_ns, g);
  Output o;
  if (name == "constants") {
    Table t{{"beta_over_pi", "beta", "best_eps", "c_eps", "c_asymptotic", "quadratic", "inverse_gap",
             "c_eps_over_quadratic"}, {}};
    for (double m : {1.0, 2.0, 3.0, 3.5, 3.9, 3.99}) {
      const double beta = m * pi;
      const double c_eps = at_constant_eps(beta, best_eps(beta));
      const double quad = at_quadratic_bound(beta);
      t.rows.push_back({m, beta, best_eps(beta), c_eps, at_constant_asymptotic(beta), quad,
                        1.0 / (1.0 - beta / four_pi), c_eps / quad});
    }
    o.table = std::move(t);
  } else if (name == "zygmund-optimality") {
    Table t{{"k", "quasinorm", "sobolev_norm", "ratio", "f_k_at_2"}, {}};
    for (double k : {1.0, 4.0, 16.0, 64.0, 256.0}) {
      const RadialProfile p = zygmund_optimal(k);
      const double z = zygmund_quasinorm(p).value;
      const double s = std::sqrt(sobolev_norm_sq(p));
      t.rows.push_back({k, z, s, std::sqrt(four_pi) * z / s, std::sqrt(k / (1.0 + std::log(4.0) + k))});
    }
    o.table = std::move(t);
  } else {
    throw usage_error("unknown table '" + name + "' (blowup, constants, zygmund-optimality)");
  }
  o.body = table_json(*o.table);
  return o;
}

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace

double parse_real(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  double factor = 1.0;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    factor = pi;
    s.resize(s.size() - 2);
    if (!s.empty() && s.back() == '*') s.pop_back();
    if (s.empty()) return pi;
  }
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw usage_error("not a real number: '" + text + "'");
  }
  if (used != s.size()) throw usage_error("not a real number: '" + text + "'");
  return x * factor;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_real(item));
  }
  if (out.empty()) throw usage_error("empty list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto clock_start = std::chrono::steady_clock::now();
  Globals g;
  CLI::App app{"Trudinger-Moser functionals on radial profiles", "moser"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", g.out, "Write results here instead of stdout");
  app.add_option("--format", g.format, "json or csv (default: csv for tables, json otherwise)")
      ->check(CLI::IsMember({"auto", "json", "csv"}));
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--tol", g.tol, "Relative quadrature tolerance, in (0, 1e-6]");

  std::string beta_text = "4pi";
  std::string lambda_text = "4pi";
  std::string T_text;

  auto* oracles = app.add_subcommand("oracles", "Closed-form norm oracles of every family");
  std::string oracle_file;
  oracles->add_option("--oracle-file", oracle_file, "Check these rows (JSON, as emitted) instead");

  auto* eval = app.add_subcommand("eval", "J_beta and norms of a profile");
  ProfileArgs eval_profile;
  eval_profile.attach(eval);
  eval->add_option("--beta", beta_text, "Exponent (e.g. 4pi)");

  auto* rearrange = app.add_subcommand("rearrange", "Decreasing rearrangement of 'value,area' CSV");
  std::string in_path;
  rearrange->add_option("--in", in_path, "Samples CSV")->required();

  auto* verify = app.add_subcommand("verify", "Both sides of an inequality on a profile");
  ProfileArgs verify_profile;
  verify_profile.attach(verify, false);
  std::string inequality;
  verify->add_option("--inequality", inequality, "alvino|limine|adachi|zcharact")
      ->required()
      ->check(CLI::IsMember({"alvino", "limine", "adachi", "zcharact"}));
  verify->add_option("--beta", beta_text, "Exponent for adachi");
  verify->add_option("--T", T_text, "Window T for alvino (default: the support measure); also the alvino family T");
  verify->add_option("--lambda", lambda_text, "Exponent lambda for zcharact");

  auto* equivalence = app.add_subcommand("equivalence", "Rescalings between Ruf and Adachi-Tanaka forms");
  ProfileArgs equivalence_profile;
  equivalence_profile.attach(equivalence);
  std::string direction;
  equivalence->add_option("--direction", direction, "ruf-to-at|at-to-ruf")
      ->required()
      ->check(CLI::IsMember({"ruf-to-at", "at-to-ruf"}));
  equivalence->add_option("--beta", beta_text, "Exponent in (0, 4pi) for ruf-to-at");
  std::optional<double> d4pi;
  equivalence->add_option("--d4pi", d4pi, "Empirical d_4pi to substitute into the bound");

  auto* optimize = app.add_subcommand("optimize", "Maximize J_beta under a constraint set");
  std::string constraint = "reduced";
  double delta = 0.0;
  double K = 1.0;
  double tau = 1.0;
  std::size_t knots = 32;
  std::size_t budget = 100000;
  optimize->add_option("--constraint", constraint, "reduced|ruf|norm-sum")
      ->check(CLI::IsMember({"reduced", "ruf", "norm-sum"}));
  optimize->add_option("--beta", beta_text, "Exponent");
  optimize->add_option("--delta", delta, "reduced: ||grad u|| <= 1 - delta");
  optimize->add_option("--K", K, "reduced: ||u||_2 <= K");
  optimize->add_option("--tau", tau, "ruf: ||grad u||^2 + tau ||u||^2 <= 1");
  optimize->add_option("--knots", knots, "Knots per profile (>= 4)");
  optimize->add_option("--budget", budget, "Functional evaluations");

  auto* scan = app.add_subcommand("scan-blowup", "J_beta along the rescaled counterexample sequence");
  double scan_delta = 0.0;
  double scan_K = 1.0;
  std::string betas_text = "2pi,4pi";
  std::string ns_text = "1e3,1e4,1e5,1e6";
  scan->add_option("--delta", scan_delta, "Dirichlet budget 1 - delta");
  scan->add_option("--K", scan_K, "L2 budget");
  scan->add_option("--betas", betas_text, "Comma-separated exponents");
  scan->add_option("--ns", ns_text, "Comma-separated indices n >= 3");

  auto* table = app.add_subcommand("table", "Columns: blowup (beta,n,j_beta,lower_bound); constants "
                                            "(beta_over_pi,beta,best_eps,c_eps,c_asymptotic,quadratic,"
                                            "inverse_gap,c_eps_over_quadratic); zygmund-optimality "
                                            "(k,quasinorm,sobolev_norm,ratio,f_k_at_2)");
  std::string table_name;
  table->add_option("name", table_name, "blowup|constants|zygmund-optimality")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "moser: " << e.what() << "\n";
    return usage;
  }

  Output result;
  std::string command;
  double optimizer_time = -1.0;
  try {
    if (!(g.tol > 0.0 && g.tol <= 1e-6)) throw usage_error("--tol must lie in (0, 1e-6]");
    const double beta = parse_real(beta_text);
    if (*oracles) {
      command = "oracles";
      result = cmd_oracles(oracle_file);
    } else if (*eval) {
      command = "eval";
      result = cmd_eval(eval_profile, beta, g);
    } else if (*rearrange) {
      command = "rearrange";
      result = cmd_rearrange(in_path);
    } else if (*verify) {
      command = "verify";
      std::optional<double> window;
      if (!T_text.empty()) window = parse_real(T_text);
      result = cmd_verify(inequality, verify_profile, beta, window, parse_real(lambda_text), g);
    } else if (*equivalence) {
      command = "equivalence";
      result = cmd_equivalence(direction, equivalence_profile, beta, d4pi);
    } else if (*optimize) {
      command = "optimize";
      result = cmd_optimize(constraint, beta, delta, K, tau, knots, budget, g, optimizer_time);
    } else if (*scan) {
      command = "scan-blowup";
      result = blowup_output(scan_delta, scan_K, parse_real_list(betas_text), parse_real_list(ns_text), g);
    } else if (*table) {
      command = "table";
      result = cmd_table(table_name, g);
    }
  } catch (const usage_error& e) {
    err << "moser: " << e.what() << "\n";
    return usage;
  } catch (const error& e) {
    err << "moser: " << e.what() << "\n";
    return e.code() == errc::value_overflow ? check_failed : usage;
  }

  std::string format = g.format;
  if (format == "auto") format = (command == "table" || command == "scan-blowup") ? "csv" : "json";
  std::string text;
  if (format == "csv") {
    if (!result.table) {
      err << "moser: " << command << " has no csv form\n";
      return usage;
    }
    text = to_csv(*result.table);
  } else {
    text = result.body.dump(2) + "\n";
  }

  if (g.out.empty()) {
    out << text;
  } else {
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
      err << "moser: cannot write " << g.out << "\n";
      return usage;
    }
    file << text;
  }
  if (!result.failure.empty()) err << "moser: " << result.failure << "\n";

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
  json manifest{{"command", args},
                {"subcommand", command},
                {"version", version},
                {"seed", g.seed},
                {"tol", g.tol},
                {"format", format},
                {"exit_code", result.code},
                {"timestamp", timestamp()},
                {"wall_time", wall}};
  if (optimizer_time >= 0.0) manifest["optimizer_wall_time"] = optimizer_time;
  if (g.out.empty()) {
    err << manifest.dump() << "\n";
  } else {
    std::ofstream(g.out + ".manifest.json") << manifest.dump(2) << "\n";
  }
  return result.code;
}

}  // namespace moser::cli
