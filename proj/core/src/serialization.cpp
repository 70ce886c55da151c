#include "moser/serialization.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <optional>

#include "moser/error.hpp"

namespace moser {

namespace {

using nlohmann::json;

double read_number(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw error(errc::parse_error, std::string(what) + " must be a number");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  double x = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return x;
}

}  // namespace

json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0.0 ? "inf" : "-inf";
}

json to_json(const RadialProfile& p) {
  json knots = json::array();
  for (const Knot& k : p.knots()) {
    json row = json::array({k.s, k.v});
    if (k.kind == KnotKind::jump) row.push_back("jump");
    knots.push_back(std::move(row));
  }
  return json{{"t_support", p.t_support()}, {"knots", std::move(knots)}};
}

RadialProfile profile_from_json(const json& j) {
  if (!j.is_object() || !j.contains("t_support") || !j.contains("knots")) {
    throw error(errc::parse_error, "profile needs \"t_support\" and \"knots\"");
  }
  const json& rows = j.at("knots");
  if (!rows.is_array()) throw error(errc::parse_error, "\"knots\" must be an array");
  std::vector<Knot> knots;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() < 2 || row.size() > 3) {
      throw error(errc::parse_error, "each knot is [s, v] or [s, v, \"jump\"]");
    }
    Knot k{read_number(row[0], "knot s"), read_number(row[1], "knot v")};
    if (row.size() == 3) {
      if (row[2] == "jump") {
        k.kind = KnotKind::jump;
      } else if (row[2] != "linear") {
        throw error(errc::parse_error, "knot kind must be \"jump\" or \"linear\"");
      }
    }
    knots.push_back(k);
  }
  return RadialProfile(read_number(j.at("t_support"), "t_support"), std::move(knots));
}

std::string dump_profile(const RadialProfile& p) { return to_json(p).dump(); }

RadialProfile parse_profile(std::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw error(errc::parse_error, "profile is not valid JSON");
  return profile_from_json(j);
}

WeightedSamples parse_samples_csv(std::istream& in) {
  WeightedSamples w;
  std::string line;
  std::size_t line_no = 0;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    const auto comma = row.find(',');
    std::optional<double> value;
    std::optional<double> area;
    if (comma != std::string_view::npos) {
      value = parse_double(row.substr(0, comma));
      area = parse_double(row.substr(comma + 1));
    }
    if (!value || !area) {
      if (first_data) {
        first_data = false;
        continue;  // header
      }
      throw error(errc::parse_error, "line " + std::to_string(line_no) + ": expected \"value,area\"");
    }
    first_data = false;
    w.values.push_back(*value);
    w.areas.push_back(*area);
  }
  w.validate();
  return w;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json to_json(const FunctionalReport& r) {
  return json{{"beta", number(r.beta)},
              {"j_beta", number(r.j_beta)},
              {"dirichlet_sq", number(r.dirichlet_sq)},
              {"l2_sq", number(r.l2_sq)},
              {"sobolev_sq", number(r.sobolev_sq())},
              {"quad_error", number(r.quad_error)}};
}

json to_json(const InequalityReport& r) {
  json j{{"lhs", number(r.lhs)},
         {"rhs", number(r.rhs)},
         {"slack", number(r.slack)},
         {"holds", r.holds},
         {"witness", json{{"t", number(r.witness_t)}}}};
  if (r.witness_window) j["witness"]["T"] = number(*r.witness_window);
  return j;
}

json to_json(const QuasiNorm& q) {
  return json{{"value", number(q.value)}, {"witness", json{{"T", number(q.window)}, {"t", number(q.t)}}}};
}

json to_json(const EquivalenceTrace& t) {
  json steps = json::array();
  for (const TraceStep& s : t.steps) {
    steps.push_back(json{{"name", s.name},
                         {"profile", to_json(s.profile)},
                         {"dirichlet_sq", number(s.dirichlet_sq)},
                         {"l2_sq", number(s.l2_sq)},
                         {"constraint", s.constraint},
                         {"constrained", number(s.constrained)},
                         {"limit", number(s.limit)},
                         {"satisfied", s.satisfied}});
  }
  return json{{"transform", t.transform},
              {"theta", number(t.theta)},
              {"l2_sq", number(t.l2_sq)},
              {"branch", t.branch},
              {"steps", std::move(steps)},
              {"bound", json{{"coefficient", number(t.coefficient)}, {"tag", tag_name(t.tag)}}}};
}

json to_json(const OptimizationResult& r) {
  json residuals = json::object();
  for (const auto& [name, value] : r.feasibility_residuals) residuals[name] = number(value);
  json starts = json::array();
  for (const StartValue& s : r.starts) starts.push_back(json{{"name", s.name}, {"value", number(s.value)}});
  json trace = json::array();
  for (double v : r.objective_trace) trace.push_back(number(v));
  return json{{"best_profile", to_json(r.best_profile)},
              {"best_value", number(r.best_value)},
              {"vanishing_level_value", number(r.vanishing_level_value)},
              {"feasibility_residuals", std::move(residuals)},
              {"objective_trace", std::move(trace)},
              {"starts", std::move(starts)},
              {"best_start", r.best_start},
              {"seed", r.seed},
              {"evaluations", r.evaluations}};
}

}  // namespace moser
