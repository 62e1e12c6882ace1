#include "invmaxian/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "invmaxian/error.hpp"

namespace invmaxian {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::Parse, field + ": " + what);
}

Rational number_field(const json& node, const std::string& field) {
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const Error& e) {
      field_error(field, e.what());
    }
  }
  if (node.is_number_integer()) {
    return node.is_number_unsigned() ? Rational(mpz_class(std::to_string(node.get<std::uint64_t>())))
                                     : Rational(mpz_class(std::to_string(node.get<std::int64_t>())));
  }
  if (node.is_number_float()) field_error(field, "non-integer JSON number; write it as a string such as \"2.5\" or \"5/2\"");
  field_error(field, "expected a number");
}

std::string id_field(const json& node, const std::string& field) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number_integer()) return node.dump();
  field_error(field, "expected a string or integer id");
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) field_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(where + "." + key, "missing");
  return *it;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

std::string plain(const Rational& r) { return to_string(r); }

}  // namespace

std::string exact_and_decimal(const Rational& r) {
  if (r.get_den() == 1) return to_string(r);
  return to_string(r) + " (" + to_decimal(r, 6) + ")";
}

InverseInstance parse_instance_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) field_error("document", "expected an object");

  const json& vertices = require(doc, "vertices", "document");
  if (!vertices.is_array()) field_error("vertices", "expected an array");
  std::map<std::string, VertexId> index;
  std::vector<std::string> vertex_names;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    std::string id = id_field(require(v, "id", where), where + ".id");
    Rational w = v.contains("weight") ? number_field(v["weight"], where + ".weight") : Rational(1);
    if (sgn(w) < 0) throw Error(ErrorCode::InvalidInstance, "negative weight on vertex " + id);
    if (!index.emplace(id, i).second) throw Error(ErrorCode::InvalidInstance, "duplicate vertex id " + id);
    vertex_names.push_back(std::move(id));
    weights.push_back(std::move(w));
  }

  const json& edges = require(doc, "edges", "document");
  if (!edges.is_array()) field_error("edges", "expected an array");
  std::vector<Edge> tree_edges;
  std::vector<std::string> edge_names;
  std::vector<Rational> cost, inc, dec;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    std::string id = e.is_object() && e.contains("id") ? id_field(e["id"], where + ".id") : "e" + std::to_string(i);
    auto endpoint = [&](const char* key) {
      const std::string name = id_field(require(e, key, where), where + "." + key);
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorCode::InvalidInstance, "edge " + id + " references unknown vertex " + name);
      return it->second;
    };
    const VertexId u = endpoint("u");
    const VertexId v = endpoint("v");
    Rational len = number_field(require(e, "length", where), where + ".length");
    if (sgn(len) <= 0) throw Error(ErrorCode::InvalidInstance, "edge " + id + " must have a positive length");
    auto nonneg = [&](const char* key) {
      Rational r = number_field(require(e, key, where), where + "." + key);
      if (sgn(r) < 0) throw Error(ErrorCode::InvalidInstance, std::string("negative ") + key + " on edge " + id);
      return r;
    };
    cost.push_back(nonneg("cost"));
    inc.push_back(nonneg("inc_bound"));
    dec.push_back(nonneg("dec_bound"));
    tree_edges.push_back({u, v, std::move(len)});
    edge_names.push_back(std::move(id));
  }

  const json& targets = require(doc, "targets", "document");
  if (!targets.is_array()) field_error("targets", "expected an array");
  std::vector<VertexId> target_ids;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::string name = id_field(targets[i], "targets[" + std::to_string(i) + "]");
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorCode::InvalidInstance, "unknown target " + name);
    target_ids.push_back(it->second);
  }

  Objective objective = Objective::L1;
  if (doc.contains("objective")) {
    const auto name = id_field(doc["objective"], "objective");
    auto parsed = parse_objective(name);
    if (!parsed) field_error("objective", "unknown objective '" + name + "'");
    objective = *parsed;
  }

  InverseInstance inst{Tree(std::move(weights), std::move(tree_edges)),
                       std::move(target_ids),
                       std::move(cost),
                       std::move(inc),
                       std::move(dec),
                       objective,
                       std::move(vertex_names),
                       std::move(edge_names)};
  inst.validate();
  return inst;
}

InverseInstance parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

std::string serialize_instance(const InverseInstance& inst) {
  json doc;
  doc["vertices"] = json::array();
  for (VertexId v = 0; v < inst.tree.vertex_count(); ++v) {
    doc["vertices"].push_back({{"id", inst.vertex_name(v)}, {"weight", plain(inst.tree.weight(v))}});
  }
  doc["edges"] = json::array();
  for (EdgeId e = 0; e < inst.tree.edge_count(); ++e) {
    const auto& ed = inst.tree.edge(e);
    doc["edges"].push_back({{"id", inst.edge_name(e)},
                            {"u", inst.vertex_name(ed.u)},
                            {"v", inst.vertex_name(ed.v)},
                            {"length", plain(ed.length)},
                            {"cost", plain(inst.cost[e])},
                            {"inc_bound", plain(inst.inc_bound[e])},
                            {"dec_bound", plain(inst.dec_bound[e])}});
  }
  doc["targets"] = json::array();
  for (VertexId t : inst.targets) doc["targets"].push_back(inst.vertex_name(t));
  doc["objective"] = std::string(to_string(inst.objective));
  return doc.dump(2) + "\n";
}

namespace {

json certificate_json(const InverseInstance& inst, const SolveReport& report) {
  auto list = [](const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(plain(r));
    return a;
  };
  return std::visit(
      [&](const auto& cert) -> json {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return {{"kind", "none"}};
        } else if constexpr (std::is_same_v<T, LpCertificate>) {
          return {{"kind", "lp-duality"},
                  {"primal_objective", plain(cert.primal_objective)},
                  {"dual_objective", plain(cert.dual_objective)},
                  {"row_duals", list(cert.row_duals)},
                  {"bound_duals", list(cert.bound_duals)}};
        } else if constexpr (std::is_same_v<T, StarReport>) {
          auto one = [&](const StarCaseResult& c) {
            json adj = json::array();
            for (const auto& a : c.presolve) {
              adj.push_back({{"edge", inst.edge_name(a.edge)}, {"from", plain(a.from)}, {"to", plain(a.to)}});
            }
            return json{{"case", static_cast<int>(c.which)},
                        {"feasible", c.feasible},
                        {"level", plain(c.level)},
                        {"interval", {plain(c.interval_lo), plain(c.interval_hi)}},
                        {"presolve_cost", plain(c.presolve_cost)},
                        {"cost", plain(c.cost)},
                        {"presolve", adj}};
          };
          return {{"kind", "star"},
                  {"swapped", cert.swapped},
                  {"chosen", cert.chosen ? static_cast<int>(*cert.chosen) : 0},
                  {"cases", {one(cert.case1), one(cert.case2)}}};
        } else if constexpr (std::is_same_v<T, ThresholdTrace>) {
          json th = json::array();
          for (const auto& t : cert.thresholds) th.push_back({{"row", t.row}, {"threshold", plain(t.threshold)}});
          return {{"kind", "threshold"},
                  {"ladder", list(cert.ladder)},
                  {"bracket_index", cert.bracket_index},
                  {"bracket", {plain(cert.bracket_lo), plain(cert.bracket_hi)}},
                  {"row_thresholds", th},
                  {"tight_row", cert.tight_row},
                  {"budget", plain(cert.budget)}};
        } else {
          json sel = json::array();
          for (EdgeId e : cert.selection) sel.push_back(inst.edge_name(e));
          return {{"kind", "hamming"},
                  {"ladder", list(cert.ladder)},
                  {"threshold", plain(cert.threshold)},
                  {"selection", sel},
                  {"nodes_explored", cert.nodes_explored}};
        }
      },
      report.certificate);
}

}  // namespace

std::string report_to_json(const InverseInstance& inst, const SolveReport& report) {
  json doc;
  const bool optimal = report.status == Status::Optimal;
  doc["status"] = std::string(to_string(report.status));
  doc["objective"] = std::string(to_string(report.objective));
  doc["pair"] = {inst.vertex_name(report.a), inst.vertex_name(report.b)};
  doc["cost"] = optimal ? json(plain(report.cost)) : json(nullptr);
  doc["cost_decimal"] = optimal ? json(to_decimal(report.cost, 6)) : json(nullptr);
  doc["plan"] = json::array();
  if (optimal) {
    for (EdgeId e = 0; e < report.plan.amount.size(); ++e) {
      const int s = e < report.sign.size() ? report.sign[e] : 1;
      const Rational& x = report.plan.amount[e];
      const Rational& len = inst.tree.edge(e).length;
      doc["plan"].push_back({{"edge", inst.edge_name(e)},
                             {"sign", s},
                             {"amount", plain(x)},
                             {"new_length", plain(s > 0 ? Rational(len + x) : Rational(len - x))}});
    }
  }
  doc["violating_leaves"] = json::array();
  for (VertexId v : report.violating_leaves) doc["violating_leaves"].push_back(inst.vertex_name(v));
  doc["pairs"] = json::array();
  for (const auto& p : report.pairs) {
    doc["pairs"].push_back({{"pair", {inst.vertex_name(p.a), inst.vertex_name(p.b)}},
                            {"status", std::string(to_string(p.status))},
                            {"cost", p.status == Status::Optimal ? json(plain(p.cost)) : json(nullptr)}});
  }
  doc["certificate"] = certificate_json(inst, report);
  return doc.dump(2) + "\n";
}

SolveReport parse_report(const InverseInstance& inst, std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, "report line " + std::to_string(line_of(json_text, e.byte)) + ": " + e.what());
  }
  std::map<std::string, VertexId> vertex_index;
  for (VertexId v = 0; v < inst.tree.vertex_count(); ++v) vertex_index[inst.vertex_name(v)] = v;
  std::map<std::string, EdgeId> edge_index;
  for (EdgeId e = 0; e < inst.tree.edge_count(); ++e) edge_index[inst.edge_name(e)] = e;

  SolveReport report;
  const auto status = id_field(require(doc, "status", "report"), "status");
  report.status = status == "OPTIMAL" ? Status::Optimal : Status::Infeasible;
  const auto objective = parse_objective(id_field(require(doc, "objective", "report"), "objective"));
  if (!objective) field_error("objective", "unknown objective");
  report.objective = *objective;
  const json& pair = require(doc, "pair", "report");
  if (!pair.is_array() || pair.size() != 2) field_error("pair", "expected two vertex ids");
  for (int k = 0; k < 2; ++k) {
    const auto name = id_field(pair[static_cast<std::size_t>(k)], "pair");
    auto it = vertex_index.find(name);
    if (it == vertex_index.end()) field_error("pair", "unknown vertex " + name);
    (k == 0 ? report.a : report.b) = it->second;
  }
  if (report.status != Status::Optimal) return report;
  report.cost = number_field(require(doc, "cost", "report"), "cost");
  report.plan.amount = zeros(inst.tree.edge_count());
  report.sign.assign(inst.tree.edge_count(), 0);
  const json& plan = require(doc, "plan", "report");
  if (!plan.is_array()) field_error("plan", "expected an array");
  std::vector<char> seen(inst.tree.edge_count(), 0);
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const std::string where = "plan[" + std::to_string(i) + "]";
    const auto name = id_field(require(plan[i], "edge", where), where + ".edge");
    auto it = edge_index.find(name);
    if (it == edge_index.end()) field_error(where + ".edge", "unknown edge " + name);
    report.plan.amount[it->second] = number_field(require(plan[i], "amount", where), where + ".amount");
    if (plan[i].contains("sign") && plan[i]["sign"].is_number_integer()) report.sign[it->second] = plan[i]["sign"].get<int>();
    seen[it->second] = 1;
  }
  for (EdgeId e = 0; e < seen.size(); ++e) {
    if (!seen[e]) field_error("plan", "missing edge " + inst.edge_name(e));
  }
  return report;
}

void write_text_report(std::ostream& out, const InverseInstance& inst, const SolveReport& report) {
  out << "status:    " << to_string(report.status) << "\n";
  out << "objective: " << to_string(report.objective) << "\n";
  if (report.status != Status::Optimal) {
    out << "violating leaves:";
    for (VertexId v : report.violating_leaves) out << " " << inst.vertex_name(v);
    out << "\n";
    return;
  }
  out << "pair:      " << inst.vertex_name(report.a) << " " << inst.vertex_name(report.b) << "\n";
  out << "cost:      " << exact_and_decimal(report.cost) << "\n";
  out << "modified edges:\n";
  bool any = false;
  for (EdgeId e = 0; e < report.plan.amount.size(); ++e) {
    const Rational& x = report.plan.amount[e];
    if (sgn(x) == 0) continue;
    any = true;
    const int s = e < report.sign.size() ? report.sign[e] : 1;
    const Rational& len = inst.tree.edge(e).length;
    out << "  " << inst.edge_name(e) << ": " << (s > 0 ? "+" : "-") << exact_and_decimal(x) << "  length "
        << exact_and_decimal(len) << " -> " << exact_and_decimal(s > 0 ? Rational(len + x) : Rational(len - x))
        << "\n";
  }
  if (!any) out << "  (none)\n";
  if (!report.pairs.empty()) {
    out << "pairs:\n";
    for (const auto& p : report.pairs) {
      out << "  " << inst.vertex_name(p.a) << " " << inst.vertex_name(p.b) << ": " << to_string(p.status);
      if (p.status == Status::Optimal) out << " " << exact_and_decimal(p.cost);
      out << "\n";
    }
  }
}

}  // namespace invmaxian
