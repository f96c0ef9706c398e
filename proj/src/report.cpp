#include "nsg/report.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nsg {

namespace {

using Json = nlohmann::ordered_json;

Json set_json(const SetInvariant& s) {
  return Json{{"value", s.value}, {"exact", s.exact}, {"bound", s.bound}, {"witness", s.witness}};
}

SetInvariant set_from(const Json& j) {
  return SetInvariant{j.at("value").get<std::size_t>(), j.at("witness").get<std::vector<std::string>>(),
                      j.at("exact").get<bool>(), j.at("bound").get<std::size_t>()};
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw ReportError("bad rational '" + text + "'");
  try {
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ReportError("bad rational '" + text + "'");
  }
}

template <class T>
void put_optional(Json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

template <class T>
std::optional<T> get_optional(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

Json invariants_json(const InvariantReport& r) {
  Json j;
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  j["degree_set"] = r.degree_set;
  j["solvability_degree"] =
      std::to_string(r.solvability_degree.numerator()) + "/" + std::to_string(r.solvability_degree.denominator());
  put_optional(j, "diameter", r.diameter);
  put_optional(j, "bipartite", r.bipartite);
  put_optional(j, "complete_multipartite", r.complete_multipartite);
  put_optional(j, "fs_group", r.fs_group);
  if (r.clique) j["clique"] = set_json(*r.clique);
  if (r.independence) j["independence"] = set_json(*r.independence);
  if (r.domination) j["domination"] = set_json(*r.domination);
  if (r.connectivity)
    j["connectivity"] = Json{{"value", r.connectivity->value}, {"exact", r.connectivity->exact}, {"cut", r.connectivity->cut}};
  if (r.hamiltonian)
    j["hamiltonian"] = Json{{"status", r.hamiltonian->status},
                            {"method", r.hamiltonian->method},
                            {"dirac_condition", r.hamiltonian->dirac_condition},
                            {"cycle", r.hamiltonian->cycle}};
  if (r.genus) {
    const auto& g = *r.genus;
    j["genus"] = Json{{"lower_bound", g.lower_bound},
                      {"kind", "lower bound"},
                      {"source", g.source},
                      {"euler", g.euler},
                      {"tripartite", g.tripartite},
                      {"k4_10", g.k4_10},
                      {"k4_10_h", g.k4_10_h},
                      {"k4_10_k", g.k4_10_k},
                      {"projective", g.projective},
                      {"two_k5_h", g.two_k5_h},
                      {"two_k5_k", g.two_k5_k}};
  }
  Json checks = Json::array();
  for (const auto& c : r.bound_checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["bound_checks"] = std::move(checks);
  return j;
}

InvariantReport invariants_from(const Json& j) {
  InvariantReport r;
  r.vertex_count = j.at("vertex_count").get<std::size_t>();
  r.edge_count = j.at("edge_count").get<std::size_t>();
  r.degree_set = j.at("degree_set").get<std::vector<std::size_t>>();
  r.solvability_degree = parse_rational(j.at("solvability_degree").get<std::string>());
  r.diameter = get_optional<std::size_t>(j, "diameter");
  r.bipartite = get_optional<bool>(j, "bipartite");
  r.complete_multipartite = get_optional<bool>(j, "complete_multipartite");
  r.fs_group = get_optional<bool>(j, "fs_group");
  if (j.contains("clique")) r.clique = set_from(j.at("clique"));
  if (j.contains("independence")) r.independence = set_from(j.at("independence"));
  if (j.contains("domination")) r.domination = set_from(j.at("domination"));
  if (j.contains("connectivity")) {
    const auto& c = j.at("connectivity");
    r.connectivity = ConnectivityInvariant{c.at("value").get<std::size_t>(), c.at("cut").get<std::vector<std::string>>(),
                                           c.at("exact").get<bool>()};
  }
  if (j.contains("hamiltonian")) {
    const auto& h = j.at("hamiltonian");
    r.hamiltonian = HamiltonInvariant{h.at("status").get<std::string>(), h.at("method").get<std::string>(),
                                      h.at("dirac_condition").get<bool>(), h.at("cycle").get<std::vector<std::string>>()};
  }
  if (j.contains("genus")) {
    const auto& g = j.at("genus");
    GenusInvariant out;
    out.lower_bound = g.at("lower_bound").get<std::size_t>();
    out.source = g.at("source").get<std::string>();
    out.euler = g.at("euler").get<std::size_t>();
    out.tripartite = g.at("tripartite").get<std::size_t>();
    out.k4_10 = g.at("k4_10").get<std::size_t>();
    out.k4_10_h = g.at("k4_10_h").get<std::vector<std::string>>();
    out.k4_10_k = g.at("k4_10_k").get<std::vector<std::string>>();
    out.projective = g.at("projective").get<bool>();
    out.two_k5_h = g.at("two_k5_h").get<std::vector<std::string>>();
    out.two_k5_k = g.at("two_k5_k").get<std::vector<std::string>>();
    r.genus = std::move(out);
  }
  for (const auto& c : j.at("bound_checks"))
    r.bound_checks.push_back(
        BoundCheck{c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  return r;
}

} // namespace

std::string format_report(const ReportDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["tool_version"] = doc.tool_version;
  j["group_name"] = doc.group_name;
  j["group_order"] = doc.group_order;
  j["sol_size"] = doc.sol_size;
  j["runtime_ms"] = doc.runtime_ms;
  j["invariants"] = invariants_json(doc.invariants);
  return j.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ReportError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kReportSchemaVersion)
      throw ReportError("report schema_version " + std::to_string(doc.schema_version) + " is not supported (expected " +
                        std::to_string(kReportSchemaVersion) + ")");
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.group_name = j.at("group_name").get<std::string>();
    doc.group_order = j.at("group_order").get<std::size_t>();
    doc.sol_size = j.at("sol_size").get<std::size_t>();
    doc.runtime_ms = j.at("runtime_ms").get<double>();
    doc.invariants = invariants_from(j.at("invariants"));
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ReportError(std::string("malformed report: ") + e.what());
  }
}

void write_report(const ReportDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ReportError("cannot write " + path.string());
  out << format_report(doc);
  if (!out) throw ReportError("write to " + path.string() + " failed");
}

ReportDocument read_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ReportError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_report(text.str());
}

} // namespace nsg
