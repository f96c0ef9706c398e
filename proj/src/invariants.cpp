#include "nsg/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace nsg {

namespace {

std::string join_sizes(const std::vector<std::size_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
  return out + "}";
}

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

BoundCheck check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

std::vector<ElementId> to_elements(const NSGraph& g, const std::vector<Vertex>& vertices) {
  std::vector<ElementId> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(g.elements[v]);
  return out;
}

std::vector<Vertex> to_vertices(const NSGraph& g, const std::vector<ElementId>& ids) {
  std::vector<Vertex> out;
  out.reserve(ids.size());
  for (ElementId id : ids) {
    auto v = g.vertex_of(id);
    if (!v) throw InvariantViolation("element " + std::to_string(id) + " is not a vertex of NS_" + g.group_name);
    out.push_back(*v);
  }
  return out;
}

bool pairwise_non_solvable(const SolvabilizerTable& st, const std::vector<ElementId>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (st.two_gen_solvable(set[i], set[j])) return false;
  return true;
}

bool distinct_non_radical(const SolvabilizerTable& st, const std::vector<ElementId>& set) {
  std::unordered_set<ElementId> seen;
  for (ElementId e : set)
    if (st.radical().test(e) || !seen.insert(e).second) return false;
  return true;
}

// Neighbours y of the prime-order witness x with o(y) >= 3, ascending id.
std::vector<ElementId> candidate_partners(const SolvabilizerTable& st, ElementId x) {
  const auto& t = st.group();
  std::vector<ElementId> out;
  for (ElementId y = 0; y < t.order(); ++y)
    if (!st.radical().test(y) && !st.two_gen_solvable(x, y) && t.element_order(y) >= 3) out.push_back(y);
  return out;
}

} // namespace

std::vector<std::size_t> degree_set(const NSGraph& g) {
  std::set<std::size_t> distinct;
  for (auto d : g.graph.degrees()) distinct.insert(d);
  std::vector<std::size_t> out(distinct.begin(), distinct.end());
  if (out.size() == 2)
    throw InvariantViolation("NS_" + g.group_name + " has exactly two vertex degrees " + join_sizes(out));
  return out;
}

Rational solvability_degree(const NSGraph& g) {
  const auto order = static_cast<std::int64_t>(g.group_order);
  return Rational(1) - Rational(2 * static_cast<std::int64_t>(g.edge_count()), order * order);
}

SolvabilityDegreeBounds solvability_degree_bounds(std::size_t group_order, std::size_t sol_size) {
  const auto n = static_cast<std::int64_t>(group_order);
  const auto s = static_cast<std::int64_t>(sol_size);
  const std::int64_t n2 = n * n;
  SolvabilityDegreeBounds b;
  b.lower = Rational(2 * (n - s), n2) + Rational(2 * s, n) - Rational(s * s, n2);
  b.upper = Rational(1) - Rational(6 * (n - s), n2);
  b.prior_lower = Rational(2 * (n - s), n2) + Rational(s, n);
  return b;
}

std::size_t distinct_solvabilizer_count(const SolvabilizerTable& st) {
  std::unordered_set<ElementSet, BitsetHash> rows;
  rows.insert(st.group().full_set());
  for (ElementId x = 0; x < st.group().order(); ++x) rows.insert(st.solvabilizer(x));
  return rows.size();
}

std::vector<BoundCheck> degree_checks(const SolvabilizerTable& st, const NSGraph& g) {
  std::vector<BoundCheck> out;
  const std::size_t order = g.group_order, s = g.sol_size, n = g.vertex_count();
  const auto degrees = g.graph.degrees();

  bool identity = true;
  for (Vertex v = 0; v < n && identity; ++v)
    identity = degrees[v] == order - st.solvabilizer(g.elements[v]).count();
  out.push_back(check("degree_identity", identity, "deg(x) = |G| - |Sol_G(x)| for every vertex"));

  const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
  out.push_back(check("degree_bounds", *lo >= 6 && *hi + s + 2 <= order,
                      "6 <= " + std::to_string(*lo) + ", " + std::to_string(*hi) + " <= " +
                          std::to_string(order - s - 2)));

  const NSGraph q = quotient(g);
  bool regular = true;
  for (std::size_t b = 0; b < g.blocks.size() && regular; ++b)
    for (Vertex v : g.blocks[b])
      if (degrees[v] != s * q.graph.degree(static_cast<Vertex>(b))) regular = false;
  out.push_back(check("block_regularity", regular, "deg(x) = |Sol(G)| deg(x Sol(G)) on every coset"));

  const std::size_t sum = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  const Rational ps = solvability_degree(g);
  const auto order64 = static_cast<std::int64_t>(order);
  const bool handshake =
      sum == 2 * g.edge_count() && Rational(order64 * order64) * (Rational(1) - ps) == Rational(static_cast<std::int64_t>(sum));
  out.push_back(check("handshake", handshake, "sum of degrees " + std::to_string(sum) + " = |G|^2 (1 - P_s)"));

  const auto bounds = solvability_degree_bounds(order, s);
  out.push_back(check("solvability_degree_bounds", bounds.lower <= ps && ps <= bounds.upper,
                      rational_text(bounds.lower) + " <= " + rational_text(ps) + " <= " + rational_text(bounds.upper)));
  out.push_back(check("solvability_degree_lower_beats_prior", bounds.lower > bounds.prior_lower,
                      rational_text(bounds.lower) + " > " + rational_text(bounds.prior_lower)));

  const auto ds = degree_set(g);
  const auto qds = degree_set(q);
  out.push_back(check("quotient_degree_set_size", ds.size() == qds.size(),
                      std::to_string(ds.size()) + " degrees, quotient has " + std::to_string(qds.size())));
  const bool a5_quotient = order / s == 60;
  out.push_back(check("a5_quotient_three_degrees", !a5_quotient || ds.size() == 3,
                      a5_quotient ? "|G/Sol(G)| = 60, degree set " + join_sizes(ds) : "not applicable"));
  const std::size_t distinct = distinct_solvabilizer_count(st);
  out.push_back(check("solvabilizer_count_bound", ds.size() + 1 <= distinct,
                      std::to_string(ds.size()) + " <= " + std::to_string(distinct) + " - 1"));
  return out;
}

ElementSet joint_solvabilizer(const SolvabilizerTable& st, const std::vector<ElementId>& set) {
  ElementSet out = st.group().full_set();
  for (ElementId x : set) out &= st.solvabilizer(x);
  return out;
}

bool dominating_by_criterion(const SolvabilizerTable& st, const std::vector<ElementId>& set) {
  ElementSet allowed = st.radical();
  for (ElementId x : set) allowed.set(x);
  return joint_solvabilizer(st, set).is_subset_of(allowed);
}

bool independence_criterion(const SolvabilizerTable& st, const std::vector<ElementId>& set) {
  ElementSet expected = st.radical();
  for (ElementId x : set) expected.set(x);
  return joint_solvabilizer(st, set) == expected;
}

bool independence_order_bound(std::size_t group_order, std::size_t alpha) {
  using boost::multiprecision::cpp_int;
  const auto e = static_cast<unsigned>(3 * alpha);
  cpp_int lhs = boost::multiprecision::pow(cpp_int(group_order), 4) * boost::multiprecision::pow(cpp_int(2), e);
  cpp_int rhs = boost::multiprecision::pow(cpp_int(3 * alpha), e);
  return lhs <= rhs;
}

bool is_fs_group(const SolvabilizerTable& st) {
  std::unordered_set<ElementSet, BitsetHash> seen;
  std::vector<ElementSet> rows;
  for (ElementId x = 0; x < st.group().order(); ++x)
    if (!st.radical().test(x) && seen.insert(st.solvabilizer(x)).second) rows.push_back(st.solvabilizer(x));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (i != j && rows[i].is_subset_of(rows[j])) return false;
  return true;
}

bool dirac_condition(const SolvabilizerTable& st) {
  for (ElementId x = 0; x < st.group().order(); ++x)
    if (!st.radical().test(x) && 2 * st.solvabilizer(x).count() > st.group().order()) return false;
  return true;
}

std::vector<ElementId> six_clique_witness(const SolvabilizerTable& st) {
  const auto& t = st.group();
  const ElementId x = prime_ge5_witness(st);
  for (ElementId y = 0; y < t.order(); ++y) {
    if (st.radical().test(y) || st.two_gen_solvable(x, y)) continue;
    std::vector<ElementId> set{x};
    for (std::uint64_t a = 0; a < 5; ++a) set.push_back(t.multiply(t.power(x, a), y));
    if (distinct_non_radical(st, set) && pairwise_non_solvable(st, set)) return set;
  }
  throw InvariantViolation("no 6-clique {x, y, xy, ..., x^4 y} in NS_" + t.name());
}

std::vector<Vertex> lift_hamiltonian_cycle(const NSGraph& g, const std::vector<Vertex>& quotient_cycle) {
  const std::size_t m = g.blocks.empty() ? 0 : g.blocks.front().size();
  std::vector<Vertex> cycle;
  cycle.reserve(quotient_cycle.size() * m);
  for (std::size_t r = 0; r < m; ++r)
    for (Vertex b : quotient_cycle) cycle.push_back(g.blocks.at(b).at(r));
  return cycle;
}

CycleCheck verify_element_cycle(const NSGraph& g, const GroupTable& table, const std::vector<std::string>& entries) {
  const std::size_t n = g.vertex_count();
  if (entries.size() != n)
    return {false, "expected " + std::to_string(n) + " entries, got " + std::to_string(entries.size())};
  std::vector<Vertex> cycle;
  Bitset seen(n);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::optional<ElementId> id;
    try {
      id = table.find(parse_cycles(entries[i], table.spec().degree));
    } catch (const ParseError& e) {
      return {false, "entry " + std::to_string(i + 1) + ": " + e.what()};
    }
    if (!id) return {false, "entry " + std::to_string(i + 1) + " " + entries[i] + " is not in " + table.name()};
    auto v = g.vertex_of(*id);
    if (!v) return {false, "entry " + std::to_string(i + 1) + " " + entries[i] + " is not a vertex"};
    if (seen.test(*v)) return {false, "entry " + std::to_string(i + 1) + " " + entries[i] + " repeats"};
    seen.set(*v);
    cycle.push_back(*v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (!g.graph.adjacent(cycle[i], cycle[j]))
      return {false, entries[i] + " and " + entries[j] + " are not adjacent"};
  }
  return {true, ""};
}

std::vector<std::string> read_cycle_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
    if (line.empty() || line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::size_t genus_complete(std::size_t n) {
  if (n < 3) return 0;
  return ((n - 3) * (n - 4) + 11) / 12;
}

std::size_t genus_complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) return 0;
  return ((m - 2) * (n - 2) + 3) / 4;
}

std::size_t genus_complete_tripartite(std::size_t m) {
  if (m < 2) return 0;
  return (m - 2) * (m - 1) / 2;
}

std::size_t euler_genus_bound(std::size_t vertices, std::size_t edges) {
  if (edges + 6 <= 3 * vertices) return 0;
  return (edges + 6 - 3 * vertices + 5) / 6;
}

bool is_k4_10(const SolvabilizerTable& st, const K410Witness& w) {
  if (w.h.size() != 4 || w.k.size() != 10) return false;
  std::vector<ElementId> all = w.h;
  all.insert(all.end(), w.k.begin(), w.k.end());
  if (!distinct_non_radical(st, all)) return false;
  for (ElementId a : w.h)
    for (ElementId b : w.k)
      if (st.two_gen_solvable(a, b)) return false;
  return true;
}

K410Witness k4_10_witness(const SolvabilizerTable& st) {
  const auto& t = st.group();
  K410Witness w;
  w.x = prime_ge5_witness(st);
  for (std::uint64_t a = 1; a <= 4; ++a) w.h.push_back(t.power(w.x, a));
  for (ElementId y : candidate_partners(st, w.x)) {
    w.y = y;
    w.k.clear();
    for (std::uint64_t i = 1; i <= 2; ++i)
      for (std::uint64_t j = 0; j <= 4; ++j) w.k.push_back(t.multiply(t.power(y, i), t.power(w.x, j)));
    if (is_k4_10(st, w)) return w;
  }
  throw InvariantViolation("no K_{4,10} witness in NS_" + t.name());
}

bool is_two_k5(const Graph& g, const std::vector<Vertex>& h, const std::vector<Vertex>& k) {
  if (h.size() != 5 || k.size() != 5 || !is_clique(g, h) || !is_clique(g, k)) return false;
  for (Vertex a : h)
    if (std::find(k.begin(), k.end(), a) != k.end()) return false;
  return true;
}

TwoK5Witness two_k5_witness(const SolvabilizerTable& st) {
  const auto& t = st.group();
  TwoK5Witness w;
  w.x = prime_ge5_witness(st);
  for (ElementId y : candidate_partners(st, w.x)) {
    const std::uint64_t oy = t.element_order(y);
    for (std::uint64_t j = 2; j < oy; ++j) {
      if (std::gcd(j, oy) != 1) continue;
      w.y = y;
      w.j = j;
      w.h.clear();
      w.k.clear();
      for (std::uint64_t a = 0; a < 5; ++a) {
        w.h.push_back(t.multiply(t.power(w.x, a), y));
        w.k.push_back(t.multiply(t.power(w.x, a), t.power(y, j)));
      }
      std::vector<ElementId> all = w.h;
      all.insert(all.end(), w.k.begin(), w.k.end());
      if (distinct_non_radical(st, all) && pairwise_non_solvable(st, w.h) && pairwise_non_solvable(st, w.k))
        return w;
    }
  }
  throw InvariantViolation("no 2K5 witness in NS_" + t.name());
}

InvariantSelection InvariantSelection::none() {
  InvariantSelection s;
  s.structure = s.clique = s.independence = s.domination = s.connectivity = s.hamiltonian = s.genus = false;
  return s;
}

bool InvariantReport::budget_exceeded() const {
  return (clique && !clique->exact) || (independence && !independence->exact) || (domination && !domination->exact) ||
         (connectivity && !connectivity->exact) || (hamiltonian && hamiltonian->status == "unknown");
}

bool InvariantReport::all_checks_pass() const {
  return std::all_of(bound_checks.begin(), bound_checks.end(), [](const BoundCheck& c) { return c.passed; });
}

InvariantReport compute_invariants(const SolvabilizerTable& st, const NSGraph& g, const InvariantOptions& options) {
  const auto& table = st.group();
  const auto& sel = options.select;
  const std::size_t n = g.vertex_count(), s = g.sol_size;
  auto label = [&](const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (Vertex v : vs) out.push_back(table.element(g.elements[v]).to_cycles());
    return out;
  };
  auto label_ids = [&](const std::vector<ElementId>& ids) {
    std::vector<std::string> out;
    for (ElementId id : ids) out.push_back(table.element(id).to_cycles());
    return out;
  };

  InvariantReport r;
  r.vertex_count = n;
  r.edge_count = g.edge_count();
  r.degree_set = degree_set(g);
  r.solvability_degree = solvability_degree(g);
  r.bound_checks = degree_checks(st, g);
  auto& checks = r.bound_checks;

  const Symmetry sym = options.use_symmetry ? conjugation_symmetry(g, table) : Symmetry::trivial(n);
  SolverOptions so;
  so.node_budget = options.node_budget;
  so.symmetry = &sym;

  if (sel.structure) {
    r.diameter = diameter(g.graph);
    r.bipartite = is_bipartite(g.graph);
    r.complete_multipartite = is_complete_multipartite(g.graph);
    r.fs_group = is_fs_group(st);
    checks.push_back(check("diameter_two", r.diameter == std::optional<std::size_t>(2),
                           r.diameter ? "diameter " + std::to_string(*r.diameter) : "disconnected"));
    checks.push_back(check("not_bipartite", !*r.bipartite, ""));
    checks.push_back(check("not_complete_multipartite", !*r.complete_multipartite, ""));
  }

  if (sel.clique) {
    const auto c = max_clique(g.graph, so);
    if (!is_clique(g.graph, c.witness)) throw InvariantViolation("clique witness does not validate");
    r.clique = SetInvariant{c.value, label(c.witness), c.exact, c.bound};
    checks.push_back(check("clique_at_least_6", c.value >= 6, "omega = " + std::to_string(c.value)));
    const auto six = six_clique_witness(st);
    checks.push_back(check("six_clique_construction", is_clique(g.graph, to_vertices(g, six)),
                           "{x, y, xy, ..., x^4 y} with x = " + table.element(six.front()).to_cycles()));
    if (s > 1) {
      const auto qc = max_clique(quotient(g).graph, {options.node_budget, nullptr});
      checks.push_back(check("clique_equals_quotient", c.exact && qc.exact && qc.value == c.value,
                             "omega(quotient) = " + std::to_string(qc.value)));
    } else {
      checks.push_back(check("clique_equals_quotient", true, "trivial radical, the quotient graph is the graph"));
    }
  }

  if (sel.independence) {
    const auto a = max_independent_set(g.graph, so);
    if (!is_independent(g.graph, a.witness)) throw InvariantViolation("independent set witness does not validate");
    r.independence = SetInvariant{a.value, label(a.witness), a.exact, a.bound};
    checks.push_back(check("independence_criterion", independence_criterion(st, to_elements(g, a.witness)),
                           "Sol_G(S) = S u Sol(G) for the maximum independent witness"));
    checks.push_back(check("independence_order_bound", independence_order_bound(g.group_order, a.value),
                           "|G| <= (3a/2)^(3a/4) with a = " + std::to_string(a.value)));
  }

  if (sel.domination) {
    const auto d = min_dominating_set(g.graph, so);
    if (!is_dominating(g.graph, d.witness)) throw InvariantViolation("dominating set witness does not validate");
    r.domination = SetInvariant{d.value, label(d.witness), d.exact, d.bound};
    bool no_single = true, criterion_agrees = dominating_by_criterion(st, to_elements(g, d.witness));
    for (Vertex v = 0; v < n; ++v) {
      const bool graph_says = g.graph.degree(v) + 1 == n;
      if (graph_says) no_single = false;
      if (dominating_by_criterion(st, {g.elements[v]}) != graph_says) criterion_agrees = false;
    }
    checks.push_back(check("domination_not_one", no_single && d.value >= 2, "no vertex is adjacent to all others"));
    checks.push_back(check("domination_criterion", criterion_agrees,
                           "Sol_G(S) within Sol(G) u S agrees with graph domination on the witness and all singletons"));
  }

  if (sel.connectivity) {
    const auto k = vertex_connectivity(g.graph, so);
    Bitset cut(n);
    for (Vertex v : k.cut) cut.set(v);
    if (k.cut.size() != k.value || is_connected_without(g.graph, cut))
      throw InvariantViolation("vertex cut witness does not disconnect the graph");
    r.connectivity = ConnectivityInvariant{k.value, label(k.cut), k.exact};
    checks.push_back(check("connectivity_multiple_of_sol", k.value % s == 0 && k.value / s >= 2,
                           "kappa = " + std::to_string(k.value) + " = " + std::to_string(k.value / s) + " * " +
                               std::to_string(s)));
  }

  if (sel.hamiltonian) {
    HamiltonInvariant h;
    h.dirac_condition = dirac_condition(st);
    HamiltonResult found;
    if (s > 1) {
      const NSGraph q = quotient(g);
      const auto hq = hamiltonian_cycle(q.graph, {options.node_budget, nullptr});
      if (hq.status == HamiltonStatus::found) {
        found.cycle = lift_hamiltonian_cycle(g, hq.cycle);
        found.status = is_hamiltonian_cycle(g.graph, found.cycle) ? HamiltonStatus::found : HamiltonStatus::unknown;
        found.method = "lift";
      }
    }
    if (found.status != HamiltonStatus::found) found = hamiltonian_cycle(g.graph, so);
    if (found.status == HamiltonStatus::found && !is_hamiltonian_cycle(g.graph, found.cycle))
      throw InvariantViolation("hamiltonian cycle witness does not validate");
    h.status = found.status == HamiltonStatus::found ? "hamiltonian"
               : found.status == HamiltonStatus::none ? "not hamiltonian"
                                                      : "unknown";
    h.method = found.method;
    h.cycle = label(found.cycle);
    checks.push_back(check("dirac_implies_hamiltonian", !h.dirac_condition || found.status == HamiltonStatus::found,
                           h.dirac_condition ? "max |Sol_G(x)| <= |G|/2" : "condition does not hold"));
    r.hamiltonian = std::move(h);
  }

  if (sel.genus) {
    GenusInvariant gen;
    gen.euler = euler_genus_bound(n, g.edge_count());
    gen.tripartite = genus_complete_tripartite(s);
    const auto w = k4_10_witness(st);
    const bool k410_ok = is_k4_10(st, w);
    gen.k4_10 = k410_ok ? genus_complete_bipartite(4, 10) : 0;
    gen.k4_10_h = label_ids(w.h);
    gen.k4_10_k = label_ids(w.k);
    gen.lower_bound = std::max({gen.euler, gen.tripartite, gen.k4_10});
    gen.source = gen.lower_bound == gen.euler ? "euler" : gen.lower_bound == gen.tripartite ? "tripartite" : "k4_10";
    const auto p = two_k5_witness(st);
    const bool two_k5_ok = is_two_k5(g.graph, to_vertices(g, p.h), to_vertices(g, p.k));
    gen.projective = false;
    gen.two_k5_h = label_ids(p.h);
    gen.two_k5_k = label_ids(p.k);
    checks.push_back(check("k4_10_embedding", k410_ok, "x = " + table.element(w.x).to_cycles() + ", y = " +
                                                            table.element(w.y).to_cycles()));
    checks.push_back(check("genus_at_least_4", gen.lower_bound >= 4, "lower bound " + std::to_string(gen.lower_bound)));
    checks.push_back(check("two_k5_subgraph", two_k5_ok, "j = " + std::to_string(p.j)));
    r.genus = std::move(gen);
  }
  return r;
}

} // namespace nsg
