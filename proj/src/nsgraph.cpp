#include "nsg/nsgraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace nsg {

std::optional<Vertex> NSGraph::vertex_of(ElementId id) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), id);
  if (it == elements.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - elements.begin());
}

namespace {

void assign_block_index(NSGraph& g) {
  g.block_of.assign(g.vertex_count(), 0);
  for (std::size_t b = 0; b < g.blocks.size(); ++b)
    for (Vertex v : g.blocks[b]) g.block_of[v] = b;
}

} // namespace

NSGraph build_ns_graph(const SolvabilizerTable& st) {
  const auto& t = st.group();
  if (st.group_is_solvable())
    throw SolvableGroupError("group is solvable; NS_G is empty (" + t.name() + ")");

  NSGraph g;
  g.group_name = t.name();
  g.group_order = t.order();
  g.sol_size = st.radical_size();
  for (ElementId x = 0; x < t.order(); ++x)
    if (!st.radical().test(x)) g.elements.push_back(x);

  const std::size_t n = g.elements.size();
  g.graph = Graph(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!st.two_gen_solvable(g.elements[i], g.elements[j])) g.graph.add_edge(i, j);

  const auto radical = st.radical().to_vector();
  Bitset placed(n);
  for (Vertex i = 0; i < n; ++i) {
    if (placed.test(i)) continue;
    std::vector<Vertex> block;
    for (auto r : radical) {
      Vertex v = *g.vertex_of(t.multiply(g.elements[i], static_cast<ElementId>(r)));
      block.push_back(v);
      placed.set(v);
    }
    std::sort(block.begin(), block.end());
    g.blocks.push_back(std::move(block));
  }
  assign_block_index(g);
  if (!has_twin_blocks(g))
    throw InvariantViolation("radical cosets of " + g.group_name + " are not independent twin classes");
  return g;
}

bool has_twin_blocks(const NSGraph& g) {
  for (const auto& block : g.blocks) {
    const Bitset& nb = g.graph.neighbors(block.front());
    for (Vertex v : block) {
      if (g.graph.neighbors(v) != nb) return false;
      if (nb.test(v)) return false;
    }
  }
  return true;
}

NSGraph quotient(const NSGraph& g) {
  NSGraph q;
  q.group_name = g.group_name + "/Sol";
  q.group_order = g.group_order / g.sol_size;
  q.sol_size = 1;
  const std::size_t k = g.blocks.size();
  q.graph = Graph(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (g.graph.adjacent(g.blocks[a].front(), g.blocks[b].front()))
        q.graph.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  for (std::size_t a = 0; a < k; ++a) q.blocks.push_back({static_cast<Vertex>(a)});
  assign_block_index(q);
  return q;
}

NSGraph blowup(const NSGraph& g, std::size_t m) {
  NSGraph b;
  b.group_name = g.group_name + "^" + std::to_string(m);
  b.group_order = g.group_order * m;
  b.sol_size = g.sol_size * m;
  b.graph = blowup(g.graph, m);
  for (const auto& block : g.blocks) {
    std::vector<Vertex> nb;
    for (Vertex v : block)
      for (std::size_t c = 0; c < m; ++c) nb.push_back(static_cast<Vertex>(v * m + c));
    std::sort(nb.begin(), nb.end());
    b.blocks.push_back(std::move(nb));
  }
  assign_block_index(b);
  return b;
}

NSGraph from_graph(const Graph& g, std::string name) {
  NSGraph out;
  out.group_name = std::move(name);
  out.group_order = g.vertex_count() + 1;
  out.graph = g;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.blocks.push_back({v});
  assign_block_index(out);
  return out;
}

GroupSpec quotient_spec(const GroupTable& table, const ElementSet& normal_subgroup, std::string name) {
  const std::size_t n = table.order();
  std::vector<std::size_t> coset_of(n, n);
  std::vector<ElementId> reps;
  if (!is_subgroup(table, normal_subgroup) || normal_closure(table, normal_subgroup) != normal_subgroup)
    throw std::invalid_argument("quotient_spec: not a normal subgroup");
  const auto members = normal_subgroup.to_vector();
  for (ElementId x = 0; x < n; ++x) {
    if (coset_of[x] != n) continue;
    for (auto r : members) coset_of[table.multiply(static_cast<ElementId>(r), x)] = reps.size();
    reps.push_back(x);
  }
  GroupSpec spec;
  spec.name = std::move(name);
  spec.degree = reps.size();
  for (ElementId gen : table.generator_ids()) {
    std::vector<Point> im(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      im[c] = static_cast<Point>(coset_of[table.multiply(reps[c], gen)]);
    spec.generators.emplace_back(std::move(im));
  }
  return spec;
}

Symmetry conjugation_symmetry(const NSGraph& g, const GroupTable& table) {
  if (g.elements.empty()) return Symmetry::trivial(g.vertex_count());
  std::vector<std::vector<Vertex>> maps;
  maps.reserve(table.order());
  for (ElementId c = 0; c < table.order(); ++c) {
    std::vector<Vertex> m(g.vertex_count());
    for (Vertex v = 0; v < m.size(); ++v) m[v] = *g.vertex_of(table.conjugate(g.elements[v], c));
    maps.push_back(std::move(m));
  }
  return Symmetry::from_maps(g.graph, std::move(maps));
}

void write_edge_list(const NSGraph& g, std::ostream& out) {
  out << "# group=" << g.group_name << " n=" << g.vertex_count() << " m=" << g.edge_count()
      << " sol=" << g.sol_size << "\n";
  for (auto [u, v] : g.graph.edges()) out << u << ' ' << v << '\n';
}

NSGraph read_edge_list(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("# ", 0) != 0)
    throw ParseError("edge list: missing header line");
  NSGraph g;
  std::size_t n = 0, m = 0;
  bool have_n = false, have_m = false;
  std::istringstream hs(header.substr(2));
  std::string field;
  while (hs >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("edge list: bad header field '" + field + "'");
    std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    try {
      if (key == "group") g.group_name = value;
      else if (key == "n") n = std::stoul(value), have_n = true;
      else if (key == "m") m = std::stoul(value), have_m = true;
      else if (key == "sol") g.sol_size = std::stoul(value);
    } catch (const std::exception&) {
      throw ParseError("edge list: bad header value '" + field + "'");
    }
  }
  if (!have_n || !have_m) throw ParseError("edge list: header needs n= and m=");
  g.graph = Graph(n);
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    long long u = -1, v = -1;
    if (!(ls >> u >> v) || u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n || u == v)
      throw ParseError("edge list: line " + std::to_string(line_no) + ": bad edge");
    g.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (g.edge_count() != m) throw ParseError("edge list: header m does not match edge lines");
  g.group_order = n + g.sol_size;
  for (Vertex v = 0; v < n; ++v) g.blocks.push_back({v});
  assign_block_index(g);
  return g;
}

} // namespace nsg
