#include "nsg/graph.hpp"

#include <stdexcept>

namespace nsg {

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d;
  d.reserve(rows_.size());
  for (const auto& r : rows_) d.push_back(r.count());
  return d;
}

Graph Graph::complement() const {
  Graph c(rows_.size());
  for (std::size_t v = 0; v < rows_.size(); ++v) {
    c.rows_[v] = ~rows_[v];
    c.rows_[v].reset(v);
  }
  return c;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t u = 0; u < rows_.size(); ++u)
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    });
  return out;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    Vertex v = static_cast<Vertex>((u + 1) % n);
    if (u != v && !g.adjacent(u, v)) g.add_edge(u, v);
  }
  return g;
}

Symmetry Symmetry::trivial(std::size_t n) {
  std::vector<Vertex> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Vertex>(i);
  Symmetry s;
  s.n_ = n;
  s.maps_.push_back(std::move(id));
  s.orbit_of_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.orbit_of_[i] = i;
    s.orbits_.push_back({static_cast<Vertex>(i)});
  }
  return s;
}

Symmetry Symmetry::from_maps(const Graph& g, std::vector<std::vector<Vertex>> maps) {
  const std::size_t n = g.vertex_count();
  for (const auto& m : maps) {
    if (m.size() != n) throw std::invalid_argument("automorphism has wrong length");
    for (Vertex u = 0; u < n; ++u)
      g.neighbors(u).for_each([&](std::size_t v) {
        if (!g.adjacent(m[u], m[v])) throw std::invalid_argument("map is not a graph automorphism");
      });
  }
  Symmetry s;
  s.n_ = n;
  s.maps_ = std::move(maps);
  s.orbit_of_.assign(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (s.orbit_of_[v] != n) continue;
    std::size_t id = s.orbits_.size();
    Bitset members(n);
    for (const auto& m : s.maps_) members.set(m[v]);
    members.set(v);
    std::vector<Vertex> orbit;
    members.for_each([&](std::size_t u) {
      s.orbit_of_[u] = id;
      orbit.push_back(static_cast<Vertex>(u));
    });
    s.orbits_.push_back(std::move(orbit));
  }
  return s;
}

std::vector<std::vector<Vertex>> Symmetry::stabilizer_orbits(Vertex v, const Bitset& candidates) const {
  std::vector<const std::vector<Vertex>*> stab;
  for (const auto& m : maps_)
    if (m[v] == v) stab.push_back(&m);
  std::vector<std::vector<Vertex>> out;
  Bitset seen(n_);
  candidates.for_each([&](std::size_t u) {
    if (seen.test(u)) return;
    Bitset members(n_);
    members.set(u);
    for (const auto* m : stab) members.set((*m)[u]);
    seen |= members;
    std::vector<Vertex> orbit;
    members.for_each([&](std::size_t w) { orbit.push_back(static_cast<Vertex>(w)); });
    out.push_back(std::move(orbit));
  });
  return out;
}

namespace {

// Distances from s via frontier bitsets; returns eccentricity or nullopt.
std::optional<std::size_t> eccentricity(const Graph& g, Vertex s, const Bitset* removed) {
  const std::size_t n = g.vertex_count();
  Bitset visited(n);
  if (removed) visited |= *removed;
  visited.set(s);
  Bitset frontier(n);
  frontier.set(s);
  std::size_t depth = 0;
  std::size_t reached = visited.count();
  while (true) {
    Bitset next(n);
    frontier.for_each([&](std::size_t u) { next |= g.neighbors(static_cast<Vertex>(u)); });
    next.subtract(visited);
    if (next.none()) break;
    visited |= next;
    reached += next.count();
    frontier = std::move(next);
    ++depth;
  }
  if (reached != n) return std::nullopt;
  return depth;
}

} // namespace

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    auto e = eccentricity(g, s, nullptr);
    if (!e) return std::nullopt;
    best = std::max(best, *e);
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return eccentricity(g, 0, nullptr).has_value();
}

bool is_connected_without(const Graph& g, const Bitset& removed) {
  auto first = (~removed).find_first();
  if (first == Bitset::npos) return true;
  return eccentricity(g, static_cast<Vertex>(first), &removed).has_value();
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      bool ok = true;
      g.neighbors(u).for_each([&](std::size_t v) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(static_cast<Vertex>(v));
        } else if (color[v] == color[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_complete_multipartite(const Graph& g) {
  // Complete multipartite iff every vertex's closed non-neighbourhood is the
  // same set for all its members, i.e. non-adjacency is transitive.
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    Bitset part = ~g.neighbors(u); // u together with its non-neighbours
    bool ok = true;
    part.for_each([&](std::size_t v) {
      if (!ok) return;
      if (g.neighbors(static_cast<Vertex>(v)).intersects(part)) ok = false;
      else if ((g.neighbors(static_cast<Vertex>(v)) | part).count() != n) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

Graph blowup(const Graph& g, std::size_t m) {
  if (m == 0) throw std::invalid_argument("blowup factor must be positive");
  Graph h(g.vertex_count() * m);
  for (auto [u, v] : g.edges())
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        h.add_edge(static_cast<Vertex>(u * m + a), static_cast<Vertex>(v * m + b));
  return h;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || !g.adjacent(set[i], set[j])) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const std::vector<Vertex>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
  }
  return true;
}

bool is_dominating(const Graph& g, const std::vector<Vertex>& set) {
  Bitset covered(g.vertex_count());
  for (Vertex v : set) {
    if (v >= g.vertex_count()) return false;
    covered.set(v);
    covered |= g.neighbors(v);
  }
  return covered.count() == g.vertex_count();
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || cycle.size() != n) return false;
  Bitset seen(n);
  for (Vertex v : cycle) {
    if (v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  return true;
}

} // namespace nsg
