#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nsg/bitset.hpp"

namespace nsg {

using Vertex = std::uint32_t;

// Simple undirected graph with bitset adjacency rows.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, Bitset(n)) {}

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const;

  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::vector<std::size_t> degrees() const;

  Graph complement() const;
  Graph induced(const std::vector<Vertex>& vertices) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);

private:
  std::vector<Bitset> rows_;
};

// A group of graph automorphisms given by the full list of its elements
// (vertex maps). Solvers use it to skip symmetric branches; the trivial
// group (identity only) disables that.
class Symmetry {
public:
  static Symmetry trivial(std::size_t n);
  // Throws std::invalid_argument if some map is not an automorphism of g.
  static Symmetry from_maps(const Graph& g, std::vector<std::vector<Vertex>> maps);

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::vector<Vertex>>& maps() const { return maps_; }
  // orbit id per vertex; orbits numbered by smallest member
  const std::vector<std::size_t>& orbit_of() const { return orbit_of_; }
  const std::vector<std::vector<Vertex>>& orbits() const { return orbits_; }
  // Orbits of the stabilizer of v, restricted to the candidate set.
  std::vector<std::vector<Vertex>> stabilizer_orbits(Vertex v, const Bitset& candidates) const;

private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> maps_;
  std::vector<std::size_t> orbit_of_;
  std::vector<std::vector<Vertex>> orbits_;
};

// BFS eccentricity maximum; nullopt if disconnected. Graphs with fewer than
// two vertices have diameter 0.
std::optional<std::size_t> diameter(const Graph& g);
bool is_connected(const Graph& g);
bool is_connected_without(const Graph& g, const Bitset& removed);
bool is_bipartite(const Graph& g);
// Non-adjacency (plus equality) is an equivalence relation whose classes are
// independent and pairwise completely joined.
bool is_complete_multipartite(const Graph& g);

// Each vertex v becomes m copies v*m + c, c in [0, m).
Graph blowup(const Graph& g, std::size_t m);

bool is_clique(const Graph& g, const std::vector<Vertex>& set);
bool is_independent(const Graph& g, const std::vector<Vertex>& set);
bool is_dominating(const Graph& g, const std::vector<Vertex>& set);
bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle);

} // namespace nsg
