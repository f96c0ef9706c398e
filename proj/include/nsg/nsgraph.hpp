#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nsg/graph.hpp"
#include "nsg/solvability.hpp"

namespace nsg {

class SolvableGroupError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The non-solvable graph: vertices are the elements outside the solvable
// radical in ascending id order, edges join pairs generating a non-solvable
// subgroup. Blocks are the radical cosets, each an independent set of twins.
struct NSGraph {
  std::string group_name;
  std::size_t group_order = 0;
  std::size_t sol_size = 1;
  // vertex -> element id; empty for graphs not built from a group table
  std::vector<ElementId> elements;
  Graph graph;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::size_t> block_of;

  std::size_t vertex_count() const { return graph.vertex_count(); }
  std::size_t edge_count() const { return graph.edge_count(); }
  // Vertex index of an element, if it is a vertex.
  std::optional<Vertex> vertex_of(ElementId id) const;
};

// Throws SolvableGroupError when G is solvable (the graph would be empty) and
// InvariantViolation if the coset blocks are not independent twin classes.
NSGraph build_ns_graph(const SolvabilizerTable& st);

// One vertex per radical coset, in block order.
NSGraph quotient(const NSGraph& g);

// Every vertex replaced by m independent twins; blocks grow accordingly.
NSGraph blowup(const NSGraph& g, std::size_t m);

// Wraps a plain graph with singleton blocks (control inputs for checkers).
NSGraph from_graph(const Graph& g, std::string name = "graph");

// G/N acting on the right cosets of the normal subgroup N. Throws
// std::invalid_argument if N is not normal.
GroupSpec quotient_spec(const GroupTable& table, const ElementSet& normal_subgroup, std::string name);

// Conjugation by every group element, as vertex maps of the graph.
Symmetry conjugation_symmetry(const NSGraph& g, const GroupTable& table);

// Blocks are independent sets whose members share one neighbourhood.
bool has_twin_blocks(const NSGraph& g);

// "# group=<name> n=<V> m=<E> sol=<size>" followed by one "u v" line per
// edge (u < v, 0-based, lexicographic order).
void write_edge_list(const NSGraph& g, std::ostream& out);
// Reads the format above; blocks are not stored so they come back as singletons.
NSGraph read_edge_list(std::istream& in);

} // namespace nsg
