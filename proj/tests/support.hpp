#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "nsg/catalog.hpp"
#include "nsg/nsgraph.hpp"
#include "nsg/solvability.hpp"

namespace nsg::test {

struct Built {
  std::unique_ptr<GroupTable> table;
  std::unique_ptr<SolvabilizerTable> st;
  NSGraph ns; // empty for solvable groups
};

// Groups are built once per test binary.
inline const Built& group(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Built>> cache;
  auto& slot = cache[name];
  if (!slot) {
    slot = std::make_unique<Built>();
    slot->table = std::make_unique<GroupTable>(GroupTable::enumerate(builtin(name)));
    slot->st = std::make_unique<SolvabilizerTable>(SolvabilizerTable::build(*slot->table));
    if (!slot->st->group_is_solvable()) slot->ns = build_ns_graph(*slot->st);
  }
  return *slot;
}

inline ElementId id(const Built& b, const std::string& cycles) { return b.table->id_of(cycles); }

inline Vertex vertex(const Built& b, const std::string& cycles) { return *b.ns.vertex_of(id(b, cycles)); }

// Subgroup closure by repeated multiplication of all pairs, independent of
// the library's generated_subgroup.
inline ElementSet closure_oracle(const GroupTable& t, std::vector<ElementId> seeds) {
  ElementSet in(t.order());
  in.set(0);
  for (auto s : seeds) in.set(s);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto members = in.to_vector();
    for (auto a : members)
      for (auto b : members) {
        const auto c = t.multiply(static_cast<ElementId>(a), static_cast<ElementId>(b));
        if (!in.test(c)) {
          in.set(c);
          grew = true;
        }
      }
  }
  return in;
}

// Derived subgroup from all commutators of all pairs.
inline ElementSet commutator_oracle(const GroupTable& t, const ElementSet& h) {
  std::vector<ElementId> comms;
  const auto members = h.to_vector();
  for (auto x : members)
    for (auto y : members) {
      const auto xi = t.inverse(static_cast<ElementId>(x)), yi = t.inverse(static_cast<ElementId>(y));
      comms.push_back(t.multiply(t.multiply(xi, yi), t.multiply(static_cast<ElementId>(x), static_cast<ElementId>(y))));
    }
  return closure_oracle(t, comms);
}

inline bool solvable_oracle(const GroupTable& t, ElementSet h) {
  while (h.count() > 1) {
    ElementSet d = commutator_oracle(t, h);
    if (d == h) return false;
    h = d;
  }
  return true;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

} // namespace nsg::test
