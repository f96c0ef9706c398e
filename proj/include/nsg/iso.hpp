#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsg/graph.hpp"
#include "nsg/nsgraph.hpp"

namespace nsg {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

enum class IsoOutcome { isomorphic, not_isomorphic, budget_exceeded };

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::not_isomorphic;
  // mapping[v] is the image in b of vertex v of a; verified edge by edge
  std::optional<std::vector<Vertex>> mapping;
  std::uint64_t nodes = 0;

  bool isomorphic() const { return outcome == IsoOutcome::isomorphic; }
};

// Exact test: joint colour refinement of both graphs, then individualization
// of the lowest-index vertex of the smallest non-singleton class of a against
// each candidate of the same colour in b. One search node per individualization.
IsoResult is_isomorphic(const Graph& a, const Graph& b, std::uint64_t node_budget = kDefaultNodeBudget);

// True iff mapping is a bijection preserving adjacency and non-adjacency.
bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& mapping);

struct NSIsoOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Also run the general checker on the full graphs when the blow-up fast
  // path succeeded, and require it to agree.
  bool confirm = false;
};

// NS-graphs with equal radical size are isomorphic when their quotients are;
// the quotient mapping is lifted block by block. Otherwise falls back to the
// general checker on the full graphs.
IsoResult ns_isomorphic(const NSGraph& a, const NSGraph& b, const NSIsoOptions& options = {});

} // namespace nsg
