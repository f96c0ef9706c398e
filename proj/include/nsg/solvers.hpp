#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nsg/graph.hpp"
#include "nsg/iso.hpp"

namespace nsg {

// Options shared by the exact solvers. When symmetry is set, the solvers
// search one representative per automorphism orbit; answers are unchanged,
// witnesses are still the lowest-index ones found in that order.
struct SolverOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  const Symmetry* symmetry = nullptr;
};

struct SetResult {
  std::size_t value = 0;
  std::vector<Vertex> witness; // sorted
  bool exact = true;
  // Proven bound on the other side when !exact: an upper bound for maximum
  // problems, a lower bound for minimum problems.
  std::size_t bound = 0;
  std::uint64_t nodes = 0;
};

// Branch and bound with greedy colouring bounds over bitsets.
SetResult max_clique(const Graph& g, const SolverOptions& options = {});
SetResult max_independent_set(const Graph& g, const SolverOptions& options = {});

enum class Decision { yes, no, unknown };

struct DominationProbe {
  Decision answer = Decision::unknown;
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
};

// Is there a dominating set with at most k vertices? Branches on the
// undominated vertex with the fewest possible dominators; prunes when the k
// best marginal coverages cannot cover what is left.
DominationProbe dominating_set_within(const Graph& g, std::size_t k, const SolverOptions& options = {});

// Minimum dominating set by increasing k.
SetResult min_dominating_set(const Graph& g, const SolverOptions& options = {});

struct ConnectivityResult {
  std::size_t value = 0;
  std::vector<Vertex> cut; // empty for complete graphs
  bool exact = true;
  std::uint64_t flows = 0;
};

// Minimum over non-adjacent pairs of the number of internally vertex-disjoint
// paths (unit vertex capacities). Complete graphs report n - 1.
ConnectivityResult vertex_connectivity(const Graph& g, const SolverOptions& options = {});

// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t.
std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t);

enum class HamiltonStatus { found, none, unknown };

struct HamiltonResult {
  HamiltonStatus status = HamiltonStatus::unknown;
  std::vector<Vertex> cycle;
  std::uint64_t nodes = 0;
  // "rotation" when the rotation-extension pass found the cycle, "search"
  // for the exhaustive backtracking, "lift" for cycles lifted from a quotient
  std::string method;
};

// Rotation-extension first, then exhaustive backtracking with degree-ordered
// branching and connectivity pruning. Never reports none without finishing
// the exhaustive search.
HamiltonResult hamiltonian_cycle(const Graph& g, const SolverOptions& options = {});

} // namespace nsg
