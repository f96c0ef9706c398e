#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "nsg/nsgraph.hpp"
#include "nsg/solvability.hpp"
#include "nsg/solvers.hpp"

namespace nsg {

using Rational = boost::rational<std::int64_t>;

// A named pass/fail verdict produced while computing invariants.
struct BoundCheck {
  std::string name;
  bool passed = false;
  std::string detail;

  bool operator==(const BoundCheck&) const = default;
};

// ------------------------------------------------------------------ degrees

// Distinct vertex degrees, ascending. Throws InvariantViolation if there are
// exactly two (no non-solvable graph has that).
std::vector<std::size_t> degree_set(const NSGraph& g);

// P_s(G) = 1 - 2|E| / |G|^2, the fraction of ordered pairs generating a
// solvable subgroup.
Rational solvability_degree(const NSGraph& g);

struct SolvabilityDegreeBounds {
  Rational lower;       // 2(|G|-s)/|G|^2 + 2s/|G| - s^2/|G|^2
  Rational upper;       // 1 - 6(|G|-s)/|G|^2
  Rational prior_lower; // 2(|G|-s)/|G|^2 + s/|G|
};
SolvabilityDegreeBounds solvability_degree_bounds(std::size_t group_order, std::size_t sol_size);

// Number of distinct sets among { Sol_G(x) : x in G }; G itself is the
// solvabilizer of every radical element.
std::size_t distinct_solvabilizer_count(const SolvabilizerTable& st);

// Degree identity, the bounds 6 <= deg <= |G| - s - 2, block regularity,
// handshake, |deg| != 2, quotient invariance of |deg|, |deg| = 3 for
// quotients of order 60, and |deg| <= n - 1 for n distinct solvabilizers.
std::vector<BoundCheck> degree_checks(const SolvabilizerTable& st, const NSGraph& g);

// ------------------------------------------------------ group-side criteria

// Sol_G(S) = intersection of Sol_G(x) over x in S, as element ids.
ElementSet joint_solvabilizer(const SolvabilizerTable& st, const std::vector<ElementId>& set);

// S dominates NS_G iff Sol_G(S) is contained in Sol(G) u S.
bool dominating_by_criterion(const SolvabilizerTable& st, const std::vector<ElementId>& set);

// For a maximal independent S: Sol_G(S) = S u Sol(G).
bool independence_criterion(const SolvabilizerTable& st, const std::vector<ElementId>& set);

// |G| <= (3a/2)^(3a/4), checked as |G|^4 * 2^(3a) <= (3a)^(3a) in integers.
bool independence_order_bound(std::size_t group_order, std::size_t alpha);

// Every pair of distinct solvabilizers of non-radical elements is
// incomparable under inclusion.
bool is_fs_group(const SolvabilizerTable& st);

// max |Sol_G(x)| over non-radical x is at most |G|/2.
bool dirac_condition(const SolvabilizerTable& st);

// {x, y, xy, x^2y, x^3y, x^4y} for x of prime order >= 5 and a neighbour y,
// trying neighbours in id order until the set is a clique of 6 vertices.
// Throws InvariantViolation if none works.
std::vector<ElementId> six_clique_witness(const SolvabilizerTable& st);

// ------------------------------------------------------------------ cycles

// Runs the quotient cycle m times, taking the r-th member of each block on
// pass r. Consecutive blocks are completely joined, so the result is a
// hamiltonian cycle of g whenever quotient_cycle is one of quotient(g).
std::vector<Vertex> lift_hamiltonian_cycle(const NSGraph& g, const std::vector<Vertex>& quotient_cycle);

struct CycleCheck {
  bool valid = false;
  std::string reason; // empty when valid
};

// Checks that the listed elements (cycle notation) are exactly the vertices
// of g, each once, and that cyclically consecutive entries are adjacent.
CycleCheck verify_element_cycle(const NSGraph& g, const GroupTable& table, const std::vector<std::string>& entries);

// One permutation per line; blank lines and lines starting with '#' are skipped.
std::vector<std::string> read_cycle_file(const std::filesystem::path& path);

// ------------------------------------------------------------------- genus

std::size_t genus_complete(std::size_t n);
std::size_t genus_complete_bipartite(std::size_t m, std::size_t n);
std::size_t genus_complete_tripartite(std::size_t m);
// ceil(E/6 - V/2 + 1), clamped at 0; valid for simple connected graphs with V >= 3.
std::size_t euler_genus_bound(std::size_t vertices, std::size_t edges);

struct K410Witness {
  ElementId x = 0, y = 0;
  std::vector<ElementId> h; // x, x^2, x^3, x^4
  std::vector<ElementId> k; // y^i x^j, i = 1, 2, j = 0..4
};

// Instantiates the construction with x of prime order >= 5 and the
// lowest-id neighbour y of order >= 3 that yields ten distinct non-radical
// K-elements all adjacent to every element of H. Throws InvariantViolation
// if no neighbour works.
K410Witness k4_10_witness(const SolvabilizerTable& st);
bool is_k4_10(const SolvabilizerTable& st, const K410Witness& w);

struct TwoK5Witness {
  ElementId x = 0, y = 0;
  std::uint64_t j = 0;
  std::vector<ElementId> h; // x^a y
  std::vector<ElementId> k; // x^a y^j
};

// x, y as in k4_10_witness, then the smallest j > 1 coprime to o(y) for
// which the two 5-sets are disjoint. Throws InvariantViolation on failure.
TwoK5Witness two_k5_witness(const SolvabilizerTable& st);
// Two disjoint 5-cliques in g.
bool is_two_k5(const Graph& g, const std::vector<Vertex>& h, const std::vector<Vertex>& k);

// ---------------------------------------------------------------- reports

struct InvariantSelection {
  bool structure = true;    // diameter, bipartite, multipartite, Fs-group
  bool clique = true;
  bool independence = true;
  bool domination = true;
  bool connectivity = true;
  bool hamiltonian = true;
  bool genus = true;

  static InvariantSelection none();
};

struct InvariantOptions {
  InvariantSelection select;
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Use the conjugation action to cut symmetric branches in the solvers.
  bool use_symmetry = true;
};

struct SetInvariant {
  std::size_t value = 0;
  std::vector<std::string> witness;
  bool exact = true;
  std::size_t bound = 0; // other side of the gap when !exact

  bool operator==(const SetInvariant&) const = default;
};

struct ConnectivityInvariant {
  std::size_t value = 0;
  std::vector<std::string> cut;
  bool exact = true;

  bool operator==(const ConnectivityInvariant&) const = default;
};

struct HamiltonInvariant {
  std::string status; // "hamiltonian", "not hamiltonian", "unknown"
  std::string method;
  bool dirac_condition = false;
  std::vector<std::string> cycle;

  bool operator==(const HamiltonInvariant&) const = default;
};

struct GenusInvariant {
  std::size_t lower_bound = 0;
  std::string source; // "euler", "tripartite" or "k4_10"
  std::size_t euler = 0;
  std::size_t tripartite = 0;
  std::size_t k4_10 = 0;
  std::vector<std::string> k4_10_h, k4_10_k;
  bool projective = false;
  std::vector<std::string> two_k5_h, two_k5_k;

  bool operator==(const GenusInvariant&) const = default;
};

struct InvariantReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<std::size_t> degree_set;
  Rational solvability_degree;
  std::optional<std::size_t> diameter;
  std::optional<bool> bipartite;
  std::optional<bool> complete_multipartite;
  std::optional<bool> fs_group;
  std::optional<SetInvariant> clique;
  std::optional<SetInvariant> independence;
  std::optional<SetInvariant> domination;
  std::optional<ConnectivityInvariant> connectivity;
  std::optional<HamiltonInvariant> hamiltonian;
  std::optional<GenusInvariant> genus;
  std::vector<BoundCheck> bound_checks;

  bool budget_exceeded() const;
  bool all_checks_pass() const;
  bool operator==(const InvariantReport&) const = default;
};

// Computes the selected invariants. Every witness is validated against the
// graph before it is stored; a failed validation throws InvariantViolation.
InvariantReport compute_invariants(const SolvabilizerTable& st, const NSGraph& g, const InvariantOptions& options = {});

} // namespace nsg
