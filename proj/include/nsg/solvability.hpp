#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nsg/group.hpp"

namespace nsg {

// Raised when an internal cross-check fails. These indicate a bug in the
// toolkit (or a false theorem), never bad user input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Subgroup generated by all commutators of H. Throws std::invalid_argument
// if H is not a subgroup.
ElementSet derived_subgroup(const GroupTable& table, const ElementSet& subgroup);

// Derived series test. Throws std::invalid_argument if H is not a subgroup.
bool is_solvable(const GroupTable& table, const ElementSet& subgroup);

// Conjugacy classes ordered by smallest member; members ascending.
std::vector<std::vector<ElementId>> conjugacy_classes(const GroupTable& table);

// All normal subgroups, found as joins of normal closures of single elements.
std::vector<ElementSet> normal_subgroups(const GroupTable& table);

// Largest solvable normal subgroup found among normal_subgroups(). This is
// the independent route used to cross-check SolvabilizerTable::radical().
ElementSet solvable_radical_oracle(const GroupTable& table);

struct SolvabilityOptions {
  std::size_t jobs = 1;
  // Run the normal-subgroup cross-check when |G| is at most this.
  std::size_t radical_oracle_limit = 600;
};

// Pairwise solvability of two-generated subgroups, the solvabilizers
// Sol_G(x) = { g : <g, x> solvable } and the solvable radical, which is the
// intersection of all solvabilizers.
//
// The table keeps a reference to the GroupTable; it must outlive this object.
class SolvabilizerTable {
public:
  static SolvabilizerTable build(const GroupTable& table, const SolvabilityOptions& options = {});

  const GroupTable& group() const { return *group_; }
  bool two_gen_solvable(ElementId x, ElementId y) const { return rows_[x].test(y); }
  const ElementSet& solvabilizer(ElementId x) const { return rows_[x]; }
  const ElementSet& radical() const { return radical_; }
  std::size_t radical_size() const { return radical_.count(); }
  bool group_is_solvable() const { return radical_.count() == group_->order(); }
  bool radical_oracle_checked() const { return oracle_checked_; }
  // Number of distinct subgroups whose solvability had to be decided.
  std::size_t distinct_subgroups_tested() const { return distinct_subgroups_; }

private:
  const GroupTable* group_ = nullptr;
  std::vector<ElementSet> rows_;
  ElementSet radical_;
  bool oracle_checked_ = false;
  std::size_t distinct_subgroups_ = 0;
};

// Lowest-id element outside the radical whose order is a prime >= 5.
// Throws InvariantViolation if none exists (impossible for non-solvable G).
ElementId prime_ge5_witness(const SolvabilizerTable& st);

// Lowest-id s outside the radical with <x, s> and <y, s> both non-solvable.
// Throws std::invalid_argument if x or y lies in the radical and
// InvariantViolation if no witness exists.
ElementId thompson_witness(const SolvabilizerTable& st, ElementId x, ElementId y);

// Ids x (ascending) whose solvabilizer is not closed under multiplication.
std::vector<ElementId> non_subgroup_solvabilizers(const SolvabilizerTable& st);

} // namespace nsg
