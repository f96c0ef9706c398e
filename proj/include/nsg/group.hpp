#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nsg/bitset.hpp"
#include "nsg/perm.hpp"

namespace nsg {

using ElementId = std::uint32_t;

// Subset of a group table, one bit per element id.
using ElementSet = Bitset;

inline constexpr std::size_t kDefaultOrderCap = 20000;

struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  // Throws std::invalid_argument if degree is zero, there are no generators,
  // or some generator has the wrong degree.
  void validate() const;
};

class GroupTooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Every element of a finite permutation group, enumerated by breadth-first
// closure of the generators. Element 0 is the identity; ids are stable for
// the lifetime of the table and identical for identical specs.
class GroupTable {
public:
  static GroupTable enumerate(const GroupSpec& spec, std::size_t cap = kDefaultOrderCap);

  const GroupSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(ElementId id) const { return elements_[id]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::optional<ElementId> find(const Permutation& p) const;
  // Throws std::out_of_range if p is not in the group.
  ElementId id_of(const Permutation& p) const;
  // Parses cycle notation at the group's degree and looks the result up.
  ElementId id_of(std::string_view cycles) const;

  // a then b (see compose()).
  ElementId multiply(ElementId a, ElementId b) const {
    if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * order() + b];
    return multiply_slow(a, b);
  }
  ElementId inverse(ElementId a) const { return inverses_[a]; }
  std::uint64_t element_order(ElementId a) const { return orders_[a]; }
  ElementId power(ElementId a, std::uint64_t k) const;
  // g^-1 x g
  ElementId conjugate(ElementId x, ElementId g) const {
    return multiply(multiply(inverse(g), x), g);
  }
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet full_set() const {
    ElementSet s(order());
    s.set_all();
    return s;
  }

private:
  ElementId multiply_slow(ElementId a, ElementId b) const;

  GroupSpec spec_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> cayley_; // order x order, only for small groups
  std::vector<ElementId> inverses_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElementId> generator_ids_;
};

// Smallest subgroup containing the seeds. Throws std::invalid_argument on an
// empty seed set.
ElementSet generated_subgroup(const GroupTable& table, const std::vector<ElementId>& seeds);
ElementSet generated_subgroup(const GroupTable& table, const ElementSet& seeds);

// True if the set contains the identity and is closed under multiplication.
bool is_subgroup(const GroupTable& table, const ElementSet& set);

// Smallest normal subgroup of the whole group containing the seeds.
ElementSet normal_closure(const GroupTable& table, const ElementSet& seeds);

// Acts on disjoint point sets: a on points [0, deg a), b on the rest.
GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);

} // namespace nsg
