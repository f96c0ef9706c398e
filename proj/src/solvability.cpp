#include "nsg/solvability.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace nsg {

namespace {

ElementSet close_under(const GroupTable& table, const std::vector<ElementId>& gens) {
  ElementSet set = table.empty_set();
  std::vector<ElementId> queue{0};
  set.set(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (ElementId g : gens) {
      ElementId p = table.multiply(queue[head], g);
      if (!set.test(p)) {
        set.set(p);
        queue.push_back(p);
      }
    }
  }
  return set;
}

// Short generating list of a subgroup given as a set.
std::vector<ElementId> generators_of(const GroupTable& table, const ElementSet& subgroup) {
  std::vector<ElementId> gens;
  ElementSet current = table.empty_set();
  current.set(0);
  subgroup.for_each([&](std::size_t i) {
    if (current.test(i)) return;
    gens.push_back(static_cast<ElementId>(i));
    current = close_under(table, gens);
  });
  return gens;
}

ElementId commutator(const GroupTable& t, ElementId x, ElementId y) {
  return t.multiply(t.multiply(t.inverse(x), t.inverse(y)), t.multiply(x, y));
}

// Derived subgroup of <gens>: normal closure inside <gens> of the pairwise
// commutators of the generators.
ElementSet derived_from_generators(const GroupTable& t, const std::vector<ElementId>& gens) {
  std::vector<ElementId> pending;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) pending.push_back(commutator(t, gens[i], gens[j]));

  std::vector<ElementId> dgens;
  ElementSet current = t.empty_set();
  current.set(0);
  while (!pending.empty()) {
    ElementId x = pending.back();
    pending.pop_back();
    if (current.test(x)) continue;
    dgens.push_back(x);
    current = close_under(t, dgens);
    for (ElementId g : gens)
      for (ElementId h : dgens) {
        ElementId c = t.conjugate(h, g);
        if (!current.test(c)) pending.push_back(c);
      }
  }
  return current;
}

bool solvable_from_generators(const GroupTable& t, std::vector<ElementId> gens, std::size_t size) {
  const std::size_t max_steps = static_cast<std::size_t>(std::bit_width(t.order())) + 1;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    if (size == 1) return true;
    ElementSet d = derived_from_generators(t, gens);
    std::size_t dsize = d.count();
    if (dsize == size) return false; // perfect: series stabilized above 1
    gens = generators_of(t, d);
    size = dsize;
  }
  throw InvariantViolation("derived series did not stabilize within log2|G| + 1 steps");
}

void require_subgroup(const GroupTable& table, const ElementSet& h, const char* who) {
  if (!is_subgroup(table, h)) throw std::invalid_argument(std::string(who) + ": set is not a subgroup");
}

} // namespace

ElementSet derived_subgroup(const GroupTable& table, const ElementSet& subgroup) {
  require_subgroup(table, subgroup, "derived_subgroup");
  return derived_from_generators(table, generators_of(table, subgroup));
}

bool is_solvable(const GroupTable& table, const ElementSet& subgroup) {
  require_subgroup(table, subgroup, "is_solvable");
  return solvable_from_generators(table, generators_of(table, subgroup), subgroup.count());
}

std::vector<std::vector<ElementId>> conjugacy_classes(const GroupTable& table) {
  std::vector<std::vector<ElementId>> classes;
  ElementSet seen = table.empty_set();
  for (ElementId x = 0; x < table.order(); ++x) {
    if (seen.test(x)) continue;
    ElementSet cls = table.empty_set();
    for (ElementId g = 0; g < table.order(); ++g) cls.set(table.conjugate(x, g));
    seen |= cls;
    std::vector<ElementId> members;
    cls.for_each([&](std::size_t i) { members.push_back(static_cast<ElementId>(i)); });
    classes.push_back(std::move(members));
  }
  return classes;
}

std::vector<ElementSet> normal_subgroups(const GroupTable& table) {
  std::unordered_set<ElementSet, BitsetHash> seen;
  std::vector<ElementSet> found;
  auto add = [&](ElementSet n) {
    if (seen.insert(n).second) found.push_back(std::move(n));
  };
  for (const auto& cls : conjugacy_classes(table)) {
    ElementSet seed = table.empty_set();
    seed.set(cls.front());
    add(normal_closure(table, seed));
  }
  // Every normal subgroup is a join of normal closures of its elements.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (found[j].is_subset_of(found[i]) || found[i].is_subset_of(found[j])) continue;
      add(normal_closure(table, found[i] | found[j]));
    }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.to_vector() < b.to_vector();
  });
  return found;
}

ElementSet solvable_radical_oracle(const GroupTable& table) {
  ElementSet best = table.empty_set();
  best.set(0);
  for (const auto& n : normal_subgroups(table)) {
    if (n.count() > best.count() && is_solvable(table, n)) best = n;
  }
  return best;
}

SolvabilizerTable SolvabilizerTable::build(const GroupTable& table, const SolvabilityOptions& options) {
  const std::size_t n = table.order();
  SolvabilizerTable st;
  st.group_ = &table;
  st.rows_.assign(n, table.empty_set());

  // Worker w handles rows x = w, w + jobs, ... and writes only bits y >= x of
  // its own rows; the lower triangle is mirrored afterwards. Each worker keeps
  // its own subgroup cache, so results do not depend on the worker count.
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, n));
  std::vector<std::size_t> tested(jobs, 0);
  auto work = [&](std::size_t w) {
    std::unordered_map<ElementSet, bool, BitsetHash> cache;
    for (std::size_t x = w; x < n; x += jobs) {
      auto& row = st.rows_[x];
      row.set(x);
      for (std::size_t y = x + 1; y < n; ++y) {
        const auto ex = static_cast<ElementId>(x);
        const auto ey = static_cast<ElementId>(y);
        if (table.multiply(ex, ey) == table.multiply(ey, ex)) {
          row.set(y); // abelian
          continue;
        }
        ElementSet h = close_under(table, {ex, ey});
        auto it = cache.find(h);
        bool solvable;
        if (it != cache.end()) {
          solvable = it->second;
        } else {
          solvable = solvable_from_generators(table, {ex, ey}, h.count());
          cache.emplace(std::move(h), solvable);
        }
        if (solvable) row.set(y);
      }
    }
    tested[w] = cache.size();
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  for (std::size_t x = 0; x < n; ++x)
    st.rows_[x].for_each([&](std::size_t y) {
      if (y > x) st.rows_[y].set(x);
    });
  for (auto c : tested) st.distinct_subgroups_ += c;

  st.radical_ = table.full_set();
  for (const auto& row : st.rows_) st.radical_ &= row;

  if (!is_subgroup(table, st.radical_))
    throw InvariantViolation("intersection of solvabilizers is not a subgroup");
  for (ElementId g : table.generator_ids())
    st.radical_.for_each([&](std::size_t r) {
      if (!st.radical_.test(table.conjugate(static_cast<ElementId>(r), g)))
        throw InvariantViolation("intersection of solvabilizers is not normal");
    });
  if (!is_solvable(table, st.radical_))
    throw InvariantViolation("intersection of solvabilizers is not solvable");
  if (n <= options.radical_oracle_limit) {
    if (solvable_radical_oracle(table) != st.radical_)
      throw InvariantViolation("radical by intersection differs from largest solvable normal subgroup");
    st.oracle_checked_ = true;
  }
  return st;
}

namespace {
bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}
} // namespace

ElementId prime_ge5_witness(const SolvabilizerTable& st) {
  const auto& t = st.group();
  for (ElementId x = 0; x < t.order(); ++x) {
    if (st.radical().test(x)) continue;
    auto o = t.element_order(x);
    if (o >= 5 && is_prime(o)) return x;
  }
  throw InvariantViolation("no element of prime order >= 5 outside the radical");
}

ElementId thompson_witness(const SolvabilizerTable& st, ElementId x, ElementId y) {
  const auto& t = st.group();
  if (x >= t.order() || y >= t.order()) throw std::out_of_range("thompson_witness: invalid id");
  if (st.radical().test(x) || st.radical().test(y))
    throw std::invalid_argument("thompson_witness: x and y must lie outside the radical");
  for (ElementId s = 0; s < t.order(); ++s) {
    if (st.radical().test(s)) continue;
    if (!st.two_gen_solvable(x, s) && !st.two_gen_solvable(y, s)) return s;
  }
  throw InvariantViolation("no common non-solvable partner for the given pair");
}

std::vector<ElementId> non_subgroup_solvabilizers(const SolvabilizerTable& st) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < st.group().order(); ++x)
    if (!is_subgroup(st.group(), st.solvabilizer(x))) out.push_back(x);
  return out;
}

} // namespace nsg
