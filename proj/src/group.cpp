#include "nsg/group.hpp"

#include <deque>

namespace nsg {

namespace {

// Cayley tables above this order would cost more memory than they save.
constexpr std::size_t kCayleyLimit = 4096;

// Closure of the identity under right multiplication by gens.
ElementSet close_under(const GroupTable& table, const std::vector<ElementId>& gens) {
  ElementSet set = table.empty_set();
  std::vector<ElementId> queue{0};
  set.set(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementId e = queue[head];
    for (ElementId g : gens) {
      ElementId p = table.multiply(e, g);
      if (!set.test(p)) {
        set.set(p);
        queue.push_back(p);
      }
    }
  }
  return set;
}

} // namespace

void GroupSpec::validate() const {
  if (degree == 0) throw std::invalid_argument("group '" + name + "': degree must be positive");
  if (generators.empty()) throw std::invalid_argument("group '" + name + "': no generators");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("group '" + name + "': generator " + g.to_cycles() +
                                  " has degree " + std::to_string(g.degree()) + ", expected " +
                                  std::to_string(degree));
}

GroupTable GroupTable::enumerate(const GroupSpec& spec, std::size_t cap) {
  spec.validate();
  if (cap == 0) throw std::invalid_argument("enumerate: cap must be at least 1");

  GroupTable t;
  t.spec_ = spec;
  auto add = [&](Permutation p) -> ElementId {
    auto [it, inserted] = t.index_.emplace(p, static_cast<ElementId>(t.elements_.size()));
    if (inserted) {
      if (t.elements_.size() >= cap)
        throw GroupTooLarge("group '" + spec.name + "' has order greater than cap " +
                            std::to_string(cap));
      t.elements_.push_back(std::move(p));
    }
    return it->second;
  };

  add(Permutation::identity(spec.degree));
  for (const auto& g : spec.generators) t.generator_ids_.push_back(add(g));
  // BFS: right-multiply every discovered element by each generator.
  for (std::size_t head = 0; head < t.elements_.size(); ++head) {
    for (const auto& g : spec.generators) {
      Permutation p = compose(t.elements_[head], g);
      add(std::move(p));
    }
  }

  const std::size_t n = t.elements_.size();
  if (n <= kCayleyLimit) {
    t.cayley_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        t.cayley_[a * n + b] = t.index_.at(compose(t.elements_[a], t.elements_[b]));
  }
  t.inverses_.resize(n);
  t.orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.inverses_[a] = t.index_.at(nsg::inverse(t.elements_[a]));
    t.orders_[a] = order_of(t.elements_[a]);
  }
  return t;
}

std::optional<ElementId> GroupTable::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId GroupTable::id_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw std::out_of_range(p.to_cycles() + " is not an element of " + spec_.name);
  return *id;
}

ElementId GroupTable::id_of(std::string_view cycles) const {
  return id_of(parse_cycles(cycles, spec_.degree));
}

ElementId GroupTable::multiply_slow(ElementId a, ElementId b) const {
  return index_.at(compose(elements_[a], elements_[b]));
}

ElementId GroupTable::power(ElementId a, std::uint64_t k) const {
  ElementId result = 0;
  ElementId base = a;
  while (k) {
    if (k & 1U) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1U;
  }
  return result;
}

ElementSet generated_subgroup(const GroupTable& table, const std::vector<ElementId>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("generated_subgroup: empty seed set");
  // Grow a short generating list: only seeds outside the current closure are kept.
  std::vector<ElementId> gens;
  ElementSet current = table.empty_set();
  current.set(0);
  for (ElementId s : seeds) {
    if (s >= table.order()) throw std::out_of_range("generated_subgroup: invalid element id");
    if (current.test(s)) continue;
    gens.push_back(s);
    current = close_under(table, gens);
  }
  return current;
}

ElementSet generated_subgroup(const GroupTable& table, const ElementSet& seeds) {
  std::vector<ElementId> ids;
  seeds.for_each([&](std::size_t i) { ids.push_back(static_cast<ElementId>(i)); });
  return generated_subgroup(table, ids);
}

bool is_subgroup(const GroupTable& table, const ElementSet& set) {
  if (set.size() != table.order() || !set.test(0)) return false;
  const auto members = set.to_vector();
  for (auto a : members)
    for (auto b : members)
      if (!set.test(table.multiply(static_cast<ElementId>(a), static_cast<ElementId>(b))))
        return false;
  return true;
}

ElementSet normal_closure(const GroupTable& table, const ElementSet& seeds) {
  std::vector<ElementId> gens;
  ElementSet current = table.empty_set();
  current.set(0);
  std::deque<ElementId> pending;
  seeds.for_each([&](std::size_t i) { pending.push_back(static_cast<ElementId>(i)); });
  // A subgroup is normal iff it contains the conjugates of its generators by
  // the generators of the whole group.
  while (!pending.empty()) {
    ElementId x = pending.front();
    pending.pop_front();
    if (current.test(x)) continue;
    gens.push_back(x);
    current = close_under(table, gens);
    for (ElementId g : table.generator_ids()) {
      for (ElementId h : gens) {
        ElementId c = table.conjugate(h, g);
        if (!current.test(c)) pending.push_back(c);
      }
    }
  }
  return current;
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
  a.validate();
  b.validate();
  GroupSpec out;
  out.name = a.name + "x" + b.name;
  out.degree = a.degree + b.degree;
  for (const auto& g : a.generators) {
    std::vector<Point> im(out.degree);
    for (std::size_t i = 0; i < a.degree; ++i) im[i] = g(static_cast<Point>(i));
    for (std::size_t i = a.degree; i < out.degree; ++i) im[i] = static_cast<Point>(i);
    out.generators.emplace_back(std::move(im));
  }
  for (const auto& g : b.generators) {
    std::vector<Point> im(out.degree);
    for (std::size_t i = 0; i < a.degree; ++i) im[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < b.degree; ++i)
      im[a.degree + i] = static_cast<Point>(a.degree + g(static_cast<Point>(i)));
    out.generators.emplace_back(std::move(im));
  }
  return out;
}

} // namespace nsg
