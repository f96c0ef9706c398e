#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <numeric>

#include "nsg/invariants.hpp"
#include "support.hpp"

using namespace nsg;
using test::group;
using test::id;

namespace {

std::vector<Vertex> vertices(const test::Built& b, const std::vector<ElementId>& ids) {
  std::vector<Vertex> out;
  for (auto e : ids) out.push_back(*b.ns.vertex_of(e));
  return out;
}

std::vector<ElementId> ids(const test::Built& b, const std::vector<std::string>& cycles) {
  std::vector<ElementId> out;
  for (const auto& c : cycles) out.push_back(id(b, c));
  return out;
}

std::vector<std::string> a5_cycle() { return read_cycle_file(std::filesystem::path(NSG_DATA_DIR) / "a5_cycle.txt"); }

const InvariantReport& report(const std::string& name) {
  static std::map<std::string, InvariantReport> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, compute_invariants(*group(name).st, group(name).ns)).first;
  return it->second;
}

} // namespace

TEST_CASE("degree sets") {
  CHECK(degree_set(group("A5").ns) == std::vector<std::size_t>{24, 36, 50});
  CHECK(degree_set(group("SL25").ns) == std::vector<std::size_t>{48, 72, 100});
  CHECK(degree_set(group("Z2xA5").ns).size() == 3);
  // every vertex degree equals |G| - |Sol_G(x)|
  for (const char* name : {"A5", "S5", "PSL27"}) {
    const auto& b = group(name);
    for (Vertex v = 0; v < b.ns.vertex_count(); ++v)
      CHECK(b.ns.graph.degree(v) == b.table->order() - b.st->solvabilizer(b.ns.elements[v]).count());
  }
}

TEST_CASE("solvability degree of A5 and its bounds") {
  const auto p = solvability_degree(group("A5").ns);
  CHECK(p == Rational(11, 30));
  // oracle: count solvable ordered pairs directly
  const auto& a5 = group("A5");
  std::size_t solvable = 0;
  for (ElementId x = 0; x < 60; ++x)
    for (ElementId y = 0; y < 60; ++y) solvable += a5.st->two_gen_solvable(x, y);
  CHECK(p == Rational(static_cast<std::int64_t>(solvable), 3600));
  const auto b = solvability_degree_bounds(60, 1);
  CHECK(b.lower == Rational(237, 3600));
  CHECK(b.upper == Rational(3246, 3600));
  CHECK(b.lower <= p);
  CHECK(p <= b.upper);
  CHECK(b.lower >= b.prior_lower);
}

TEST_CASE("degree checks pass on every catalog group") {
  for (const auto& name : builtin_catalog()) {
    CAPTURE(name);
    for (const auto& c : degree_checks(*group(name).st, group(name).ns)) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("genus formulas") {
  CHECK(genus_complete(5) == 1);
  CHECK(genus_complete(7) == 1);
  CHECK(genus_complete(8) == 2);
  CHECK(genus_complete(4) == 0);
  CHECK(genus_complete_bipartite(4, 10) == 4);
  CHECK(genus_complete_bipartite(3, 3) == 1);
  CHECK(genus_complete_tripartite(2) == 0);
  CHECK(genus_complete_tripartite(4) == 3);
  CHECK(euler_genus_bound(59, 1140) == 162);
  CHECK(euler_genus_bound(119, 4560) == 702);
  CHECK(euler_genus_bound(59 * 2, 4560) == 702);
  CHECK(euler_genus_bound(4, 3) == 0);
}

TEST_CASE("K4,10 witness") {
  for (const char* name : {"A5", "S5", "PSL27"}) {
    CAPTURE(name);
    const auto& b = group(name);
    const auto w = k4_10_witness(*b.st);
    CHECK(w.h.size() == 4);
    CHECK(w.k.size() == 10);
    CHECK(is_k4_10(*b.st, w));
    // independent oracle: complete bipartite in the graph, parts disjoint
    for (auto h : w.h)
      for (auto k : w.k) CHECK(b.ns.graph.adjacent(*b.ns.vertex_of(h), *b.ns.vertex_of(k)));
    std::vector<ElementId> all = w.h;
    all.insert(all.end(), w.k.begin(), w.k.end());
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
  // tampering breaks it
  auto w = k4_10_witness(*group("A5").st);
  w.k[0] = w.h[0];
  CHECK_FALSE(is_k4_10(*group("A5").st, w));
}

TEST_CASE("2K5 witness and control") {
  const auto& a5 = group("A5");
  const auto w = two_k5_witness(*a5.st);
  CHECK(w.j > 1);
  CHECK(std::gcd(w.j, a5.table->element_order(w.y)) == 1);
  CHECK(is_two_k5(a5.ns.graph, vertices(a5, w.h), vertices(a5, w.k)));
  // two disjoint K5 in the graph
  CHECK(is_clique(a5.ns.graph, vertices(a5, w.h)));
  CHECK(is_clique(a5.ns.graph, vertices(a5, w.k)));
  // control: a single edge blown up to K_{2,2} has no K5
  const auto control = blowup(Graph::complete(2), 2);
  CHECK_FALSE(is_two_k5(control, {0, 1, 2, 3}, {0, 1, 2, 3}));
  CHECK_FALSE(is_two_k5(Graph::complete(10), {0, 1, 2, 3, 4}, {4, 5, 6, 7, 8}));
  CHECK(is_two_k5(Graph::complete(10), {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}));
}

TEST_CASE("six clique construction") {
  for (const auto& name : builtin_catalog()) {
    CAPTURE(name);
    const auto& b = group(name);
    const auto w = six_clique_witness(*b.st);
    CHECK(w.size() == 6);
    auto vs = vertices(b, w);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    CHECK(vs.size() == 6);
    CHECK(is_clique(b.ns.graph, vs));
  }
}

TEST_CASE("A5 hamiltonian cycle file") {
  const auto& a5 = group("A5");
  auto entries = a5_cycle();
  REQUIRE(entries.size() == 59);
  CHECK(entries.front() == "(1,5,4,3,2)");
  CHECK(verify_element_cycle(a5.ns, *a5.table, entries).valid);
  auto rotated = entries;
  std::rotate(rotated.begin(), rotated.begin() + 17, rotated.end());
  CHECK(verify_element_cycle(a5.ns, *a5.table, rotated).valid);
  std::reverse(rotated.begin(), rotated.end());
  CHECK(verify_element_cycle(a5.ns, *a5.table, rotated).valid);
  // swapping two entries breaks some adjacency
  bool some_swap_fails = false;
  for (std::size_t i = 1; i + 1 < entries.size() && !some_swap_fails; ++i) {
    auto swapped = entries;
    std::swap(swapped[0], swapped[i]);
    const auto check = verify_element_cycle(a5.ns, *a5.table, swapped);
    if (!check.valid) {
      some_swap_fails = true;
      CHECK_FALSE(check.reason.empty());
    }
  }
  CHECK(some_swap_fails);
  auto shorter = entries;
  shorter.pop_back();
  CHECK_FALSE(verify_element_cycle(a5.ns, *a5.table, shorter).valid);
  auto repeated = entries;
  repeated[5] = repeated[6];
  CHECK_FALSE(verify_element_cycle(a5.ns, *a5.table, repeated).valid);
  auto identity = entries;
  identity[3] = "()";
  CHECK_FALSE(verify_element_cycle(a5.ns, *a5.table, identity).valid);
}

TEST_CASE("read_cycle_file skips comments and blank lines") {
  const auto path = std::filesystem::temp_directory_path() / "nsg_cycle_test.txt";
  {
    std::ofstream out(path);
    out << "# header\n\n  (1,2,3)  \n# more\n(1,2)(3,4)\n";
  }
  CHECK(read_cycle_file(path) == std::vector<std::string>{"(1,2,3)", "(1,2)(3,4)"});
  std::filesystem::remove(path);
  CHECK_THROWS(read_cycle_file(path));
}

TEST_CASE("lifted hamiltonian cycles") {
  const auto& sl = group("SL25");
  const auto q = quotient(sl.ns);
  const auto hc = hamiltonian_cycle(q.graph);
  REQUIRE(hc.status == HamiltonStatus::found);
  const auto lifted = lift_hamiltonian_cycle(sl.ns, hc.cycle);
  CHECK(lifted.size() == 118);
  CHECK(is_hamiltonian_cycle(sl.ns.graph, lifted));
  // a triangle is hamiltonian
  CHECK(hamiltonian_cycle(Graph::complete(3)).status == HamiltonStatus::found);
}

TEST_CASE("independence: R set and the A4 bound") {
  const auto& a5 = group("A5");
  const auto r = ids(a5, {"(3,4,5)", "(1,4)(3,5)", "(2,5,3)"});
  CHECK(is_independent(a5.ns.graph, vertices(a5, r)));
  // R is independent but not maximal, so Sol_G(R) is strictly larger than R
  const auto joint = joint_solvabilizer(*a5.st, r);
  for (auto e : r) CHECK(joint.test(e));
  CHECK(joint.count() > r.size() + 1);
  CHECK(generated_subgroup(*a5.table, r).count() == 60);
  // A4 minus the identity is independent with 11 vertices
  const auto a4 = generated_subgroup(*a5.table, ids(a5, {"(1,2,3)", "(1,2)(3,4)"}));
  REQUIRE(a4.count() == 12);
  std::vector<ElementId> a4_nontrivial;
  for (auto e : a4.to_vector())
    if (e != 0) a4_nontrivial.push_back(static_cast<ElementId>(e));
  CHECK(is_independent(a5.ns.graph, vertices(a5, a4_nontrivial)));
  CHECK(independence_criterion(*a5.st, a4_nontrivial));
  CHECK(report("A5").independence->value >= 11);
  CHECK(independence_order_bound(60, report("A5").independence->value));
  CHECK_FALSE(independence_criterion(*a5.st, ids(a5, {"(1,2,3,4,5)", "(3,4,5)"})));
  CHECK_FALSE(independence_order_bound(60, 1));
}

TEST_CASE("dominating sets") {
  const auto& a5 = group("A5");
  const auto stated_a5 = ids(a5, {"(3,4,5)", "(1,2,3,4,5)", "(1,2,4,5,3)", "(1,5)(2,4)"});
  CHECK(is_dominating(a5.ns.graph, vertices(a5, stated_a5)));
  CHECK(dominating_by_criterion(*a5.st, stated_a5));
  const auto& s5 = group("S5");
  const auto stated_s5 = ids(s5, {"(4,5)", "(1,2)(3,4,5)", "(1,3)(2,4,5)", "(1,5)(2,4)"});
  CHECK(is_dominating(s5.ns.graph, vertices(s5, stated_s5)));
  CHECK(dominating_by_criterion(*s5.st, stated_s5));
  // no single vertex dominates
  for (const auto& name : builtin_catalog()) {
    const auto& b = group(name);
    for (Vertex v = 0; v < b.ns.vertex_count(); ++v) {
      CHECK_FALSE(is_dominating(b.ns.graph, {v}));
      CHECK_FALSE(dominating_by_criterion(*b.st, {b.ns.elements[v]}));
    }
  }
  // the criterion agrees with the graph on minimum sets found by the solver
  for (const char* name : {"A5", "S5"}) {
    const auto& d = *report(name).domination;
    CHECK(d.exact);
    CHECK(d.value == 3);
    CHECK(dominating_by_criterion(*group(name).st, ids(group(name), d.witness)));
  }
}

TEST_CASE("clique numbers and the quotient") {
  CHECK(report("A5").clique->value == 8);
  CHECK(report("A5xZ2").clique->value == 8);
  CHECK(report("A5xZ3").clique->value == 8);
  CHECK(report("S5").clique->value == 16);
}

TEST_CASE("connectivity is a multiple of the radical size") {
  for (const char* name : {"A5", "SL25", "A5xZ3", "S5"}) {
    CAPTURE(name);
    const auto& k = *report(name).connectivity;
    const auto s = group(name).st->radical_size();
    CHECK(k.exact);
    CHECK(k.value % s == 0);
    CHECK(k.value / s >= 2);
  }
}

TEST_CASE("Fs groups and Dirac") {
  for (const auto& name : builtin_catalog()) {
    CAPTURE(name);
    CHECK_FALSE(is_fs_group(*group(name).st));
  }
  CHECK_FALSE(dirac_condition(*group("A5").st));
  CHECK(dirac_condition(*group("PSL28").st));
}

TEST_CASE("full reports pass every check") {
  for (const char* name : {"A5", "S5", "SL25", "PSL27"}) {
    CAPTURE(name);
    const auto& r = report(name);
    for (const auto& c : r.bound_checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    CHECK_FALSE(r.budget_exceeded());
    CHECK(r.hamiltonian->status == "hamiltonian");
    CHECK(r.diameter == std::optional<std::size_t>(2));
  }
  CHECK(report("A5").genus->lower_bound == 162);
  CHECK(report("S5").genus->lower_bound == 702);
}

TEST_CASE("selection and determinism") {
  const auto& a5 = group("A5");
  InvariantOptions only_clique;
  only_clique.select = InvariantSelection::none();
  only_clique.select.clique = true;
  const auto r = compute_invariants(*a5.st, a5.ns, only_clique);
  CHECK(r.clique.has_value());
  CHECK_FALSE(r.domination.has_value());
  CHECK_FALSE(r.genus.has_value());
  InvariantOptions no_sym;
  no_sym.use_symmetry = false;
  const auto plain = compute_invariants(*a5.st, a5.ns, no_sym);
  CHECK(plain.clique->value == report("A5").clique->value);
  CHECK(plain.domination->value == report("A5").domination->value);
  CHECK(compute_invariants(*a5.st, a5.ns) == report("A5"));
}
