#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsg/nsgraph.hpp"
#include "nsg/solvability.hpp"
#include "support.hpp"

using namespace nsg;
using test::group;
using test::id;

TEST_CASE("derived_subgroup matches brute-force commutators") {
  const auto s3 = GroupTable::enumerate(builtin("S3"));
  const auto d = derived_subgroup(s3, s3.full_set());
  CHECK(d.count() == 3);
  CHECK(d == test::commutator_oracle(s3, s3.full_set()));

  const auto& a5 = group("A5");
  const auto da5 = derived_subgroup(*a5.table, a5.table->full_set());
  CHECK(da5.count() == 60);
  CHECK(da5 == test::commutator_oracle(*a5.table, a5.table->full_set()));

  const auto z5 = generated_subgroup(*a5.table, std::vector<ElementId>{id(a5, "(1,2,3,4,5)")});
  CHECK(derived_subgroup(*a5.table, z5).count() == 1);

  const auto s4 = GroupTable::enumerate(builtin("S4"));
  auto h = s4.full_set();
  std::vector<std::size_t> series;
  while (h.count() > 1) {
    const auto next = derived_subgroup(s4, h);
    CHECK(next == test::commutator_oracle(s4, h));
    h = next;
    series.push_back(h.count());
  }
  CHECK(series == std::vector<std::size_t>{12, 4, 1});
}

TEST_CASE("is_solvable") {
  const auto s4 = GroupTable::enumerate(builtin("S4"));
  CHECK(is_solvable(s4, s4.full_set()));
  const auto& a5 = group("A5");
  CHECK_FALSE(is_solvable(*a5.table, a5.table->full_set()));
  ElementSet trivial(a5.table->order());
  trivial.set(0);
  CHECK(is_solvable(*a5.table, trivial));
  ElementSet not_closed = trivial;
  not_closed.set(id(a5, "(1,2,3)"));
  CHECK_THROWS_AS(is_solvable(*a5.table, not_closed), std::invalid_argument);
  CHECK_THROWS_AS(derived_subgroup(*a5.table, not_closed), std::invalid_argument);
}

TEST_CASE("two_gen_solvable examples and symmetry") {
  const auto& a5 = group("A5");
  const auto c5 = id(a5, "(1,2,3,4,5)");
  CHECK(a5.st->two_gen_solvable(c5, c5));
  CHECK(a5.st->two_gen_solvable(c5, a5.table->power(c5, 2)));
  CHECK_FALSE(a5.st->two_gen_solvable(c5, id(a5, "(3,4,5)")));
  for (const char* name : {"A5", "S5", "SL25"}) {
    const auto& b = group(name);
    for (ElementId x = 0; x < b.table->order(); ++x) {
      CHECK(b.st->two_gen_solvable(x, x));
      for (ElementId y = x + 1; y < b.table->order(); ++y)
        CHECK(b.st->two_gen_solvable(x, y) == b.st->two_gen_solvable(y, x));
    }
  }
}

TEST_CASE("pair table agrees with the subgroup oracle on A5") {
  const auto& a5 = group("A5");
  const auto& t = *a5.table;
  for (ElementId x = 0; x < t.order(); x += 3)
    for (ElementId y = 0; y < t.order(); ++y)
      CHECK(a5.st->two_gen_solvable(x, y) == test::solvable_oracle(t, test::closure_oracle(t, {x, y})));
}

TEST_CASE("solvabilizer sizes in A5") {
  const auto& a5 = group("A5");
  CHECK(a5.st->solvabilizer(id(a5, "(1,2,3,4,5)")).count() == 10);
  CHECK(a5.st->solvabilizer(id(a5, "(3,4,5)")).count() == 24);
  CHECK(a5.st->solvabilizer(id(a5, "(1,2)(3,4)")).count() == 36);
  std::size_t degree_sum = 0;
  for (ElementId x = 1; x < a5.table->order(); ++x) degree_sum += 60 - a5.st->solvabilizer(x).count();
  CHECK(degree_sum == 2280);
}

TEST_CASE("solvabilizer table invariants") {
  for (const char* name : {"A5", "S5", "SL25", "A5xZ3"}) {
    CAPTURE(name);
    const auto& b = group(name);
    ElementSet meet = b.table->full_set();
    for (ElementId x = 0; x < b.table->order(); ++x) {
      CHECK(b.st->solvabilizer(x).test(x));
      CHECK(b.st->radical().is_subset_of(b.st->solvabilizer(x)));
      meet &= b.st->solvabilizer(x);
    }
    CHECK(meet == b.st->radical());
    CHECK(is_subgroup(*b.table, b.st->radical()));
    CHECK(normal_closure(*b.table, b.st->radical()) == b.st->radical());
  }
}

TEST_CASE("solvable radical") {
  CHECK(group("A5").st->radical_size() == 1);
  CHECK(group("SL25").st->radical_size() == 2);
  CHECK(group("Z2xA5").st->radical_size() == 2);
  CHECK(group("A5xZ3").st->radical_size() == 3);
  const auto& s4 = group("S4");
  CHECK(s4.st->group_is_solvable());
  CHECK(s4.st->radical_size() == 24);
  // SL(2,5): the radical is the centre {I, -I}
  const auto& sl = group("SL25");
  for (auto z : sl.st->radical().to_vector())
    for (ElementId g = 0; g < sl.table->order(); ++g)
      CHECK(sl.table->multiply(static_cast<ElementId>(z), g) == sl.table->multiply(g, static_cast<ElementId>(z)));
}

TEST_CASE("radical by intersection equals the normal-subgroup oracle on the catalog") {
  for (const auto& name : builtin_catalog()) {
    CAPTURE(name);
    const auto& b = group(name);
    if (b.table->order() > 600) continue;
    CHECK(b.st->radical_oracle_checked());
    CHECK(solvable_radical_oracle(*b.table) == b.st->radical());
  }
}

TEST_CASE("normal subgroups of S4 and SL(2,5)") {
  const auto s4 = GroupTable::enumerate(builtin("S4"));
  std::vector<std::size_t> sizes;
  for (const auto& n : normal_subgroups(s4)) sizes.push_back(n.count());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 4, 12, 24});
  std::vector<std::size_t> sl_sizes;
  for (const auto& n : normal_subgroups(*group("SL25").table)) sl_sizes.push_back(n.count());
  std::sort(sl_sizes.begin(), sl_sizes.end());
  CHECK(sl_sizes == std::vector<std::size_t>{1, 2, 120});
  CHECK(conjugacy_classes(*group("A5").table).size() == 5);
  CHECK(conjugacy_classes(*group("S5").table).size() == 7);
}

TEST_CASE("prime_ge5_witness") {
  for (const char* name : {"A5", "S5", "PSL27", "SL25"}) {
    const auto& b = group(name);
    const auto x = prime_ge5_witness(*b.st);
    const auto o = b.table->element_order(x);
    CHECK(o >= 5);
    for (std::uint64_t d = 2; d * d <= o; ++d) CHECK(o % d != 0);
    CHECK_FALSE(b.st->radical().test(x));
    for (ElementId y = 0; y < x; ++y) {
      const auto oy = b.table->element_order(y);
      bool prime = oy >= 5;
      for (std::uint64_t d = 2; d * d <= oy; ++d)
        if (oy % d == 0) prime = false;
      CHECK_FALSE((prime && !b.st->radical().test(y)));
    }
  }
  CHECK(group("A5").table->element_order(prime_ge5_witness(*group("A5").st)) == 5);
  CHECK(group("PSL27").table->element_order(prime_ge5_witness(*group("PSL27").st)) == 7);
  CHECK(group("S5").table->element_order(prime_ge5_witness(*group("S5").st)) == 5);
}

TEST_CASE("thompson_witness") {
  const auto& a5 = group("A5");
  auto check = [](const test::Built& b, ElementId x, ElementId y) {
    const auto s = thompson_witness(*b.st, x, y);
    CHECK_FALSE(b.st->radical().test(s));
    CHECK_FALSE(b.st->two_gen_solvable(x, s));
    CHECK_FALSE(b.st->two_gen_solvable(y, s));
  };
  check(a5, id(a5, "(1,2,3,4,5)"), id(a5, "(1,2,3,4,5)"));
  check(a5, id(a5, "(1,2,3,4,5)"), id(a5, "(3,4,5)"));
  const auto& s5 = group("S5");
  check(s5, id(s5, "(4,5)"), id(s5, "(1,2)(3,4,5)"));
  // every pair of vertices of NS_A5 has a common neighbour
  for (ElementId x = 1; x < 60; ++x)
    for (ElementId y = x; y < 60; y += 7) check(a5, x, y);
  CHECK_THROWS_AS(thompson_witness(*a5.st, 0, 1), std::invalid_argument);
}

TEST_CASE("coset invariance of adjacency, exhaustive on SL(2,5)") {
  const auto& sl = group("SL25");
  const auto& t = *sl.table;
  const auto radical = sl.st->radical().to_vector();
  REQUIRE(radical.size() == 2);
  std::size_t pairs = 0;
  for (ElementId x = 0; x < t.order(); ++x) {
    if (sl.st->radical().test(x)) continue;
    for (ElementId y = 0; y < t.order(); ++y) {
      if (sl.st->radical().test(y)) continue;
      for (auto u : radical)
        for (auto v : radical) {
          const auto xu = t.multiply(x, static_cast<ElementId>(u)), yv = t.multiply(y, static_cast<ElementId>(v));
          CHECK(sl.st->two_gen_solvable(x, y) == sl.st->two_gen_solvable(xu, yv));
          ++pairs;
        }
    }
  }
  CHECK(pairs == 118 * 118 * 4);
}

TEST_CASE("quotient correspondence: SL(2,5)/Sol against the quotient group") {
  const auto& sl = group("SL25");
  const auto& t = *sl.table;
  const auto spec = quotient_spec(t, sl.st->radical(), "SL25/Z2");
  const auto q = GroupTable::enumerate(spec);
  REQUIRE(q.order() == 60);
  const auto qst = SolvabilizerTable::build(q);
  CHECK(qst.radical_size() == 1);
  // image of g: the permutation of right cosets induced by g
  auto image = [&](ElementId g) {
    const auto& cosets = spec.degree;
    std::vector<Point> im(cosets);
    std::vector<ElementId> reps;
    std::vector<std::size_t> coset_of(t.order(), t.order());
    for (ElementId x = 0; x < t.order(); ++x) {
      if (coset_of[x] != t.order()) continue;
      for (auto r : sl.st->radical().to_vector()) coset_of[t.multiply(static_cast<ElementId>(r), x)] = reps.size();
      reps.push_back(x);
    }
    for (std::size_t c = 0; c < reps.size(); ++c) im[c] = static_cast<Point>(coset_of[t.multiply(reps[c], g)]);
    return q.id_of(Permutation(im));
  };
  std::vector<ElementId> img(t.order());
  for (ElementId g = 0; g < t.order(); ++g) img[g] = image(g);
  for (ElementId x = 0; x < t.order(); ++x)
    for (ElementId y = 0; y < t.order(); ++y) CHECK(sl.st->two_gen_solvable(x, y) == qst.two_gen_solvable(img[x], img[y]));
}

TEST_CASE("solvabilizers are subgroups exactly for solvable groups") {
  for (const char* name : {"S4", "A4", "D5", "Z6"}) {
    const auto& b = group(name);
    CHECK(non_subgroup_solvabilizers(*b.st).empty());
  }
  for (const auto& name : builtin_catalog()) {
    CAPTURE(name);
    CHECK_FALSE(non_subgroup_solvabilizers(*group(name).st).empty());
  }
}

TEST_CASE("worker count does not change the table") {
  const auto& t = *group("S5").table;
  SolvabilityOptions serial, parallel;
  parallel.jobs = 4;
  const auto a = SolvabilizerTable::build(t, serial), b = SolvabilizerTable::build(t, parallel);
  CHECK(a.radical() == b.radical());
  for (ElementId x = 0; x < t.order(); ++x) CHECK(a.solvabilizer(x) == b.solvabilizer(x));
}
