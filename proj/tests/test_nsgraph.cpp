#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "nsg/iso.hpp"
#include "nsg/nsgraph.hpp"
#include "support.hpp"

using namespace nsg;
using test::group;
using test::id;

TEST_CASE("vertex and edge counts") {
  CHECK(group("A5").ns.vertex_count() == 59);
  CHECK(group("A5").ns.edge_count() == 1140);
  CHECK(group("S5").ns.vertex_count() == 119);
  CHECK(group("S5").ns.edge_count() == 4560);
  CHECK(group("SL25").ns.vertex_count() == 118);
  CHECK(group("SL25").ns.edge_count() == 4560);
  CHECK(group("Z2xA5").ns.vertex_count() == 118);
  CHECK(group("Z2xA5").ns.edge_count() == 4560);
}

TEST_CASE("edges agree with the pairwise solvability oracle") {
  const auto& a5 = group("A5");
  const auto& ns = a5.ns;
  for (Vertex u = 0; u < ns.vertex_count(); u += 2)
    for (Vertex v = u + 1; v < ns.vertex_count(); ++v) {
      const bool solvable = test::solvable_oracle(*a5.table, test::closure_oracle(*a5.table, {ns.elements[u], ns.elements[v]}));
      CHECK(ns.graph.adjacent(u, v) == !solvable);
    }
  // vertices are the non-radical elements in ascending id order
  for (const char* name : {"A5", "SL25", "A5xZ3"}) {
    const auto& b = group(name);
    CHECK(std::is_sorted(b.ns.elements.begin(), b.ns.elements.end()));
    for (auto e : b.ns.elements) CHECK_FALSE(b.st->radical().test(e));
    CHECK(b.ns.vertex_count() + b.st->radical_size() == b.table->order());
  }
}

TEST_CASE("solvable groups are rejected") {
  const auto s4 = GroupTable::enumerate(builtin("S4"));
  const auto st = SolvabilizerTable::build(s4);
  CHECK_THROWS_AS(build_ns_graph(st), SolvableGroupError);
}

TEST_CASE("coset blocks are independent twin classes") {
  for (const auto& name : builtin_catalog()) {
    CAPTURE(name);
    const auto& b = group(name);
    CHECK(has_twin_blocks(b.ns));
    CHECK(b.ns.blocks.size() * b.ns.sol_size == b.ns.vertex_count());
    for (std::size_t k = 0; k < b.ns.blocks.size(); ++k)
      for (auto v : b.ns.blocks[k]) CHECK(b.ns.block_of[v] == k);
  }
  // a triangle with one block holding two adjacent vertices is not a twin partition
  auto bad = from_graph(Graph::complete(3));
  bad.blocks = {{0, 1}, {2}};
  bad.block_of = {0, 0, 1};
  CHECK_FALSE(has_twin_blocks(bad));
}

TEST_CASE("quotient of SL(2,5) and Z2 x A5 is NS_A5") {
  for (const char* name : {"SL25", "Z2xA5", "A5xZ2"}) {
    CAPTURE(name);
    const auto q = quotient(group(name).ns);
    CHECK(q.vertex_count() == 59);
    CHECK(q.edge_count() == 1140);
    const auto res = is_isomorphic(q.graph, group("A5").ns.graph);
    REQUIRE(res.isomorphic());
    CHECK(is_isomorphism(q.graph, group("A5").ns.graph, *res.mapping));
  }
  const auto q3 = quotient(group("A5xZ3").ns);
  CHECK(q3.vertex_count() == 59);
  CHECK(is_isomorphic(q3.graph, group("A5").ns.graph).isomorphic());
}

TEST_CASE("blowup") {
  const auto tri = from_graph(Graph::complete(3));
  const auto oct = blowup(tri, 2);
  CHECK(oct.vertex_count() == 6);
  CHECK(oct.edge_count() == 12);
  CHECK(oct.sol_size == 2);
  CHECK(has_twin_blocks(oct));
  for (Vertex v = 0; v < 6; ++v) CHECK(oct.graph.degree(v) == 4);
  CHECK_FALSE(oct.graph.adjacent(0, 1));
  CHECK(oct.graph.adjacent(0, 2));
  CHECK(quotient(oct).graph == tri.graph);
  // NS_A5 blown up by 2 is NS_SL25
  const auto big = blowup(group("A5").ns, 2);
  CHECK(big.edge_count() == 4560);
  CHECK(is_isomorphic(big.graph, group("SL25").ns.graph).isomorphic());
}

TEST_CASE("ns_isomorphic round trip on the catalog") {
  std::mt19937 rng(7);
  for (const auto& name : builtin_catalog()) {
    CAPTURE(name);
    const auto& ns = group(name).ns;
    std::vector<Vertex> perm(ns.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph shuffled(ns.vertex_count());
    for (auto [u, v] : ns.graph.edges()) shuffled.add_edge(perm[u], perm[v]);
    const auto res = is_isomorphic(ns.graph, shuffled);
    REQUIRE(res.isomorphic());
    CHECK(is_isomorphism(ns.graph, shuffled, *res.mapping));
  }
}

TEST_CASE("iso examples") {
  NSIsoOptions confirm;
  confirm.confirm = true;
  const auto same = ns_isomorphic(group("SL25").ns, group("Z2xA5").ns, confirm);
  REQUIRE(same.isomorphic());
  CHECK(is_isomorphism(group("SL25").ns.graph, group("Z2xA5").ns.graph, *same.mapping));
  CHECK_FALSE(ns_isomorphic(group("A5").ns, group("S5").ns).isomorphic());
  CHECK_FALSE(ns_isomorphic(group("S5").ns, group("SL25").ns).isomorphic());
  CHECK_FALSE(ns_isomorphic(group("PSL27").ns, group("PGL27").ns).isomorphic());
  // same size, different degree sequence
  CHECK_FALSE(is_isomorphic(Graph::cycle(6), blowup(Graph::complete(3), 2)).isomorphic());
  // C6 and two triangles: regular of degree 2, not isomorphic
  Graph two_triangles(6);
  for (Vertex b : {0u, 3u}) {
    two_triangles.add_edge(b, b + 1);
    two_triangles.add_edge(b + 1, b + 2);
    two_triangles.add_edge(b, b + 2);
  }
  CHECK_FALSE(is_isomorphic(Graph::cycle(6), two_triangles).isomorphic());
  const auto tiny = is_isomorphic(group("A5").ns.graph, group("A5").ns.graph, 0);
  CHECK(tiny.outcome != IsoOutcome::not_isomorphic);
}

TEST_CASE("structure: diameter two, not bipartite, not complete multipartite") {
  for (const auto& name : builtin_catalog()) {
    CAPTURE(name);
    const auto& g = group(name).ns.graph;
    CHECK(diameter(g) == std::optional<std::size_t>(2));
    CHECK_FALSE(is_bipartite(g));
    CHECK_FALSE(is_complete_multipartite(g));
  }
  // control: K_{2,2,2} is complete multipartite
  CHECK(is_complete_multipartite(blowup(Graph::complete(3), 2)));
  CHECK(is_bipartite(Graph::cycle(6)));
  CHECK(diameter(Graph::cycle(6)) == std::optional<std::size_t>(3));
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_FALSE(diameter(split).has_value());
}

TEST_CASE("conjugation symmetry consists of automorphisms") {
  const auto& a5 = group("A5");
  const auto sym = conjugation_symmetry(a5.ns, *a5.table);
  CHECK(sym.maps().size() == 60);
  for (const auto& m : sym.maps()) CHECK(is_isomorphism(a5.ns.graph, a5.ns.graph, m));
  // orbits are the non-identity conjugacy classes: 15, 20, 12, 12
  std::vector<std::size_t> sizes;
  for (const auto& o : sym.orbits()) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{12, 12, 15, 20});
  std::vector<std::vector<Vertex>> bogus{std::vector<Vertex>(59)};
  std::iota(bogus[0].begin(), bogus[0].end(), 0);
  std::swap(bogus[0][0], bogus[0][1]);
  std::vector<std::size_t> degs{a5.ns.graph.degree(0), a5.ns.graph.degree(1)};
  if (degs[0] != degs[1] || !is_isomorphism(a5.ns.graph, a5.ns.graph, bogus[0]))
    CHECK_THROWS_AS(Symmetry::from_maps(a5.ns.graph, bogus), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
  const auto& ns = group("A5").ns;
  std::stringstream buf;
  write_edge_list(ns, buf);
  const std::string text = buf.str();
  CHECK(text.rfind("# group=A5 n=59 m=1140 sol=1\n", 0) == 0);
  std::istringstream in(text);
  const auto back = read_edge_list(in);
  CHECK(back.graph == ns.graph);
  std::istringstream bad("# group=x n=2 m=1 sol=1\n0 5\n");
  CHECK_THROWS(read_edge_list(bad));
  std::istringstream short_list("# group=x n=3 m=2 sol=1\n0 1\n");
  CHECK_THROWS(read_edge_list(short_list));
}

TEST_CASE("quotient_spec") {
  const auto& sl = group("SL25");
  const auto spec = quotient_spec(*sl.table, sl.st->radical(), "q");
  CHECK(spec.degree == 60);
  CHECK(GroupTable::enumerate(spec).order() == 60);
  ElementSet not_normal = generated_subgroup(*group("A5").table, std::vector<ElementId>{id(group("A5"), "(1,2,3)")});
  CHECK_THROWS(quotient_spec(*group("A5").table, not_normal, "bad"));
}
