#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "nsg/catalog.hpp"
#include "nsg/report.hpp"
#include "nsg/verify.hpp"
#include "support.hpp"

using namespace nsg;
namespace fs = std::filesystem;

namespace {

const fs::path kData{NSG_DATA_DIR};
const fs::path kCatalog = kData.parent_path() / "catalog";

std::size_t order_of_spec(const GroupSpec& spec) { return GroupTable::enumerate(spec).order(); }

} // namespace

TEST_CASE("builtin groups") {
  CHECK(order_of_spec(builtin("A5")) == 60);
  CHECK(order_of_spec(builtin("S5")) == 120);
  CHECK(order_of_spec(builtin("SL25")) == 120);
  CHECK(builtin("SL25").degree == 24);
  CHECK(order_of_spec(builtin("PSL27")) == 168);
  CHECK(order_of_spec(builtin("PGL27")) == 336);
  CHECK(order_of_spec(builtin("A6")) == 360);
  CHECK(order_of_spec(builtin("PSL28")) == 504);
  CHECK(order_of_spec(builtin("Z7")) == 7);
  CHECK(order_of_spec(builtin("Z_7")) == 7);
  CHECK(order_of_spec(builtin("D5")) == 10);
  CHECK(order_of_spec(builtin("A5xZ2xZ3")) == 360);
  CHECK(test::group("SL25").st->radical_size() == 2);
  CHECK_THROWS_AS(builtin("Q8x"), UnknownGroup);
  CHECK_THROWS_AS(builtin("M11"), UnknownGroup);
  CHECK_THROWS_AS(resolve_group("no/such/file.group"), UnknownGroup);
  CHECK(builtin_catalog().size() == 10);
}

TEST_CASE("shipped group files match the builtins") {
  for (const auto& name : builtin_catalog()) {
    CAPTURE(name);
    const auto spec = load_group_file(kCatalog / (name + ".group"));
    CHECK(spec.name == name);
    const auto from_file = GroupTable::enumerate(spec);
    const auto from_builtin = GroupTable::enumerate(builtin(name));
    CHECK(from_file.order() == from_builtin.order());
    CHECK(from_file.elements() == from_builtin.elements());
  }
}

TEST_CASE("group file parsing") {
  const auto spec = parse_group_file("# comment\nname=A5\n\ndegree=5\ngen=(1,2,3,4,5)\ngen = (3,4,5)\n");
  CHECK(spec.name == "A5");
  CHECK(spec.degree == 5);
  CHECK(spec.generators.size() == 2);
  CHECK(parse_group_file(format_group_file(spec)).generators == spec.generators);
  try {
    parse_group_file("name=x\ndegree=5\ngen=(1,2\n", "bad.group");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("bad.group:3: ", 0) == 0);
  }
  CHECK_THROWS_AS(parse_group_file("name=x\ngen=(1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("name=x\ndegree=three\ngen=(1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("name=x\ndegree=3\nfoo=bar\ngen=(1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("name=x\ndegree=3\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("name=x\ndegree=3\ngen=(1,4)\n"), ParseError);
}

TEST_CASE("write and load a group file") {
  const auto path = fs::temp_directory_path() / "nsg_test_a5.group";
  write_group_file(builtin("A5"), path);
  CHECK(order_of_spec(resolve_group(path.string())) == 60);
  fs::remove(path);
}

TEST_CASE("report round trip") {
  const auto& b = test::group("SL25");
  ReportDocument doc;
  doc.group_name = "SL25";
  doc.group_order = 120;
  doc.sol_size = 2;
  doc.invariants = compute_invariants(*b.st, b.ns);
  doc.runtime_ms = 12.5;
  const auto text = format_report(doc);
  CHECK(parse_report(text) == doc);
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("tool_version") == "1.0.0");
  CHECK(j.at("invariants").at("solvability_degree") == "11/30");

  const auto path = fs::temp_directory_path() / "nsg_test_report.json";
  write_report(doc, path);
  CHECK(read_report(path) == doc);
  fs::remove(path);

  // optional sections stay absent
  InvariantOptions none;
  none.select = InvariantSelection::none();
  ReportDocument small = doc;
  small.invariants = compute_invariants(*b.st, b.ns, none);
  const auto small_json = nlohmann::json::parse(format_report(small));
  CHECK_FALSE(small_json.at("invariants").contains("clique"));
  CHECK(parse_report(format_report(small)) == small);
}

TEST_CASE("report errors") {
  ReportDocument doc;
  doc.group_name = "x";
  auto j = nlohmann::json::parse(format_report(doc));
  j["schema_version"] = 2;
  CHECK_THROWS_AS(parse_report(j.dump()), ReportError);
  CHECK_THROWS_AS(parse_report("{not json"), ReportError);
  CHECK_THROWS_AS(parse_report("{}"), ReportError);
  CHECK_THROWS_AS(read_report("/nonexistent/report.json"), ReportError);
}

TEST_CASE("claims table loads") {
  const auto claims = load_claims(kData / "claims.json");
  CHECK(claims.size() >= 30);
  for (const auto& c : claims) {
    CAPTURE(c.id);
    CHECK_FALSE(c.reference.empty());
    CHECK_FALSE(c.procedure.empty());
  }
  const auto path = fs::temp_directory_path() / "nsg_dup_claims.json";
  {
    std::ofstream out(path);
    out << R"({"claims":[{"id":"a","reference":"r","description":"d","procedure":"vertex_count","groups":["A5"],"expected":59},
                          {"id":"a","reference":"r","description":"d","procedure":"vertex_count","groups":["A5"],"expected":59}]})";
  }
  CHECK_THROWS(load_claims(path));
  fs::remove(path);
}

TEST_CASE("verifier on a small selection") {
  VerifyOptions opts;
  opts.data_dir = kData;
  opts.only = {"vertices-a5", "edges-a5", "solvability-degree-a5", "vertices-sl25"};
  Verifier v(opts);
  const auto results = v.run(load_claims(kData / "claims.json"));
  REQUIRE(results.size() == 4);
  for (const auto& r : results) {
    CAPTURE(r.claim.id);
    if (r.claim.id == "vertices-sl25") {
      CHECK(r.verdict == Verdict::flagged);
      CHECK(r.computed == "118");
    } else {
      CHECK(r.verdict == Verdict::pass);
    }
  }
}
