#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsg/invariants.hpp"

namespace nsg {

// One quantitative or structural statement to reproduce. Expected values
// live only in the claims file.
struct Claim {
  std::string id;
  std::string reference;   // where the statement is made, by result name
  std::string description;
  std::string procedure;   // how it is checked, see run_claims
  std::vector<std::string> groups; // "catalog" expands to builtin_catalog()
  nlohmann::json expected;
  std::string comparison = "eq"; // "eq" or "ge"
  nlohmann::json params = nlohmann::json::object();
  // Set for known discrepancies: a mismatch is reported as flagged, not fail.
  std::optional<std::string> flag;
};

enum class Verdict { pass, fail, flagged };
std::string to_string(Verdict v);

struct ClaimResult {
  Claim claim;
  std::string expected; // display form
  std::string computed;
  Verdict verdict = Verdict::fail;
  std::string detail;
};

std::vector<Claim> load_claims(const std::filesystem::path& path);

// Everything computed once per group and shared by the claims using it.
struct GroupContext {
  std::unique_ptr<GroupTable> table;
  std::unique_ptr<SolvabilizerTable> st;
  NSGraph ns;
  InvariantReport report;
};

struct VerifyOptions {
  std::size_t jobs = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Claim ids or procedure names; empty runs everything.
  std::vector<std::string> only;
  std::filesystem::path data_dir;
};

class Verifier {
public:
  explicit Verifier(VerifyOptions options);

  // Builds the contexts for every group the selected claims need (in
  // parallel when jobs > 1), then evaluates the claims. Results are sorted
  // by claim id and do not depend on jobs.
  std::vector<ClaimResult> run(const std::vector<Claim>& claims);

  // Context for one group, computed on first use. Not thread-safe; run()
  // fills all contexts before evaluating in parallel.
  const GroupContext& context(const std::string& group);

private:
  ClaimResult evaluate(const Claim& claim) const;
  const GroupContext& ready(const std::string& group) const;
  std::vector<std::string> expand_groups(const Claim& claim) const;

  VerifyOptions options_;
  std::map<std::string, std::unique_ptr<GroupContext>> contexts_;
};

bool selected(const Claim& claim, const std::vector<std::string>& only);

// Builds the full context (table, solvability, graph, all invariants).
std::unique_ptr<GroupContext> make_context(const std::string& group, std::uint64_t node_budget, std::size_t jobs = 1);

} // namespace nsg
