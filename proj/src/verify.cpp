#include "nsg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "nsg/catalog.hpp"
#include "nsg/iso.hpp"

namespace nsg {

using nlohmann::json;

namespace {

std::string display(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

// Runs f(i) for i in [0, n) on up to jobs threads.
template <class F>
void parallel_for(std::size_t n, std::size_t jobs, F f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < std::min(jobs, n); ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            f(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<ElementId> parse_elements(const GroupTable& t, const json& list) {
  std::vector<ElementId> out;
  for (const auto& text : list) out.push_back(t.id_of(text.get<std::string>()));
  return out;
}

} // namespace

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::fail:
    return "fail";
  case Verdict::flagged:
    return "flagged";
  }
  return "fail";
}

std::vector<Claim> load_claims(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open claims file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  std::vector<Claim> claims;
  std::vector<std::string> ids;
  for (const auto& j : doc.at("claims")) {
    Claim c;
    c.id = j.at("id").get<std::string>();
    c.reference = j.at("reference").get<std::string>();
    c.description = j.at("description").get<std::string>();
    c.procedure = j.at("procedure").get<std::string>();
    c.groups = j.value("groups", std::vector<std::string>{});
    c.expected = j.at("expected");
    c.comparison = j.value("comparison", std::string("eq"));
    if (j.contains("params")) c.params = j.at("params");
    if (j.contains("flag")) c.flag = j.at("flag").get<std::string>();
    if (c.comparison != "eq" && c.comparison != "ge")
      throw std::runtime_error("claim " + c.id + ": unknown comparison " + c.comparison);
    ids.push_back(c.id);
    claims.push_back(std::move(c));
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::runtime_error("claims file has duplicate ids");
  return claims;
}

bool selected(const Claim& claim, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  return std::any_of(only.begin(), only.end(),
                     [&](const std::string& s) { return s == claim.id || s == claim.procedure; });
}

std::unique_ptr<GroupContext> make_context(const std::string& group, std::uint64_t node_budget, std::size_t jobs) {
  auto ctx = std::make_unique<GroupContext>();
  ctx->table = std::make_unique<GroupTable>(GroupTable::enumerate(resolve_group(group)));
  SolvabilityOptions so;
  so.jobs = jobs;
  ctx->st = std::make_unique<SolvabilizerTable>(SolvabilizerTable::build(*ctx->table, so));
  ctx->ns = build_ns_graph(*ctx->st);
  InvariantOptions io;
  io.node_budget = node_budget;
  ctx->report = compute_invariants(*ctx->st, ctx->ns, io);
  return ctx;
}

Verifier::Verifier(VerifyOptions options) : options_(std::move(options)) {}

std::vector<std::string> Verifier::expand_groups(const Claim& claim) const {
  std::vector<std::string> out;
  for (const auto& g : claim.groups) {
    if (g == "catalog") {
      const auto& all = builtin_catalog();
      out.insert(out.end(), all.begin(), all.end());
    } else {
      out.push_back(g);
    }
  }
  return out;
}

const GroupContext& Verifier::context(const std::string& group) {
  auto& slot = contexts_[group];
  if (!slot) slot = make_context(group, options_.node_budget);
  return *slot;
}

const GroupContext& Verifier::ready(const std::string& group) const { return *contexts_.at(group); }

std::vector<ClaimResult> Verifier::run(const std::vector<Claim>& claims) {
  std::vector<const Claim*> chosen;
  std::vector<std::string> groups;
  for (const auto& c : claims) {
    if (!selected(c, options_.only)) continue;
    chosen.push_back(&c);
    for (auto& g : expand_groups(c))
      if (!contexts_.count(g) && std::find(groups.begin(), groups.end(), g) == groups.end()) groups.push_back(g);
  }
  std::vector<std::unique_ptr<GroupContext>> built(groups.size());
  parallel_for(groups.size(), options_.jobs,
               [&](std::size_t i) { built[i] = make_context(groups[i], options_.node_budget); });
  for (std::size_t i = 0; i < groups.size(); ++i) contexts_[groups[i]] = std::move(built[i]);

  std::vector<ClaimResult> results(chosen.size());
  parallel_for(chosen.size(), options_.jobs, [&](std::size_t i) { results[i] = evaluate(*chosen[i]); });
  std::sort(results.begin(), results.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.claim.id < b.claim.id; });
  return results;
}

ClaimResult Verifier::evaluate(const Claim& claim) const {
  ClaimResult r;
  r.claim = claim;
  r.expected = (claim.comparison == "ge" ? ">= " : "") + display(claim.expected);
  const auto groups = expand_groups(claim);
  const std::string& p = claim.procedure;
  json computed;

  auto first = [&]() -> const GroupContext& { return ready(groups.at(0)); };
  auto exact_value = [&](const std::optional<SetInvariant>& s) -> json {
    if (!s) return "not computed";
    if (!s->exact) {
      r.detail = "budget exceeded, best " + std::to_string(s->value) + ", bound " + std::to_string(s->bound);
      return "unknown";
    }
    r.detail = "witness " + std::to_string(s->witness.size()) + " vertices";
    return s->value;
  };

  try {
    if (p == "vertex_count") {
      computed = first().ns.vertex_count();
    } else if (p == "edge_count") {
      computed = first().ns.edge_count();
    } else if (p == "degree_set") {
      const auto& ds = first().report.degree_set;
      if (claim.expected.is_array()) computed = ds;
      else computed = ds.size();
      r.detail = "degrees " + json(ds).dump();
    } else if (p == "solvability_degree") {
      const auto& q = first().report.solvability_degree;
      computed = std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
    } else if (p == "clique_number") {
      computed = exact_value(first().report.clique);
    } else if (p == "domination_number") {
      computed = exact_value(first().report.domination);
      if (first().report.domination) {
        std::string w;
        for (const auto& s : first().report.domination->witness) w += (w.empty() ? "" : " ") + s;
        r.detail = "minimum dominating set " + w;
      }
    } else if (p == "dominating_set") {
      const auto& ctx = first();
      const auto ids = parse_elements(*ctx.table, claim.params.at("set"));
      std::vector<Vertex> vs;
      bool all_vertices = true;
      for (auto id : ids) {
        auto v = ctx.ns.vertex_of(id);
        if (v) vs.push_back(*v);
        else all_vertices = false;
      }
      const bool by_graph = all_vertices && is_dominating(ctx.ns.graph, vs);
      const bool by_group = dominating_by_criterion(*ctx.st, ids);
      computed = by_graph && by_group;
      r.detail = std::string("graph check ") + (by_graph ? "yes" : "no") + ", Sol_G(S) criterion " + (by_group ? "yes" : "no");
    } else if (p == "isomorphic") {
      NSIsoOptions io;
      io.node_budget = options_.node_budget;
      io.confirm = true;
      const auto res = ns_isomorphic(ready(groups.at(0)).ns, ready(groups.at(1)).ns, io);
      computed = res.isomorphic();
      if (res.outcome == IsoOutcome::budget_exceeded) computed = "unknown";
      r.detail = res.isomorphic() ? "vertex bijection verified edge by edge" : "";
    } else if (p == "hamiltonian_dirac" || p == "hamiltonian_without_dirac") {
      const auto& h = first().report.hamiltonian;
      const bool want_dirac = p == "hamiltonian_dirac";
      computed = h && h->dirac_condition == want_dirac && h->status == "hamiltonian";
      if (h) r.detail = std::string("Dirac condition ") + (h->dirac_condition ? "holds" : "fails") + ", cycle by " + h->method;
    } else if (p == "cycle_file") {
      const auto& ctx = first();
      const auto entries = read_cycle_file(options_.data_dir / claim.params.at("file").get<std::string>());
      const auto check = verify_element_cycle(ctx.ns, *ctx.table, entries);
      computed = check.valid;
      r.detail = check.valid ? std::to_string(entries.size()) + " vertices, every step adjacent" : check.reason;
    } else if (p == "genus_lower_bound") {
      const auto& g = first().report.genus;
      computed = g ? json(g->lower_bound) : json("not computed");
      if (g) r.detail = "Euler " + std::to_string(g->euler) + ", tripartite " + std::to_string(g->tripartite) + ", K4,10 " +
                        std::to_string(g->k4_10);
    } else if (p == "independent_generating_set") {
      const auto& ctx = first();
      const auto ids = parse_elements(*ctx.table, claim.params.at("set"));
      bool independent = true;
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
          if (!ctx.st->two_gen_solvable(ids[i], ids[j])) independent = false;
      const bool generates = generated_subgroup(*ctx.table, ids).count() == ctx.table->order();
      computed = independent && generates;
      r.detail = std::string("independent ") + (independent ? "yes" : "no") + ", generates " + (generates ? "yes" : "no");
    } else if (p == "fs_inherited") {
      const auto& a = ready(groups.at(0));
      const auto& b = ready(groups.at(1));
      NSIsoOptions io;
      io.node_budget = options_.node_budget;
      const bool iso = ns_isomorphic(a.ns, b.ns, io).isomorphic();
      const bool fa = is_fs_group(*a.st), fb = is_fs_group(*b.st);
      computed = iso && (!fa || fb) && (!fb || fa);
      r.detail = std::string("isomorphic ") + (iso ? "yes" : "no") + ", Fs verdicts " + (fa ? "yes" : "no") + "/" +
                 (fb ? "yes" : "no");
    } else if (p == "bound_check") {
      const std::string name = claim.params.at("check").get<std::string>();
      bool all = true;
      std::vector<std::string> failing;
      for (const auto& g : groups) {
        const auto& checks = ready(g).report.bound_checks;
        auto it = std::find_if(checks.begin(), checks.end(), [&](const BoundCheck& c) { return c.name == name; });
        if (it == checks.end() || !it->passed) {
          all = false;
          failing.push_back(g);
        }
      }
      computed = all;
      r.detail = all ? std::to_string(groups.size()) + " groups" : "fails on " + json(failing).dump();
    } else {
      throw std::runtime_error("unknown procedure " + p);
    }
  } catch (const std::exception& e) {
    r.computed = "error";
    r.detail = e.what();
    r.verdict = Verdict::fail;
    return r;
  }

  r.computed = display(computed);
  bool match = false;
  if (claim.comparison == "ge") match = computed.is_number() && claim.expected.is_number() && computed >= claim.expected;
  else match = computed == claim.expected;
  r.verdict = match ? Verdict::pass : claim.flag ? Verdict::flagged : Verdict::fail;
  if (r.verdict == Verdict::flagged) r.detail = *claim.flag + (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

} // namespace nsg
