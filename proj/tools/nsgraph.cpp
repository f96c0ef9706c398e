// Command-line front end: invariants, verify-paper, iso, scan, export-graph
// and group-file. Exit codes: 0 success, 1 failure or negative answer,
// 2 unknown group or unreadable input, 3 solvable group, 4 budget exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nsg/catalog.hpp"
#include "nsg/iso.hpp"
#include "nsg/report.hpp"
#include "nsg/verify.hpp"

#ifndef NSG_DATA_DIR
#define NSG_DATA_DIR "data"
#endif

namespace {

using namespace nsg;

enum Exit : int { ok = 0, failed = 1, unknown_group = 2, solvable = 3, budget = 4 };

std::uint64_t default_budget() {
  if (const char* env = std::getenv("NSGRAPH_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring NSGRAPH_BUDGET='" << env << "'\n";
    }
  }
  return kDefaultNodeBudget;
}

struct Loaded {
  std::unique_ptr<GroupTable> table;
  std::unique_ptr<SolvabilizerTable> st;
  NSGraph ns;
};

// Throws UnknownGroup / ParseError / SolvableGroupError for the caller to map.
Loaded load(const std::string& group, std::size_t jobs) {
  Loaded l;
  l.table = std::make_unique<GroupTable>(GroupTable::enumerate(resolve_group(group)));
  SolvabilityOptions so;
  so.jobs = jobs;
  l.st = std::make_unique<SolvabilizerTable>(SolvabilizerTable::build(*l.table, so));
  l.ns = build_ns_graph(*l.st);
  return l;
}

int report_load_error(const std::string& group) {
  try {
    throw;
  } catch (const SolvableGroupError& e) {
    std::cerr << e.what() << "\n";
    return solvable;
  } catch (const UnknownGroup& e) {
    std::cerr << e.what() << " (" << group << " is neither a builtin name nor a group file)\n";
    return unknown_group;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return unknown_group;
  } catch (const GroupTooLarge& e) {
    std::cerr << e.what() << "\n";
    return unknown_group;
  }
}

std::string join(const std::vector<std::string>& items, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string set_line(const SetInvariant& s) {
  std::string out = std::to_string(s.value);
  if (!s.exact) out += " (budget exceeded; bound " + std::to_string(s.bound) + ")";
  return out + "  " + join(s.witness);
}

void print_report(const ReportDocument& doc, std::ostream& out) {
  const auto& r = doc.invariants;
  out << "group            " << doc.group_name << " (order " << doc.group_order << ", |Sol| " << doc.sol_size << ")\n";
  out << "vertices         " << r.vertex_count << "\n";
  out << "edges            " << r.edge_count << "\n";
  std::vector<std::string> ds;
  for (auto d : r.degree_set) ds.push_back(std::to_string(d));
  out << "degree set       {" << join(ds, ", ") << "}\n";
  out << "P_s              " << r.solvability_degree << "\n";
  if (r.diameter) out << "diameter         " << *r.diameter << "\n";
  if (r.bipartite) out << "bipartite        " << (*r.bipartite ? "yes" : "no") << "\n";
  if (r.complete_multipartite) out << "multipartite     " << (*r.complete_multipartite ? "yes" : "no") << "\n";
  if (r.fs_group) out << "Fs-group         " << (*r.fs_group ? "yes" : "no") << "\n";
  if (r.clique) out << "omega            " << set_line(*r.clique) << "\n";
  if (r.independence) out << "alpha            " << set_line(*r.independence) << "\n";
  if (r.domination) out << "lambda           " << set_line(*r.domination) << "\n";
  if (r.connectivity)
    out << "kappa            " << r.connectivity->value << (r.connectivity->exact ? "" : " (budget exceeded)") << "\n";
  if (r.hamiltonian)
    out << "hamiltonian      " << r.hamiltonian->status
        << (r.hamiltonian->method.empty() ? "" : " (" + r.hamiltonian->method + ")")
        << (r.hamiltonian->dirac_condition ? ", Dirac condition holds" : "") << "\n";
  if (r.genus)
    out << "genus            >= " << r.genus->lower_bound << " (" << r.genus->source << "), not projective\n";
  for (const auto& c : r.bound_checks)
    out << (c.passed ? "  ok    " : "  FAIL  ") << std::left << std::setw(38) << c.name << c.detail << "\n";
  out << "runtime          " << std::fixed << std::setprecision(1) << doc.runtime_ms << " ms\n";
}

struct InvariantsArgs {
  std::string group;
  bool clique = false, independence = false, domination = false, connectivity = false, hamiltonian = false,
       genus = false, structure = false, no_symmetry = false, quiet = false;
  std::uint64_t budget = 0;
  std::size_t jobs = 1;
  std::string output;
};

int cmd_invariants(const InvariantsArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Loaded l;
  try {
    l = load(a.group, a.jobs);
  } catch (...) {
    return report_load_error(a.group);
  }
  InvariantOptions options;
  options.node_budget = a.budget;
  options.use_symmetry = !a.no_symmetry;
  if (a.clique || a.independence || a.domination || a.connectivity || a.hamiltonian || a.genus || a.structure) {
    options.select = InvariantSelection::none();
    options.select.clique = a.clique;
    options.select.independence = a.independence;
    options.select.domination = a.domination;
    options.select.connectivity = a.connectivity;
    options.select.hamiltonian = a.hamiltonian;
    options.select.genus = a.genus;
    options.select.structure = a.structure;
  }
  ReportDocument doc;
  doc.group_name = l.table->name();
  doc.group_order = l.table->order();
  doc.sol_size = l.st->radical_size();
  doc.invariants = compute_invariants(*l.st, l.ns, options);
  doc.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!a.output.empty()) write_report(doc, a.output);
  if (!a.quiet) print_report(doc, std::cout);
  if (doc.invariants.budget_exceeded()) return budget;
  return doc.invariants.all_checks_pass() ? ok : failed;
}

int cmd_verify(const VerifyOptions& options, const std::string& claims_path) {
  const auto claims = load_claims(claims_path);
  Verifier verifier(options);
  const auto results = verifier.run(claims);
  std::size_t widths[3] = {2, 8, 8};
  for (const auto& r : results) {
    widths[0] = std::max(widths[0], r.claim.id.size());
    widths[1] = std::max(widths[1], r.expected.size());
    widths[2] = std::max(widths[2], r.computed.size());
  }
  auto row = [&](const std::string& id, const std::string& e, const std::string& c, const std::string& v,
                 const std::string& d) {
    std::cout << std::left << std::setw(static_cast<int>(widths[0] + 2)) << id
              << std::setw(static_cast<int>(std::min<std::size_t>(widths[1], 30) + 2)) << e
              << std::setw(static_cast<int>(std::min<std::size_t>(widths[2], 30) + 2)) << c << std::setw(9) << v << d
              << "\n";
  };
  row("claim", "expected", "computed", "verdict", "detail");
  std::size_t pass = 0, fail = 0, flagged = 0;
  for (const auto& r : results) {
    row(r.claim.id, r.expected, r.computed, to_string(r.verdict), r.detail);
    (r.verdict == Verdict::pass ? pass : r.verdict == Verdict::fail ? fail : flagged)++;
  }
  std::cout << "\n" << results.size() << " claims: " << pass << " pass, " << fail << " fail, " << flagged
            << " flagged\n";
  return fail == 0 ? ok : failed;
}

int cmd_iso(const std::string& ga, const std::string& gb, std::uint64_t node_budget, const std::string& mapping_path,
            bool confirm) {
  Loaded a, b;
  try {
    a = load(ga, 1);
  } catch (...) {
    return report_load_error(ga);
  }
  try {
    b = load(gb, 1);
  } catch (...) {
    return report_load_error(gb);
  }
  NSIsoOptions options;
  options.node_budget = node_budget;
  options.confirm = confirm;
  const auto r = ns_isomorphic(a.ns, b.ns, options);
  if (r.outcome == IsoOutcome::budget_exceeded) {
    std::cout << "unknown: node budget exceeded after " << r.nodes << " nodes\n";
    return budget;
  }
  std::cout << "NS_" << a.table->name() << (r.isomorphic() ? " is isomorphic to NS_" : " is not isomorphic to NS_")
            << b.table->name() << "\n";
  if (r.isomorphic() && !mapping_path.empty()) {
    std::ofstream out(mapping_path);
    out << "# vertex of NS_" << a.table->name() << " -> vertex of NS_" << b.table->name() << "\n";
    for (Vertex v = 0; v < r.mapping->size(); ++v)
      out << a.table->element(a.ns.elements[v]).to_cycles() << ' '
          << b.table->element(b.ns.elements[(*r.mapping)[v]]).to_cycles() << '\n';
  }
  return r.isomorphic() ? ok : failed;
}

int cmd_scan(const std::string& dir, bool builtins, const std::string& predicate, std::uint64_t node_budget) {
  static const std::vector<std::string> predicates{"omega_eq_8", "lambda_in_2_3", "hamiltonian_unknown", "fs_group"};
  if (std::find(predicates.begin(), predicates.end(), predicate) == predicates.end()) {
    std::cerr << "unknown predicate '" << predicate << "' (expected one of " << join(predicates, ", ") << ")\n";
    return failed;
  }
  std::vector<std::string> inputs;
  if (builtins) {
    inputs = builtin_catalog();
  } else {
    if (!std::filesystem::is_directory(dir)) {
      std::cerr << "not a directory: " << dir << "\n";
      return unknown_group;
    }
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file()) inputs.push_back(entry.path().string());
    std::sort(inputs.begin(), inputs.end());
  }
  InvariantOptions options;
  options.node_budget = node_budget;
  options.select = InvariantSelection::none();
  options.select.clique = predicate == "omega_eq_8";
  options.select.domination = predicate == "lambda_in_2_3";
  options.select.hamiltonian = predicate == "hamiltonian_unknown";

  std::size_t scanned = 0, matches = 0, skipped = 0, errors = 0;
  for (const auto& input : inputs) {
    Loaded l;
    try {
      l = load(input, 1);
    } catch (const SolvableGroupError&) {
      std::cout << "skip   " << input << " (solvable)\n";
      ++skipped;
      continue;
    } catch (const std::exception& e) {
      std::cout << "error  " << input << ": " << e.what() << "\n";
      ++errors;
      continue;
    }
    ++scanned;
    bool match = false;
    std::string detail;
    if (predicate == "fs_group") {
      match = is_fs_group(*l.st);
    } else {
      const auto r = compute_invariants(*l.st, l.ns, options);
      if (predicate == "omega_eq_8") {
        match = r.clique->exact && r.clique->value == 8;
        detail = "omega " + std::to_string(r.clique->value) + (r.clique->exact ? "" : " (inexact)");
      } else if (predicate == "lambda_in_2_3") {
        match = r.domination->exact && (r.domination->value == 2 || r.domination->value == 3);
        detail = "lambda " + std::to_string(r.domination->value) + (r.domination->exact ? "" : " (inexact)");
      } else {
        match = r.hamiltonian->status == "unknown";
        detail = r.hamiltonian->status;
      }
    }
    const std::size_t quotient_order = l.table->order() / l.st->radical_size();
    if (match) ++matches;
    std::cout << (match ? "match  " : "-      ") << l.table->name() << " (order " << l.table->order()
              << ", |G/Sol| " << quotient_order << ")" << (detail.empty() ? "" : ": " + detail) << "\n";
  }
  std::cout << scanned << " scanned, " << matches << " match " << predicate << ", " << skipped << " solvable, "
            << errors << " errors\n";
  return ok;
}

int cmd_export(const std::string& group, const std::string& output, bool use_quotient) {
  Loaded l;
  try {
    l = load(group, 1);
  } catch (...) {
    return report_load_error(group);
  }
  const NSGraph g = use_quotient ? quotient(l.ns) : l.ns;
  if (output.empty() || output == "-") {
    write_edge_list(g, std::cout);
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return failed;
    }
    write_edge_list(g, out);
  }
  return ok;
}

int cmd_group_file(const std::string& group, const std::string& output) {
  GroupSpec spec;
  try {
    spec = builtin(group);
  } catch (const UnknownGroup& e) {
    std::cerr << e.what() << "\n";
    return unknown_group;
  }
  if (output.empty() || output == "-") std::cout << format_group_file(spec);
  else write_group_file(spec, output);
  return ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-solvable graphs of finite groups: invariants and claim verification"};
  app.require_subcommand(1);
  const std::uint64_t env_budget = default_budget();

  InvariantsArgs inv;
  inv.budget = env_budget;
  auto* invariants = app.add_subcommand("invariants", "Compute the invariant report of NS_G");
  invariants->add_option("group", inv.group, "Builtin group name or group file")->required();
  invariants->add_flag("--clique", inv.clique, "Clique number");
  invariants->add_flag("--independence", inv.independence, "Independence number");
  invariants->add_flag("--domination", inv.domination, "Domination number");
  invariants->add_flag("--connectivity", inv.connectivity, "Vertex connectivity");
  invariants->add_flag("--hamiltonian", inv.hamiltonian, "Hamiltonian cycle");
  invariants->add_flag("--genus", inv.genus, "Genus lower bounds and 2K5 witness");
  invariants->add_flag("--structure", inv.structure, "Diameter, bipartite, multipartite, Fs-group");
  invariants->add_flag("--no-symmetry", inv.no_symmetry, "Do not use the conjugation action in the solvers");
  invariants->add_option("--budget", inv.budget, "Search node budget per solver (default NSGRAPH_BUDGET or 1e8)");
  invariants->add_option("--jobs", inv.jobs, "Worker threads for the solvability table")->check(CLI::PositiveNumber);
  invariants->add_option("-o,--output", inv.output, "Write the JSON report here");
  invariants->add_flag("-q,--quiet", inv.quiet, "Do not print the summary");

  VerifyOptions vopt;
  vopt.node_budget = env_budget;
  std::string data_dir = NSG_DATA_DIR, claims_path;
  auto* verify = app.add_subcommand("verify-paper", "Run the claim table and print verdicts");
  verify->add_option("--only", vopt.only, "Claim ids or procedure names to run");
  verify->add_option("--jobs", vopt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--budget", vopt.node_budget, "Search node budget per solver");
  verify->add_option("--data-dir", data_dir, "Directory holding claims.json and cycle files");
  verify->add_option("--claims", claims_path, "Claims file (default <data-dir>/claims.json)");

  std::string iso_a, iso_b, mapping;
  std::uint64_t iso_budget = env_budget;
  bool confirm = false;
  auto* iso = app.add_subcommand("iso", "Decide whether two non-solvable graphs are isomorphic");
  iso->add_option("group_a", iso_a)->required();
  iso->add_option("group_b", iso_b)->required();
  iso->add_option("--mapping", mapping, "Write the vertex bijection here");
  iso->add_option("--budget", iso_budget, "Search node budget");
  iso->add_flag("--confirm", confirm, "Also run the general checker when the blow-up shortcut succeeds");

  std::string scan_dir, predicate;
  bool scan_builtins = false;
  std::uint64_t scan_budget = env_budget;
  auto* scan = app.add_subcommand("scan", "Evaluate a predicate on every group file in a directory");
  scan->add_option("dir", scan_dir, "Directory of group files");
  scan->add_option("-p,--predicate", predicate, "omega_eq_8, lambda_in_2_3, hamiltonian_unknown or fs_group")
      ->required();
  scan->add_flag("--builtins", scan_builtins, "Scan the builtin catalog instead of a directory");
  scan->add_option("--budget", scan_budget, "Search node budget per solver");

  std::string export_group, export_out;
  bool export_quotient = false;
  auto* exp = app.add_subcommand("export-graph", "Write NS_G as an edge list");
  exp->add_option("group", export_group)->required();
  exp->add_option("-o,--output", export_out, "Output file (default stdout)");
  exp->add_flag("--quotient", export_quotient, "Export NS of G/Sol(G) instead");

  std::string gf_group, gf_out;
  auto* gf = app.add_subcommand("group-file", "Print the group file of a builtin group");
  gf->add_option("group", gf_group)->required();
  gf->add_option("-o,--output", gf_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*invariants) return cmd_invariants(inv);
    if (*verify) {
      vopt.data_dir = data_dir;
      return cmd_verify(vopt, claims_path.empty() ? data_dir + "/claims.json" : claims_path);
    }
    if (*iso) return cmd_iso(iso_a, iso_b, iso_budget, mapping, confirm);
    if (*scan) {
      if (!scan_builtins && scan_dir.empty()) {
        std::cerr << "scan needs a directory or --builtins\n";
        return failed;
      }
      return cmd_scan(scan_dir, scan_builtins, predicate, scan_budget);
    }
    if (*exp) return cmd_export(export_group, export_out, export_quotient);
    if (*gf) return cmd_group_file(gf_group, gf_out);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal consistency check failed: " << e.what() << "\n";
    return failed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
  return failed;
}
