#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hasse/bounds.hpp"
#include "hasse/classify.hpp"
#include "hasse/error.hpp"
#include "hasse/families.hpp"
#include "hasse/group_file.hpp"
#include "hasse/lattice.hpp"

namespace hasse::cli {

namespace {

struct RunConfig {
  std::size_t max_order = 36;
  std::uint64_t prime_bound = 31;
  unsigned exp_bound = 4;
  Limits limits;
  std::string output;  // empty: standard output
  std::string format = "json";
  std::string family;
  std::vector<std::int64_t> params;
  std::string input;
  std::string target;
  bool extended = false;
  bool list = false;
};

// Writes a command's text either to the -o file or to `out`.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error(ErrorKind::InputError, "cannot open " + cfg.output + " for writing");
  file << text;
}

int run_construct(const RunConfig& cfg, std::ostream& out) {
  FiniteGroup g = construct({cfg.family, cfg.params}, cfg.limits.construction);
  emit(cfg, to_group_file(g), out);
  return kExitPass;
}

int run_catalog(const RunConfig& cfg, std::ostream& out) {
  auto entries = catalog(cfg.max_order, cfg.limits);
  if (cfg.extended) entries = merge_catalog(std::move(entries), theorem_a_extras(cfg.limits), cfg.limits);
  std::ostringstream text;
  for (const auto& e : entries) {
    text << e.group.order() << "\t" << e.name << "\t";
    bool first = true;
    for (const auto& t : e.known_tags) {
      text << (first ? "" : ",") << to_string(t);
      first = false;
    }
    text << "\n";
  }
  emit(cfg, text.str(), out);
  return kExitPass;
}

int run_lattice(const RunConfig& cfg, std::ostream& out) {
  SubgroupLattice lat = all_subgroups(read_group_file(cfg.input), cfg.limits.lattice);
  emit(cfg, cfg.format == "dot" ? export_dot(lat) : lattice_report_json(lat), out);
  return kExitPass;
}

int run_degrees(const RunConfig& cfg, std::ostream& out) {
  SubgroupLattice lat = all_subgroups(read_group_file(cfg.input), cfg.limits.lattice);
  emit(cfg, degrees_report_json(lat), out);
  return kExitPass;
}

std::vector<CatalogEntry> verification_catalog(const RunConfig& cfg, std::size_t& max_order) {
  auto entries = catalog(cfg.max_order, cfg.limits);
  max_order = cfg.max_order;
  if (cfg.extended) {
    auto extras = theorem_a_extras(cfg.limits);
    for (const auto& e : extras) max_order = std::max(max_order, e.group.order());
    entries = merge_catalog(std::move(entries), std::move(extras), cfg.limits);
  }
  return entries;
}

bool report_ok(const BoundReport& r) {
  if (!r.holds) return false;
  if (r.equality_condition && *r.equality_condition != r.equality) return false;
  return true;
}

int run_bound_scan(const RunConfig& cfg, std::ostream& out, bool per_vertex) {
  std::size_t max_order = 0;
  auto entries = verification_catalog(cfg, max_order);
  std::string text;
  bool ok = true;
  for (const auto& e : entries) {
    if (e.group.order() == 1 || e.group.order() > max_order || !is_solvable(e.group)) continue;
    SubgroupLattice lat = all_subgroups(e.group, cfg.limits.lattice);
    auto reports = per_vertex ? vertex_degree_bounds(lat) : group_bounds(lat);
    for (const auto& r : reports) {
      ok = ok && report_ok(r);
      text += to_json(r) + "\n";
    }
  }
  emit(cfg, text, out);
  return ok ? kExitPass : kExitCounterexample;
}

int run_prime_power_sums(const RunConfig& cfg, std::ostream& out) {
  std::string text;
  bool ok = true;
  for (const auto& r : prime_power_sum_scan(cfg.prime_bound, cfg.exp_bound)) {
    ok = ok && r.holds;
    text += to_json(r) + "\n";
  }
  emit(cfg, text, out);
  return ok ? kExitPass : kExitCounterexample;
}

int run_orders(const RunConfig& cfg, std::ostream& out) {
  std::string text;
  bool ok = true;
  for (std::uint64_t n = 1; n <= cfg.max_order; ++n) {
    CandidateOrders c = candidate_orders(n);
    ok = ok && c.within_expected && (c.small_case == (n <= 11));
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["discriminant"] = c.discriminant;
    j["small_case"] = c.small_case;
    j["divisors"] = c.divisors;
    j["within_expected"] = c.within_expected;
    text += j.dump() + "\n";
  }
  emit(cfg, text, out);
  return ok ? kExitPass : kExitCounterexample;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.target == "bounds") return run_bound_scan(cfg, out, false);
  if (cfg.target == "lemma21") return run_bound_scan(cfg, out, true);
  if (cfg.target == "lemma23") return run_prime_power_sums(cfg, out);
  if (cfg.target == "orders") return run_orders(cfg, out);

  std::size_t max_order = 0;
  auto entries = verification_catalog(cfg, max_order);
  VerificationReport report;
  if (cfg.target == "theorem-1.1")
    report = verify_large_degree(entries, max_order, cfg.limits);
  else if (cfg.target == "theorem-a")
    report = verify_prime_order_count(entries, max_order, cfg.limits);
  else if (cfg.target == "wall")
    report = verify_involution_count(entries, max_order, cfg.limits);
  else if (cfg.target == "cor-1.2")
    report = verify_three_quarter_degree(entries, max_order, cfg.limits);
  else
    report = verify_half_degree(entries, max_order, cfg.limits);
  emit(cfg, to_json(report), out);
  return report.passed ? kExitPass : kExitCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Subgroup graphs of finite groups", "hasse"};
  app.require_subcommand(1);

  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--lattice-cap", cfg.limits.lattice, "Largest group order for lattice enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--iso-cap", cfg.limits.isomorphism, "Largest group order for isomorphism tests")
        ->check(CLI::PositiveNumber);
    sub->add_option("-o", cfg.output, "Output file");
  };

  auto* construct_cmd = app.add_subcommand("construct", "Write a group file for a named family");
  construct_cmd->add_option("family", cfg.family, "Family name")
      ->required()
      ->check(CLI::IsMember(constructor_names()));
  construct_cmd->add_option("params", cfg.params, "Integer parameters");
  add_caps(construct_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "Print the built-in catalog");
  catalog_cmd->add_flag("--list", cfg.list, "List entries with orders and known tags");
  catalog_cmd->add_option("--max-order", cfg.max_order)->check(CLI::PositiveNumber);
  catalog_cmd->add_flag("--extended", cfg.extended, "Include the extra named representatives");
  add_caps(catalog_cmd);

  auto* lattice_cmd = app.add_subcommand("lattice", "Subgroup lattice report of a group file");
  lattice_cmd->add_option("file", cfg.input)->required();
  lattice_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));
  add_caps(lattice_cmd);

  auto* degrees_cmd = app.add_subcommand("degrees", "Per-vertex degrees of the subgroup graph");
  degrees_cmd->add_option("file", cfg.input)->required();
  add_caps(degrees_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verifier over the catalog");
  verify_cmd->add_option("target", cfg.target)
      ->required()
      ->check(CLI::IsMember({"theorem-1.1", "theorem-a", "wall", "cor-1.2", "cor-1.3", "bounds",
                             "lemma21", "lemma23", "orders"}));
  verify_cmd->add_option("--max-order", cfg.max_order)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--prime-bound", cfg.prime_bound)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--exp-bound", cfg.exp_bound)->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--extended", cfg.extended, "Add the extra named representatives");
  add_caps(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (construct_cmd->parsed()) return run_construct(cfg, out);
    if (catalog_cmd->parsed()) return run_catalog(cfg, out);
    if (lattice_cmd->parsed()) return run_lattice(cfg, out);
    if (degrees_cmd->parsed()) return run_degrees(cfg, out);
    return run_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hasse::cli
