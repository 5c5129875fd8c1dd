// germlab: invariants of function-germs with one-dimensional critical loci,
// and mechanical verification of the Lê–Greuel-type identities that relate
// them.
//
// Exit codes: 0 success / all identities verified; 2 some identity violated;
// 3 a theorem hypothesis failed for the given input; 4 unsupported or
// malformed input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "germlab/curve.hpp"
#include "germlab/invariants.hpp"
#include "germlab/parser.hpp"
#include "germlab/scenario.hpp"
#include "germlab/verify.hpp"

namespace {

using namespace germlab;

constexpr int kExitVerified = 0;
constexpr int kExitViolated = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitUnsupported = 4;

// 3-class: the input is understood but a theorem hypothesis fails for it.
bool is_hypothesis_kind(Errc k) {
  switch (k) {
    case Errc::HypothesisFailed:
    case Errc::NotACurve:
    case Errc::NonIsolated:
    case Errc::NotICIS:
    case Errc::GenericityUnstable:
    case Errc::OriginNotInVariety:
    case Errc::RestrictionVanishes:
    case Errc::SliceNotTransverse:
    case Errc::TransversalNotIsolated:
    case Errc::PolarNotCurve:
    case Errc::NonIsolatedIntersection:
      return true;
    default:
      return false;
  }
}

int exit_code_for(const Error& e) {
  return is_hypothesis_kind(e.kind()) ? kExitHypothesis : kExitUnsupported;
}

std::vector<std::string> split_vars(const std::string& spec) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : spec) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty())
    fail(Errc::MalformedScenario, "--vars needs a comma-separated list");
  return out;
}

std::string extnat_str(const ExtNat& v) {
  return v.finite ? v.value.get_str() : "infinite";
}

nlohmann::json extnat_value_json(const ExtNat& v) {
  if (!v.finite) return nlohmann::json("infinite");
  if (v.value.fits_slong_p()) return nlohmann::json(v.value.get_si());
  return nlohmann::json(v.value.get_str());
}

void emit_invariant(const std::string& name, const nlohmann::json& value,
                    std::uint64_t seed, bool as_json,
                    const std::string& human) {
  if (as_json) {
    nlohmann::json j;
    j["name"] = name;
    j["seed"] = seed;
    j["value"] = value;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << human << "\n";
  }
}

// Renders a branch parametrisation as (c1(t), ..., cn(t)).
std::string render_param(const SpaceBranch& b) {
  const std::vector<std::string> tvar = {"t"};
  std::string out = "(";
  for (std::size_t i = 0; i < b.coords.size(); ++i) {
    if (i) out += ", ";
    const auto& u = b.coords[i];
    if (u.is_zero()) {
      out += "0";
      continue;
    }
    std::string piece;
    for (int e = 0; e <= u.degree(); ++e) {
      AlgebraicNumber c = u.coeff(e);
      if (c == AlgebraicNumber(0L)) continue;
      std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
      std::string cs = detail::coeff_to_display(c);
      std::string term;
      if (mono.empty()) {
        term = cs;
      } else if (cs == "1") {
        term = mono;
      } else if (cs == "-1") {
        term = "-" + mono;
      } else {
        term = cs + "*" + mono;
      }
      if (!piece.empty() && term[0] != '-') piece += "+";
      piece += term;
    }
    out += piece;
  }
  out += ")";
  return out;
}

struct InvariantArgs {
  std::string vars;
  std::string poly;
  std::string poly2;
  std::uint64_t seed = 42;
  bool as_json = false;
};

void add_invariant_options(CLI::App* cmd, InvariantArgs& args,
                           bool with_poly2) {
  cmd->add_option("--vars", args.vars, "comma-separated variable names")
      ->required();
  cmd->add_option("poly", args.poly, "polynomial germ")->required();
  if (with_poly2)
    cmd->add_option("--poly2", args.poly2, "second member of the pair")
        ->required();
  cmd->add_option("--seed", args.seed, "seed for generic choices");
  cmd->add_flag("--json", args.as_json, "emit {name, value, seed} as JSON");
}

int cmd_milnor(const InvariantArgs& a) {
  auto vars = split_vars(a.vars);
  auto f = parse_polynomial(a.poly, vars);
  ExtNat mu = milnor_number(f);
  emit_invariant("milnor", extnat_value_json(mu), a.seed, a.as_json,
                 extnat_str(mu));
  return kExitVerified;
}

int cmd_sectional(const InvariantArgs& a) {
  auto vars = split_vars(a.vars);
  auto f = parse_polynomial(a.poly, vars);
  auto res = sectional_milnor(f, a.seed);
  emit_invariant("sectional", extnat_value_json(res.value), a.seed, a.as_json,
                 extnat_str(res.value));
  return kExitVerified;
}

int cmd_branches(const InvariantArgs& a) {
  auto vars = split_vars(a.vars);
  auto g = parse_polynomial(a.poly, vars);
  BranchSet bs = decompose_critical_locus(jacobian_ideal(g), a.seed);
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream human;
  human << bs.branches.size() << " branch"
        << (bs.branches.size() == 1 ? "" : "es") << " (" << bs.certificate
        << ")";
  for (std::size_t j = 0; j < bs.branches.size(); ++j) {
    long mult = branch_multiplicity(bs.branches[j],
                                    derive_seed(a.seed, "branch-mult"));
    std::string param = render_param(bs.branches[j]);
    human << "\n  branch " << j << ": multiplicity " << mult << ", param "
          << param;
    nlohmann::json bj;
    bj["multiplicity"] = mult;
    bj["param"] = param;
    arr.push_back(bj);
  }
  nlohmann::json value;
  value["certificate"] = bs.certificate;
  value["branches"] = arr;
  emit_invariant("branches", value, a.seed, a.as_json, human.str());
  return kExitVerified;
}

int cmd_eu(const InvariantArgs& a) {
  auto vars = split_vars(a.vars);
  auto g = parse_polynomial(a.poly, vars);
  ExtNat mu = milnor_number(g);
  Integer eu;
  if (mu.finite) {
    eu = euler_obstruction_isolated(g, a.seed);
  } else {
    if (krull_dimension_at_origin(jacobian_ideal(g)) != 1)
      fail(Errc::NotACurve,
           "the critical locus has dimension >= 2; the Euler obstruction "
           "pipeline handles isolated and one-dimensional loci");
    BranchSet bs =
        decompose_critical_locus(jacobian_ideal(g), derive_seed(a.seed, "sigma-g"));
    auto data = branch_invariants(g, bs, a.seed);
    eu = euler_obstruction_1dim(g, data, a.seed);
  }
  nlohmann::json value = eu.fits_slong_p() ? nlohmann::json(eu.get_si())
                                           : nlohmann::json(eu.get_str());
  emit_invariant("eu", value, a.seed, a.as_json, eu.get_str());
  return kExitVerified;
}

int cmd_legreuel(const InvariantArgs& a) {
  auto vars = split_vars(a.vars);
  auto f = parse_polynomial(a.poly, vars);
  auto g = parse_polynomial(a.poly2, vars);
  ExtNat lg = le_greuel_number(f, g);
  emit_invariant("legreuel", extnat_value_json(lg), a.seed, a.as_json,
                 extnat_str(lg));
  return kExitVerified;
}

int cmd_scenarios() {
  for (const auto& name : bundled_scenario_names()) std::cout << name << "\n";
  return kExitVerified;
}

int cmd_verify(const std::string& target, std::optional<std::uint64_t> seed,
               const std::string& json_path) {
  auto t0 = std::chrono::steady_clock::now();

  std::string text;
  if (is_bundled_scenario(target)) {
    text = bundled_scenario_text(target);
  } else {
    std::ifstream in(target, std::ios::binary);
    if (!in)
      fail(Errc::MalformedScenario,
           "cannot read scenario file \"" + target +
               "\" (and it is not a bundled scenario name)");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  Scenario sc = parse_scenario_text(text);
  RunReport report = verify_scenario(sc, seed);

  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

  std::cout << "scenario: " << report.scenario << "   seed: " << report.seed
            << "\n";
  for (const auto& c : report.checks) {
    std::cout << "  " << c.name << ": " << c.status;
    if (c.lhs && c.rhs)
      std::cout << "   lhs = " << c.lhs->get_str()
                << "   rhs = " << c.rhs->get_str();
    std::cout << "\n";
    if (!c.reason.empty()) std::cout << "      reason: " << c.reason << "\n";
    for (const auto& k : c.counts)
      if (!k.nonnegative)
        std::cout << "      count " << k.label << " = " << k.value.get_str()
                  << " is negative\n";
  }
  int code = report.exit_code();
  std::cout << (code == kExitVerified
                    ? "all identities verified"
                    : code == kExitViolated ? "some identities VIOLATED"
                                            : "some hypotheses failed")
            << "  (" << ms << " ms)\n";

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out)
      fail(Errc::MalformedScenario,
           "cannot write report to \"" + json_path + "\"");
    out << report_to_canonical_string(report);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "germlab: local invariants of polynomial germs with one-dimensional "
      "critical loci, and verification of the identities relating them"};
  app.require_subcommand(1);

  InvariantArgs milnor_args, sectional_args, branches_args, eu_args,
      legreuel_args;

  auto* milnor = app.add_subcommand("milnor", "Milnor number of a germ");
  add_invariant_options(milnor, milnor_args, false);
  auto* sectional = app.add_subcommand(
      "sectional", "sectional Milnor number (generic hyperplane slice)");
  add_invariant_options(sectional, sectional_args, false);
  auto* branches = app.add_subcommand(
      "branches", "branch decomposition of the critical locus");
  add_invariant_options(branches, branches_args, false);
  auto* eu = app.add_subcommand(
      "eu", "local Euler obstruction of the hypersurface germ");
  add_invariant_options(eu, eu_args, false);
  auto* legreuel = app.add_subcommand(
      "legreuel", "Le-Greuel colength of a pair of germs");
  add_invariant_options(legreuel, legreuel_args, true);

  std::string verify_target, verify_json;
  std::optional<std::uint64_t> verify_seed;
  std::uint64_t verify_seed_raw = 0;
  auto* verify = app.add_subcommand(
      "verify", "run the identity checks of a scenario file");
  verify->add_option("file", verify_target,
                     "scenario file path or bundled scenario name")
      ->required();
  auto* seed_opt =
      verify->add_option("--seed", verify_seed_raw, "override the file seed");
  verify->add_option("--json", verify_json, "write the canonical JSON report");

  auto* scenarios =
      app.add_subcommand("scenarios", "list bundled scenario names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return kExitUnsupported;
  }

  try {
    if (milnor->parsed()) return cmd_milnor(milnor_args);
    if (sectional->parsed()) return cmd_sectional(sectional_args);
    if (branches->parsed()) return cmd_branches(branches_args);
    if (eu->parsed()) return cmd_eu(eu_args);
    if (legreuel->parsed()) return cmd_legreuel(legreuel_args);
    if (scenarios->parsed()) return cmd_scenarios();
    if (verify->parsed()) {
      if (seed_opt->count() > 0) verify_seed = verify_seed_raw;
      return cmd_verify(verify_target, verify_seed, verify_json);
    }
  } catch (const germlab::Error& e) {
    std::cerr << "error: " << germlab::errc_name(e.kind()) << ": " << e.what()
              << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  }
  return kExitUnsupported;
}
