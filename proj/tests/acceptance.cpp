// Acceptance gate: one pass/fail line per shipping criterion, with timings.
// Exits nonzero if any criterion fails its exactness or time budget.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "germlab/invariants.hpp"
#include "germlab/parser.hpp"
#include "germlab/polar.hpp"
#include "germlab/scenario.hpp"
#include "germlab/verify.hpp"

using namespace germlab;

namespace {

const std::vector<std::string> xy = {"x", "y"};
const std::vector<std::string> xyz = {"x", "y", "z"};

Polynomial<Rational> P(const std::string& text, const std::vector<std::string>& vars) {
  return parse_polynomial(text, vars);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct SuiteRun {
  std::map<std::string, RunReport> reports;
  std::map<std::string, double> wall;
  double total = 0;
};

SuiteRun run_suite(std::uint64_t seed) {
  SuiteRun run;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : bundled_scenario_names()) {
    auto s0 = std::chrono::steady_clock::now();
    run.reports.emplace(name, verify_scenario(bundled_scenario(name), seed));
    run.wall[name] = seconds_since(s0);
  }
  run.total = seconds_since(t0);
  return run;
}

const IdentityReport* find_check(const RunReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

int failures = 0;

void criterion(int number, const std::string& label, double budget,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const Error& e) {
    detail = std::string("unexpected error: ") + errc_name(e.kind()) + ": " + e.what();
  } catch (const std::exception& e) {
    detail = std::string("unexpected exception: ") + e.what();
  }
  double dt = seconds_since(t0);
  if (dt > budget) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << label
            << "  (" << std::fixed << std::setprecision(2) << dt << "s / budget "
            << std::setprecision(0) << budget << "s)";
  if (!ok && !detail.empty()) std::cout << "  -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

}  // namespace

int main() {
  // The suite runs once up front; identity-level criteria read these reports.
  SuiteRun base = run_suite(42);

  criterion(1, "Milnor-number grids match the closed form", 1.0, [&](std::string& why) {
    for (int a = 2; a <= 5; ++a)
      for (int b = 2; b <= 5; ++b) {
        auto mu = milnor_number(
            P("x^" + std::to_string(a) + " + y^" + std::to_string(b), xy));
        if (!(mu == ExtNat::of(Integer((a - 1) * (b - 1))))) {
          why = "surface grid failed at (" + std::to_string(a) + "," + std::to_string(b) + ")";
          return false;
        }
      }
    for (int a = 2; a <= 4; ++a)
      for (int b = 2; b <= 4; ++b)
        for (int c = 2; c <= 4; ++c) {
          auto mu = milnor_number(P("x^" + std::to_string(a) + " + y^" +
                                        std::to_string(b) + " + z^" + std::to_string(c),
                                    xyz));
          if (!(mu == ExtNat::of(Integer((a - 1) * (b - 1) * (c - 1))))) {
            why = "solid grid failed at (" + std::to_string(a) + "," + std::to_string(b) +
                  "," + std::to_string(c) + ")";
            return false;
          }
        }
    return true;
  });

  criterion(2, "Le-Greuel closure on bundled ICIS pairs", 5.0, [&](std::string& why) {
    // Direct route: mu(f) + mu(restriction) against the colength.
    struct Pair {
      std::string f, g;
      long expect;
    };
    for (const Pair& p : std::vector<Pair>{{"x + 2*y + 3*z", "x^2 - y^2*z", 2},
                                           {"x + y + z", "x^2 + y^2 + z^2", 1},
                                           {"x + 2*y + 3*z", "x^2 + y^2*z^2", 3}}) {
      auto f = P(p.f, xyz);
      auto g = P(p.g, xyz);
      auto mu_f = milnor_number(f);
      auto mu_v = slice_milnor(g, linear_form_coefficients(f));
      auto lg = le_greuel_number(f, g);
      if (!mu_f.finite || !mu_v.finite || !lg.finite ||
          mu_f.value + mu_v.value != lg.value) {
        why = "direct closure failed for (" + p.f + ", " + p.g + ")";
        return false;
      }
      if (lg.value != p.expect) {
        why = "unexpected colength for (" + p.f + ", " + p.g + ")";
        return false;
      }
    }
    // Scenario route: every bundled legreuel-closure check verified.
    int present = 0;
    for (const auto& [name, rep] : base.reports)
      if (const auto* c = find_check(rep, "legreuel-closure")) {
        ++present;
        if (c->status != "verified") {
          why = "legreuel-closure not verified on " + name;
          return false;
        }
      }
    if (present < 3) {
      why = "fewer than 3 bundled pairs carry the closure check";
      return false;
    }
    return true;
  });

  criterion(3, "branch pipeline: counts, multiplicities, transversal data", 5.0,
            [&](std::string& why) {
    struct Expect {
      std::string g;
      std::size_t branches;
    };
    for (const Expect& e :
         std::vector<Expect>{{"x^2 - y^2*z", 1}, {"x^2 + y^2*z^2", 2}}) {
      auto g = P(e.g, xyz);
      std::vector<Integer> mults_at_seed;
      for (std::uint64_t seed : {42ull, 1337ull, 9001ull}) {
        auto bs = decompose_critical_locus(jacobian_ideal(g), seed);
        if (bs.branches.size() != e.branches) {
          why = e.g + ": wrong branch count at seed " + std::to_string(seed);
          return false;
        }
        auto data = branch_invariants(g, bs, seed);
        std::vector<Integer> mults;
        for (const auto& d : data) {
          mults.push_back(d.multiplicity);
          if (d.multiplicity != 1 || d.transversal.sectional != 1) {
            why = e.g + ": transversal data off at seed " + std::to_string(seed);
            return false;
          }
        }
        for (const auto& b : bs.branches)
          for (int k = 0; k < 3; ++k) {
            auto l = random_linear_form(3, derive_seed(seed, "probe-" + std::to_string(k)));
            if (local_degree_along_branch(l, b) != 1) {
              why = e.g + ": generic linear degree differs from 1";
              return false;
            }
          }
        if (mults_at_seed.empty())
          mults_at_seed = mults;
        else if (mults_at_seed != mults) {
          why = e.g + ": multiplicities drift across seeds";
          return false;
        }
      }
    }
    return true;
  });

  criterion(4, "Morse-count two-route agreement on the four 1-dim scenarios", 40.0,
            [&](std::string& why) {
    for (const std::string name : {"whitney-umbrella", "two-branch", "whitney-sphere",
                                   "two-branch-sphere"}) {
      const auto& rep = base.reports.at(name);
      const auto* c = find_check(rep, "morse-count-correction");
      if (!c) {
        why = name + " lacks the Morse-count check";
        return false;
      }
      if (c->status != "verified" || !c->lhs || !c->rhs || *c->lhs != *c->rhs) {
        why = name + ": routes disagree";
        return false;
      }
      if (*c->lhs < 0) {
        why = name + ": Morse count negative";
        return false;
      }
      if (base.wall.at(name) > 10.0) {
        why = name + " exceeded its 10s scenario budget";
        return false;
      }
    }
    if (*find_check(base.reports.at("whitney-umbrella"), "morse-count-correction")->lhs != 1) {
      why = "whitney-umbrella with generic linear f must yield exactly one Morse point";
      return false;
    }
    return true;
  });

  criterion(5, "obstruction assembly equals the hyperplane route; isolated limit", 10.0,
            [&](std::string& why) {
    for (const std::string name : {"whitney-umbrella", "two-branch"}) {
      const auto* c = find_check(base.reports.at(name), "hyperplane-obstruction-correction");
      if (!c || c->status != "verified") {
        why = name + ": hyperplane obstruction route not verified";
        return false;
      }
    }
    SplitMix64 rng(424242);
    for (int trial = 0; trial < 5; ++trial) {
      auto g = P("x^" + std::to_string(rng.next_in(2, 4)) + " + y^" +
                     std::to_string(rng.next_in(2, 4)) + " + z^" +
                     std::to_string(rng.next_in(2, 4)),
                 xyz);
      std::uint64_t seed = 42 + trial;
      if (euler_obstruction_1dim(g, {}, seed) != euler_obstruction_isolated(g, seed)) {
        why = "isolated limit mismatch on trial " + std::to_string(trial);
        return false;
      }
    }
    return true;
  });

  criterion(6, "degeneration suite on the isolated-g scenarios", 15.0,
            [&](std::string& why) {
    const std::vector<std::string> isolated = {"a1-cone", "brieskorn-333", "cusp-curve",
                                               "icis-sphere-linear"};
    const std::vector<std::string> named = {
        "morse-count-correction", "pair-exchange-corrected",
        "hyperplane-obstruction-correction", "euler-obstruction-difference",
        "fiber-difference-correction", "isolated-baseline"};
    for (const auto& name : isolated) {
      const auto& rep = base.reports.at(name);
      if (rep.exit_code() != 0) {
        why = name + " did not fully verify";
        return false;
      }
      for (const auto& check : named)
        if (const auto* c = find_check(rep, check); !c || c->status != "verified") {
          why = name + ": " + check + " not verified";
          return false;
        }
    }
    return true;
  });

  criterion(7, "parity inequalities on bundled and randomized germs", 15.0,
            [&](std::string& why) {
    for (const auto& [name, rep] : base.reports) {
      const auto* c = find_check(rep, "parity-inequality");
      if (!c || c->status != "verified") {
        why = name + ": parity check missing or not verified";
        return false;
      }
    }
    SplitMix64 rng(31337);
    for (int n = 2; n <= 4; ++n) {
      auto vars = default_var_names(n);
      for (int trial = 0; trial < 10; ++trial) {
        std::string text;
        for (int i = 0; i < n; ++i)
          text += (i ? " + " : "") + vars[i] + "^" + std::to_string(rng.next_in(2, 4));
        auto g = parse_polynomial(text, vars);
        std::uint64_t seed = 42 + trial;
        auto sec = sectional_milnor(g, derive_seed(seed, "parity"));
        if (!sec.value.finite) {
          why = "sectional value infinite on a Brieskorn germ";
          return false;
        }
        Integer b_slice =
            Integer(1) + Integer(invariant_detail::sign_pow(n - 2)) * sec.value.value;
        Integer eu0 = euler_obstruction_isolated(g, seed);
        bool ok = (n % 2 == 0) ? b_slice >= eu0 : b_slice <= eu0;
        if (!ok) {
          why = "parity inequality violated for " + text;
          return false;
        }
      }
    }
    return true;
  });

  criterion(8, "sign and integrality laws suite-wide", 2.0, [&](std::string& why) {
    for (const auto& [name, rep] : base.reports) {
      for (const auto& c : rep.checks)
        for (const auto& cnt : c.counts)
          if (!cnt.nonnegative) {
            why = name + "/" + c.name + ": count '" + cnt.label + "' negative";
            return false;
          }
      if (const auto* c = find_check(rep, "isolated-baseline"); c && c->status != "verified") {
        why = name + ": signed defect law not verified";
        return false;
      }
    }
    return true;
  });

  criterion(9, "determinism across repeated runs and seeds", 30.0, [&](std::string& why) {
    SuiteRun again = run_suite(42);
    for (const auto& name : bundled_scenario_names())
      if (report_to_canonical_string(base.reports.at(name)) !=
          report_to_canonical_string(again.reports.at(name))) {
        why = name + ": reports differ between identical runs";
        return false;
      }
    auto statuses = [](const SuiteRun& r) {
      std::vector<std::string> v;
      for (const auto& [name, rep] : r.reports)
        for (const auto& c : rep.checks) v.push_back(name + "/" + c.name + "=" + c.status);
      return v;
    };
    auto base_statuses = statuses(base);
    for (std::uint64_t seed : {std::uint64_t(1337), std::uint64_t(9001)})
      if (statuses(run_suite(seed)) != base_statuses) {
        why = "statuses drift at seed " + std::to_string(seed);
        return false;
      }
    return true;
  });

  criterion(10, "performance envelope", 1.0, [&](std::string& why) {
    if (base.total >= 60.0) {
      why = "full suite took " + std::to_string(base.total) + "s";
      return false;
    }
    for (const auto& [name, t] : base.wall)
      if (t >= 10.0) {
        why = name + " took " + std::to_string(t) + "s";
        return false;
      }
    return true;
  });

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
