// Scenario schema, bundled corpus, and mechanical verification of the
// correction identities: statuses, pinned values, determinism, exit codes.
#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "germlab/scenario.hpp"
#include "germlab/verify.hpp"

using namespace germlab;

namespace {

// Each bundled scenario is verified once per process; every test case reads
// from this cache.
const RunReport& report_for(const std::string& name) {
  static std::map<std::string, RunReport> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, verify_scenario(bundled_scenario(name))).first;
  return it->second;
}

const IdentityReport& check_named(const RunReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  FAIL("check not present: " << name);
  static IdentityReport dummy;
  return dummy;
}

bool rejects_as_malformed(const std::string& text) {
  try {
    parse_scenario_text(text);
    return false;
  } catch (const Error& e) {
    return e.kind() == Errc::MalformedScenario;
  }
}

}  // namespace

TEST_CASE("bundled corpus is the expected set") {
  CHECK(bundled_scenario_names() ==
        std::vector<std::string>{"a1-cone", "brieskorn-333", "cusp-curve",
                                 "icis-sphere-linear", "two-branch",
                                 "two-branch-sphere", "whitney-sphere",
                                 "whitney-umbrella"});
  for (const auto& name : bundled_scenario_names()) CHECK(is_bundled_scenario(name));
  CHECK_FALSE(is_bundled_scenario("no-such-scenario"));
}

TEST_CASE("scenario files on disk match the embedded corpus byte for byte") {
  for (const auto& name : bundled_scenario_names()) {
    std::ifstream in(std::string(GERMLAB_SOURCE_DIR) + "/scenarios/" + name + ".json",
                     std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == bundled_scenario_text(name));
  }
}

TEST_CASE("every bundled scenario verifies with disjoint routes") {
  for (const auto& name : bundled_scenario_names()) {
    const RunReport& rep = report_for(name);
    INFO("scenario " << name);
    CHECK(rep.exit_code() == 0);
    for (const auto& c : rep.checks) {
      INFO("check " << c.name);
      CHECK(c.status == "verified");
      CHECK_FALSE(c.lhs_route.empty());
      CHECK_FALSE(c.rhs_route.empty());
      CHECK(c.lhs_route != c.rhs_route);
      for (const auto& cnt : c.counts) {
        INFO("count " << cnt.label);
        CHECK(cnt.nonnegative);
      }
    }
  }
}

TEST_CASE("pinned values: whitney umbrella with a generic linear form") {
  const RunReport& rep = report_for("whitney-umbrella");
  CHECK(*check_named(rep, "morse-count-correction").lhs == 1);
  CHECK(*check_named(rep, "morse-count-correction").rhs == 1);
  CHECK(*check_named(rep, "euler-obstruction-difference").lhs == 1);
  CHECK(*check_named(rep, "euler-obstruction-difference").rhs == 1);
  CHECK(*check_named(rep, "hyperplane-obstruction-correction").lhs == -1);
  CHECK(*check_named(rep, "milnor-fiber-assembly").lhs == 2);
  CHECK(*check_named(rep, "legreuel-closure").lhs == 2);
}

TEST_CASE("pinned values: sphere levels see the polar branches") {
  const RunReport& ws = report_for("whitney-sphere");
  CHECK(*check_named(ws, "morse-count-correction").lhs == 6);
  CHECK(*check_named(ws, "pair-exchange-corrected").lhs == -6);
  CHECK(*check_named(ws, "fiber-difference-correction").lhs == 0);

  const RunReport& ts = report_for("two-branch-sphere");
  CHECK(*check_named(ts, "morse-count-correction").lhs == 6);
  CHECK(*check_named(ts, "pair-exchange-corrected").lhs == -8);
}

TEST_CASE("pinned values: isolated baselines") {
  const RunReport& br = report_for("brieskorn-333");
  CHECK(*check_named(br, "isolated-baseline").lhs == 12);
  CHECK(*check_named(br, "isolated-baseline").rhs == 12);

  const RunReport& cu = report_for("cusp-curve");
  CHECK(*check_named(cu, "isolated-baseline").lhs == -3);
  CHECK(*check_named(cu, "parity-inequality").lhs == 2);
  CHECK(*check_named(cu, "parity-inequality").rhs == 2);
}

TEST_CASE("reports serialize deterministically") {
  Scenario sc = bundled_scenario("whitney-umbrella");
  std::string a = report_to_canonical_string(verify_scenario(sc));
  std::string b = report_to_canonical_string(verify_scenario(sc));
  CHECK(a == b);
  CHECK(a.find("timing") == std::string::npos);

  auto j = nlohmann::json::parse(a);
  CHECK(j["schema_version"] == "1");
  CHECK(j["scenario"] == "whitney-umbrella");
  CHECK(j["seed"] == 42);
  CHECK(j["checks"].is_array());
  CHECK(j["invariants"].is_object());
  CHECK(j["invariants"]["branch-certificate"] == "exact-cover");
}

TEST_CASE("seed overrides keep every check verified") {
  Scenario sc = bundled_scenario("whitney-umbrella");
  for (std::uint64_t s : {std::uint64_t(1337), std::uint64_t(9001)}) {
    RunReport rep = verify_scenario(sc, s);
    CHECK(rep.exit_code() == 0);
    CHECK(rep.seed == s);
  }
}

TEST_CASE("hypothesis failures surface as exit 3") {
  Scenario sc = parse_scenario_text(R"({
    "name": "smooth-g",
    "variables": ["x", "y", "z"],
    "f": {"kind": "generic-linear"},
    "g": "z",
    "checks": ["morse-count-correction"],
    "seed": 42
  })");
  RunReport rep = verify_scenario(sc);
  CHECK(rep.exit_code() == 3);
  CHECK(rep.checks[0].status == "hypothesis-failed");
  CHECK_FALSE(rep.checks[0].reason.empty());
}

TEST_CASE("inconsistent declared tables surface as exit 2") {
  Scenario sc = parse_scenario_text(R"({
    "name": "bogus-declared",
    "variables": ["x", "y", "z"],
    "ambient": {"kind": "declared", "d": 3, "strata": [
      {"name": "regular", "dim": 3, "eu": 1, "chi": 2},
      {"name": "origin", "dim": 0, "eu": 5, "contains_origin": true}
    ]},
    "f": {"kind": "generic-linear"},
    "g": "x^2 + y^2 + z^2",
    "checks": ["isolated-baseline"],
    "seed": 42
  })");
  RunReport rep = verify_scenario(sc);
  CHECK(rep.exit_code() == 2);
  CHECK(rep.checks[0].status == "violated");
}

TEST_CASE("schema rejection is total") {
  CHECK(rejects_as_malformed("not json at all"));
  CHECK(rejects_as_malformed(R"({"name": "x"})"));
  CHECK(rejects_as_malformed(R"({
    "name": "bad", "variables": ["x", "y"], "f": "x", "g": "y",
    "checks": ["morse-count-correction"], "extra_key": 1})"));
  CHECK(rejects_as_malformed(R"({
    "name": "bad", "variables": ["x", "y"], "f": "x", "g": "y",
    "checks": ["no-such-check"]})"));
  CHECK(rejects_as_malformed(R"({
    "name": "bad", "variables": ["x", "x"], "f": "x", "g": "x^2",
    "checks": ["legreuel-closure"]})"));
  CHECK(rejects_as_malformed(R"({
    "name": "bad", "variables": ["x", "y"], "f": "x +* y", "g": "y^2",
    "checks": ["legreuel-closure"]})"));
  // germs must vanish at the origin
  CHECK(rejects_as_malformed(R"({
    "name": "bad", "variables": ["x", "y"], "f": "x + 1", "g": "y^2",
    "checks": ["legreuel-closure"]})"));
}

TEST_CASE("systematic schema mutation never crashes and always rejects") {
  auto base = nlohmann::json::parse(bundled_scenario_text("whitney-umbrella"));
  const std::vector<std::string> required = {"name", "variables", "f", "g", "checks"};
  for (const auto& key : required) {
    auto j = base;
    j.erase(key);
    CHECK(rejects_as_malformed(j.dump()));
  }
  for (auto it = base.begin(); it != base.end(); ++it) {
    auto j = base;
    j[it.key()] = 3.25;  // wrong type everywhere, including optional keys
    CHECK(rejects_as_malformed(j.dump()));
  }
  {
    auto j = base;
    j["variables"] = nlohmann::json::array({"x"});
    CHECK(rejects_as_malformed(j.dump()));  // need at least two variables
  }
  {
    auto j = base;
    j["checks"] = nlohmann::json::array();
    CHECK(rejects_as_malformed(j.dump()));  // need at least one check
  }
  {
    auto j = base;
    j["checks"].push_back(j["checks"][0]);
    CHECK(rejects_as_malformed(j.dump()));  // duplicate check
  }
  {
    auto j = base;
    j["seed"] = -1;
    CHECK(rejects_as_malformed(j.dump()));
  }
}

TEST_CASE("branch hints round-trip through a scenario") {
  Scenario sc = parse_scenario_text(R"({
    "name": "hinted",
    "variables": ["x", "y", "z"],
    "f": {"kind": "generic-linear"},
    "g": "x^2 - y^2*z",
    "branch_hints": [["0", "0", "t"]],
    "checks": ["euler-obstruction-difference"],
    "seed": 42
  })");
  RunReport rep = verify_scenario(sc);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.invariants["branch-certificate"] == "hint-verified");
}
