#pragma once

// Scenario files: a small JSON schema describing a germ pair (f, g), the
// ambient space, optional branch hints, and the list of identity checks to
// run.  Parsing is strict: unknown keys, wrong types, or unknown check names
// are rejected with MalformedScenario so that a mistyped file never
// half-runs.
//
// A handful of scenarios ship embedded in the binary (and as files under
// scenarios/); `bundled_scenario_text` resolves those by name.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "germlab/brasselet.hpp"
#include "germlab/errors.hpp"
#include "germlab/parser.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/unipoly.hpp"

namespace germlab {

namespace scenario_detail {

// A parsed one-variable polynomial, reshaped into dense univariate form.
inline UniPoly<Rational> to_unipoly(const Polynomial<Rational>& p) {
  std::vector<Rational> c;
  for (const auto& [m, k] : p.terms()) {
    int e = m[0];
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1);
    c[e] = k;
  }
  return UniPoly<Rational>(std::move(c));
}

}  // namespace scenario_detail

// ----------------------------------------------------------------------------
// Model
// ----------------------------------------------------------------------------

struct ScenarioAmbient {
  enum class Kind { AffineSpace, IsolatedHypersurface, Declared };
  Kind kind = Kind::AffineSpace;
  std::string h_text;  // IsolatedHypersurface
  int declared_d = 0;  // Declared
  std::vector<Stratum> strata;
};

struct Scenario {
  std::string name;
  std::vector<std::string> variables;
  ScenarioAmbient ambient;
  // f is either a literal polynomial or a seeded generic linear form.
  bool f_generic_linear = false;
  std::optional<std::uint64_t> f_seed;  // pins f independently of --seed
  std::string f_text;                   // literal form when !f_generic_linear
  std::string g_text;
  // Optional parametrisation hints, one entry per branch, one polynomial in
  // `t` per coordinate.
  std::vector<std::vector<std::string>> branch_hints;
  std::vector<std::string> checks;
  std::uint64_t seed = 42;

  int nvars() const { return static_cast<int>(variables.size()); }

  Polynomial<Rational> g() const { return parse_polynomial(g_text, variables); }

  // Resolves f against the run seed (used when the file does not pin one).
  Polynomial<Rational> f(std::uint64_t run_seed) const {
    if (!f_generic_linear) return parse_polynomial(f_text, variables);
    std::uint64_t s = f_seed ? *f_seed : run_seed;
    return random_linear_form(nvars(), derive_seed(s, "generic-linear-f"));
  }

  AmbientSpace ambient_space() const {
    switch (ambient.kind) {
      case ScenarioAmbient::Kind::AffineSpace:
        return AmbientSpace::affine(nvars());
      case ScenarioAmbient::Kind::IsolatedHypersurface:
        return AmbientSpace::isolated_hypersurface(
            parse_polynomial(ambient.h_text, variables));
      case ScenarioAmbient::Kind::Declared: {
        StratificationDescriptor v;
        v.strata = ambient.strata;
        return AmbientSpace::declared(nvars(), ambient.declared_d, std::move(v));
      }
    }
    fail(Errc::Internal, "unreachable ambient kind");
  }

  std::vector<std::vector<UniPoly<Rational>>> parsed_hints() const {
    std::vector<std::vector<UniPoly<Rational>>> out;
    const std::vector<std::string> tvar = {"t"};
    for (const auto& hint : branch_hints) {
      std::vector<UniPoly<Rational>> coords;
      for (const auto& text : hint)
        coords.push_back(
            scenario_detail::to_unipoly(parse_polynomial(text, tvar)));
      out.push_back(std::move(coords));
    }
    return out;
  }
};

// ----------------------------------------------------------------------------
// Check names
// ----------------------------------------------------------------------------

inline const std::vector<std::string>& known_check_names() {
  static const std::vector<std::string> names = {
      "euler-obstruction-difference",
      "fiber-difference-correction",
      "hyperplane-obstruction-correction",
      "isolated-baseline",
      "legreuel-closure",
      "milnor-fiber-assembly",
      "morse-count-correction",
      "pair-exchange-corrected",
      "parity-inequality",
  };
  return names;
}

inline bool is_known_check(const std::string& name) {
  for (const auto& k : known_check_names())
    if (k == name) return true;
  return false;
}

// ----------------------------------------------------------------------------
// Strict parsing
// ----------------------------------------------------------------------------

namespace scenario_detail {

using json = nlohmann::json;

[[noreturn]] inline void bad(const std::string& what) {
  fail(Errc::MalformedScenario, what);
}

inline void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where + " must be a JSON object");
}

// Rejects any key outside the allowed set; the error names the intruder so
// typos are easy to spot.
inline void require_keys(const json& j, const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) bad("unknown key \"" + it.key() + "\" in " + where);
  }
}

inline std::string get_string(const json& j, const std::string& key,
                              const std::string& where) {
  if (!j.contains(key)) bad(where + " is missing required key \"" + key + "\"");
  if (!j.at(key).is_string()) bad(where + "." + key + " must be a string");
  return j.at(key).get<std::string>();
}

inline long get_integer(const json& j, const std::string& key,
                        const std::string& where) {
  if (!j.contains(key)) bad(where + " is missing required key \"" + key + "\"");
  if (!j.at(key).is_number_integer())
    bad(where + "." + key + " must be an integer");
  return j.at(key).get<long>();
}

inline bool get_bool(const json& j, const std::string& key, bool fallback,
                     const std::string& where) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) bad(where + "." + key + " must be a boolean");
  return j.at(key).get<bool>();
}

inline bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline ScenarioAmbient parse_ambient(const json& j) {
  ScenarioAmbient out;
  require_object(j, "ambient");
  std::string kind = get_string(j, "kind", "ambient");
  if (kind == "affine-space") {
    require_keys(j, {"kind"}, "ambient");
    out.kind = ScenarioAmbient::Kind::AffineSpace;
  } else if (kind == "isolated-hypersurface") {
    require_keys(j, {"kind", "h"}, "ambient");
    out.kind = ScenarioAmbient::Kind::IsolatedHypersurface;
    out.h_text = get_string(j, "h", "ambient");
  } else if (kind == "declared") {
    require_keys(j, {"kind", "d", "strata"}, "ambient");
    out.kind = ScenarioAmbient::Kind::Declared;
    out.declared_d = static_cast<int>(get_integer(j, "d", "ambient"));
    if (!j.contains("strata") || !j.at("strata").is_array())
      bad("ambient.strata must be an array");
    for (const auto& sj : j.at("strata")) {
      require_object(sj, "stratum");
      require_keys(sj,
                   {"name", "dim", "eu", "chi", "contains_origin", "in_zero_f",
                    "in_zero_g"},
                   "stratum");
      Stratum s;
      s.name = get_string(sj, "name", "stratum");
      s.dim = static_cast<int>(get_integer(sj, "dim", "stratum"));
      s.eu = Integer(get_integer(sj, "eu", "stratum"));
      s.contains_origin = get_bool(sj, "contains_origin", false, "stratum");
      s.in_zero_f = get_bool(sj, "in_zero_f", false, "stratum");
      s.in_zero_g = get_bool(sj, "in_zero_g", false, "stratum");
      if (sj.contains("chi")) s.chi = Integer(get_integer(sj, "chi", "stratum"));
      out.strata.push_back(std::move(s));
    }
  } else {
    bad("ambient.kind must be one of affine-space, isolated-hypersurface, "
        "declared (got \"" +
        kind + "\")");
  }
  return out;
}

}  // namespace scenario_detail

inline Scenario parse_scenario_text(const std::string& text) {
  using scenario_detail::bad;
  using scenario_detail::json;

  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("scenario is not valid JSON: ") + e.what());
  }
  scenario_detail::require_object(j, "scenario");
  scenario_detail::require_keys(
      j, {"name", "variables", "ambient", "f", "g", "branch_hints", "checks",
          "seed"},
      "scenario");

  Scenario s;
  s.name = scenario_detail::get_string(j, "name", "scenario");
  if (s.name.empty()) bad("scenario.name must be nonempty");

  if (!j.contains("variables") || !j.at("variables").is_array())
    bad("scenario.variables must be an array of identifiers");
  for (const auto& v : j.at("variables")) {
    if (!v.is_string()) bad("scenario.variables entries must be strings");
    std::string name = v.get<std::string>();
    if (!scenario_detail::valid_identifier(name))
      bad("\"" + name + "\" is not a valid variable name");
    for (const auto& seen : s.variables)
      if (seen == name) bad("duplicate variable \"" + name + "\"");
    s.variables.push_back(std::move(name));
  }
  if (s.variables.size() < 2) bad("scenario needs at least two variables");

  if (j.contains("ambient"))
    s.ambient = scenario_detail::parse_ambient(j.at("ambient"));

  if (!j.contains("f")) bad("scenario is missing required key \"f\"");
  if (j.at("f").is_string()) {
    s.f_text = j.at("f").get<std::string>();
  } else if (j.at("f").is_object()) {
    const auto& fj = j.at("f");
    scenario_detail::require_keys(fj, {"kind", "seed"}, "f");
    if (scenario_detail::get_string(fj, "kind", "f") != "generic-linear")
      bad("f.kind must be \"generic-linear\"");
    s.f_generic_linear = true;
    if (fj.contains("seed")) {
      if (!fj.at("seed").is_number_unsigned())
        bad("f.seed must be a nonnegative integer");
      s.f_seed = fj.at("seed").get<std::uint64_t>();
    }
  } else {
    bad("scenario.f must be a polynomial string or a generic-linear object");
  }

  s.g_text = scenario_detail::get_string(j, "g", "scenario");

  if (j.contains("branch_hints")) {
    if (!j.at("branch_hints").is_array())
      bad("scenario.branch_hints must be an array");
    for (const auto& hj : j.at("branch_hints")) {
      if (!hj.is_array()) bad("each branch hint must be an array of strings");
      std::vector<std::string> coords;
      for (const auto& c : hj) {
        if (!c.is_string()) bad("branch hint coordinates must be strings");
        coords.push_back(c.get<std::string>());
      }
      if (coords.size() != s.variables.size())
        bad("branch hint has " + std::to_string(coords.size()) +
            " coordinates; expected one per variable");
      s.branch_hints.push_back(std::move(coords));
    }
  }

  if (!j.contains("checks") || !j.at("checks").is_array())
    bad("scenario.checks must be an array of identity names");
  for (const auto& c : j.at("checks")) {
    if (!c.is_string()) bad("scenario.checks entries must be strings");
    std::string name = c.get<std::string>();
    if (!is_known_check(name)) bad("unknown check \"" + name + "\"");
    for (const auto& seen : s.checks)
      if (seen == name) bad("duplicate check \"" + name + "\"");
    s.checks.push_back(std::move(name));
  }
  if (s.checks.empty()) bad("scenario.checks must request at least one check");

  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned())
      bad("scenario.seed must be a nonnegative integer");
    s.seed = j.at("seed").get<std::uint64_t>();
  }

  // Parse both germs now so syntax problems surface as scenario problems,
  // with the offending text named.
  auto check_poly = [&](const std::string& text, const std::string& what) {
    try {
      Polynomial<Rational> p = parse_polynomial(text, s.variables);
      if (p.constant_term() != 0)
        bad(what + " must vanish at the origin (germ condition)");
    } catch (const Error& e) {
      if (e.kind() == Errc::MalformedScenario) throw;
      bad(what + ": " + e.what());
    }
  };
  if (!s.f_generic_linear) check_poly(s.f_text, "f");
  check_poly(s.g_text, "g");
  if (s.ambient.kind == ScenarioAmbient::Kind::IsolatedHypersurface)
    check_poly(s.ambient.h_text, "ambient.h");
  const std::vector<std::string> tvar = {"t"};
  for (const auto& hint : s.branch_hints)
    for (const auto& coord : hint) {
      try {
        parse_polynomial(coord, tvar);
      } catch (const Error& e) {
        bad(std::string("branch hint coordinate \"") + coord +
            "\": " + e.what());
      }
    }

  return s;
}

// ----------------------------------------------------------------------------
// Bundled scenarios
// ----------------------------------------------------------------------------

namespace scenario_detail {

inline const std::map<std::string, std::string>& bundled_texts() {
  static const std::map<std::string, std::string> table = {
      {"a1-cone", R"({
  "name": "a1-cone",
  "variables": ["x", "y", "z"],
  "ambient": {"kind": "affine-space"},
  "f": {"kind": "generic-linear"},
  "g": "x^2 + y^2 + z^2",
  "checks": [
    "morse-count-correction",
    "pair-exchange-corrected",
    "euler-obstruction-difference",
    "hyperplane-obstruction-correction",
    "fiber-difference-correction",
    "milnor-fiber-assembly",
    "isolated-baseline",
    "legreuel-closure",
    "parity-inequality"
  ],
  "seed": 42
}
)"},
      {"brieskorn-333", R"({
  "name": "brieskorn-333",
  "variables": ["x", "y", "z"],
  "ambient": {"kind": "affine-space"},
  "f": {"kind": "generic-linear"},
  "g": "x^3 + y^3 + z^3",
  "checks": [
    "morse-count-correction",
    "pair-exchange-corrected",
    "euler-obstruction-difference",
    "hyperplane-obstruction-correction",
    "fiber-difference-correction",
    "milnor-fiber-assembly",
    "isolated-baseline",
    "legreuel-closure",
    "parity-inequality"
  ],
  "seed": 42
}
)"},
      {"cusp-curve", R"({
  "name": "cusp-curve",
  "variables": ["x", "y"],
  "ambient": {"kind": "affine-space"},
  "f": {"kind": "generic-linear"},
  "g": "y^2 - x^3",
  "checks": [
    "morse-count-correction",
    "pair-exchange-corrected",
    "euler-obstruction-difference",
    "hyperplane-obstruction-correction",
    "fiber-difference-correction",
    "milnor-fiber-assembly",
    "isolated-baseline",
    "legreuel-closure",
    "parity-inequality"
  ],
  "seed": 42
}
)"},
      {"icis-sphere-linear", R"({
  "name": "icis-sphere-linear",
  "variables": ["x", "y", "z"],
  "ambient": {"kind": "affine-space"},
  "f": "x + y + z",
  "g": "x^2 + y^2 + z^2",
  "checks": [
    "morse-count-correction",
    "pair-exchange-corrected",
    "euler-obstruction-difference",
    "hyperplane-obstruction-correction",
    "fiber-difference-correction",
    "milnor-fiber-assembly",
    "isolated-baseline",
    "legreuel-closure",
    "parity-inequality"
  ],
  "seed": 42
}
)"},
      {"two-branch", R"({
  "name": "two-branch",
  "variables": ["x", "y", "z"],
  "ambient": {"kind": "affine-space"},
  "f": {"kind": "generic-linear"},
  "g": "x^2 + y^2*z^2",
  "checks": [
    "morse-count-correction",
    "pair-exchange-corrected",
    "euler-obstruction-difference",
    "hyperplane-obstruction-correction",
    "fiber-difference-correction",
    "milnor-fiber-assembly",
    "legreuel-closure",
    "parity-inequality"
  ],
  "seed": 42
}
)"},
      {"two-branch-sphere", R"({
  "name": "two-branch-sphere",
  "variables": ["x", "y", "z"],
  "ambient": {"kind": "affine-space"},
  "f": "x^2 + y^2 + z^2",
  "g": "x^2 + y^2*z^2",
  "checks": [
    "morse-count-correction",
    "pair-exchange-corrected",
    "euler-obstruction-difference",
    "hyperplane-obstruction-correction",
    "fiber-difference-correction",
    "milnor-fiber-assembly",
    "parity-inequality"
  ],
  "seed": 42
}
)"},
      {"whitney-sphere", R"({
  "name": "whitney-sphere",
  "variables": ["x", "y", "z"],
  "ambient": {"kind": "affine-space"},
  "f": "x^2 + y^2 + z^2",
  "g": "x^2 - y^2*z",
  "checks": [
    "morse-count-correction",
    "pair-exchange-corrected",
    "euler-obstruction-difference",
    "hyperplane-obstruction-correction",
    "fiber-difference-correction",
    "milnor-fiber-assembly",
    "parity-inequality"
  ],
  "seed": 42
}
)"},
      {"whitney-umbrella", R"({
  "name": "whitney-umbrella",
  "variables": ["x", "y", "z"],
  "ambient": {"kind": "affine-space"},
  "f": {"kind": "generic-linear"},
  "g": "x^2 - y^2*z",
  "checks": [
    "morse-count-correction",
    "pair-exchange-corrected",
    "euler-obstruction-difference",
    "hyperplane-obstruction-correction",
    "fiber-difference-correction",
    "milnor-fiber-assembly",
    "legreuel-closure",
    "parity-inequality"
  ],
  "seed": 42
}
)"},
  };
  return table;
}

}  // namespace scenario_detail

inline std::vector<std::string> bundled_scenario_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : scenario_detail::bundled_texts())
    names.push_back(name);
  return names;  // std::map iteration is already sorted
}

inline bool is_bundled_scenario(const std::string& name) {
  return scenario_detail::bundled_texts().count(name) > 0;
}

inline const std::string& bundled_scenario_text(const std::string& name) {
  const auto& table = scenario_detail::bundled_texts();
  auto it = table.find(name);
  if (it == table.end())
    fail(Errc::MalformedScenario, "no bundled scenario named \"" + name + "\"");
  return it->second;
}

inline Scenario bundled_scenario(const std::string& name) {
  return parse_scenario_text(bundled_scenario_text(name));
}

}  // namespace germlab
