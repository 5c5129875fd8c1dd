#pragma once

// Identity verification.  Each check computes the two sides of one
// Lê–Greuel-type identity along computationally independent routes and
// reports verified / violated / hypothesis-failed.
//
// Route discipline: a check never derives its right-hand side from the same
// intermediate numbers as its left-hand side.  Obstruction assemblies go
// through transversal slices and sectional Milnor numbers; correction terms
// go through polar curves and colengths.  When both routes agree the identity
// has actually been exercised, not restated.
//
// Error policy: failures of the theorem hypotheses (non-isolated slices,
// unstable generic choices, empty or fat critical loci, ...) are caught per
// check and reported as hypothesis-failed.  Structural failures (unparseable
// input, undecomposable curves, budget overruns) abort the whole run.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "germlab/brasselet.hpp"
#include "germlab/curve.hpp"
#include "germlab/errors.hpp"
#include "germlab/ideal_ops.hpp"
#include "germlab/invariants.hpp"
#include "germlab/parser.hpp"
#include "germlab/polar.hpp"
#include "germlab/scenario.hpp"

namespace germlab {

// ----------------------------------------------------------------------------
// Report model
// ----------------------------------------------------------------------------

struct ExtractedCount {
  std::string label;
  Integer value;
  bool nonnegative = true;  // verdict of the integrality/sign screen
};

struct IdentityReport {
  std::string name;
  std::string status;  // "verified" | "violated" | "hypothesis-failed"
  std::string reason;  // populated for hypothesis-failed
  std::optional<Integer> lhs, rhs;
  std::string lhs_route, rhs_route;
  std::vector<ExtractedCount> counts;
  std::vector<std::string> notes;
};

struct RunReport {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<IdentityReport> checks;
  nlohmann::json invariants;  // snapshot of the computed invariant table

  bool any_violated() const {
    for (const auto& c : checks)
      if (c.status == "violated") return true;
    return false;
  }
  bool any_hypothesis_failed() const {
    for (const auto& c : checks)
      if (c.status == "hypothesis-failed") return true;
    return false;
  }

  // 0 all verified, 2 some identity violated, 3 some hypothesis failed.
  int exit_code() const {
    if (any_violated()) return 2;
    if (any_hypothesis_failed()) return 3;
    return 0;
  }
};

namespace verify_detail {

inline nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return nlohmann::json(v.get_si());
  return nlohmann::json(v.get_str());
}

inline nlohmann::json extnat_json(const ExtNat& v) {
  if (!v.finite) return nlohmann::json("infinite");
  return integer_json(v.value);
}

}  // namespace verify_detail

// Canonical JSON: keys sorted (nlohmann objects are ordered maps), integers
// as JSON numbers, no floating point anywhere, no wall-clock data.  Identical
// (scenario, seed) inputs serialize to identical bytes.
inline nlohmann::json report_to_json(const RunReport& r) {
  using verify_detail::integer_json;
  nlohmann::json j;
  j["schema_version"] = "1";
  j["scenario"] = r.scenario;
  j["seed"] = r.seed;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["status"] = c.status;
    if (!c.reason.empty()) cj["reason"] = c.reason;
    if (c.lhs) cj["lhs"] = integer_json(*c.lhs);
    if (c.rhs) cj["rhs"] = integer_json(*c.rhs);
    if (!c.lhs_route.empty()) cj["lhs_route"] = c.lhs_route;
    if (!c.rhs_route.empty()) cj["rhs_route"] = c.rhs_route;
    if (!c.counts.empty()) {
      nlohmann::json counts = nlohmann::json::array();
      for (const auto& k : c.counts) {
        nlohmann::json kj;
        kj["label"] = k.label;
        kj["value"] = integer_json(k.value);
        kj["nonnegative"] = k.nonnegative;
        counts.push_back(kj);
      }
      cj["counts"] = counts;
    }
    if (!c.notes.empty()) cj["notes"] = c.notes;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["invariants"] = r.invariants;
  return j;
}

inline std::string report_to_canonical_string(const RunReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

// ----------------------------------------------------------------------------
// Scenario context: shared, lazily computed intermediates
// ----------------------------------------------------------------------------

// Dimension class of the critical locus of g at the origin.
enum class CriticalClass { Smooth, Isolated, Curve, Fat };

class ScenarioContext {
 public:
  ScenarioContext(const Scenario& sc, std::uint64_t run_seed)
      : scenario_(sc),
        seed_(run_seed),
        ambient_(sc.ambient_space()),
        f_(sc.f(run_seed)),
        g_(sc.g()),
        hints_(sc.parsed_hints()) {}

  const Scenario& scenario() const { return scenario_; }
  std::uint64_t seed() const { return seed_; }
  const AmbientSpace& ambient() const { return ambient_; }
  bool ambient_affine() const {
    return ambient_.kind == AmbientSpace::Kind::AffineSpace;
  }
  int n() const { return ambient_.n; }
  int d() const { return ambient_.d; }
  const Polynomial<Rational>& f() const { return f_; }
  const Polynomial<Rational>& g() const { return g_; }

  // The generic linear form shared by the l-based checks.  Distinct from a
  // generic-linear f, so those checks stay meaningful when f is itself
  // linear.
  const Polynomial<Rational>& check_linear() {
    if (!l_) l_ = random_linear_form(n(), derive_seed(seed_, "check-linear"));
    return *l_;
  }

  ExtNat mu_f() {
    if (!mu_f_) mu_f_ = milnor_number(f_);
    return *mu_f_;
  }
  ExtNat mu_g() {
    if (!mu_g_) mu_g_ = milnor_number(g_);
    return *mu_g_;
  }

  CriticalClass critical_class() {
    if (!cclass_) {
      ExtNat mu = mu_g();
      if (mu.finite) {
        cclass_ = mu.value == 0 ? CriticalClass::Smooth : CriticalClass::Isolated;
      } else {
        int dim = krull_dimension_at_origin(jacobian_ideal(g_));
        cclass_ = dim == 1 ? CriticalClass::Curve : CriticalClass::Fat;
      }
    }
    return *cclass_;
  }

  // Guards shared by every check that touches the singular structure of g.
  // Returns a hypothesis-failure reason, or empty if the class is usable.
  std::string critical_guard() {
    switch (critical_class()) {
      case CriticalClass::Smooth:
        return "g is smooth at the origin: the critical locus is empty, so "
               "neither the isolated nor the one-dimensional hypotheses hold";
      case CriticalClass::Fat:
        return "the critical locus of g has dimension >= 2 at the origin";
      default:
        return "";
    }
  }

  bool g_isolated() { return critical_class() == CriticalClass::Isolated; }
  bool g_curve() { return critical_class() == CriticalClass::Curve; }

  const BranchSet& branches() {
    if (!branches_) {
      const auto* hints = hints_.empty() ? nullptr : &hints_;
      branches_ = decompose_critical_locus(jacobian_ideal(g_),
                                           derive_seed(seed_, "sigma-g"),
                                           /*truncation=*/0, hints);
    }
    return *branches_;
  }

  const std::vector<BranchInvariants>& branch_data() {
    if (!branch_data_)
      branch_data_ = branch_invariants(g_, branches(), seed_);
    return *branch_data_;
  }

  // Local degrees and level Milnor numbers of f along the branches.
  const std::vector<BranchLevelData>& f_level_data() {
    if (!f_level_data_)
      f_level_data_ = branch_level_data(f_, g_, branches());
    return *f_level_data_;
  }

  // Same, for the shared check linear form.
  const std::vector<BranchLevelData>& l_level_data() {
    if (!l_level_data_)
      l_level_data_ = branch_level_data(check_linear(), g_, branches());
    return *l_level_data_;
  }

  // Eu_{X^g}(0) for the hypersurface X^g = g^{-1}(0) in affine space.
  Integer eu_xg_origin() {
    if (!eu_xg_) {
      if (g_isolated()) {
        eu_xg_ = euler_obstruction_isolated(g_, seed_);
      } else {
        eu_xg_ = euler_obstruction_1dim(g_, branch_data(), seed_);
      }
    }
    return *eu_xg_;
  }

  // B_{g, X cap H} for a generic hyperplane H = {check_linear = 0}:
  // the slice germ lives in n-1 variables with an isolated singularity.
  Integer b_g_hyperplane_slice() {
    if (!b_gh_) {
      auto coeffs = linear_form_coefficients(check_linear());
      Polynomial<Rational> gh = restrict_to_hyperplane(g_, coeffs);
      b_gh_ = chi_milnor_fiber(gh, AmbientSpace::affine(n() - 1),
                               derive_seed(seed_, "slice-b"));
    }
    return *b_gh_;
  }

  // colength of P_{g,l} + (h) for a seeded linear l, stabilised over seeds:
  // two draws must agree (a third breaks ties).  `level_is_l` picks h = l,
  // otherwise h = g.
  Integer stable_polar_count(const std::string& label, bool level_is_l) {
    auto key = label + (level_is_l ? "#l" : "#g");
    auto it = polar_counts_.find(key);
    if (it != polar_counts_.end()) return it->second;

    std::vector<ExtNat> draws;
    auto draw = [&](int k) {
      Polynomial<Rational> l = random_linear_form(
          n(), derive_seed(seed_, label + "-" + std::to_string(k)));
      Ideal<Rational> p = polar_scheme(l, g_);
      return polar_level_count(p, level_is_l ? l : g_);
    };
    draws.push_back(draw(0));
    draws.push_back(draw(1));
    ExtNat chosen = draws[0];
    if (!(draws[0] == draws[1])) {
      draws.push_back(draw(2));
      if (draws[2] == draws[0] || draws[2] == draws[1]) {
        chosen = draws[2];
      } else {
        fail(Errc::GenericityUnstable,
             "polar count " + label + " differs across three seeded forms");
      }
    }
    if (!chosen.finite)
      fail(Errc::HypothesisFailed,
           "polar count " + label + " is infinite for a generic linear form");
    polar_counts_.emplace(key, chosen.value);
    return polar_counts_.at(key);
  }

  // B_{g,X}: for isolated g a direct Milnor-fibre count; for one-dimensional
  // critical loci, assembled from the hyperplane slice plus the Lê attaching
  // count along an internally seeded pencil.
  Integer b_g_ambient() {
    if (!b_g_) {
      if (g_isolated() || critical_class() == CriticalClass::Smooth) {
        b_g_ = chi_milnor_fiber(g_, ambient_, derive_seed(seed_, "b-g-direct"));
      } else {
        Integer attach = stable_polar_count("le-attach", /*level_is_l=*/false);
        b_g_ = b_g_hyperplane_slice() + invariant_detail::sign_pow(d() - 1) * attach;
      }
    }
    return *b_g_;
  }

 private:
  Scenario scenario_;
  std::uint64_t seed_;
  AmbientSpace ambient_;
  Polynomial<Rational> f_, g_;
  std::vector<std::vector<UniPoly<Rational>>> hints_;

  std::optional<Polynomial<Rational>> l_;
  std::optional<ExtNat> mu_f_, mu_g_;
  std::optional<CriticalClass> cclass_;
  std::optional<BranchSet> branches_;
  std::optional<std::vector<BranchInvariants>> branch_data_;
  std::optional<std::vector<BranchLevelData>> f_level_data_, l_level_data_;
  std::optional<Integer> eu_xg_, b_gh_, b_g_;
  std::map<std::string, Integer> polar_counts_;
};

// ----------------------------------------------------------------------------
// Check implementations
// ----------------------------------------------------------------------------

namespace verify_detail {

inline void add_count(IdentityReport& r, const std::string& label,
                      const Integer& value) {
  r.counts.push_back({label, value, value >= 0});
}

[[noreturn]] inline void hypothesis(const std::string& why) {
  fail(Errc::HypothesisFailed, why);
}

inline Integer finite_or(const ExtNat& v, const std::string& why) {
  if (!v.finite) hypothesis(why);
  return v.value;
}

inline void require_affine(ScenarioContext& ctx, const std::string& check) {
  if (!ctx.ambient_affine())
    hypothesis(check + " is implemented for affine ambient spaces only");
}

inline void require_usable_critical_locus(ScenarioContext& ctx) {
  std::string why = ctx.critical_guard();
  if (!why.empty()) hypothesis(why);
}

// {f = 0} must meet the critical locus of g only at the origin.
inline void require_f_slices_sigma(ScenarioContext& ctx) {
  Ideal<Rational> cut = ideal_plus(jacobian_ideal(ctx.g()), ctx.f());
  if (!origin_in_variety(cut)) return;  // empty intersection: fine
  if (krull_dimension_at_origin(cut) != 0)
    hypothesis("{f = 0} contains a component of the critical locus of g");
}

// Sum over branches of mult * (a - b) style correction terms.
inline Integer branch_correction(const std::vector<long>& mults,
                                 const std::vector<Integer>& a,
                                 const std::vector<Integer>& b) {
  Integer out = 0;
  for (std::size_t j = 0; j < mults.size(); ++j)
    out += Integer(mults[j]) * (a[j] - b[j]);
  return out;
}

// The theorem-side data shared by the f-weighted corrections.
struct FWeightedData {
  std::vector<long> f_degrees;       // m_{f, b_j}
  std::vector<Integer> eu_branch;    // Eu_{X^g} along b_j
  std::vector<Integer> b_level;      // B_{f, X^g} at points of b_j
};

inline FWeightedData f_weighted_data(ScenarioContext& ctx) {
  FWeightedData out;
  if (ctx.g_isolated()) return out;  // empty sums: the isolated degeneration
  const auto& levels = ctx.f_level_data();
  const auto& data = ctx.branch_data();
  for (std::size_t j = 0; j < levels.size(); ++j) {
    out.f_degrees.push_back(levels[j].f_degree);
    out.eu_branch.push_back(data[j].transversal.euler_obstruction);
    out.b_level.push_back(levels[j].level_b);
  }
  return out;
}

}  // namespace verify_detail

// --- morse-count-correction -------------------------------------------------
// B_{f,X} - B_{f,X^g} - sum_j m_{f,b_j} (Eu_X(b_j) - Eu_{X^g}(b_j))
//   = (-1)^{d-1} * m,
// where m counts the Morse points of a morsification of f|_{X \ X^g}.  Left
// side via obstruction assembly; m independently as the polar-multiplicity
// sum  m = sum_nu m_{f,nu} mu^nu  over branches of the relative polar curve.
inline IdentityReport check_morse_count_correction(ScenarioContext& ctx) {
  using namespace verify_detail;
  IdentityReport r;
  r.name = "morse-count-correction";
  require_affine(ctx, r.name);
  require_usable_critical_locus(ctx);
  require_f_slices_sigma(ctx);
  if (!ctx.mu_f().finite)
    hypothesis("f has a non-isolated singularity, so B_{f,X} is not computable "
               "from a Milnor number");

  Integer b_f_x = chi_milnor_fiber(ctx.f(), ctx.ambient(),
                                   derive_seed(ctx.seed(), "b-f-x"));
  auto data = f_weighted_data(ctx);
  Integer b_f_xg;
  if (ctx.g_isolated()) {
    b_f_xg = icis_fiber_euler(ctx.f(), ctx.g());
  } else {
    b_f_xg = brasselet_number_on_hypersurface(ctx.f(), ctx.g(),
                                              ctx.f_level_data(), data.eu_branch,
                                              ctx.eu_xg_origin(), ctx.branches());
  }
  std::vector<Integer> eu_ambient(data.f_degrees.size(), ctx.ambient().eu_regular());
  Integer correction = branch_correction(data.f_degrees, eu_ambient, data.eu_branch);
  Integer lhs_signed = b_f_x - b_f_xg - correction;
  Integer m_lhs = invariant_detail::sign_pow(ctx.d() - 1) * lhs_signed;

  Integer m_polar;
  r.lhs = m_lhs;
  r.lhs_route =
      "obstruction assembly: B_{f,X} - B_{f,X^g} - branch correction, "
      "normalised by (-1)^(d-1)";
  add_count(r, "morse-points", m_lhs);
  if (ctx.g_curve()) {
    // Full polar route: decompose the relative polar curve and sum the
    // branchwise products m_{f,nu} * mu^nu.
    PolarCurveData pc = polar_curve_with_levels(ctx.f(), ctx.g(), ctx.seed());
    m_polar = polar_conservation_sum(pc);
    r.rhs_route =
        "polar route: sum of m_{f,nu} * mu^nu over branches of the relative "
        "polar curve of (f,g)";
    add_count(r, "polar-branch-sum", m_polar);
    for (std::size_t j = 0; j < pc.data.size(); ++j) {
      add_count(r, "polar-branch-" + std::to_string(j) + "-degree",
                Integer(pc.data[j].level_degree));
      add_count(r, "polar-branch-" + std::to_string(j) + "-level-milnor",
                pc.data[j].level_milnor);
    }
  } else {
    // Isolated degeneration: the polar curve may need field extensions the
    // engine does not carry, but the Morse count is still available as the
    // intersection number of the polar curve with {f = 0}.
    Ideal<Rational> p = polar_scheme(ctx.f(), ctx.g());
    m_polar = finite_or(
        polar_level_count(p, ctx.f()),
        "the relative polar curve of (f,g) meets {f=0} in positive dimension");
    r.rhs_route =
        "polar route: colength of P_{f,g} + (f), the intersection number of "
        "the relative polar curve with {f = 0}";
    add_count(r, "polar-level-count", m_polar);
  }
  r.rhs = m_polar;
  bool counts_ok = true;
  for (const auto& c : r.counts) counts_ok = counts_ok && c.nonnegative;
  r.status = (m_lhs == m_polar && counts_ok) ? "verified" : "violated";
  return r;
}

// --- pair-exchange-corrected ------------------------------------------------
// B_{g,X^f} = B_{f,X^g} - sum_j m_{f,b_j} (Eu_{X^g}(b_j) - B_j),
// where B_j is the local Brasselet number of f on X^g at a point of b_j.
// Left side via the complete-intersection fibre of (f,g); right side via
// obstruction assembly plus level data along the branches.
inline IdentityReport check_pair_exchange(ScenarioContext& ctx) {
  using namespace verify_detail;
  IdentityReport r;
  r.name = "pair-exchange-corrected";
  require_affine(ctx, r.name);
  require_usable_critical_locus(ctx);
  require_f_slices_sigma(ctx);
  if (!ctx.mu_f().finite)
    hypothesis("f has a non-isolated singularity");

  Integer lhs = icis_fiber_euler(ctx.f(), ctx.g());

  auto data = f_weighted_data(ctx);
  Integer b_f_xg;
  if (ctx.g_isolated()) {
    b_f_xg = icis_fiber_euler(ctx.f(), ctx.g());
  } else {
    b_f_xg = brasselet_number_on_hypersurface(ctx.f(), ctx.g(),
                                              ctx.f_level_data(), data.eu_branch,
                                              ctx.eu_xg_origin(), ctx.branches());
  }
  Integer rhs = b_f_xg - branch_correction(data.f_degrees, data.eu_branch,
                                           data.b_level);

  r.lhs = lhs;
  r.rhs = rhs;
  r.lhs_route =
      "complete-intersection route: chi of the Milnor fibre of g on X^f from "
      "the Le-Greuel colength";
  r.rhs_route =
      "obstruction assembly of B_{f,X^g}, corrected by branch level data";
  r.status = lhs == rhs ? "verified" : "violated";
  if (ctx.g_isolated())
    r.notes.push_back(
        "isolated critical point: the correction sum is empty and the "
        "identity degenerates to B_{g,X^f} = B_{f,X^g}");
  return r;
}

// --- euler-obstruction-difference --------------------------------------------
// With l a generic linear form:
// Eu_X(0) - Eu_{X^g}(0) - sum_j m_{b_j} (Eu_X(b_j) - Eu_{X^g}(b_j))
//   = (-1)^{d-1} * m,   m = number of Morse points of a morsification of
// l|_{X \ X^g}, counted independently as colength(P_{g,l} + (l)).
inline IdentityReport check_obstruction_difference(ScenarioContext& ctx) {
  using namespace verify_detail;
  IdentityReport r;
  r.name = "euler-obstruction-difference";
  require_affine(ctx, r.name);
  require_usable_critical_locus(ctx);

  Integer eu_x0 = 1;
  Integer eu_xg0 = ctx.eu_xg_origin();
  Integer correction = 0;
  if (ctx.g_curve()) {
    const auto& data = ctx.branch_data();
    for (const auto& bj : data)
      correction += Integer(bj.multiplicity) *
                    (Integer(1) - bj.transversal.euler_obstruction);
  }
  Integer m_lhs =
      invariant_detail::sign_pow(ctx.d() - 1) * (eu_x0 - eu_xg0 - correction);

  Integer m_polar = ctx.stable_polar_count("obstruction-polar", /*level_is_l=*/true);

  r.lhs = m_lhs;
  r.rhs = m_polar;
  r.lhs_route =
      "obstruction route: Eu_X(0) - Eu_{X^g}(0) minus branch corrections, "
      "normalised by (-1)^(d-1); obstructions from sectional and transversal "
      "Milnor numbers";
  r.rhs_route =
      "polar route: colength of P_{g,l} + (l) for seeded generic l, stable "
      "across two draws";
  add_count(r, "morse-points", m_lhs);
  add_count(r, "polar-count", m_polar);
  r.status = (m_lhs == m_polar && m_lhs >= 0) ? "verified" : "violated";
  if (ctx.g_isolated())
    r.notes.push_back(
        "isolated critical point: m equals the sectional Milnor number of g");
  return r;
}

// --- hyperplane-obstruction-correction ----------------------------------------
// For a generic hyperplane H = {l = 0}:
// B_{g, X cap H} = Eu_{X^g}(0) - sum_j m_{b_j} (Eu_{X^g}(b_j) - B'_j),
// with B'_j the Brasselet number of l on X^g at points of b_j.  Left side as
// a slice Milnor-fibre count in n-1 variables; right side via assembly.  The
// branch obstructions are cross-checked against the slice route
// Eu_{X^g}(b_j) = 1 + (-1)^{n-3} mu'(slice at b_j).
inline IdentityReport check_hyperplane_obstruction(ScenarioContext& ctx) {
  using namespace verify_detail;
  IdentityReport r;
  r.name = "hyperplane-obstruction-correction";
  require_affine(ctx, r.name);
  require_usable_critical_locus(ctx);

  Integer lhs = ctx.b_g_hyperplane_slice();

  Integer rhs = ctx.eu_xg_origin();
  bool remark_ok = true;
  if (ctx.g_curve()) {
    const auto& bs = ctx.branches();
    const auto& data = ctx.branch_data();
    const auto& levels = ctx.l_level_data();
    auto lc = linear_form_coefficients(ctx.check_linear());
    std::vector<AlgebraicNumber> la;
    for (const auto& q : lc) la.emplace_back(q);
    for (std::size_t j = 0; j < data.size(); ++j) {
      rhs -= Integer(data[j].multiplicity) *
             (data[j].transversal.euler_obstruction - levels[j].level_b);
      // Remark route: near a branch point the obstruction of X^g can also be
      // read off the slice by the level hyperplane {l = l(p)} itself, an
      // isolated hypersurface germ in n-1 variables.  This must reproduce
      // the transversal obstruction computed from seeded normal slices.
      Rational t0(1, 7);
      auto p = point_on_branch(bs.branches[j], t0);
      auto tangent = branch_tangent_at(bs.branches[j], t0);
      AlgebraicNumber pairing(0L);
      for (std::size_t i = 0; i < la.size(); ++i)
        pairing = pairing + la[i] * tangent[i];
      if (pairing == AlgebraicNumber(0L))
        hypothesis("the check linear form is tangent to a branch of the "
                   "critical locus");
      Polynomial<AlgebraicNumber> h =
          restrict_to_hyperplane(germ_at_point(ctx.g(), p), la);
      auto sec = sectional_milnor(
          h, derive_seed(ctx.seed(), "level-remark-" + std::to_string(j)));
      Integer mu_level_slice = finite_or(
          sec.value, "the level-hyperplane slice at a branch point has a "
                     "non-isolated section");
      Integer eu_level = Integer(1) + invariant_detail::sign_pow(ctx.n() - 3) *
                                          mu_level_slice;
      if (eu_level != data[j].transversal.euler_obstruction) remark_ok = false;
      r.notes.push_back("branch " + std::to_string(j) +
                        ": level-slice obstruction " + eu_level.get_str() +
                        ", transversal obstruction " +
                        data[j].transversal.euler_obstruction.get_str());
    }
  }

  r.lhs = lhs;
  r.rhs = rhs;
  r.lhs_route =
      "slice route: chi of the Milnor fibre of g restricted to a seeded "
      "generic hyperplane, computed in n-1 variables";
  r.rhs_route =
      "assembly route: Eu_{X^g}(0) corrected by branch multiplicities, "
      "transversal obstructions and level Brasselet numbers";
  r.status = (lhs == rhs && remark_ok) ? "verified" : "violated";
  if (!remark_ok)
    r.notes.push_back(
        "level-slice obstructions disagree with transversal obstructions");
  return r;
}

// --- fiber-difference-correction ----------------------------------------------
// B_{g,X} - B_{f,X} = (-1)^{d-1} (n_reg - m_reg)
//                     - sum_j m_{f,b_j} (1 - B_j),
// with n_reg = colength(P_{f,g} + (g)) and m_reg = colength(P_{f,g} + (f))
// counting Morse points of morsifications on the two fibres.
inline IdentityReport check_fiber_difference(ScenarioContext& ctx) {
  using namespace verify_detail;
  IdentityReport r;
  r.name = "fiber-difference-correction";
  require_affine(ctx, r.name);
  require_usable_critical_locus(ctx);
  require_f_slices_sigma(ctx);
  if (!ctx.mu_f().finite)
    hypothesis("f has a non-isolated singularity");

  Integer b_g_x = ctx.b_g_ambient();
  Integer b_f_x = chi_milnor_fiber(ctx.f(), ctx.ambient(),
                                   derive_seed(ctx.seed(), "b-f-x"));
  Integer lhs = b_g_x - b_f_x;

  Ideal<Rational> p = polar_scheme(ctx.f(), ctx.g());
  Integer n_reg = finite_or(
      polar_level_count(p, ctx.g()),
      "the relative polar curve of (f,g) meets {g=0} in positive dimension");
  Integer m_reg = finite_or(
      polar_level_count(p, ctx.f()),
      "the relative polar curve of (f,g) meets {f=0} in positive dimension");

  auto data = f_weighted_data(ctx);
  std::vector<Integer> ones(data.f_degrees.size(), 1);
  Integer rhs = invariant_detail::sign_pow(ctx.d() - 1) * (n_reg - m_reg) -
                branch_correction(data.f_degrees, ones, data.b_level);

  r.lhs = lhs;
  r.rhs = rhs;
  r.lhs_route =
      "fibre route: B_{g,X} (slice plus Le attaching count along an "
      "internally seeded pencil) minus B_{f,X} from the Milnor number of f";
  r.rhs_route =
      "polar route: signed difference of the two level counts of the "
      "relative polar curve of (f,g), corrected by branch level data";
  add_count(r, "n-regular", n_reg);
  add_count(r, "m-regular", m_reg);
  r.status = (lhs == rhs && n_reg >= 0 && m_reg >= 0) ? "verified" : "violated";
  return r;
}

// --- milnor-fiber-assembly ------------------------------------------------
// B_{g,X} = (-1)^{d-1} n_reg + Eu_{X^g}(0)
//           - sum_j m_{b_j} (Eu_{X^g}(b_j) - B'_j),
// with n_reg = colength(P_{g,l} + (g)) for generic linear l.  n_reg itself is
// computed along two routes (colength and polar-branch sum) which must agree.
inline IdentityReport check_milnor_fiber_assembly(ScenarioContext& ctx) {
  using namespace verify_detail;
  IdentityReport r;
  r.name = "milnor-fiber-assembly";
  require_affine(ctx, r.name);
  require_usable_critical_locus(ctx);

  Integer lhs = ctx.b_g_ambient();

  Integer n_count = ctx.stable_polar_count("assembly-polar", /*level_is_l=*/false);

  Integer rhs = invariant_detail::sign_pow(ctx.d() - 1) * n_count +
                ctx.eu_xg_origin();
  bool n_routes_agree = true;
  add_count(r, "n-regular", n_count);
  if (ctx.g_curve()) {
    const auto& data = ctx.branch_data();
    const auto& levels = ctx.l_level_data();
    for (std::size_t j = 0; j < data.size(); ++j)
      rhs -= Integer(data[j].multiplicity) *
             (data[j].transversal.euler_obstruction - levels[j].level_b);
    // Second route for n_reg: decompose the polar curve of (g, l) with the
    // same l as the first stabilisation draw, and sum the branchwise
    // products ord_t g(branch) * level Milnor number.
    Polynomial<Rational> l = random_linear_form(
        ctx.n(), derive_seed(ctx.seed(), "assembly-polar-0"));
    PolarCurveData pc = polar_curve_with_levels(
        ctx.g(), l, derive_seed(ctx.seed(), "assembly"));
    Integer n_branches = polar_conservation_sum(pc);
    add_count(r, "n-regular-branch-sum", n_branches);
    n_routes_agree = n_count == n_branches;
    if (!n_routes_agree)
      r.notes.push_back("polar count and polar-branch sum disagree for n_reg");
  }

  r.lhs = lhs;
  r.rhs = rhs;
  r.lhs_route =
      "fibre route: B_{g,X} from the hyperplane slice plus the Le attaching "
      "count along an internally seeded pencil";
  r.rhs_route =
      "assembly route: signed polar count plus Eu_{X^g}(0) minus branch "
      "corrections";
  r.status = (lhs == rhs && n_routes_agree && n_count >= 0) ? "verified"
                                                            : "violated";
  return r;
}

// --- isolated-baseline ------------------------------------------------------
// The classical baselines for g with an isolated critical point:
//  (a) B_{g,X} - B_{g, X cap H} = (-1)^{d-1} I0,  I0 = colength(P_{g,l}+(g));
//  (b) the defect Eu_X(0) - B_{g,X} satisfies the sign rule
//      (-1)^d (Eu_X(0) - B_{g,X}) >= 0, with equality to mu(g) when X = C^n;
//  (c) colength(P_{g,l}+(g)) - colength(P_{g,l}+(l)) = (-1)^d defect.
inline IdentityReport check_isolated_baseline(ScenarioContext& ctx) {
  using namespace verify_detail;
  IdentityReport r;
  r.name = "isolated-baseline";
  if (!ctx.mu_g().finite)
    hypothesis("the baseline identities require an isolated (or smooth) "
               "critical point of g");

  Integer b_g_x = ctx.b_g_ambient();
  Integer eu_x0 = ctx.ambient().eu_origin(derive_seed(ctx.seed(), "eu-x"));
  Integer defect = eu_x0 - b_g_x;
  Integer signed_defect = invariant_detail::sign_pow(ctx.d()) * defect;

  r.lhs_route =
      "fibre route: B_{g,X} and B_{g,X cap H} from Milnor-fibre counts";
  r.rhs_route = "polar route: level counts of P_{g,l} for seeded generic l";

  // (b) runs on every ambient kind; (a) and (c) need the polar geometry of
  // affine space.
  bool sign_ok = signed_defect >= 0;
  add_count(r, "signed-defect", signed_defect);
  if (ctx.ambient_affine()) {
    Integer i0 = ctx.stable_polar_count("baseline-polar", /*level_is_l=*/false);
    Integer l_count = ctx.stable_polar_count("baseline-polar", /*level_is_l=*/true);
    Integer b_gh = ctx.b_g_hyperplane_slice();
    Integer lhs_a = b_g_x - b_gh;
    Integer rhs_a = invariant_detail::sign_pow(ctx.d() - 1) * i0;
    bool a_ok = lhs_a == rhs_a;
    bool c_ok = i0 - l_count == invariant_detail::sign_pow(ctx.d()) * defect;
    bool mu_ok = defect * invariant_detail::sign_pow(ctx.d()) == ctx.mu_g().value;
    add_count(r, "attaching-count", i0);
    add_count(r, "linear-level-count", l_count);
    r.lhs = lhs_a;
    r.rhs = rhs_a;
    r.notes.push_back("defect " + defect.get_str() + " against mu(g) = " +
                      ctx.mu_g().value.get_str());
    r.status = (a_ok && c_ok && mu_ok && sign_ok) ? "verified" : "violated";
  } else {
    r.lhs = b_g_x;
    r.rhs = eu_x0;
    r.notes.push_back(
        "non-affine ambient: only the sign rule for the obstruction defect "
        "is checked");
    r.status = sign_ok ? "verified" : "violated";
  }
  return r;
}

// --- legreuel-closure ---------------------------------------------------------
// mu(f) + mu(V(f,g)) = colength((f) + minors of Jac(f,g)), with the curve
// Milnor number mu(V(f,g)) obtained along an independent route: a direct
// slice computation when one member of the pair is linear, otherwise the
// swapped colength colength((g) + minors) - mu(g).
inline IdentityReport check_legreuel_closure(ScenarioContext& ctx) {
  using namespace verify_detail;
  IdentityReport r;
  r.name = "legreuel-closure";
  if (!ctx.mu_f().finite) hypothesis("f has a non-isolated singularity");

  ExtNat lg = le_greuel_number(ctx.f(), ctx.g());
  if (!lg.finite)
    hypothesis("the pair (f,g) is not a complete intersection with isolated "
               "singularity: the Le-Greuel colength is infinite");

  auto linear_member = [&](const Polynomial<Rational>& p) {
    return p.total_degree() == 1;
  };
  Integer mu_v;
  std::string route;
  if (linear_member(ctx.f())) {
    auto coeffs = linear_form_coefficients(ctx.f());
    Polynomial<Rational> gh = restrict_to_hyperplane(ctx.g(), coeffs);
    mu_v = finite_or(milnor_number(gh),
                     "the slice of g by {f=0} is not isolated");
    route = "slice route: mu of g restricted to the hyperplane {f = 0}";
  } else if (linear_member(ctx.g())) {
    auto coeffs = linear_form_coefficients(ctx.g());
    Polynomial<Rational> fh = restrict_to_hyperplane(ctx.f(), coeffs);
    mu_v = finite_or(milnor_number(fh),
                     "the slice of f by {g=0} is not isolated");
    route = "slice route: mu of f restricted to the hyperplane {g = 0}";
  } else if (ctx.mu_g().finite) {
    ExtNat swapped = le_greuel_number(ctx.g(), ctx.f());
    if (!swapped.finite)
      hypothesis("the swapped Le-Greuel colength is infinite");
    mu_v = swapped.value - ctx.mu_g().value;
    route =
        "swap route: colength((g) + minors) - mu(g), using the identity with "
        "the roles of f and g exchanged";
  } else {
    hypothesis("no independent route to mu(V(f,g)): neither member of the "
               "pair is linear and mu(g) is infinite");
  }

  Integer lhs = ctx.mu_f().value + mu_v;
  Integer rhs = lg.value;
  r.lhs = lhs;
  r.rhs = rhs;
  r.lhs_route = "mu(f) plus the curve Milnor number via the " + route;
  r.rhs_route = "colength of (f) + 2x2 minors of Jac(f,g) in the local ring";
  add_count(r, "mu-f", ctx.mu_f().value);
  add_count(r, "mu-curve", mu_v);
  add_count(r, "legreuel-colength", rhs);
  r.status = lhs == rhs ? "verified" : "violated";
  return r;
}

// --- parity-inequality --------------------------------------------------------
// For d even B_{g, X cap H} >= Eu_{X^g}(0); for d odd the inequality flips.
inline IdentityReport check_parity_inequality(ScenarioContext& ctx) {
  using namespace verify_detail;
  IdentityReport r;
  r.name = "parity-inequality";
  require_affine(ctx, r.name);
  require_usable_critical_locus(ctx);

  Integer b_gh = ctx.b_g_hyperplane_slice();
  Integer eu0 = ctx.eu_xg_origin();
  bool even = ctx.d() % 2 == 0;
  bool ok = even ? b_gh >= eu0 : b_gh <= eu0;

  r.lhs = b_gh;
  r.rhs = eu0;
  r.lhs_route = "slice route: B_{g,X cap H} from the hyperplane slice of g";
  r.rhs_route =
      "obstruction route: Eu_{X^g}(0) from sectional and transversal Milnor "
      "numbers";
  r.notes.push_back(even ? "d even: requires lhs >= rhs"
                         : "d odd: requires lhs <= rhs");
  r.status = ok ? "verified" : "violated";
  return r;
}

// ----------------------------------------------------------------------------
// Driver
// ----------------------------------------------------------------------------

inline IdentityReport run_check(ScenarioContext& ctx, const std::string& name) {
  using Fn = IdentityReport (*)(ScenarioContext&);
  static const std::map<std::string, Fn> table = {
      {"morse-count-correction", &check_morse_count_correction},
      {"pair-exchange-corrected", &check_pair_exchange},
      {"euler-obstruction-difference", &check_obstruction_difference},
      {"hyperplane-obstruction-correction", &check_hyperplane_obstruction},
      {"fiber-difference-correction", &check_fiber_difference},
      {"milnor-fiber-assembly", &check_milnor_fiber_assembly},
      {"isolated-baseline", &check_isolated_baseline},
      {"legreuel-closure", &check_legreuel_closure},
      {"parity-inequality", &check_parity_inequality},
  };
  auto it = table.find(name);
  if (it == table.end())
    fail(Errc::MalformedScenario, "unknown check \"" + name + "\"");

  try {
    return it->second(ctx);
  } catch (const Error& e) {
    switch (e.kind()) {
      // Hypothesis-class failures: the identity is not applicable to this
      // input; the run continues.
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
      case Errc::NonIsolatedIntersection: {
        IdentityReport r;
        r.name = name;
        r.status = "hypothesis-failed";
        r.reason = std::string(errc_name(e.kind())) + ": " + e.what();
        return r;
      }
      // Everything else is structural and aborts the run.
      default:
        throw;
    }
  }
}

namespace verify_detail {

// The invariant table included with every report: the raw numbers the checks
// were assembled from, so a reader can audit a violation.
inline nlohmann::json invariant_table(ScenarioContext& ctx) {
  nlohmann::json t;
  t["n"] = ctx.n();
  t["d"] = ctx.d();
  t["mu-f"] = extnat_json(ctx.mu_f());
  t["mu-g"] = extnat_json(ctx.mu_g());
  switch (ctx.critical_class()) {
    case CriticalClass::Smooth: t["critical-locus"] = "empty"; break;
    case CriticalClass::Isolated: t["critical-locus"] = "isolated"; break;
    case CriticalClass::Curve: t["critical-locus"] = "curve"; break;
    case CriticalClass::Fat: t["critical-locus"] = "dimension >= 2"; break;
  }
  if (ctx.g_isolated() || ctx.g_curve()) {
    try {
      t["eu-origin"] = integer_json(ctx.eu_xg_origin());
    } catch (const Error&) {
      t["eu-origin"] = "unavailable";
    }
  }
  if (ctx.g_curve()) {
    try {
      const auto& bs = ctx.branches();
      const auto& data = ctx.branch_data();
      const auto& levels = ctx.f_level_data();
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t j = 0; j < data.size(); ++j) {
        nlohmann::json bj;
        bj["multiplicity"] = data[j].multiplicity.get_si();
        bj["f-degree"] = levels[j].f_degree;
        bj["transversal-milnor"] = integer_json(data[j].transversal.milnor);
        bj["transversal-sectional"] =
            integer_json(data[j].transversal.sectional);
        bj["euler-obstruction"] =
            integer_json(data[j].transversal.euler_obstruction);
        arr.push_back(bj);
      }
      t["branches"] = arr;
      t["branch-certificate"] = bs.certificate;
    } catch (const Error&) {
      t["branches"] = "unavailable";
    }
  }
  return t;
}

}  // namespace verify_detail

// Runs every requested check.  Hypothesis failures are recorded per check;
// structural errors propagate to the caller (the CLI maps them to exit 4).
inline RunReport verify_scenario(const Scenario& sc,
                                 std::optional<std::uint64_t> seed_override =
                                     std::nullopt) {
  RunReport report;
  report.scenario = sc.name;
  report.seed = seed_override ? *seed_override : sc.seed;
  ScenarioContext ctx(sc, report.seed);
  for (const auto& name : sc.checks)
    report.checks.push_back(run_check(ctx, name));
  report.invariants = verify_detail::invariant_table(ctx);
  return report;
}

}  // namespace germlab
