#pragma once

// Brasselet numbers B_{f,X}(0) = Σ_i χ(V_i ∩ f^{-1}(δ) ∩ B_ε)·Eu_X(V_i) for
// the supported ambient spaces: affine space, hypersurfaces with isolated
// singularity, and user-declared stratifications.  Every χ is obtained
// through an exact route (Milnor numbers, Lê–Greuel colengths, branch-point
// level slices) or supplied by the user; nothing is approximated.

#include <cstdint>
#include <string>
#include <vector>

#include "germlab/curve.hpp"
#include "germlab/errors.hpp"
#include "germlab/ideal_ops.hpp"
#include "germlab/invariants.hpp"
#include "germlab/numeric.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/stratification.hpp"

namespace germlab {

struct AmbientSpace {
  enum class Kind { AffineSpace, IsolatedHypersurface, Declared };

  Kind kind = Kind::AffineSpace;
  int n = 0;  // embedding dimension
  int d = 0;  // dimension of X
  Polynomial<Rational> h;  // defining germ when kind == IsolatedHypersurface
  StratificationDescriptor stratification;  // when kind == Declared

  static AmbientSpace affine(int n) {
    AmbientSpace x;
    x.kind = Kind::AffineSpace;
    x.n = n;
    x.d = n;
    return x;
  }

  static AmbientSpace isolated_hypersurface(Polynomial<Rational> h) {
    AmbientSpace x;
    x.kind = Kind::IsolatedHypersurface;
    x.n = h.nvars();
    x.d = x.n - 1;
    if (!milnor_number(h).finite)
      fail(Errc::NonIsolated, "ambient hypersurface germ has a non-isolated singularity");
    x.h = std::move(h);
    return x;
  }

  static AmbientSpace declared(int n, int d, StratificationDescriptor strat) {
    AmbientSpace x;
    x.kind = Kind::Declared;
    x.n = n;
    x.d = d;
    validate_descriptor(strat);
    x.stratification = std::move(strat);
    return x;
  }

  // Eu_X at the origin.
  Integer eu_origin(std::uint64_t seed) const {
    switch (kind) {
      case Kind::AffineSpace:
        return 1;
      case Kind::IsolatedHypersurface:
        return euler_obstruction_isolated(h, seed);
      case Kind::Declared:
        return origin_stratum(stratification).eu;
    }
    fail(Errc::Internal, "unreachable ambient kind");
  }

  // Eu_X at a point of the regular part near the origin.
  Integer eu_regular() const {
    if (kind == Kind::Declared) {
      // Take the unique top-dimensional stratum as the regular part.
      const Stratum* top = nullptr;
      for (const auto& s : stratification.strata)
        if (!top || s.dim > top->dim) top = &s;
      if (!top || top->dim != d)
        fail(Errc::MalformedScenario, "declared stratification has no stratum of dimension d");
      return top->eu;
    }
    return 1;
  }
};

// Sum Σ χ_i · Eu_i over a descriptor whose strata carry their χ values.
// Zero-dimensional strata default to χ = 0 (a generic level misses the
// origin); every other stratum must come with a value.
inline Integer brasselet_assembly(const StratificationDescriptor& v) {
  Integer acc = 0;
  for (const auto& s : v.strata) {
    if (s.chi) {
      acc += *s.chi * s.eu;
    } else if (s.dim != 0) {
      fail(Errc::MissingStratumChi,
           "stratum '" + s.name + "' has no Euler characteristic for the level");
    }
  }
  return acc;
}

// B_{f,X}(0) for a function with isolated singularity on X.
inline Integer chi_milnor_fiber(const Polynomial<Rational>& f, const AmbientSpace& x,
                                std::uint64_t seed) {
  (void)seed;
  switch (x.kind) {
    case AmbientSpace::Kind::AffineSpace: {
      ExtNat mu = milnor_number(f);
      if (!mu.finite)
        fail(Errc::NonIsolated, "germ has a non-isolated singularity on affine space");
      return Integer(1) + Integer(invariant_detail::sign_pow(x.n - 1)) * mu.value;
    }
    case AmbientSpace::Kind::IsolatedHypersurface:
      // Regular stratum carries Eu = 1 and χ of the ICIS fibre; the origin
      // stratum misses the generic level.
      return icis_fiber_euler(x.h, f);
    case AmbientSpace::Kind::Declared:
      return brasselet_assembly(x.stratification);
  }
  fail(Errc::Internal, "unreachable ambient kind");
}

// Per-branch data of the singular locus of g relative to the level function
// f: the local degree of f along the branch, the Milnor number of g
// restricted to the (smooth) f-level at generic branch points, and the
// resulting Brasselet number of that restriction there.
struct BranchLevelData {
  long f_degree = 0;
  Integer level_milnor = 0;
  Integer level_b = 0;  // 1 + (−1)^{n−2}·level_milnor
};

inline std::vector<BranchLevelData> branch_level_data(const Polynomial<Rational>& f,
                                                      const Polynomial<Rational>& g,
                                                      const BranchSet& branches) {
  int n = g.nvars();
  const Rational samples[] = {Rational(1, 7), Rational(1, 11), Rational(1, 13)};
  std::vector<BranchLevelData> out;
  out.reserve(branches.branches.size());
  for (const auto& b : branches.branches) {
    BranchLevelData d;
    d.f_degree = local_degree_along_branch(f, b);
    bool have = false;
    for (const auto& t0 : samples) {
      ExtNat mu = milnor_on_level_at(f, g, point_on_branch(b, t0));
      if (!mu.finite)
        fail(Errc::HypothesisFailed,
             "level slice at a branch point has a non-isolated singularity");
      if (!have) {
        d.level_milnor = mu.value;
        have = true;
      } else if (!(d.level_milnor == mu.value)) {
        fail(Errc::GenericityUnstable,
             "level-slice Milnor numbers differ between branch sample points");
      }
    }
    d.level_b = Integer(1) + Integer(invariant_detail::sign_pow(n - 2)) * d.level_milnor;
    out.push_back(std::move(d));
  }
  return out;
}

// χ({g = 0} ∩ {f = δ} ∩ B_ε): the generic-fibre value of the ICIS pair is
// corrected by the vanishing cycles of g|_{f=δ} at the points where the
// level meets the singular locus of g.
inline Integer chi_hypersurface_slice(const Polynomial<Rational>& g,
                                      const Polynomial<Rational>& f,
                                      const std::vector<BranchLevelData>& branches) {
  int n = g.nvars();
  Integer chi = icis_fiber_euler(f, g);
  Integer correction = 0;
  for (const auto& b : branches) correction += Integer(b.f_degree) * b.level_milnor;
  return chi - Integer(invariant_detail::sign_pow(n - 2)) * correction;
}

// B_{f,X^g}(0) on affine ambient space: the refined stratification of
// X^g = {g = 0} has the regular part, one stratum per branch of sing(g),
// and the origin.  A generic level {f = δ} meets branch j in f_degree points
// and contributes χ = chi_hypersurface_slice on the whole of X^g.
inline Integer brasselet_number_on_hypersurface(const Polynomial<Rational>& f,
                                                const Polynomial<Rational>& g,
                                                const std::vector<BranchLevelData>& levels,
                                                const std::vector<Integer>& branch_eu,
                                                Integer eu_origin_xg,
                                                const BranchSet& branches) {
  if (levels.size() != branch_eu.size() || levels.size() != branches.branches.size())
    fail(Errc::Internal, "branch data arity mismatch in Brasselet assembly");
  Integer chi_total = chi_hypersurface_slice(g, f, levels);
  Integer branch_points = 0;
  for (const auto& d : levels) branch_points += Integer(d.f_degree);
  StratificationDescriptor v;
  Stratum reg;
  reg.name = "X^g regular";
  reg.dim = g.nvars() - 1;
  reg.eu = 1;
  reg.in_zero_g = true;
  reg.chi = chi_total - branch_points;
  v.strata.push_back(std::move(reg));
  for (std::size_t j = 0; j < levels.size(); ++j) {
    Stratum b;
    b.name = "sing(g) branch " + std::to_string(j);
    b.dim = 1;
    b.eu = branch_eu[j];
    b.in_zero_g = true;
    b.branch_index = static_cast<int>(j);
    b.chi = Integer(levels[j].f_degree);
    v.strata.push_back(std::move(b));
  }
  Stratum o;
  o.name = "origin";
  o.dim = 0;
  o.contains_origin = true;
  o.in_zero_f = true;
  o.in_zero_g = true;
  o.eu = eu_origin_xg;
  v.strata.push_back(std::move(o));
  validate_descriptor(v);
  return brasselet_assembly(v);
}

}  // namespace germlab
