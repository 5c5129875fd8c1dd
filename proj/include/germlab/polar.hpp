#pragma once

// Relative polar schemes of germ pairs.  For germs f, g the scheme
// P(f, g) = minors(Jac(f, g)) : (f·g)^∞ collects the critical points of the
// pair away from both zero sets.  Cutting P with a level {h = 0} yields a
// conservation count (intersection points, with multiplicity, traded under a
// small deformation); decomposing P into branches yields the same count as a
// sum of local degrees weighted by level-slice Milnor numbers.  The two
// routes are independent and are cross-checked by the identity verifier.

#include <cstdint>
#include <string>
#include <vector>

#include "germlab/curve.hpp"
#include "germlab/errors.hpp"
#include "germlab/ideal_ops.hpp"
#include "germlab/invariants.hpp"
#include "germlab/numeric.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

inline Ideal<Rational> polar_scheme(const Polynomial<Rational>& f,
                                    const Polynomial<Rational>& g) {
  return saturate(jacobian_pair_minors(f, g), f * g);
}

// colength(P + (h)): finite exactly when the polar set meets {h = 0} only at
// the origin nearby.
inline ExtNat polar_level_count(const Ideal<Rational>& polar, const Polynomial<Rational>& h) {
  return colength(ideal_plus(polar, h));
}

// Per-branch contribution to a conservation count: the local degree of the
// level function along the branch and the Milnor number of the other germ on
// that level at generic branch points.
struct PolarBranchData {
  long level_degree;
  Integer level_milnor;
};

struct PolarCurveData {
  BranchSet branches;
  std::vector<PolarBranchData> data;  // aligned with branches.branches
};

// Branch decomposition of P(f, g) with the conservation weights for the
// level function f.  Requires the polar set to be a curve (or empty) at the
// origin and every branch to be exactly parametrized.
inline PolarCurveData polar_curve_with_levels(const Polynomial<Rational>& f,
                                              const Polynomial<Rational>& g,
                                              std::uint64_t seed) {
  PolarCurveData pc;
  Ideal<Rational> p = polar_scheme(f, g);
  if (!origin_in_variety(p)) return pc;  // polar set empty near the origin
  int dim = krull_dimension_at_origin(p);
  if (dim == 0) return pc;
  if (dim != 1)
    fail(Errc::PolarNotCurve,
         "polar set has dimension " + std::to_string(dim) + " at the origin");
  pc.branches = decompose_critical_locus(p, derive_seed(seed, "polar-curve"));
  const Rational samples[] = {Rational(1, 7), Rational(1, 11), Rational(1, 13)};
  for (const auto& b : pc.branches.branches) {
    PolarBranchData d;
    d.level_degree = local_degree_along_branch(f, b);
    bool have = false;
    for (const auto& t0 : samples) {
      ExtNat mu = milnor_on_level_at(f, g, point_on_branch(b, t0));
      if (!mu.finite)
        fail(Errc::HypothesisFailed,
             "level slice along a polar branch has a non-isolated singularity");
      if (!have) {
        d.level_milnor = mu.value;
        have = true;
      } else if (!(d.level_milnor == mu.value)) {
        fail(Errc::GenericityUnstable,
             "level-slice Milnor numbers differ between polar branch sample points");
      }
    }
    pc.data.push_back(std::move(d));
  }
  return pc;
}

// Branch-sum route for colength(P + (f)): Σ_ν deg_ν(f) · μ_ν(level).
inline Integer polar_conservation_sum(const PolarCurveData& pc) {
  Integer acc = 0;
  for (const auto& d : pc.data) acc += Integer(d.level_degree) * d.level_milnor;
  return acc;
}

}  // namespace germlab
