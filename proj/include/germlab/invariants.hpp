#pragma once

// Milnor-type invariants of polynomial germs at a point: plain and sectional
// Milnor numbers, Lê–Greuel colengths of pairs, Euler characteristics of
// ICIS Milnor fibres, and local Euler obstructions of hypersurface germs
// with isolated or one-dimensional singular locus.  Generic choices (slice
// directions, sample parameters) follow the deterministic seeding scheme and
// are cross-checked for stability before a value is reported.

#include <cstdint>
#include <string>
#include <vector>

#include "germlab/algebraic.hpp"
#include "germlab/curve.hpp"
#include "germlab/errors.hpp"
#include "germlab/ideal_ops.hpp"
#include "germlab/numeric.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

// ---------------------------------------------------------------------------
// Jacobian ideals and Milnor numbers at the origin.

template <class K>
Ideal<K> jacobian_ideal(const Polynomial<K>& f) {
  Ideal<K> j(f.nvars(), {});
  for (int i = 0; i < f.nvars(); ++i) j.gens.push_back(f.differentiate(i));
  return j;
}

// μ(f) at the origin; infinite exactly when the critical locus of f is
// positive-dimensional there.
template <class K>
ExtNat milnor_number(const Polynomial<K>& f) {
  return colength(jacobian_ideal(f));
}

// Ideal of 2×2 minors of the Jacobian matrix of the pair (f, g).
template <class K>
Ideal<K> jacobian_pair_minors(const Polynomial<K>& f, const Polynomial<K>& g) {
  int n = f.nvars();
  std::vector<Polynomial<K>> df, dg;
  df.reserve(n);
  dg.reserve(n);
  for (int i = 0; i < n; ++i) {
    df.push_back(f.differentiate(i));
    dg.push_back(g.differentiate(i));
  }
  Ideal<K> m(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.gens.push_back(df[i] * dg[j] - df[j] * dg[i]);
  return m;
}

// (f) + 2×2 minors of Jac(f, g): the colength of this ideal is the number of
// vanishing cycles the pair trades through a Lê–Greuel-type identity.
template <class K>
Ideal<K> le_greuel_ideal(const Polynomial<K>& f, const Polynomial<K>& g) {
  Ideal<K> i = jacobian_pair_minors(f, g);
  i.gens.push_back(f);
  return i;
}

template <class K>
ExtNat le_greuel_number(const Polynomial<K>& f, const Polynomial<K>& g) {
  return colength(le_greuel_ideal(f, g));
}

// ---------------------------------------------------------------------------
// Hyperplane slices.

// Coefficient vector of a homogeneous linear form.
template <class K>
std::vector<K> linear_form_coefficients(const Polynomial<K>& l) {
  int n = l.nvars();
  std::vector<K> a(n, K());
  for (const auto& [m, c] : l.terms()) {
    if (total_degree(m) != 1)
      fail(Errc::Unsupported, "slice direction must be a homogeneous linear form");
    for (int i = 0; i < n; ++i)
      if (m[i] == 1) a[i] = c;
  }
  bool any = false;
  for (const auto& c : a)
    if (!(c == K())) any = true;
  if (!any) fail(Errc::Unsupported, "slice direction must be a nonzero linear form");
  return a;
}

// Restriction of f to the hyperplane Σ a_i·x_i = 0, eliminating the pivot
// variable (the last one with nonzero coefficient when not specified).  The
// result lives in n−1 variables: the original ones with the pivot removed.
template <class K>
Polynomial<K> restrict_to_hyperplane(const Polynomial<K>& f, const std::vector<K>& a,
                                     int pivot = -1) {
  int n = f.nvars();
  if (n < 2) fail(Errc::Unsupported, "hyperplane slice needs at least two variables");
  if (static_cast<int>(a.size()) != n)
    fail(Errc::Internal, "hyperplane coefficient arity mismatch");
  if (pivot < 0)
    for (int i = 0; i < n; ++i)
      if (!(a[i] == K())) pivot = i;
  if (pivot < 0 || a[pivot] == K())
    fail(Errc::Internal, "hyperplane pivot has zero coefficient");
  Polynomial<K> sub(n - 1);
  for (int i = 0, idx = 0; i < n; ++i) {
    if (i == pivot) continue;
    if (!(a[i] == K()))
      sub = sub + Polynomial<K>::variable(n - 1, idx, K() - a[i] / a[pivot]);
    ++idx;
  }
  std::vector<Polynomial<K>> images;
  images.reserve(n);
  for (int i = 0, idx = 0; i < n; ++i) {
    if (i == pivot) {
      images.push_back(sub);
    } else {
      images.push_back(Polynomial<K>::variable(n - 1, idx));
      ++idx;
    }
  }
  return f.substitute(images);
}

// μ of f restricted to the hyperplane Σ a_i·x_i = 0 through the origin.
template <class K>
ExtNat slice_milnor(const Polynomial<K>& f, const std::vector<K>& a) {
  return milnor_number(restrict_to_hyperplane(f, a));
}

// Result of a generic-slice computation together with its evidence: the
// per-seed sample values and the seed label index that attained the minimum.
struct GenericSliceResult {
  ExtNat value;
  std::vector<ExtNat> samples;
};

namespace invariant_detail {

inline bool extnat_less(const ExtNat& a, const ExtNat& b) {
  if (!a.finite) return false;
  if (!b.finite) return true;
  return a.value < b.value;
}

template <class K>
std::vector<K> seeded_slice_coeffs(int n, std::uint64_t seed) {
  auto l = random_linear_form(n, seed);
  std::vector<K> a(n, K());
  for (const auto& [m, c] : l.terms())
    for (int i = 0; i < n; ++i)
      if (m[i] == 1) a[i] = K(c);
  return a;
}

}  // namespace invariant_detail

// Sectional Milnor number μ′(f): μ of the restriction of f to a generic
// hyperplane through the origin.  Computed over `trials` seeded directions;
// the minimum must be attained at least twice, otherwise the choice is
// declared unstable.
template <class K>
GenericSliceResult sectional_milnor(const Polynomial<K>& f, std::uint64_t seed, int trials = 3) {
  if (f.nvars() < 2)
    fail(Errc::Unsupported, "sectional Milnor number needs at least two variables");
  GenericSliceResult r;
  for (int k = 0; k < trials; ++k) {
    auto a = invariant_detail::seeded_slice_coeffs<K>(
        f.nvars(), derive_seed(seed, "sectional-slice-" + std::to_string(k)));
    r.samples.push_back(slice_milnor(f, a));
  }
  ExtNat best = r.samples.front();
  for (const auto& s : r.samples)
    if (invariant_detail::extnat_less(s, best)) best = s;
  int hits = 0;
  for (const auto& s : r.samples)
    if (s == best) ++hits;
  if (hits < 2)
    fail(Errc::GenericityUnstable,
         "sectional Milnor number: minimum attained only once across seeded slices");
  r.value = best;
  return r;
}

// ---------------------------------------------------------------------------
// Germs at points away from the origin.

inline std::vector<AlgebraicNumber> algebraic_point(const std::vector<Rational>& p) {
  std::vector<AlgebraicNumber> q;
  q.reserve(p.size());
  for (const auto& c : p) q.emplace_back(c);
  return q;
}

// f as a germ at p: x ↦ f(x + p).  The constant term is kept, so callers
// decide whether to subtract the critical value.
inline Polynomial<AlgebraicNumber> germ_at_point(const Polynomial<Rational>& f,
                                                 const std::vector<AlgebraicNumber>& p) {
  return to_algebraic(f).translated(p);
}

inline ExtNat milnor_number_at(const Polynomial<Rational>& f,
                               const std::vector<AlgebraicNumber>& p) {
  return colength(jacobian_ideal(germ_at_point(f, p)));
}

// μ of g restricted to the level {f = f(p)} at the point p, assuming the
// level is smooth at p.  On a smooth level the restriction has an isolated
// singularity at p exactly when (f − f(p)) + minors(Jac(f, g)) has finite
// colength at p, and that colength is its Milnor number.
inline ExtNat milnor_on_level_at(const Polynomial<Rational>& f, const Polynomial<Rational>& g,
                                 const std::vector<AlgebraicNumber>& p) {
  Polynomial<AlgebraicNumber> ft = germ_at_point(f, p);
  Polynomial<AlgebraicNumber> gt = germ_at_point(g, p);
  int n = f.nvars();
  bool smooth = false;
  for (int i = 0; i < n; ++i)
    if (!(ft.differentiate(i).constant_term() == AlgebraicNumber())) smooth = true;
  if (!smooth) fail(Errc::HypothesisFailed, "level set is singular at the sample point");
  Ideal<AlgebraicNumber> i = jacobian_pair_minors(ft, gt);
  i.gens.push_back(ft - Polynomial<AlgebraicNumber>::constant(n, ft.constant_term()));
  return colength(i);
}

// ---------------------------------------------------------------------------
// Transversal slice invariants along a curve branch.

// Invariants of the hyperplane slice of V(g) transverse to a branch of its
// singular locus at a generic point: the slice Milnor number, its sectional
// Milnor number, and the resulting local Euler obstruction of V(g) there.
struct TransversalSliceData {
  Integer milnor;
  Integer sectional;
  Integer euler_obstruction;
};

inline bool operator==(const TransversalSliceData& a, const TransversalSliceData& b) {
  return a.milnor == b.milnor && a.sectional == b.sectional &&
         a.euler_obstruction == b.euler_obstruction;
}

namespace invariant_detail {

inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

// Transversal data at one sample parameter t0 on an exact branch.
inline TransversalSliceData transversal_at_parameter(const Polynomial<Rational>& g,
                                                     const SpaceBranch& b, const Rational& t0,
                                                     std::uint64_t seed) {
  int n = g.nvars();
  if (n < 3)
    fail(Errc::Unsupported, "transversal slice data needs at least three variables");
  auto p = point_on_branch(b, t0);
  auto tangent = branch_tangent_at(b, t0);
  std::vector<AlgebraicNumber> a;
  bool found = false;
  for (int tries = 0; tries < 8 && !found; ++tries) {
    a = seeded_slice_coeffs<AlgebraicNumber>(
        n, derive_seed(seed, "transversal-normal-" + std::to_string(tries)));
    AlgebraicNumber dot;
    for (int i = 0; i < n; ++i) dot = dot + a[i] * tangent[i];
    if (!(dot == AlgebraicNumber())) found = true;
  }
  if (!found)
    fail(Errc::SliceNotTransverse,
         "no seeded hyperplane is transverse to the branch at the sample point");
  Polynomial<AlgebraicNumber> h = restrict_to_hyperplane(germ_at_point(g, p), a);
  TransversalSliceData d;
  d.milnor = colength_or_fail(jacobian_ideal(h), Errc::TransversalNotIsolated,
                              "transversal slice has a non-isolated singularity");
  auto sec = sectional_milnor(h, derive_seed(seed, "transversal-sectional"));
  if (!sec.value.finite)
    fail(Errc::TransversalNotIsolated,
         "sectional Milnor number of the transversal slice is infinite");
  d.sectional = sec.value.value;
  // Local product structure at a generic branch point: the obstruction of
  // V(g) equals that of the (n−1)-variable isolated slice germ.
  d.euler_obstruction = Integer(1) + Integer(sign_pow(n - 3)) * d.sectional;
  return d;
}

}  // namespace invariant_detail

// Stable transversal invariants along an exact branch: computed at three
// sample parameters, which must agree.
inline TransversalSliceData transversal_slice_data(const Polynomial<Rational>& g,
                                                   const SpaceBranch& b, std::uint64_t seed) {
  if (!b.exact)
    fail(Errc::Unsupported,
         "transversal invariants require an exactly parametrized branch");
  const Rational samples[] = {Rational(1, 7), Rational(1, 11), Rational(1, 13)};
  TransversalSliceData first{};
  for (int k = 0; k < 3; ++k) {
    auto d = invariant_detail::transversal_at_parameter(
        g, b, samples[k], derive_seed(seed, "transversal-sample-" + std::to_string(k)));
    if (k == 0)
      first = d;
    else if (!(d == first))
      fail(Errc::GenericityUnstable,
           "transversal invariants differ between sample points on a branch");
  }
  return first;
}

// Everything the obstruction and Brasselet-number formulas consume per
// branch of a one-dimensional singular locus.
struct BranchInvariants {
  Integer multiplicity;  // generic linear local degree along the branch
  TransversalSliceData transversal;
};

inline std::vector<BranchInvariants> branch_invariants(const Polynomial<Rational>& g,
                                                       const BranchSet& bs,
                                                       std::uint64_t seed) {
  std::vector<BranchInvariants> out;
  out.reserve(bs.branches.size());
  for (std::size_t j = 0; j < bs.branches.size(); ++j) {
    const auto& b = bs.branches[j];
    BranchInvariants bi;
    bi.multiplicity = Integer(
        branch_multiplicity(b, derive_seed(seed, "branch-mult-" + std::to_string(j))));
    bi.transversal =
        transversal_slice_data(g, b, derive_seed(seed, "branch-transversal-" + std::to_string(j)));
    out.push_back(std::move(bi));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local Euler obstructions of hypersurface germs.

// Isolated hypersurface singularity: Eu = 1 + (−1)^{n−2}·μ′.
inline Integer euler_obstruction_isolated(const Polynomial<Rational>& g, std::uint64_t seed) {
  auto sec = sectional_milnor(g, derive_seed(seed, "eu-sectional"));
  if (!sec.value.finite)
    fail(Errc::NonIsolated, "generic hyperplane slice has a non-isolated singularity");
  return Integer(1) +
         Integer(invariant_detail::sign_pow(g.nvars() - 2)) * sec.value.value;
}

// One-dimensional singular locus with branch data: the generic hyperplane
// slice term is corrected by the transversal invariants of every branch.
inline Integer euler_obstruction_1dim(const Polynomial<Rational>& g,
                                      const std::vector<BranchInvariants>& branches,
                                      std::uint64_t seed) {
  int n = g.nvars();
  auto sec = sectional_milnor(g, derive_seed(seed, "eu-hyperplane"));
  if (!sec.value.finite)
    fail(Errc::HypothesisFailed,
         "generic hyperplane slice has a non-isolated singularity at the origin");
  Integer acc = Integer(1) + Integer(invariant_detail::sign_pow(n - 2)) * sec.value.value;
  Integer sum = 0;
  for (const auto& b : branches)
    sum += b.multiplicity * (b.transversal.milnor + b.transversal.sectional);
  return acc + Integer(invariant_detail::sign_pow(n - 1)) * sum;
}

// ---------------------------------------------------------------------------
// ICIS pair fibre.

// Euler characteristic of the Milnor fibre of g restricted to V(f) when f
// has (at most) an isolated singularity and the pair ideal has finite
// colength: χ = 1 + (−1)^{n−2}(LG(f,g) − μ(f)).
inline Integer icis_fiber_euler(const Polynomial<Rational>& f, const Polynomial<Rational>& g) {
  ExtNat mu = milnor_number(f);
  if (!mu.finite)
    fail(Errc::NotICIS, "first germ of the pair has a non-isolated singularity");
  ExtNat lg = le_greuel_number(f, g);
  if (!lg.finite)
    fail(Errc::NotICIS, "pair ideal (f) + minors has infinite colength");
  return Integer(1) +
         Integer(invariant_detail::sign_pow(f.nvars() - 2)) * (lg.value - mu.value);
}

}  // namespace germlab
