#pragma once

// Ideal arithmetic on top of the basis engine: local colengths and dimension
// at the origin, intersections, quotients, saturation, elimination, and
// intersection multiplicities.
//
// Saturation, quotient, intersection and elimination are computed in the
// polynomial ring with global orders; every quantity we ultimately report is
// local at the origin, and localization commutes with all of these
// operations, so the global results specialize correctly.  Colength and
// dimension are computed with the local order directly.

#include <algorithm>
#include <optional>
#include <vector>

#include "germlab/groebner.hpp"

namespace germlab {

// Natural number extended with infinity, for colengths of non-isolated loci.
struct ExtNat {
  bool finite = true;
  Integer value = 0;

  static ExtNat infinity() { return ExtNat{false, 0}; }
  static ExtNat of(Integer v) { return ExtNat{true, std::move(v)}; }

  bool operator==(const ExtNat& o) const {
    return finite == o.finite && (!finite || value == o.value);
  }
};

inline std::string to_string(const ExtNat& e) {
  return e.finite ? e.value.get_str() : std::string("infinite");
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  Ideal<K> r = a;
  r.gens.insert(r.gens.end(), b.gens.begin(), b.gens.end());
  return r;
}

template <class K>
Ideal<K> ideal_plus(const Ideal<K>& a, const Polynomial<K>& g) {
  Ideal<K> r = a;
  r.gens.push_back(g);
  return r;
}

// Vector-space dimension of O/(I·O) where O is the local ring at the origin.
template <class K>
ExtNat colength(const Ideal<K>& ideal) {
  auto sb = standard_basis(ideal, MonomialOrder::negdegrevlex());
  std::vector<Monomial> leads = sb.lead_monomials();
  for (const auto& m : leads)
    if (mono_is_one(m)) return ExtNat::of(0);
  int nv = ideal.nv;
  // A finite colength requires a pure power of every variable among the leads.
  std::vector<int> box(nv, -1);
  for (const auto& m : leads) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < nv; ++i) {
      if (m[i] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = i;
    }
    if (pure && support >= 0)
      if (box[support] < 0 || m[support] < box[support]) box[support] = m[support];
  }
  for (int i = 0; i < nv; ++i)
    if (box[i] < 0) return ExtNat::infinity();

  long cells = 1;
  for (int i = 0; i < nv; ++i) {
    cells *= box[i];
    if (cells > 50000000L) fail(Errc::Internal, "colength staircase too large to enumerate");
  }
  // Count monomials under the staircase: exponents below the pure-power box
  // and not divisible by any lead monomial.
  Integer count = 0;
  Monomial e(nv, 0);
  while (true) {
    bool divisible = false;
    for (const auto& m : leads) {
      if (mono_divides(m, e)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) count += 1;
    int i = 0;
    while (i < nv) {
      if (++e[i] < box[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == nv) break;
  }
  return ExtNat::of(count);
}

template <class K>
Integer colength_or_fail(const Ideal<K>& ideal, Errc kind, const std::string& what) {
  ExtNat c = colength(ideal);
  if (!c.finite) fail(kind, what);
  return c.value;
}

template <class K>
bool origin_in_variety(const Ideal<K>& ideal) {
  for (const auto& g : ideal.gens)
    if (!(g.constant_term() == K())) return false;
  return true;
}

// Krull dimension of the germ of V(I) at the origin: the dimension of the
// lead-term ideal of a local standard basis, i.e. the largest coordinate
// subset meeting no lead-monomial support.
template <class K>
int krull_dimension_at_origin(const Ideal<K>& ideal) {
  if (!origin_in_variety(ideal))
    fail(Errc::OriginNotInVariety, "some generator does not vanish at the origin");
  auto sb = standard_basis(ideal, MonomialOrder::negdegrevlex());
  std::vector<Monomial> leads = sb.lead_monomials();
  for (const auto& m : leads)
    if (mono_is_one(m))
      fail(Errc::Internal, "unit lead term although every generator vanishes at the origin");
  int nv = ideal.nv;
  int best = -1;
  for (unsigned subset = 0; subset < (1u << nv); ++subset) {
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (int i = 0; i < nv && inside; ++i)
        if (m[i] > 0 && !(subset & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(subset));
  }
  return best;  // leads empty => zero ideal => dimension nv, covered by subset=all
}

// --- ring embeddings used by the tag-variable constructions ---------------

// Reinterpret p in a ring with extra trailing variables.
template <class K>
Polynomial<K> embed_poly(const Polynomial<K>& p, int new_nv) {
  Polynomial<K> r(new_nv);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(new_nv, 0);
    std::copy(m.begin(), m.end(), mm.begin());
    r.add_term(mm, c);
  }
  return r;
}

// Drop variables that the polynomial provably does not use.
template <class K>
Polynomial<K> project_poly(const Polynomial<K>& p, const std::vector<int>& keep) {
  Polynomial<K> r(static_cast<int>(keep.size()));
  std::vector<char> kept(p.nvars(), 0);
  for (int i : keep) kept[i] = 1;
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(keep.size(), 0);
    for (int i = 0; i < p.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!kept[i]) fail(Errc::Internal, "projection would drop a used variable");
    }
    for (std::size_t k = 0; k < keep.size(); ++k) mm[k] = m[keep[k]];
    r.add_term(mm, c);
  }
  return r;
}

// --- intersection / quotient / saturation / elimination -------------------

// I ∩ J via the tag-variable trick: eliminate t from t·I + (1-t)·J.
template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& a, const Ideal<K>& b) {
  int nv = a.nv;
  int t = nv;  // tag variable index
  Ideal<K> big(nv + 1, {});
  Polynomial<K> tv = Polynomial<K>::variable(nv + 1, t);
  Polynomial<K> one_minus_t = Polynomial<K>::constant(nv + 1, K(1)) - tv;
  for (const auto& g : a.gens) big.gens.push_back(tv * embed_poly(g, nv + 1));
  for (const auto& g : b.gens) big.gens.push_back(one_minus_t * embed_poly(g, nv + 1));
  std::vector<char> drop(nv + 1, 0);
  drop[t] = 1;
  auto sb = standard_basis(big, MonomialOrder::block(drop));
  Ideal<K> out(nv, {});
  std::vector<int> keep(nv);
  for (int i = 0; i < nv; ++i) keep[i] = i;
  for (const auto& p : sb.elements) {
    bool uses_t = false;
    for (const auto& [m, c] : p.terms()) uses_t = uses_t || m[t] > 0;
    if (!uses_t) out.gens.push_back(project_poly(p, keep));
  }
  return out;
}

// Exact division p / d, empty if d does not divide p.
template <class K>
std::optional<Polynomial<K>> exact_divide(const Polynomial<K>& p, const Polynomial<K>& d) {
  if (d.is_zero()) fail(Errc::Internal, "division by the zero polynomial");
  MonomialOrder ord = MonomialOrder::degrevlex();
  auto rem = detail::to_ordered(p, ord);
  auto div = detail::to_ordered(d, ord);
  Polynomial<K> q(p.nvars());
  while (!rem.is_zero()) {
    if (!mono_divides(div.lm(), rem.lm())) return std::nullopt;
    K c = rem.lc() / div.lc();
    Monomial shift = mono_div(rem.lm(), div.lm());
    q.add_term(shift, c);
    rem = detail::axpy(rem, c, shift, div, ord);
  }
  return q;
}

// Ideal quotient I : (g) = (I ∩ (g)) / g.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& ideal, const Polynomial<K>& g) {
  if (g.is_zero()) fail(Errc::Internal, "quotient by the zero polynomial");
  Ideal<K> gg(ideal.nv, {g});
  Ideal<K> meet = ideal_intersect(ideal, gg);
  Ideal<K> out(ideal.nv, {});
  for (const auto& p : meet.gens) {
    auto q = exact_divide(p, g);
    if (!q) fail(Errc::Internal, "intersection with a principal ideal not divisible");
    if (!q->is_zero()) out.gens.push_back(*q);
  }
  return out;
}

template <class K>
bool same_ideal(const Ideal<K>& a, const Ideal<K>& b) {
  auto sa = standard_basis(a, MonomialOrder::degrevlex());
  auto sb = standard_basis(b, MonomialOrder::degrevlex());
  return sa.elements == sb.elements;  // reduced bases are canonical
}

struct SaturationResult {
  int steps = 0;  // number of quotients applied before stabilizing
};

// I : g^∞ by iterated quotient with stabilization detection.
template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const Polynomial<K>& g, SaturationResult* info = nullptr) {
  Ideal<K> cur = ideal;
  for (int step = 0; step < 64; ++step) {
    Ideal<K> next = ideal_quotient(cur, g);
    if (same_ideal(cur, next)) {
      if (info) info->steps = step;
      return cur;
    }
    cur = std::move(next);
  }
  fail(Errc::SaturationDiverged, "quotient chain did not stabilize within 64 steps");
}

// Generators of I ∩ K[kept variables], via a block order.  `drop` marks the
// variables to eliminate; returned polynomials live in the same ring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<char>& drop) {
  auto sb = standard_basis(ideal, MonomialOrder::block(drop));
  Ideal<K> out(ideal.nv, {});
  for (const auto& p : sb.elements) {
    bool uses_dropped = false;
    for (const auto& [m, c] : p.terms())
      for (int i = 0; i < ideal.nv; ++i)
        if (m[i] > 0 && drop[i]) uses_dropped = true;
    if (!uses_dropped) out.gens.push_back(p);
  }
  return out;
}

// Multiplicity of the hypersurface {h = 0} against the curve V(C) at the
// origin, as the colength of C + (h).
template <class K>
Integer intersection_multiplicity_at_origin(const Ideal<K>& curve, const Polynomial<K>& h) {
  if (krull_dimension_at_origin(curve) != 1)
    fail(Errc::NotACurve, "intersection multiplicity requires a one-dimensional germ");
  return colength_or_fail(ideal_plus(curve, h), Errc::NonIsolatedIntersection,
                          "hypersurface does not meet the curve in an isolated point");
}

}  // namespace germlab
