#pragma once

// Groebner bases (global orders, Buchberger) and standard bases (local
// orders, Buchberger driven by Mora's weak normal form with the ecart rule).
//
// One engine serves both cases: for a global order the ecart bookkeeping is
// inert and the weak normal form is the ordinary division remainder; for the
// local order it is Mora's tangent-cone algorithm, which terminates where
// naive division would loop.  Pair selection is the normal strategy (minimal
// lcm in the active order); both classical pair criteria (coprimality and
// chain) are applied.  The computation is deterministic: inputs are sorted
// canonically up front and every choice ties back to the order or to indices.

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "germlab/algebraic.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

template <class K>
struct Ideal {
  int nv = 0;
  std::vector<Polynomial<K>> gens;

  Ideal() = default;
  Ideal(int nvars, std::vector<Polynomial<K>> g) : nv(nvars), gens(std::move(g)) {}

  static Ideal zero(int nvars) { return Ideal(nvars, {}); }
};

template <class K>
struct StandardBasis {
  MonomialOrder order;
  std::vector<Polynomial<K>> elements;  // monic, sorted ascending by lead term
  bool reduced = false;                 // true iff fully tail-reduced (global)

  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> l;
    l.reserve(elements.size());
    for (const auto& p : elements) l.push_back(p.leading_term(order).first);
    return l;
  }
};

namespace detail {

// Total order on coefficients, used only to sort polynomials canonically.
inline int coeff_cmp(const Rational& a, const Rational& b) { return cmp(a, b); }
inline int coeff_cmp(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber d = a - b;
  for (const auto& q : d.coeffs()) {
    int s = sgn(q);
    if (s) return s;
  }
  return 0;
}

// Working representation: terms sorted descending in the active order.
template <class K>
struct OrderedPoly {
  std::vector<std::pair<Monomial, K>> t;
  int ecart = 0;  // total degree spread: deg(p) - deg(LT(p))

  bool is_zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().first; }
  const K& lc() const { return t.front().second; }

  void compute_ecart() {
    if (t.empty()) {
      ecart = 0;
      return;
    }
    int dmax = 0;
    for (const auto& [m, c] : t) dmax = std::max(dmax, total_degree(m));
    ecart = dmax - total_degree(t.front().first);
  }
};

template <class K>
OrderedPoly<K> to_ordered(const Polynomial<K>& p, const MonomialOrder& ord) {
  OrderedPoly<K> r;
  r.t.assign(p.terms().begin(), p.terms().end());
  std::sort(r.t.begin(), r.t.end(),
            [&ord](const auto& a, const auto& b) { return ord.cmp(a.first, b.first) > 0; });
  r.compute_ecart();
  return r;
}

template <class K>
Polynomial<K> from_ordered(const OrderedPoly<K>& p, int nv) {
  Polynomial<K> r(nv);
  for (const auto& [m, c] : p.t) r.add_term(m, c);
  return r;
}

// r := a - coef * x^shift * b, merging two descending term lists.
template <class K>
OrderedPoly<K> axpy(const OrderedPoly<K>& a, const K& coef, const Monomial& shift,
                    const OrderedPoly<K>& b, const MonomialOrder& ord) {
  OrderedPoly<K> r;
  r.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size()) {
      r.t.push_back(a.t[i++]);
      continue;
    }
    Monomial mb = mono_mul(b.t[j].first, shift);
    if (i == a.t.size()) {
      K c = K() - coef * b.t[j].second;
      if (!(c == K())) r.t.emplace_back(std::move(mb), std::move(c));
      ++j;
      continue;
    }
    int c = ord.cmp(a.t[i].first, mb);
    if (c > 0) {
      r.t.push_back(a.t[i++]);
    } else if (c < 0) {
      K cc = K() - coef * b.t[j].second;
      if (!(cc == K())) r.t.emplace_back(std::move(mb), std::move(cc));
      ++j;
    } else {
      K cc = a.t[i].second - coef * b.t[j].second;
      if (!(cc == K())) r.t.emplace_back(std::move(mb), std::move(cc));
      ++i;
      ++j;
    }
  }
  r.compute_ecart();
  return r;
}

// Mora weak normal form of h against T.  For a global order this is ordinary
// multivariate division; for the local order the ecart rule plus the growing
// reducer list realize division by a unit multiple, which is what makes the
// computation terminate in the local ring.
template <class K>
OrderedPoly<K> weak_normal_form(OrderedPoly<K> h, const std::vector<OrderedPoly<K>>& basis,
                                const MonomialOrder& ord) {
  std::vector<const OrderedPoly<K>*> T;
  std::deque<OrderedPoly<K>> extra;  // intermediate reducers added by the ecart rule
  T.reserve(basis.size());
  for (const auto& g : basis) T.push_back(&g);
  long budget = 500000;
  while (!h.is_zero()) {
    const OrderedPoly<K>* best = nullptr;
    for (const auto* g : T) {
      if (!mono_divides(g->lm(), h.lm())) continue;
      if (!best || g->ecart < best->ecart) best = g;
    }
    if (!best) break;
    if (best->ecart > h.ecart) {
      extra.push_back(h);  // keep a copy; it may shortcut later reductions
      T.push_back(&extra.back());
    }
    K coef = h.lc() / best->lc();
    Monomial shift = mono_div(h.lm(), best->lm());
    h = axpy(h, coef, shift, *best, ord);
    if (--budget == 0) fail(Errc::Internal, "normal form exceeded its reduction budget");
  }
  return h;
}

// Fully reduced normal form: every remaining term is irreducible against the
// basis lead terms.  Meaningful for global orders, where it yields the unique
// canonical remainder modulo a Groebner basis.
template <class K>
OrderedPoly<K> full_normal_form(OrderedPoly<K> h, const std::vector<OrderedPoly<K>>& basis,
                                const MonomialOrder& ord) {
  OrderedPoly<K> result;
  while (!h.is_zero()) {
    h = weak_normal_form(std::move(h), basis, ord);
    if (h.is_zero()) break;
    result.t.push_back(h.t.front());
    h.t.erase(h.t.begin());
  }
  result.compute_ecart();
  return result;
}

template <class K>
OrderedPoly<K> s_polynomial(const OrderedPoly<K>& f, const OrderedPoly<K>& g,
                            const MonomialOrder& ord) {
  Monomial l = mono_lcm(f.lm(), g.lm());
  // (1/lc_f) x^(l-lm_f) f - (1/lc_g) x^(l-lm_g) g, built via two axpys.
  OrderedPoly<K> a;
  a.t.reserve(f.t.size());
  Monomial sf = mono_div(l, f.lm());
  K inv_f = K(1) / f.lc();
  for (const auto& [m, c] : f.t) a.t.emplace_back(mono_mul(m, sf), K(c * inv_f));
  a.compute_ecart();
  K inv_g = K(1) / g.lc();
  return axpy(a, inv_g, mono_div(l, g.lm()), g, ord);
}

template <class K>
bool poly_less_canonical(const Polynomial<K>& a, const Polynomial<K>& b,
                         const MonomialOrder& ord) {
  auto ta = to_ordered(a, ord), tb = to_ordered(b, ord);
  std::size_t n = std::min(ta.t.size(), tb.t.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = ord.cmp(ta.t[i].first, tb.t[i].first);
    if (c) return c < 0;
    int cc = coeff_cmp(ta.t[i].second, tb.t[i].second);
    if (cc) return cc < 0;
  }
  return ta.t.size() < tb.t.size();
}

}  // namespace detail

// Buchberger / Mora standard basis computation.
template <class K>
StandardBasis<K> standard_basis(const Ideal<K>& ideal, const MonomialOrder& ord) {
  using OP = detail::OrderedPoly<K>;
  int nv = ideal.nv;

  std::vector<Polynomial<K>> input;
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) input.push_back(g);
  std::sort(input.begin(), input.end(), [&ord](const auto& a, const auto& b) {
    return detail::poly_less_canonical(a, b, ord);
  });

  std::vector<OP> G;
  G.reserve(input.size());
  for (const auto& p : input) G.push_back(detail::to_ordered(p, ord));

  // Pair queue keyed by (lcm in the active order, i, j): normal strategy.
  struct PairKey {
    Monomial lcm;
    int i, j;
  };
  auto key_less = [&ord](const PairKey& a, const PairKey& b) {
    int da = total_degree(a.lcm), db = total_degree(b.lcm);
    if (da != db) return da < db;  // low-degree pairs first under either order kind
    int c = ord.cmp(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairKey, decltype(key_less)> pairs(key_less);
  std::set<std::pair<int, int>> treated;

  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i)
      pairs.insert({mono_lcm(G[i].lm(), G[j].lm()), i, j});
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs_for(j);

  long pair_budget = 50000;
  while (!pairs.empty()) {
    if (--pair_budget == 0) fail(Errc::Internal, "basis computation exceeded its pair budget");
    PairKey pk = *pairs.begin();
    pairs.erase(pairs.begin());
    treated.insert({pk.i, pk.j});

    // Coprimality criterion: disjoint lead monomials reduce to zero.
    if (pk.lcm == mono_mul(G[pk.i].lm(), G[pk.j].lm())) continue;

    // Chain criterion: a third element dividing the lcm whose pairs with both
    // ends were already treated makes this S-polynomial redundant.
    bool redundant = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !redundant; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!mono_divides(G[k].lm(), pk.lcm)) continue;
      auto mk = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (treated.count(mk(pk.i, k)) && treated.count(mk(pk.j, k))) redundant = true;
    }
    if (redundant) continue;

    OP s = detail::s_polynomial(G[pk.i], G[pk.j], ord);
    OP h = detail::weak_normal_form(std::move(s), G, ord);
    if (h.is_zero()) continue;
    G.push_back(std::move(h));
    push_pairs_for(static_cast<int>(G.size()) - 1);
  }

  // Minimalize: drop elements whose lead monomial another element divides.
  std::vector<int> order_idx(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) order_idx[i] = static_cast<int>(i);
  std::sort(order_idx.begin(), order_idx.end(),
            [&](int a, int b) { return ord.cmp(G[a].lm(), G[b].lm()) < 0; });
  std::vector<OP> minimal;
  for (int idx : order_idx) {
    bool covered = false;
    for (const auto& kept : minimal)
      covered = covered || mono_divides(kept.lm(), G[idx].lm());
    if (!covered) minimal.push_back(G[idx]);
  }

  StandardBasis<K> out;
  out.order = ord;
  out.reduced = ord.global();
  for (auto& g : minimal) {
    K inv = K(1) / g.lc();
    for (auto& [m, c] : g.t) c = c * inv;
  }
  if (ord.global()) {
    // Full tail reduction: the reduced Groebner basis is canonical, so the
    // output is independent of generator permutation by construction.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<OP> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      OP tail = minimal[i];
      tail.t.erase(tail.t.begin());
      tail.compute_ecart();
      OP red = detail::full_normal_form(std::move(tail), others, ord);
      OP rebuilt;
      rebuilt.t.push_back(minimal[i].t.front());
      for (auto& term : red.t) rebuilt.t.push_back(std::move(term));
      rebuilt.compute_ecart();
      minimal[i] = std::move(rebuilt);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const OP& a, const OP& b) { return ord.cmp(a.lm(), b.lm()) < 0; });
  }
  for (const auto& g : minimal) out.elements.push_back(detail::from_ordered(g, nv));
  return out;
}

// Normal form of a polynomial against a precomputed basis.  Zero iff f lies
// in the ideal (for the local order: in the localized ideal).  Global orders
// get the fully reduced canonical remainder; local orders the Mora weak form.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const StandardBasis<K>& sb) {
  if (f.is_zero()) return f;
  std::vector<detail::OrderedPoly<K>> basis;
  basis.reserve(sb.elements.size());
  for (const auto& g : sb.elements) basis.push_back(detail::to_ordered(g, sb.order));
  auto h0 = detail::to_ordered(f, sb.order);
  auto h = sb.order.global() ? detail::full_normal_form(std::move(h0), basis, sb.order)
                             : detail::weak_normal_form(std::move(h0), basis, sb.order);
  return detail::from_ordered(h, f.nvars());
}

template <class K>
bool in_ideal(const Polynomial<K>& f, const StandardBasis<K>& sb) {
  return normal_form(f, sb).is_zero();
}

}  // namespace germlab
