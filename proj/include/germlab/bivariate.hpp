#pragma once

// Bivariate polynomial utilities over the rationals: gcd via the primitive
// polynomial remainder sequence and squarefree parts.  Used to reduce plane
// curves to squarefree defining equations before branch analysis.

#include <vector>

#include "germlab/ideal_ops.hpp"
#include "germlab/unipoly.hpp"

namespace germlab {

// Dense view of p ∈ Q[x,y] as a polynomial in y with Q[x] coefficients.
inline std::vector<UniPoly<Rational>> ydense(const Polynomial<Rational>& p) {
  if (p.nvars() != 2) fail(Errc::Internal, "ydense expects a bivariate polynomial");
  int dy = 0;
  for (const auto& [m, c] : p.terms()) dy = std::max(dy, m[1]);
  std::vector<UniPoly<Rational>> out(p.is_zero() ? 0 : dy + 1);
  for (const auto& [m, c] : p.terms()) {
    while (static_cast<int>(out[m[1]].c.size()) <= m[0]) out[m[1]].c.push_back(Rational(0));
    out[m[1]].c[m[0]] = c;
  }
  for (auto& u : out) u.trim();
  return out;
}

inline Polynomial<Rational> from_ydense(const std::vector<UniPoly<Rational>>& v) {
  Polynomial<Rational> p(2);
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    for (int i = 0; i <= v[j].degree(); ++i)
      if (!is_zero(v[j].coeff(i))) p.add_term(Monomial{i, j}, v[j].coeff(i));
  return p;
}

namespace detail {

// Content in y-direction: gcd over Q[x] of the y-coefficients.
inline UniPoly<Rational> ycontent(const std::vector<UniPoly<Rational>>& v) {
  UniPoly<Rational> g;  // zero
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.degree() == 0) return UniPoly<Rational>::constant(Rational(1));
  }
  return g;
}

// Pseudo-remainder of a by b in y over Q[x] (lc(b)^(da-db+1) * a mod b).
inline std::vector<UniPoly<Rational>> pseudo_rem(std::vector<UniPoly<Rational>> a,
                                                 const std::vector<UniPoly<Rational>>& b) {
  auto trim = [](std::vector<UniPoly<Rational>>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(a);
  if (b.empty()) fail(Errc::Internal, "pseudo-division by zero");
  const UniPoly<Rational>& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  long guard = 0;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    if (++guard > 10000) fail(Errc::Internal, "pseudo-division runaway");
    int da = static_cast<int>(a.size()) - 1;
    UniPoly<Rational> la = a.back();
    // a := lb * a - la * y^(da-db) * b
    std::vector<UniPoly<Rational>> next(a.size());
    for (int i = 0; i < static_cast<int>(a.size()); ++i) next[i] = a[i] * lb;
    for (int i = 0; i <= db; ++i) next[i + da - db] = next[i + da - db] - la * b[i];
    a = std::move(next);
    trim(a);
  }
  return a;
}

}  // namespace detail

// Gcd in Q[x,y], monic-normalized so the result is canonical.
inline Polynomial<Rational> bivariate_gcd(const Polynomial<Rational>& p,
                                          const Polynomial<Rational>& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  auto a = ydense(p), b = ydense(q);
  // Pure-x polynomials reduce to univariate gcd against the content.
  UniPoly<Rational> ca = detail::ycontent(a), cb = detail::ycontent(b);
  UniPoly<Rational> cg = gcd(ca, cb);
  auto divide_out = [](std::vector<UniPoly<Rational>>& v, const UniPoly<Rational>& d) {
    for (auto& c : v) {
      if (c.is_zero()) continue;
      auto [quot, rem] = divrem(c, d);
      if (!rem.is_zero()) fail(Errc::Internal, "content does not divide coefficient");
      c = quot;
    }
  };
  divide_out(a, ca);
  divide_out(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  long guard = 0;
  while (!b.empty()) {
    if (++guard > 10000) fail(Errc::Internal, "remainder sequence runaway");
    auto r = detail::pseudo_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) {
      UniPoly<Rational> c = detail::ycontent(b);
      divide_out(b, c);
    }
  }
  // a is the primitive gcd of the primitive parts; restore the content gcd.
  UniPoly<Rational> c = detail::ycontent(a);
  divide_out(a, c);
  for (auto& co : a) co = co * cg;
  Polynomial<Rational> g = from_ydense(a);
  // Normalize: make the degrevlex leading coefficient 1.
  auto lt = g.leading_term(MonomialOrder::degrevlex());
  return g * (Rational(1) / lt.second);
}

// Squarefree part of a bivariate polynomial (product of distinct irreducible
// factors), canonical up to the same normalization as bivariate_gcd.
inline Polynomial<Rational> bivariate_squarefree_part(const Polynomial<Rational>& p) {
  if (p.is_zero()) fail(Errc::Internal, "squarefree part of zero");
  auto v = ydense(p);
  UniPoly<Rational> cont = detail::ycontent(v);
  // Split off the pure-x content and handle it with univariate machinery.
  std::vector<UniPoly<Rational>> prim = v;
  for (auto& c : prim) {
    if (c.is_zero()) continue;
    auto [quot, rem] = divrem(c, cont);
    if (!rem.is_zero()) fail(Errc::Internal, "content does not divide coefficient");
    c = quot;
  }
  UniPoly<Rational> cont_sf = squarefree_part(cont);
  Polynomial<Rational> prim_poly = from_ydense(prim);
  Polynomial<Rational> result(2);
  if (static_cast<int>(prim.size()) - 1 >= 1) {
    Polynomial<Rational> dy = prim_poly.differentiate(1);
    Polynomial<Rational> g = bivariate_gcd(prim_poly, dy);
    auto q = exact_divide(prim_poly, g);
    if (!q) fail(Errc::Internal, "gcd does not divide its argument");
    result = *q;
  } else {
    result = Polynomial<Rational>::constant(2, Rational(1));
  }
  // Multiply back the squarefree content as a polynomial in x.
  Polynomial<Rational> cx(2);
  for (int i = 0; i <= cont_sf.degree(); ++i)
    if (!is_zero(cont_sf.coeff(i))) cx.add_term(Monomial{i, 0}, cont_sf.coeff(i));
  result = result * cx;
  auto lt = result.leading_term(MonomialOrder::degrevlex());
  return result * (Rational(1) / lt.second);
}

}  // namespace germlab
