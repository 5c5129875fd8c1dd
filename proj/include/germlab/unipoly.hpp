#pragma once

// Dense univariate polynomials over an exact field K.
//
// K must provide: default construction (= 0), construction from long,
// +, -, *, /, ==.  Instantiated with Rational and with AlgebraicNumber.
// Coefficient 0 is trimmed, so deg(p) == p.c.size() - 1 and the zero
// polynomial has an empty coefficient vector (degree -1 by convention).

#include <vector>

#include "germlab/errors.hpp"

namespace germlab {

template <class K>
struct UniPoly {
  std::vector<K> c;  // c[i] is the coefficient of t^i

  UniPoly() = default;
  explicit UniPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const K& k) {
    UniPoly p;
    if (!(k == K())) p.c = {k};
    return p;
  }
  // t^n
  static UniPoly monomial(int n, const K& k = K(1)) {
    UniPoly p;
    if (!(k == K())) {
      p.c.assign(n + 1, K());
      p.c[n] = k;
    }
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == K()) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  const K& lc() const {
    if (c.empty()) fail(Errc::Internal, "lc of zero polynomial");
    return c.back();
  }

  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return K();
    return c[i];
  }

  // Order of vanishing at t = 0; returns -1 for the zero polynomial.
  int order() const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == K())) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const UniPoly& o) const { return c == o.c; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly operator-() const {
    UniPoly r(*this);
    for (auto& k : r.c) k = K() - k;
    return r;
  }

  UniPoly operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), K());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
    r.trim();
    return r;
  }

  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    UniPoly r;
    r.c.assign(c.size() + o.c.size() - 1, K());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == K()) continue;
      for (std::size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    }
    r.trim();
    return r;
  }

  UniPoly operator*(const K& k) const {
    UniPoly r(*this);
    for (auto& x : r.c) x = x * k;
    r.trim();
    return r;
  }

  // Drop every coefficient of t^i with i >= bound.
  UniPoly truncated(int bound) const {
    UniPoly r(*this);
    if (static_cast<int>(r.c.size()) > bound)
      r.c.resize(bound < 0 ? 0 : bound);
    r.trim();
    return r;
  }

  UniPoly shifted(int n) const {  // multiply by t^n
    if (is_zero()) return UniPoly();
    UniPoly r;
    r.c.assign(c.size() + n, K());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i + n] = c[i];
    return r;
  }

  UniPoly derivative() const {
    UniPoly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * K(static_cast<long>(i));
    r.trim();
    return r;
  }

  K eval(const K& x) const {
    K acc{};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    UniPoly r(*this);
    K inv = K(1) / lc();
    for (auto& x : r.c) x = x * inv;
    return r;
  }
};

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.is_zero()) fail(Errc::Internal, "univariate division by zero");
  UniPoly<K> q, r = a;
  if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, K());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    K factor = r.lc() / b.lc();
    q.c[shift] = q.c[shift] + factor;
    // r -= factor * t^shift * b
    for (int i = 0; i <= b.degree(); ++i)
      r.c[i + shift] = r.c[i + shift] - factor * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

template <class K>
UniPoly<K> gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divrem(x, y);
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>> extended_gcd(const UniPoly<K>& a,
                                                            const UniPoly<K>& b) {
  UniPoly<K> r0 = a, r1 = b;
  UniPoly<K> u0 = UniPoly<K>::constant(K(1)), u1;
  UniPoly<K> v0, v1 = UniPoly<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = r1; r1 = r;
    UniPoly<K> u2 = u0 - q * u1;
    u0 = u1; u1 = u2;
    UniPoly<K> v2 = v0 - q * v1;
    v0 = v1; v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  K inv = K(1) / r0.lc();
  return {r0 * inv, u0 * inv, v0 * inv};
}

template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
  if (p.degree() <= 0) return p;
  auto g = gcd(p, p.derivative());
  auto [q, r] = divrem(p, g);
  if (!r.is_zero()) fail(Errc::Internal, "squarefree_part: inexact division");
  return q;
}

// Largest m with (t - root)^m dividing p; also returns p / (t - root)^m.
template <class K>
std::pair<int, UniPoly<K>> root_multiplicity(const UniPoly<K>& p, const K& root) {
  UniPoly<K> lin;
  lin.c = {K() - root, K(1)};
  int m = 0;
  UniPoly<K> cur = p;
  while (!cur.is_zero()) {
    auto [q, r] = divrem(cur, lin);
    if (!r.is_zero()) break;
    cur = q;
    ++m;
  }
  return {m, cur};
}

}  // namespace germlab
