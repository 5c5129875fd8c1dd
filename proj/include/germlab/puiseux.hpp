#pragma once

// Newton-Puiseux decomposition of plane curve germs into branches.
//
// Branches are produced as rational parametrizations (x(t), y(t)) with x(t) a
// monomial, following Duval's normalization: for an edge of the Newton
// polygon with reduced slope p/q and edge-polynomial root u, the substitution
// uses powers of u itself (chosen via a Bezout identity for p and q) instead
// of adjoining a q-th root of u.  This keeps every coefficient inside the
// field generated by the edge roots: plain Q for most inputs, at most one
// quadratic extension per branch otherwise.  Deeper extensions are refused
// loudly (ExtensionTooDeep) rather than approximated.

#include <numeric>
#include <utility>
#include <vector>

#include "germlab/algebraic.hpp"
#include "germlab/bivariate.hpp"

namespace germlab {

struct PlaneBranch {
  UniPoly<AlgebraicNumber> x, y;  // parametrization by t; x is a monomial
  int truncation = 0;             // coefficients trusted through t^truncation
  bool exact = false;             // satisfies the curve identically
};

// Galois conjugate within a quadratic field; identity on rationals.
inline AlgebraicNumber conjugate_in_field(const AlgebraicNumber& a) {
  if (!a.field()) return a;
  if (a.field()->degree() != 2)
    fail(Errc::Internal, "conjugation implemented for quadratic fields only");
  Rational alpha = -a.field()->minpoly.coeff(1);  // theta + conj(theta)
  Rational c0 = a.coeffs()[0], c1 = a.coeffs()[1];
  return AlgebraicNumber(a.field(), {c0 + c1 * alpha, -c1});
}

namespace puiseux_detail {

using A = AlgebraicNumber;

inline A upow(const A& u, long e) {
  A base = e < 0 ? u.inverse() : u;
  long n = e < 0 ? -e : e;
  A acc(1);
  for (long i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

inline UniPoly<A> conj_series(const UniPoly<A>& s) {
  UniPoly<A> r = s;
  for (auto& k : r.c) k = conjugate_in_field(k);
  return r;
}

inline bool all_rational(const UniPoly<A>& p) {
  for (const auto& k : p.c)
    if (!k.is_rational()) return false;
  return true;
}

inline UniPoly<Rational> rational_part(const UniPoly<A>& p) {
  UniPoly<Rational> r;
  r.c.reserve(p.c.size());
  for (const auto& k : p.c) r.c.push_back(k.coeffs()[0]);
  r.trim();
  return r;
}

// One integer quadratic factor of a rational polynomial without rational
// roots, or nothing if none exists.  Deterministic search order.
inline std::optional<UniPoly<Rational>> quadratic_factor(const UniPoly<Rational>& rho) {
  auto z = detail::primitive_integer_coeffs(rho);
  Integer bound = detail::integer_root_bound(z);
  if (bound > 4000) fail(Errc::Unsupported, "quadratic factor search bound too large");
  UniPoly<Rational> prim;
  prim.c.resize(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) prim.c[i] = Rational(z[i]);
  for (const Integer& e : divisors(z.back())) {
    for (const Integer& b0 : divisors(z.front())) {
      for (int sb : {1, -1}) {
        Integer b = sb * b0;
        Integer amax = 2 * e * bound;
        for (Integer a = -amax; a <= amax; ++a) {
          UniPoly<Rational> w;
          w.c = {Rational(b), Rational(a), Rational(e)};
          auto [quot, rem] = divrem(prim, w);
          (void)quot;
          if (rem.is_zero()) return w;
        }
      }
    }
  }
  return std::nullopt;
}

struct EdgeRoot {
  A value;
  int multiplicity = 0;
  // Set when a fresh quadratic extension was created for this root: the
  // caller must also emit the Galois-conjugate copies of everything derived
  // from it, covering the second root of the factor.
  bool emit_conjugates = false;
};

// Square root of a rational inside an existing field, if it exists there.
inline std::optional<A> sqrt_in(const Rational& d,
                                const std::shared_ptr<const NumberField>& ctx) {
  A promoted = ctx ? A(ctx, {d, Rational(0)}) : A(d);
  auto res = sqrt_in_field(promoted);
  if (res.status == SquareStatus::Square) return res.root;
  if (res.status == SquareStatus::Unknown)
    fail(Errc::ExtensionTooDeep, "square root test beyond a quadratic extension");
  return std::nullopt;
}

// All roots of an edge polynomial that live in Q, in the ambient extension,
// or in one fresh quadratic extension (only when ctx is null).  Fails with
// ExtensionTooDeep if part of the spectrum is out of reach.
inline std::vector<EdgeRoot> edge_roots(const UniPoly<A>& psi_in,
                                        const std::shared_ptr<const NumberField>& ctx) {
  std::vector<EdgeRoot> out;
  UniPoly<A> psi = psi_in;

  auto take_root = [&psi, &out](const A& r, bool paired) {
    auto [m, rest] = root_multiplicity(psi, r);
    if (m == 0) return false;
    psi = rest;
    out.push_back({r, m, paired});
    return true;
  };

  if (all_rational(psi)) {
    for (const Rational& r : rational_roots(rational_part(psi))) take_root(A(r), false);
    // Quadratic phase on the rational residual.
    long guard = 0;
    while (psi.degree() >= 2) {
      if (++guard > 64) fail(Errc::Internal, "edge root extraction runaway");
      UniPoly<Rational> rho = rational_part(psi);
      std::optional<UniPoly<Rational>> w =
          rho.degree() == 2 ? std::optional<UniPoly<Rational>>(rho) : quadratic_factor(rho);
      if (!w) break;
      Rational e = w->coeff(2), b = w->coeff(1), c0 = w->coeff(0);
      Rational disc = b * b - 4 * e * c0;
      if (ctx) {
        auto s = sqrt_in(disc, ctx);
        if (!s)
          fail(Errc::ExtensionTooDeep,
               "edge polynomial root requires a second field extension");
        A half = A(Rational(1) / (2 * e));
        take_root((A(-b) + *s) * half, false);
        take_root((A(-b) - *s) * half, false);
      } else {
        auto [scale, core] = squarefree_core(disc);
        auto field = std::make_shared<const NumberField>(
            UniPoly<Rational>({-Rational(core), Rational(0), Rational(1)}),
            "sqrt(" + core.get_str() + ")");
        A theta = A::generator(field);
        A sqrt_disc = A(scale) * theta;
        A half = A(Rational(1) / (2 * e));
        // Only the primary root is expanded; conjugates are emitted by the
        // caller from its results.  The conjugate root is dropped from the
        // residual here since the primary covers it.
        take_root((A(-b) + sqrt_disc) * half, true);
        auto [mc, rest] = root_multiplicity(psi, (A(-b) - sqrt_disc) * half);
        if (mc != out.back().multiplicity)
          fail(Errc::Internal, "conjugate root multiplicity mismatch");
        psi = rest;
      }
    }
    if (psi.degree() >= 1)
      fail(Errc::ExtensionTooDeep,
           "edge polynomial has factors beyond one quadratic extension");
    return out;
  }

  // Coefficients genuinely use the ambient extension.  Rational roots first:
  // a rational root must annul both coordinates of psi over the field basis.
  UniPoly<Rational> p1, p2;
  for (int i = 0; i <= psi.degree(); ++i) {
    const auto& cs = psi.coeff(i).coeffs();
    if (static_cast<int>(p1.c.size()) <= i) {
      p1.c.resize(i + 1, Rational(0));
      p2.c.resize(i + 1, Rational(0));
    }
    p1.c[i] = cs[0];
    p2.c[i] = cs.size() > 1 ? cs[1] : Rational(0);
  }
  p1.trim();
  p2.trim();
  for (const Rational& r : rational_roots(gcd(p1, p2))) take_root(A(r), false);

  if (psi.degree() >= 1) {
    // Norm to Q, then lift quadratic factors back via in-field square roots.
    UniPoly<A> norm = psi * conj_series(psi);
    if (!all_rational(norm)) fail(Errc::Internal, "norm of edge polynomial not rational");
    UniPoly<Rational> nr = rational_part(norm);
    for (const Rational& r : rational_roots(nr)) take_root(A(r), false);
    long guard = 0;
    while (psi.degree() >= 1) {
      if (++guard > 64) fail(Errc::Internal, "edge root extraction runaway");
      nr = squarefree_part(nr);
      std::optional<UniPoly<Rational>> w =
          nr.degree() == 2 ? std::optional<UniPoly<Rational>>(nr) : quadratic_factor(nr);
      if (!w) break;
      Rational e = w->coeff(2), b = w->coeff(1), c0 = w->coeff(0);
      Rational disc = b * b - 4 * e * c0;
      auto s = sqrt_in(disc, ctx);
      bool found = false;
      if (s) {
        A half = A(Rational(1) / (2 * e));
        found |= take_root((A(-b) + *s) * half, false);
        found |= take_root((A(-b) - *s) * half, false);
      }
      auto [q, rem] = divrem(nr, *w);
      if (!rem.is_zero()) fail(Errc::Internal, "norm factor does not divide");
      nr = q;
      if (!found && nr.degree() < 1) break;
    }
    if (psi.degree() >= 1)
      fail(Errc::ExtensionTooDeep,
           "edge polynomial over an extension has roots beyond that extension");
  }
  return out;
}

struct Edge {
  long p = 1, q = 1;      // reduced slope: y behaves like x^(p/q)
  long g = 0;             // lattice length; edge polynomial degree
  long i1 = 0, j1 = 0;    // upper-left endpoint (max j)
  long v = 0;             // min of q*i + p*j over the support
  UniPoly<A> psi;         // edge polynomial in u = (normalized root variable)
};

// Lower Newton boundary edges with negative slope.  Requires x- and y-free
// terms to exist (callers split off x| f and y | f beforehand).
inline std::vector<Edge> newton_edges(const Polynomial<A>& f) {
  std::vector<std::pair<long, long>> pts;
  for (const auto& [m, c] : f.terms()) pts.push_back({m[0], m[1]});
  long start_j = -1;
  for (const auto& [i, j] : pts)
    if (i == 0 && (start_j < 0 || j < start_j)) start_j = j;
  if (start_j < 0) fail(Errc::Internal, "newton_edges: no x-free term");
  std::vector<Edge> edges;
  std::pair<long, long> P{0, start_j};
  long guard = 0;
  while (P.second > 0) {
    if (++guard > 1000) fail(Errc::Internal, "newton polygon runaway");
    // Steepest descent; farthest point on ties.
    std::pair<long, long> best{-1, -1};
    for (const auto& [i, j] : pts) {
      if (i <= P.first || j >= P.second) continue;
      if (best.first < 0) {
        best = {i, j};
        continue;
      }
      // slope comparison: (j-Pj)/(i-Pi) < (bj-Pj)/(bi-Pi)?
      long lhs = (j - P.second) * (best.first - P.first);
      long rhs = (best.second - P.second) * (i - P.first);
      if (lhs < rhs || (lhs == rhs && i > best.first)) best = {i, j};
    }
    if (best.first < 0) fail(Errc::Internal, "newton polygon: no y-free term");
    long di = best.first - P.first, dj = P.second - best.second;
    long g = std::gcd(di, dj);
    Edge e;
    e.p = di / g;
    e.q = dj / g;
    e.g = g;
    e.i1 = P.first;
    e.j1 = P.second;
    e.v = e.q * e.i1 + e.p * e.j1;
    e.psi.c.assign(g + 1, A(0));
    for (long s = 0; s <= g; ++s) {
      Monomial m{static_cast<int>(e.i1 + e.p * s), static_cast<int>(e.j1 - e.q * s)};
      e.psi.c[s] = f.coeff(m);
    }
    e.psi.trim();
    edges.push_back(std::move(e));
    P = best;
  }
  return edges;
}

// f1(x1, y1) = f(u^sigma x1^q, x1^p (u^tau + y1)) / x1^v.
inline Polynomial<A> edge_substitute(const Polynomial<A>& f, const Edge& e, const A& u,
                                     long sigma, long tau) {
  Polynomial<A> f1(2);
  long v_min = -1;
  for (const auto& [m, c] : f.terms()) {
    long w = e.q * m[0] + e.p * m[1];
    if (v_min < 0 || w < v_min) v_min = w;
  }
  if (v_min != e.v) fail(Errc::Internal, "edge substitution valuation mismatch");
  for (const auto& [m, c] : f.terms()) {
    long i = m[0], j = m[1];
    long base = e.q * i + e.p * j - e.v;
    // c * u^(sigma*i) * x1^base * (u^tau + y1)^j, expanded binomially.
    A pref = c * upow(u, sigma * i);
    A binom(1);
    for (long k = 0; k <= j; ++k) {
      // binom = C(j, k); term u^(tau*(j-k)) y1^k
      A coef = pref * binom * upow(u, tau * (j - k));
      if (!(coef == A(0)))
        f1.add_term(Monomial{static_cast<int>(base), static_cast<int>(k)}, coef);
      binom = binom * A(Rational(j - k)) / A(Rational(k + 1));
    }
  }
  return f1;
}

// Power series y(x) with y(0)=0 solving f(x, y(x)) = 0 when df/dy(0,0) != 0.
inline UniPoly<A> hensel_series(const Polynomial<A>& f, int trunc) {
  int dy = 0;
  for (const auto& [m, c] : f.terms()) dy = std::max(dy, m[1]);
  std::vector<UniPoly<A>> C(dy + 1);
  for (const auto& [m, c] : f.terms()) {
    auto& u = C[m[1]];
    if (static_cast<int>(u.c.size()) <= m[0]) u.c.resize(m[0] + 1, A(0));
    u.c[m[0]] = c;
  }
  for (auto& u : C) u.trim();
  if (!(C[0].coeff(0) == A(0))) fail(Errc::Internal, "hensel: f(0,0) != 0");
  A d = C.size() > 1 ? C[1].coeff(0) : A(0);
  if (d == A(0)) fail(Errc::Internal, "hensel: dy-derivative vanishes at origin");
  A dinv = d.inverse();
  UniPoly<A> y;  // starts at 0
  for (int iter = 0; iter <= trunc; ++iter) {
    // residual = f(x, y) truncated
    UniPoly<A> val = C[dy];
    for (int j = dy - 1; j >= 0; --j) val = (val * y).truncated(trunc + 1) + C[j];
    if (val.is_zero()) break;
    y = (y - val * dinv).truncated(trunc + 1);
  }
  return y;
}

// Recursive kernel: emits local parametrizations (x1(t), y1(t)), x1 monomial.
inline void branches_rec(const Polynomial<A>& f_in, int trunc, int depth,
                         const std::shared_ptr<const NumberField>& ctx,
                         std::vector<std::pair<UniPoly<A>, UniPoly<A>>>& out) {
  if (depth > 30)
    fail(Errc::SquarefreeRequired,
         "branch recursion too deep; curve must be squarefree");
  Polynomial<A> f = f_in;

  // Exact sub-branch y1 = 0 if y1 divides f.
  bool ydiv = !f.is_zero();
  for (const auto& [m, c] : f.terms()) ydiv = ydiv && m[1] >= 1;
  if (ydiv) {
    Polynomial<A> g(2);
    for (const auto& [m, c] : f.terms()) g.add_term(Monomial{m[0], m[1] - 1}, c);
    f = g;
    out.push_back({UniPoly<A>::monomial(1), UniPoly<A>()});
    bool again = !f.is_zero();
    for (const auto& [m, c] : f.terms()) again = again && m[1] >= 1;
    if (again) fail(Errc::SquarefreeRequired, "repeated exact branch: curve not squarefree");
  }
  if (f.is_zero()) fail(Errc::Internal, "branch recursion on zero polynomial");
  if (!(f.coeff(mono_one(2)) == A(0))) return;  // unit: no branch through origin
  bool xdiv = true;
  for (const auto& [m, c] : f.terms()) xdiv = xdiv && m[0] >= 1;
  if (xdiv) fail(Errc::Internal, "branch recursion: x divides transformed curve");

  for (const Edge& e : newton_edges(f)) {
    // Bezout: sigma * p - tau * q = 1.
    long sigma = 0, tau = 0;
    {
      long old_r = e.p, r = e.q, old_s = 1, s = 0;
      while (r != 0) {
        long quot = old_r / r;
        long tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
      }
      // old_s * p === gcd (mod q); gcd == 1 here.
      sigma = old_s;
      tau = (sigma * e.p - 1) / e.q;
    }
    if (sigma * e.p - tau * e.q != 1) fail(Errc::Internal, "bezout bookkeeping");

    for (const EdgeRoot& root : edge_roots(e.psi, ctx)) {
      auto rctx = root.value.field() ? root.value.field() : ctx;
      Polynomial<A> f1 = edge_substitute(f, e, root.value, sigma, tau);
      std::vector<std::pair<UniPoly<A>, UniPoly<A>>> sub;
      if (root.multiplicity == 1) {
        sub.push_back({UniPoly<A>::monomial(1), hensel_series(f1, trunc)});
      } else {
        branches_rec(f1, trunc, depth + 1, rctx, sub);
      }
      A us = upow(root.value, sigma), ut = upow(root.value, tau);
      for (const auto& [xi, eta] : sub) {
        // x = u^sigma * xi^q ; y = xi^p * (u^tau + eta)
        if (xi.order() != xi.degree() || xi.is_zero())
          fail(Errc::Internal, "inner x-parametrization is not a monomial");
        int R = xi.degree();
        A c = xi.lc();
        UniPoly<A> xq = UniPoly<A>::monomial(static_cast<int>(R * e.q), upow(c, e.q) * us);
        UniPoly<A> xp = UniPoly<A>::monomial(static_cast<int>(R * e.p), upow(c, e.p));
        UniPoly<A> y =
            (xp * (eta + UniPoly<A>::constant(ut))).truncated(trunc + 1);
        std::vector<std::pair<UniPoly<A>, UniPoly<A>>> emitted{{xq, y}};
        if (root.emit_conjugates)
          emitted.push_back({conj_series(xq), conj_series(y)});
        for (auto& b : emitted) out.push_back(std::move(b));
      }
    }
  }
}

}  // namespace puiseux_detail

// All branches of the squarefree plane curve `curve` through the origin.
// Series coefficients are exact; series are truncated at t^truncation except
// for branches flagged exact (verified by exact polynomial substitution).
inline std::vector<PlaneBranch> plane_branches(const Polynomial<Rational>& curve,
                                               int truncation) {
  using puiseux_detail::A;
  if (curve.nvars() != 2) fail(Errc::Internal, "plane_branches expects two variables");
  if (curve.is_zero()) fail(Errc::Internal, "plane_branches of zero curve");
  std::vector<PlaneBranch> out;
  Polynomial<Rational> f = curve;
  if (!is_zero(f.constant_term())) return out;  // unit germ: no branches

  auto divide_var = [&f](int var) {
    Polynomial<Rational> g(2);
    for (const auto& [m, c] : f.terms()) {
      Monomial mm = m;
      mm[var] -= 1;
      g.add_term(mm, c);
    }
    f = g;
  };
  bool xdiv = true, again = false;
  for (const auto& [m, c] : f.terms()) xdiv = xdiv && m[0] >= 1;
  if (xdiv) {
    divide_var(0);
    PlaneBranch b;
    b.x = UniPoly<A>();
    b.y = UniPoly<A>::monomial(1);
    b.truncation = truncation;
    b.exact = true;
    out.push_back(std::move(b));
    again = true;
    for (const auto& [m, c] : f.terms()) again = again && m[0] >= 1;
    if (again) fail(Errc::SquarefreeRequired, "x^2 divides the curve");
  }
  bool ydiv = !f.is_zero();
  for (const auto& [m, c] : f.terms()) ydiv = ydiv && m[1] >= 1;
  if (ydiv) {
    divide_var(1);
    PlaneBranch b;
    b.x = UniPoly<A>::monomial(1);
    b.y = UniPoly<A>();
    b.truncation = truncation;
    b.exact = true;
    out.push_back(std::move(b));
    again = !f.is_zero();
    for (const auto& [m, c] : f.terms()) again = again && m[1] >= 1;
    if (again) fail(Errc::SquarefreeRequired, "y^2 divides the curve");
  }
  if (f.is_constant()) return out;
  if (!is_zero(f.constant_term())) return out;

  Polynomial<A> fa = to_algebraic(f);
  std::vector<std::pair<UniPoly<A>, UniPoly<A>>> raw;
  puiseux_detail::branches_rec(fa, truncation, 0, nullptr, raw);
  for (auto& [xs, ys] : raw) {
    // Primitive reparametrization: divide exponents by their gcd.
    long e = 0;
    for (int i = 0; i <= xs.degree(); ++i)
      if (!(xs.coeff(i) == A(0))) e = std::gcd(e, static_cast<long>(i));
    for (int i = 0; i <= ys.degree(); ++i)
      if (!(ys.coeff(i) == A(0))) e = std::gcd(e, static_cast<long>(i));
    if (e > 1) {
      auto compress = [e](const UniPoly<A>& s) {
        UniPoly<A> r;
        r.c.assign(s.degree() / e + 1, A(0));
        for (int i = 0; i <= s.degree(); i += static_cast<int>(e)) r.c[i / e] = s.coeff(i);
        r.trim();
        return r;
      };
      xs = compress(xs);
      ys = compress(ys);
    }
    PlaneBranch b;
    b.x = std::move(xs);
    b.y = std::move(ys);
    b.truncation = truncation;
    // Exactness: substitute the polynomial parametrization into the curve.
    Polynomial<A> xt(1), yt(1);
    for (int i = 0; i <= b.x.degree(); ++i)
      if (!(b.x.coeff(i) == A(0))) xt.add_term(Monomial{i}, b.x.coeff(i));
    for (int i = 0; i <= b.y.degree(); ++i)
      if (!(b.y.coeff(i) == A(0))) yt.add_term(Monomial{i}, b.y.coeff(i));
    b.exact = fa.substitute(std::vector<Polynomial<A>>{xt, yt}).is_zero();
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace germlab
