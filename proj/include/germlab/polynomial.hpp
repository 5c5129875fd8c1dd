#pragma once

// Sparse multivariate polynomials over an exact field K.
//
// Terms are stored in a map keyed by monomial in *degrevlex-descending*
// order.  Storage order is a canonical presentation detail and never depends
// on how a polynomial was computed; algorithms that need a different active
// order (local, elimination) scan or re-sort explicitly.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "germlab/algebraic.hpp"
#include "germlab/monomial.hpp"
#include "germlab/numeric.hpp"

namespace germlab {

struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return MonomialOrder::degrevlex().cmp(a, b) > 0;
  }
};

template <class K>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, K, DegRevLexGreater>;

  Polynomial() : nv_(0) {}
  explicit Polynomial(int nvars) : nv_(nvars) {}

  static Polynomial constant(int nvars, const K& k) {
    Polynomial p(nvars);
    p.add_term(mono_one(nvars), k);
    return p;
  }
  static Polynomial variable(int nvars, int i, const K& k = K(1)) {
    Polynomial p(nvars);
    Monomial m = mono_one(nvars);
    m[i] = 1;
    p.add_term(m, k);
    return p;
  }
  static Polynomial term(int nvars, Monomial m, const K& k) {
    Polynomial p(nvars);
    p.add_term(std::move(m), k);
    return p;
  }

  int nvars() const { return nv_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const TermMap& terms() const { return t_; }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, germlab::total_degree(m));
    return d;
  }

  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && mono_is_one(t_.begin()->first));
  }

  K constant_term() const {
    auto it = t_.find(mono_one(nv_));
    return it == t_.end() ? K() : it->second;
  }

  K coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? K() : it->second;
  }

  void add_term(Monomial m, const K& c) {
    if (c == K()) return;
    auto [it, fresh] = t_.emplace(std::move(m), c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second == K()) t_.erase(it);
    }
  }

  bool operator==(const Polynomial& o) const { return nv_ == o.nv_ && t_ == o.t_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const {
    Polynomial r(nv_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, K() - c);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_arity(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    check_arity(o);
    Polynomial r(nv_);
    for (const auto& [ma, ca] : t_)
      for (const auto& [mb, cb] : o.t_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }

  Polynomial operator*(const K& k) const {
    Polynomial r(nv_);
    if (k == K()) return r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, c * k);
    return r;
  }

  Polynomial mul_term(const Monomial& m, const K& k) const {
    Polynomial r(nv_);
    if (k == K()) return r;
    for (const auto& [mm, c] : t_) r.t_.emplace(mono_mul(mm, m), c * k);
    return r;
  }

  // Leading term with respect to an arbitrary active order.
  std::pair<Monomial, K> leading_term(const MonomialOrder& ord) const {
    if (t_.empty()) fail(Errc::Internal, "leading term of zero polynomial");
    auto best = t_.begin();
    if (ord.kind == MonomialOrder::Kind::DegRevLex) return {best->first, best->second};
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
      if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  Polynomial differentiate(int var) const {
    Polynomial r(nv_);
    for (const auto& [m, c] : t_) {
      if (m[var] == 0) continue;
      Monomial mm = m;
      mm[var] -= 1;
      r.add_term(std::move(mm), c * K(static_cast<long>(m[var])));
    }
    return r;
  }

  // Simultaneous substitution x_i -> images[i].  Images share one arity,
  // which becomes the arity of the result.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nv_)
      fail(Errc::Internal, "substitute: wrong image count");
    int out_nv = images.empty() ? 0 : images[0].nvars();
    // Lazily grown power tables keep repeated exponents cheap.
    std::vector<std::vector<Polynomial>> powers(nv_);
    for (int i = 0; i < nv_; ++i) powers[i].push_back(constant(out_nv, K(1)));
    auto power = [&](int var, int e) -> const Polynomial& {
      auto& tab = powers[var];
      while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[var]);
      return tab[e];
    };
    Polynomial acc(out_nv);
    for (const auto& [m, c] : t_) {
      Polynomial term = constant(out_nv, c);
      for (int i = 0; i < nv_; ++i)
        if (m[i]) term = term * power(i, m[i]);
      acc = acc + term;
    }
    return acc;
  }

  K evaluate(const std::vector<K>& point) const {
    if (static_cast<int>(point.size()) != nv_)
      fail(Errc::Internal, "evaluate: wrong point arity");
    K acc{};
    for (const auto& [m, c] : t_) {
      K v = c;
      for (int i = 0; i < nv_; ++i)
        for (int e = 0; e < m[i]; ++e) v = v * point[i];
      acc = acc + v;
    }
    return acc;
  }

  // Translation x -> x + p, the germ-at-a-point change of origin.
  Polynomial translated(const std::vector<K>& point) const {
    std::vector<Polynomial> images;
    images.reserve(nv_);
    for (int i = 0; i < nv_; ++i)
      images.push_back(variable(nv_, i) + constant(nv_, point[i]));
    return substitute(images);
  }

  template <class K2, class Fn>
  Polynomial<K2> map_coeffs(Fn fn) const {
    Polynomial<K2> r(nv_);
    for (const auto& [m, c] : t_) r.add_term(m, fn(c));
    return r;
  }

 private:
  void check_arity(const Polynomial& o) const {
    if (nv_ != o.nv_) fail(Errc::Internal, "polynomial arity mismatch");
  }

  int nv_;
  TermMap t_;
};

template <class K>
Polynomial<K> operator*(const K& k, const Polynomial<K>& p) {
  return p * k;
}

inline Polynomial<AlgebraicNumber> to_algebraic(const Polynomial<Rational>& p) {
  return p.template map_coeffs<AlgebraicNumber>(
      [](const Rational& q) { return AlgebraicNumber(q); });
}

// A seeded linear form a_1 x_1 + ... + a_n x_n with a_i in [-17, 17] \ {0}.
// The workhorse of every "generic choice" in the library.
inline Polynomial<Rational> random_linear_form(int nvars, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Polynomial<Rational> l(nvars);
  for (int i = 0; i < nvars; ++i) {
    long a = 0;
    while (a == 0) a = rng.next_in(-17, 17);
    l = l + Polynomial<Rational>::variable(nvars, i, Rational(a));
  }
  return l;
}

}  // namespace germlab
