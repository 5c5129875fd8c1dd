#pragma once

// A single simple extension Q(theta) and its elements.
//
// AlgebraicNumber represents elements of Q or of one extension field
// Q[c]/(m(c)) with m monic irreducible.  Mixing two different extensions in
// one computation is refused loudly (ExtensionTooDeep): the library supports
// exactly one extension level, never towers, and never approximates.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germlab/numeric.hpp"
#include "germlab/unipoly.hpp"

namespace germlab {

namespace detail {

// Primitive integer form of a rational polynomial: clears denominators and
// divides by the content, keeping the sign of the leading coefficient.
inline std::vector<Integer> primitive_integer_coeffs(const UniPoly<Rational>& p) {
  Integer den_lcm = 1;
  for (const auto& q : p.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Integer> z(p.c.size());
  Integer content = 0;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    Rational scaled = p.c[i] * Rational(den_lcm);
    z[i] = scaled.get_num();  // denominator is 1 after scaling
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
  }
  if (content == 0) fail(Errc::Internal, "primitive form of zero polynomial");
  for (auto& zi : z) zi /= content;
  if (sgn(z.back()) < 0)
    for (auto& zi : z) zi = -zi;
  return z;
}

// Cauchy-style root bound for an integer polynomial: 1 + max |a_i / a_n|.
inline Integer integer_root_bound(const std::vector<Integer>& z) {
  Integer lead = abs(z.back());
  Integer m = 0;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    Integer v = abs(z[i]);
    // ceil(|a_i| / |a_n|)
    Integer q = (v + lead - 1) / lead;
    if (q > m) m = q;
  }
  return m + 1;
}

}  // namespace detail

// All rational roots of a rational polynomial, via candidate enumeration
// (numerator divides the constant term, denominator divides the leading
// coefficient of the primitive integer form).  Exact and complete.
inline std::vector<Rational> rational_roots(const UniPoly<Rational>& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  UniPoly<Rational> q = p;
  // Factor out t^k first so the constant term is nonzero.
  int ord = q.order();
  if (ord > 0) {
    q.c.erase(q.c.begin(), q.c.begin() + ord);
  }
  if (ord >= 0 && ord > 0) roots.push_back(Rational(0));
  if (q.degree() <= 0) return roots;
  auto z = detail::primitive_integer_coeffs(q);
  for (const Integer& num : divisors(z.front())) {
    for (const Integer& den : divisors(z.back())) {
      for (int s : {1, -1}) {
        Rational cand(s * num, den);
        cand.canonicalize();
        if (q.eval(cand) == 0) {
          bool seen = false;
          for (const auto& r : roots) seen = seen || (r == cand);
          if (!seen) roots.push_back(cand);
        }
      }
    }
  }
  return roots;
}

// Irreducibility over Q, complete for degree <= 5 (rational-root test plus a
// bounded search for quadratic factors covers every splitting type up to 5).
inline bool is_irreducible(const UniPoly<Rational>& p) {
  int d = p.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  if (!rational_roots(p).empty()) return false;
  if (d <= 3) return true;
  if (d > 5)
    fail(Errc::Unsupported,
         "irreducibility check implemented for degree <= 5, got degree " +
             std::to_string(d));
  // Search integer quadratic factors e*c^2 + a*c + b of the primitive form.
  auto z = detail::primitive_integer_coeffs(p);
  Integer bound = detail::integer_root_bound(z);
  if (bound > 4000)
    fail(Errc::Unsupported, "irreducibility search bound too large");
  UniPoly<Rational> prim;
  prim.c.resize(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) prim.c[i] = Rational(z[i]);
  for (const Integer& e : divisors(z.back())) {
    for (const Integer& b0 : divisors(z.front())) {
      for (int sb : {1, -1}) {
        Integer b = sb * b0;
        // |root| <= bound and the roots of the factor are roots of p, so
        // |a| = e*|r1+r2| <= 2*e*bound.
        Integer amax = 2 * e * bound;
        for (Integer a = -amax; a <= amax; ++a) {
          UniPoly<Rational> f;
          f.c = {Rational(b), Rational(a), Rational(e)};
          auto [quot, rem] = divrem(prim, f);
          (void)quot;
          if (rem.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

struct NumberField {
  UniPoly<Rational> minpoly;  // monic irreducible, degree >= 2
  std::string symbol;         // display name of the generator

  NumberField(UniPoly<Rational> m, std::string sym) : minpoly(std::move(m)), symbol(std::move(sym)) {
    if (minpoly.degree() < 2)
      fail(Errc::Internal, "extension of degree < 2");
    minpoly = minpoly.monic();
    if (!is_irreducible(minpoly))
      fail(Errc::ExtensionTooDeep,
           "declared minimal polynomial is reducible over Q");
  }

  int degree() const { return minpoly.degree(); }
};

class AlgebraicNumber {
 public:
  AlgebraicNumber() : c_{Rational(0)} {}
  AlgebraicNumber(long n) : c_{Rational(n)} {}          // NOLINT(implicit)
  AlgebraicNumber(Rational q) : c_{std::move(q)} {}      // NOLINT(implicit)
  AlgebraicNumber(std::shared_ptr<const NumberField> f, std::vector<Rational> coeffs)
      : field_(std::move(f)), c_(std::move(coeffs)) {
    c_.resize(field_ ? field_->degree() : 1, Rational(0));
  }

  static AlgebraicNumber generator(const std::shared_ptr<const NumberField>& f) {
    std::vector<Rational> c(f->degree(), Rational(0));
    c[1] = 1;
    return AlgebraicNumber(f, std::move(c));
  }

  const std::shared_ptr<const NumberField>& field() const { return field_; }
  bool is_rational() const {
    if (!field_) return true;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return false;
    return true;
  }
  // Valid only when is_rational().
  const Rational& rational_value() const { return c_[0]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool operator==(const AlgebraicNumber& o) const {
    AlgebraicNumber a = *this, b = o;
    unify(a, b);
    return a.c_ == b.c_;
  }
  bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }

  AlgebraicNumber operator-() const {
    AlgebraicNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  AlgebraicNumber operator+(const AlgebraicNumber& o) const {
    AlgebraicNumber a = *this, b = o;
    unify(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
  }
  AlgebraicNumber operator-(const AlgebraicNumber& o) const { return *this + (-o); }

  AlgebraicNumber operator*(const AlgebraicNumber& o) const {
    AlgebraicNumber a = *this, b = o;
    unify(a, b);
    if (!a.field_) {
      a.c_[0] *= b.c_[0];
      return a;
    }
    UniPoly<Rational> pa(std::vector<Rational>(a.c_)), pb(std::vector<Rational>(b.c_));
    auto [q, r] = divrem(pa * pb, a.field_->minpoly);
    (void)q;
    return AlgebraicNumber(a.field_, std::move(r.c));
  }

  AlgebraicNumber operator/(const AlgebraicNumber& o) const { return *this * o.inverse(); }

  AlgebraicNumber inverse() const {
    if (is_rational()) {
      if (is_zero(c_[0])) fail(Errc::Internal, "division by zero");
      AlgebraicNumber r = *this;
      r.c_.assign(r.c_.size(), Rational(0));
      r.c_[0] = 1 / c_[0];
      return r;
    }
    UniPoly<Rational> rep((std::vector<Rational>(c_)));
    auto [g, u, v] = extended_gcd(rep, field_->minpoly);
    (void)v;
    if (g.degree() != 0)
      fail(Errc::Internal, "non-invertible element in a field extension");
    auto [q, r] = divrem(u, field_->minpoly);
    (void)q;
    return AlgebraicNumber(field_, std::move(r.c));
  }

  std::string to_string() const {
    if (is_rational()) return rational_to_string(c_[0]);
    std::string s;
    const std::string& g = field_->symbol;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (is_zero(c_[i])) continue;
      Rational a = c_[i];
      if (!s.empty()) {
        s += sgn(a) < 0 ? " - " : " + ";
        if (sgn(a) < 0) a = -a;
      }
      bool unit_coeff = (a == 1) && i > 0;
      if (!unit_coeff) s += rational_to_string(a);
      if (i > 0) {
        if (!unit_coeff) s += "*";
        s += g;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  // Promotes rational operands into the other side's field; refuses to mix
  // two distinct extensions.
  static void unify(AlgebraicNumber& a, AlgebraicNumber& b) {
    if (a.field_ == b.field_) return;
    auto promote = [](AlgebraicNumber& x, const std::shared_ptr<const NumberField>& f) {
      Rational v = x.c_[0];
      x.field_ = f;
      x.c_.assign(f->degree(), Rational(0));
      x.c_[0] = std::move(v);
    };
    if (!a.field_ && b.field_) {
      promote(a, b.field_);
      return;
    }
    if (a.field_ && !b.field_) {
      promote(b, a.field_);
      return;
    }
    if (a.field_->minpoly == b.field_->minpoly) {
      b.field_ = a.field_;
      return;
    }
    fail(Errc::ExtensionTooDeep,
         "cannot combine elements of two different extensions of Q");
  }

  std::shared_ptr<const NumberField> field_;  // null = plain rational
  std::vector<Rational> c_;                   // length 1 or field degree
};

inline bool is_zero(const AlgebraicNumber& a) { return a == AlgebraicNumber(); }

enum class SquareStatus { Square, NotSquare, Unknown };

struct SquareResult {
  SquareStatus status;
  std::optional<AlgebraicNumber> root;
};

// Decides squareness inside the element's own field.  Complete over Q and
// over quadratic extensions; Unknown beyond that (callers treat Unknown as
// "would need a deeper tower").
inline SquareResult sqrt_in_field(const AlgebraicNumber& a) {
  if (a.is_rational() && !a.field()) {
    auto r = rational_sqrt(a.rational_value());
    if (r) return {SquareStatus::Square, AlgebraicNumber(*r)};
    return {SquareStatus::NotSquare, std::nullopt};
  }
  const auto& f = a.field();
  if (f->degree() != 2) return {SquareStatus::Unknown, std::nullopt};
  // theta^2 = alpha*theta + beta from the minimal polynomial.
  Rational alpha = -f->minpoly.coeff(1);
  Rational beta = -f->minpoly.coeff(0);
  if (!is_zero(alpha))
    return {SquareStatus::Unknown, std::nullopt};  // non-pure quadratic: not needed
  // Field is Q(sqrt(beta)).  Want (u + v*theta)^2 = u^2 + v^2*beta + 2uv*theta
  // equal to d0 + d1*theta.
  Rational d0 = a.coeffs()[0], d1 = a.coeffs()[1];
  if (is_zero(d1)) {
    if (auto u = rational_sqrt(d0))
      return {SquareStatus::Square, AlgebraicNumber(f, {*u, Rational(0)})};
    if (auto v = rational_sqrt(d0 / beta))
      return {SquareStatus::Square, AlgebraicNumber(f, {Rational(0), *v})};
    return {SquareStatus::NotSquare, std::nullopt};
  }
  // u^2 + beta*(d1/(2u))^2 = d0  =>  4u^4 - 4*d0*u^2 + beta*d1^2 = 0.
  Rational disc = d0 * d0 - beta * d1 * d1;
  auto s = rational_sqrt(disc);
  if (!s) return {SquareStatus::NotSquare, std::nullopt};
  for (int sign : {1, -1}) {
    Rational u2 = (d0 + Rational(sign) * (*s)) / 2;
    if (auto u = rational_sqrt(u2)) {
      if (is_zero(*u)) continue;
      Rational v = d1 / (2 * (*u));
      return {SquareStatus::Square, AlgebraicNumber(f, {*u, v})};
    }
  }
  return {SquareStatus::NotSquare, std::nullopt};
}

}  // namespace germlab
