#pragma once

// Exact rational scalars and the deterministic seed machinery.
//
// Rational is GMP's canonical mpq: numerator and denominator coprime,
// denominator positive, zero stored as 0/1.  Every helper here preserves that
// canonical form (mpq_class arithmetic canonicalizes automatically).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germlab/errors.hpp"

namespace germlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rational_from_long(long n) { return Rational(n); }

// Renders "p" for integers and "p/q" otherwise; used by canonical reports, so
// the format must stay stable.
inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

inline bool fits_long(const Integer& z) { return z.fits_slong_p(); }

inline long long to_long_checked(const Integer& z) {
  if (!z.fits_slong_p()) fail(Errc::Internal, "integer out of long range: " + z.get_str());
  return z.get_si();
}

// Exact square root in Q, when one exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

// --- small-integer factoring -------------------------------------------------
//
// Used for rational-root candidate enumeration and squarefree cores of
// extension discriminants.  Inputs at desk scale stay tiny; the trial-division
// bound is a loud honesty guard, not a performance knob.

inline std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
  if (sgn(n) < 0) n = -n;
  if (n == 0) fail(Errc::Internal, "factor_integer(0)");
  std::vector<std::pair<Integer, unsigned>> out;
  auto push = [&out](const Integer& p) {
    if (!out.empty() && out.back().first == p) {
      out.back().second++;
    } else {
      out.emplace_back(p, 1u);
    }
  };
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (p > 2000000) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 32) > 0) break;
      fail(Errc::Internal, "integer too hard to factor: " + n.get_str());
    }
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      push(p);
    }
  }
  if (n > 1) push(n);
  return out;
}

// All positive divisors, ascending.
inline std::vector<Integer> divisors(const Integer& n) {
  auto fac = factor_integer(n);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : fac) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Writes q = s^2 * core with core a squarefree integer (sign carried by core).
// Used to canonicalize quadratic extensions so that sqrt(8) and sqrt(2) land
// in the same field.
inline std::pair<Rational, Integer> squarefree_core(const Rational& q) {
  if (is_zero(q)) return {Rational(0), Integer(1)};
  Integer core = sgn(q) < 0 ? Integer(-1) : Integer(1);
  Rational scale(1);
  for (const auto& [p, e] : factor_integer(q.get_num())) {
    unsigned half = e / 2;
    Integer ph = 1;
    for (unsigned i = 0; i < half; ++i) ph *= p;
    scale *= Rational(ph);
    if (e % 2) core *= p;
  }
  for (const auto& [p, e] : factor_integer(q.get_den())) {
    // 1/p = p / p^2: move one p into the core, the rest into the scale.
    unsigned lifted = e + (e % 2);
    Integer ph = 1;
    for (unsigned i = 0; i < lifted / 2; ++i) ph *= p;
    scale /= Rational(ph);
    if (e % 2) core *= p;
  }
  return {scale, core};
}

// --- deterministic seeding ---------------------------------------------------
//
// splitmix64: tiny, stateless-friendly, and bit-identical on every platform
// (std::uniform_int_distribution is not).  All "generic" choices in the
// library flow through this, so a (input, seed) pair fixes every output byte.

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough integer in [lo, hi]; determinism matters here, statistical
  // perfection does not.
  long next_in(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Labelled seed derivation: children of a master seed are independent streams
// keyed by a human-readable label ("sectional/1", "polar/l", ...).
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& label) {
  SplitMix64 rng(seed ^ fnv1a(label));
  return rng.next();
}

}  // namespace germlab
