#pragma once

// Monomials (exponent vectors) and the three monomial orders in use:
//   - degrevlex: global order for Groebner bases,
//   - negdegrevlex: local order (1 > x_i) for standard bases at the origin,
//   - block: elimination order (a marked block dominates, degrevlex inside
//     each block).

#include <string>
#include <vector>

#include "germlab/errors.hpp"

namespace germlab {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline Monomial mono_one(int nvars) { return Monomial(nvars, 0); }

inline bool mono_is_one(const Monomial& m) {
  for (int e : m)
    if (e) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {  // a / b
  Monomial r(a);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] -= b[i];
    if (r[i] < 0) fail(Errc::Internal, "inexact monomial division");
  }
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

namespace detail {

// degrevlex comparison restricted to the index subset where pick(i) is true.
// Returns +1 if a > b, -1 if a < b, 0 if the restrictions are equal.
template <class Pick>
int cmp_drl_masked(const Monomial& a, const Monomial& b, Pick pick) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (pick(i)) {
      da += a[i];
      db += b[i];
    }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!pick(i)) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;  // reverse lex
  }
  return 0;
}

}  // namespace detail

struct MonomialOrder {
  enum class Kind { DegRevLex, NegDegRevLex, Block };

  Kind kind = Kind::DegRevLex;
  // For Block: vars with mask[i] != 0 form the dominating (eliminated) block.
  std::vector<char> mask;

  static MonomialOrder degrevlex() { return {Kind::DegRevLex, {}}; }
  static MonomialOrder negdegrevlex() { return {Kind::NegDegRevLex, {}}; }
  static MonomialOrder block(std::vector<char> m) { return {Kind::Block, std::move(m)}; }

  // Global orders (1 smallest) admit plain division; the local order needs
  // Mora's normal form.
  bool global() const { return kind != Kind::NegDegRevLex; }

  // +1: a > b, 0: equal, -1: a < b.
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::DegRevLex:
        return detail::cmp_drl_masked(a, b, [](std::size_t) { return true; });
      case Kind::NegDegRevLex: {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db ? 1 : -1;  // lower degree is larger
        for (std::size_t i = a.size(); i-- > 0;)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
      }
      case Kind::Block: {
        int c = detail::cmp_drl_masked(a, b, [this](std::size_t i) { return mask[i] != 0; });
        if (c) return c;
        return detail::cmp_drl_masked(a, b, [this](std::size_t i) { return mask[i] == 0; });
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
};

}  // namespace germlab
