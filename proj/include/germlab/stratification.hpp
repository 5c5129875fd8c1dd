#pragma once

// Symbolic stratification descriptors.  A descriptor is bookkeeping: a list
// of named strata with dimensions, local Euler obstruction values of the
// ambient space along them, containment flags, and optionally the Euler
// characteristic of their intersection with a generic level of the active
// function.  The two refinement operations rewrite a descriptor the way the
// corresponding set-theoretic refinements rewrite a stratification; they
// never compute topology, they only transport metadata.

#include <optional>
#include <string>
#include <vector>

#include "germlab/curve.hpp"
#include "germlab/errors.hpp"
#include "germlab/numeric.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

struct Stratum {
  std::string name;
  int dim = 0;
  Integer eu = 1;               // Eu of the ambient space along the stratum
  bool contains_origin = false;
  bool in_zero_f = false;       // stratum contained in {f = 0}
  bool in_zero_g = false;       // stratum contained in {g = 0}
  int branch_index = -1;        // index into a BranchSet for branch strata
  std::optional<Integer> chi;   // χ(stratum ∩ generic level ∩ small ball)
};

struct StratificationDescriptor {
  std::vector<Stratum> strata;
};

// Exactly one zero-dimensional stratum, and it is the origin.
inline void validate_descriptor(const StratificationDescriptor& v) {
  int origins = 0;
  for (const auto& s : v.strata) {
    if (s.dim < 0) fail(Errc::MalformedScenario, "stratum with negative dimension");
    if (s.dim == 0) {
      if (!s.contains_origin)
        fail(Errc::MalformedScenario, "zero-dimensional stratum away from the origin");
      ++origins;
    }
  }
  if (origins != 1)
    fail(Errc::MalformedScenario, "stratification needs exactly one origin stratum");
}

inline const Stratum& origin_stratum(const StratificationDescriptor& v) {
  for (const auto& s : v.strata)
    if (s.dim == 0) return s;
  fail(Errc::MalformedScenario, "stratification has no origin stratum");
}

// Refinement by the singular locus of g: positive-dimensional strata lose
// the locus, each branch becomes its own one-dimensional stratum (carrying
// the Euler obstruction value supplied per branch), and the origin stratum
// is kept.  With no branches the descriptor is returned unchanged.
inline StratificationDescriptor refine_first(const StratificationDescriptor& v,
                                             const BranchSet& branches,
                                             const std::vector<Integer>& branch_eu) {
  validate_descriptor(v);
  if (branches.branches.empty()) return v;
  if (branch_eu.size() != branches.branches.size())
    fail(Errc::Internal, "one Euler obstruction value per branch stratum required");
  StratificationDescriptor out;
  for (const auto& s : v.strata) {
    if (s.dim == 0) continue;
    Stratum t = s;
    t.name = s.name + " \\ sing(g)";
    out.strata.push_back(std::move(t));
  }
  for (std::size_t j = 0; j < branches.branches.size(); ++j) {
    Stratum b;
    b.name = "sing(g) branch " + std::to_string(j);
    b.dim = 1;
    b.eu = branch_eu[j];
    b.contains_origin = false;
    b.in_zero_g = true;  // the critical value along a branch through 0 is 0
    b.branch_index = static_cast<int>(j);
    out.strata.push_back(std::move(b));
  }
  out.strata.push_back(origin_stratum(v));
  validate_descriptor(out);
  return out;
}

// Refinement splitting every positive-dimensional stratum along {g = 0} and
// carving the singular-locus branches out of the on-level parts.
inline StratificationDescriptor refine_second(const StratificationDescriptor& v,
                                              const BranchSet& branches,
                                              const std::vector<Integer>& branch_eu) {
  validate_descriptor(v);
  if (branch_eu.size() != branches.branches.size())
    fail(Errc::Internal, "one Euler obstruction value per branch stratum required");
  StratificationDescriptor out;
  for (const auto& s : v.strata) {
    if (s.dim == 0) continue;
    Stratum off = s;
    off.name = s.name + " \\ {g=0}";
    off.in_zero_g = false;
    out.strata.push_back(std::move(off));
    Stratum on = s;
    on.name = branches.branches.empty() ? s.name + " on {g=0}"
                                        : s.name + " on {g=0} \\ sing(g)";
    on.dim = s.dim - 1;
    on.in_zero_g = true;
    if (on.dim > 0) out.strata.push_back(std::move(on));
  }
  for (std::size_t j = 0; j < branches.branches.size(); ++j) {
    Stratum b;
    b.name = "sing(g) branch " + std::to_string(j);
    b.dim = 1;
    b.eu = branch_eu[j];
    b.in_zero_g = true;
    b.branch_index = static_cast<int>(j);
    out.strata.push_back(std::move(b));
  }
  out.strata.push_back(origin_stratum(v));
  validate_descriptor(out);
  return out;
}

enum class WeightKind { EulerObstruction, Unit };

// Normal Morse index of a stratum pair for the Euler-obstruction weight:
// 1 on the diagonal, 0 off it.  The unit weight has no closed form here.
inline Integer normal_morse_index(const Stratum& vprime, const Stratum& v,
                                  WeightKind weight = WeightKind::EulerObstruction) {
  if (weight != WeightKind::EulerObstruction)
    fail(Errc::UnsupportedWeight, "normal Morse index is only available for the Eu weight");
  return vprime.name == v.name ? 1 : 0;
}

}  // namespace germlab
