#pragma once

// Error taxonomy for the whole library.  Every failure mode that a caller can
// meaningfully react to gets its own kind; everything else is Internal.

#include <stdexcept>
#include <string>

namespace germlab {

enum class Errc {
  // parsing / input
  SyntaxError,
  UnknownVariable,
  MalformedScenario,
  // coefficient fields
  ExtensionTooDeep,
  // curve decomposition
  SquarefreeRequired,
  NotACurve,
  LiftingFailed,
  GenericityUnstable,
  TruncationTooShort,
  RestrictionVanishes,
  // invariants
  SliceNotTransverse,
  NonIsolated,
  NotICIS,
  TransversalNotIsolated,
  PolarNotCurve,
  // identity verification
  HypothesisFailed,
  MissingStratumChi,
  UnsupportedWeight,
  Unsupported,
  // ideal operations
  OriginNotInVariety,
  SaturationDiverged,
  NonIsolatedIntersection,
  // should-not-happen guards (budget overruns, broken invariants)
  Internal,
};

inline const char* errc_name(Errc k) {
  switch (k) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::MalformedScenario: return "MalformedScenario";
    case Errc::ExtensionTooDeep: return "ExtensionTooDeep";
    case Errc::SquarefreeRequired: return "SquarefreeRequired";
    case Errc::NotACurve: return "NotACurve";
    case Errc::LiftingFailed: return "LiftingFailed";
    case Errc::GenericityUnstable: return "GenericityUnstable";
    case Errc::TruncationTooShort: return "TruncationTooShort";
    case Errc::RestrictionVanishes: return "RestrictionVanishes";
    case Errc::SliceNotTransverse: return "SliceNotTransverse";
    case Errc::NonIsolated: return "NonIsolated";
    case Errc::NotICIS: return "NotICIS";
    case Errc::TransversalNotIsolated: return "TransversalNotIsolated";
    case Errc::PolarNotCurve: return "PolarNotCurve";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::MissingStratumChi: return "MissingStratumChi";
    case Errc::UnsupportedWeight: return "UnsupportedWeight";
    case Errc::Unsupported: return "Unsupported";
    case Errc::OriginNotInVariety: return "OriginNotInVariety";
    case Errc::SaturationDiverged: return "SaturationDiverged";
    case Errc::NonIsolatedIntersection: return "NonIsolatedIntersection";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what),
        kind_(kind) {}

  // Syntax errors carry the byte offset of the offending token.
  Error(Errc kind, const std::string& what, std::size_t position)
      : std::runtime_error(std::string(errc_name(kind)) + " at offset " +
                           std::to_string(position) + ": " + what),
        kind_(kind),
        position_(position) {}

  Errc kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Errc kind_;
  std::size_t position_ = 0;
};

[[noreturn]] inline void fail(Errc kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace germlab
