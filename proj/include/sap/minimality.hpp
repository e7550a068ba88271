#pragma once

// Hereditary obstructions to spectral arbitrariness for one-entry deletions
// of K_{n,r}, plus a sampling-only scan for arbitrary patterns.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sap/knr.hpp"
#include "sap/pattern.hpp"

namespace sap {

enum class ObstructionKind { TooFewEntries, ReducibleFixedTraceBlocks, FixedSignCoefficient, Unobstructed };

std::string to_string(ObstructionKind k);

struct Obstruction {
  ObstructionKind kind = ObstructionKind::Unobstructed;
  int coefficient = 0;                          // k of alpha_k (FixedSignCoefficient)
  Sign sign = Sign::Zero;                       // claimed sign (FixedSignCoefficient)
  std::vector<std::vector<std::size_t>> blocks;  // zero-based, block lower triangular order
  std::size_t nonzeros = 0;                     // TooFewEntries
  bool hereditary = true;
  bool sampled_only = false;  // found by sampling, not by symbolic sign analysis

  /// Human-readable detail, 1-based indices.
  std::string detail() const;
};

struct SampleTally {
  int same = 0;      // strictly the claimed sign
  int zero = 0;      // inside the rounding band
  int opposite = 0;  // strictly the other sign
};

struct DeletionOutcome {
  Obstruction reported;            // highest-priority detector that fired
  std::vector<Obstruction> found;  // every detector that fired
  std::optional<SampleTally> tally;  // sampling check of a fixed-sign claim
  bool confirmed = true;           // sampling agrees with the claim (or no claim)
};

struct MsapReport {
  KnrParams params;
  std::map<Position, DeletionOutcome> per_deletion;
  bool verdict = false;
  std::uint64_t seed = 0;
  int samples = 0;
};

/// TooFewEntries when S is irreducible with fewer than 2n-1 nonzeros.
std::optional<Obstruction> entry_count_obstruction(const SignPattern& s);

/// S reducible and some diagonal block whose nonzero diagonal entries all
/// share one sign (so that block's trace has fixed nonzero sign).
std::optional<Obstruction> reducibility_obstruction(const SignPattern& s);

/// Sign analysis of the characteristic coefficients of K_{n,r} with the
/// deleted parameter set to zero. Absent for superdiagonal deletions.
/// deleted must be a nonzero position of build_pattern(p) (InvalidInput).
std::optional<Obstruction> fixed_sign_obstruction(KnrParams p, Position deleted);

/// Draws random members of Q(s) (magnitudes log-uniform in [lo, hi]) and
/// classifies alpha_k against the claimed sign.
SampleTally sample_coefficient_sign(const SignPattern& s, int k, Sign claimed, std::uint64_t seed, int samples,
                                    double lo = 0.5, double hi = 2.0);

inline constexpr int kDefaultSamples = 1000;

MsapReport verify_msap(KnrParams p, std::uint64_t seed = 1, int samples = kDefaultSamples);

/// Same report for an arbitrary square pattern. Fixed-sign coefficients are
/// only detected by sampling, so a true verdict is evidence, not proof.
struct PatternScan {
  SignPattern pattern;
  std::map<Position, DeletionOutcome> per_deletion;
  bool verdict = false;
  std::uint64_t seed = 0;
  int samples = 0;
};

PatternScan scan_minimality(const SignPattern& s, std::uint64_t seed = 1, int samples = kDefaultSamples);

}  // namespace sap
