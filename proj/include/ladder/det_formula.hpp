#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ladder/core_types.hpp"
#include "ladder/ladder_datum.hpp"

namespace ladder {

/// One permutation per block of the datum, in block order. perms[b][k] is the
/// 1-based image σ(k+1).
struct SigmaElement {
  std::vector<std::vector<int>> perms;

  int sign() const;
  friend auto operator<=>(const SigmaElement&, const SigmaElement&) = default;
};

/// Lexicographic in (perms[0], perms[1], ...).
std::vector<SigmaElement> enumerate_sigma(const LadderDatum& d);

/// The pieces of I_σ(L) before any convention is applied: the segments from
/// J⁺, the fixed middle pieces with their signs, and one pair of exponents
/// (a, a') per element of J⁻ whose common sign δ ranges over ±1.
struct SigmaParts {
  std::vector<Segment> segments;
  TemperedParam fixed;
  struct MinusPair {
    CuspidalLabel rho;
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
  };
  std::vector<MinusPair> minus;
};

SigmaParts sigma_parts(const LadderDatum& d, const SigmaElement& s);

/// Applies the Zero/Unit and S_0 conventions to every δ choice; δ = + is
/// enumerated before δ = - for the first pair. Empty means zero.
std::vector<StandardModule> realize(const SigmaParts& parts);

/// The surviving standard modules of I_σ(L), one per sign choice on J⁻ that is
/// not killed by a zero Steinberg factor or by S_0 with sign -1. Empty means the
/// whole term is zero.
std::vector<StandardModule> assemble_I_sigma(const LadderDatum& d, const SigmaElement& s);

/// Σ sgn(σ) [I_σ(L)], optionally projected onto the cuspidal support of π(L).
GrothendieckElement determinantal_formula(const LadderDatum& d, bool projected);

/// A GL ladder: segments [x_i, y_i] with x and y strictly increasing.
struct GLLadder {
  CuspidalLabel rho;
  std::vector<std::pair<HalfInt, HalfInt>> segments;
};

/// Throws DomainError("invalid-ladder") if the ladder conditions fail.
void validate_gl_ladder(const GLLadder& g);

/// Products of proper segments (sorted) with integer coefficients.
using GLFormula = std::map<std::vector<Segment>, std::int64_t>;

GLFormula gl_determinantal_formula(const GLLadder& g);

/// Sign of a permutation of 1..n.
int permutation_sign(const std::vector<int>& p);

}  // namespace ladder
