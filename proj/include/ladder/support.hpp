#pragma once

#include <map>
#include <string>
#include <vector>

#include "ladder/core_types.hpp"
#include "ladder/ladder_datum.hpp"

namespace ladder {

/// Cuspidal support: exponent multisets per label id (sorted, nonempty lists only)
/// plus the supercuspidal core as a canonical datum.
struct SupportMultiset {
  std::map<std::string, std::vector<HalfInt>> exponents;
  LadderDatum core;

  /// Adds ρ|·|^x and ρ|·|^{-x}.
  void add_pair(const std::string& rho_id, HalfInt x);
  void add(const std::string& rho_id, HalfInt x);
  /// Sorts every list; call after the last add.
  void finish();

  friend bool operator==(const SupportMultiset&, const SupportMultiset&) = default;
};

/// One derivative step of the graph route.
struct SupportStep {
  std::string rho_id;
  HalfInt x;
};

/// Removes uncolored vertices by derivatives until the datum is supercuspidal,
/// always at the minimal uncolored vertex in the top row. Steps are appended to
/// `trace` when given.
SupportMultiset supp_ladder(const LadderDatum& d, std::vector<SupportStep>* trace = nullptr);

/// Hole and pair reductions on a multiplicity-free, S_0-free discrete parameter.
/// Throws DomainError("unsupported-input") on repeated pieces.
SupportMultiset supp_discrete_series(const TemperedParam& t);

SupportMultiset supp_standard_module(const StandardModule& s);

GrothendieckElement project_ps(const SupportMultiset& target, const GrothendieckElement& e);

}  // namespace ladder
