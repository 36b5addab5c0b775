#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ladder/core_types.hpp"

namespace ladder {

/// The triple (X, l, eta) attached to one self-dual cuspidal label.
struct LadderBlock {
  CuspidalLabel rho;
  std::vector<HalfInt> X;
  int l = 0;
  int eta = 1;

  int t() const { return static_cast<int>(X.size()); }
  /// t - 2l - 1: the index of the last colored row of the graph.
  int c() const { return t() - 2 * l - 1; }
  /// 1-based access x_i.
  HalfInt x(int i) const { return X[static_cast<std::size_t>(i - 1)]; }

  friend auto operator<=>(const LadderBlock&, const LadderBlock&) = default;
};

struct LadderDatum {
  GroupType group = GroupType::Sp;
  std::vector<LadderBlock> blocks;

  const LadderBlock* find(std::string_view rho_id) const;

  friend auto operator<=>(const LadderDatum&, const LadderDatum&) = default;
};

/// The Langlands presentation of π(L): segments in the datum's own order.
struct LanglandsData {
  std::vector<Segment> segments;
  TemperedParam tempered;
};

/// Returns the rank n, or throws ValidationError naming the first failed clause.
std::int64_t validate_datum(const LadderDatum& d);

/// Per-block checks only (no global sign or dimension).
void validate_block(const LadderBlock& b);

/// Maps a datum, possibly with pairs summing to -1 or a leading -1/2 in the middle,
/// to the unique representative of the same representation: such pairs are removed
/// with l decreased, a middle -1/2 is removed with eta = -1, empty blocks are removed
/// and blocks are sorted by label id. Valid data without these features are unchanged
/// up to block order.
LadderDatum canonicalize(LadderDatum d);
LadderBlock canonicalize_block(LadderBlock b);

/// Sum of (2 Σx + t) d over blocks; the dimension of the dual parameter.
std::int64_t datum_dimension(const LadderDatum& d);

LanglandsData langlands_data_of(const LadderDatum& d);
StandardModule standard_module_of(const LadderDatum& d);

/// Number of graph vertices of a block, Σ (2x + 1).
std::int64_t block_weight(const LadderBlock& b);

}  // namespace ladder
