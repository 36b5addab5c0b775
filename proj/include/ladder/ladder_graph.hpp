#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ladder/ladder_datum.hpp"

namespace ladder {

/// A vertex (x, y) of the ladder graph.
struct GraphPoint {
  HalfInt x;
  std::int64_t y = 0;

  /// Rows top to bottom, each row right to left.
  friend bool operator<(const GraphPoint& a, const GraphPoint& b) {
    if (a.y != b.y) return a.y > b.y;
    return a.x > b.x;
  }
  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
};

/// The colored directed graph of one block. Row i (height y = -i) runs from
/// x_{l+1+i} down to -x_{t-l-i}; u ≺ v whenever v = u - (1, 0) or v = u + (1, -1).
struct LadderGraph {
  CuspidalLabel rho;
  int t = 0;
  int l = 0;
  int eta = 1;
  std::map<GraphPoint, int> vertices;

  int c() const { return t - 2 * l - 1; }
  bool contains(HalfInt x, std::int64_t y) const { return vertices.count({x, y}) != 0; }
  int color(HalfInt x, std::int64_t y) const;
  /// Half the number of uncolored vertices.
  std::int64_t m() const;
  /// All pairs (u, v) with u ≺ v.
  std::vector<std::pair<GraphPoint, GraphPoint>> edges() const;
  bool is_minimal(const GraphPoint& v) const;
  /// The vertex paired with v under (x, y) -> (-x, -c - y).
  GraphPoint partner(const GraphPoint& v) const { return {-v.x, -c() - v.y}; }

  friend bool operator==(const LadderGraph&, const LadderGraph&) = default;
};

/// The coloring rule at (x, y) for a graph with the given parity, c and eta.
int coloring(Parity parity, int c, int eta, HalfInt x, std::int64_t y);

LadderGraph build_graph(const LadderBlock& b);

/// Recovers the block from a vertex set and coloring given up to a vertical
/// translation. Throws DomainError("not-a-ladder-graph") when no block fits.
LadderBlock graph_to_datum(const CuspidalLabel& rho, const std::map<GraphPoint, int>& vertices);
inline LadderBlock graph_to_datum(const LadderGraph& g) { return graph_to_datum(g.rho, g.vertices); }

/// nullopt means the derivative is zero. Throws DomainError("unknown-label").
std::optional<LadderDatum> derivative(const LadderDatum& d, std::string_view rho_id, HalfInt x);

bool is_supercuspidal(const LadderDatum& d);

struct JacquetTerm {
  std::vector<Segment> gl_part;
  LadderDatum datum_part;
  std::int64_t multiplicity = 1;
  /// The tuple y that produced this term; empty once identical terms are merged.
  std::vector<HalfInt> y;
};

/// One term per admissible tuple y, in lexicographic order of y, when raw;
/// otherwise identical terms are merged and sorted by GL size, then GL part,
/// then datum.
std::vector<JacquetTerm> jacquet_expansion(const LadderDatum& d, std::string_view rho_id, bool raw = false);

/// Number of cuspidal twists in a GL part.
std::int64_t gl_size(const std::vector<Segment>& gl_part);

LadderDatum aubert_dual(const LadderDatum& d);
LadderBlock aubert_dual_block(const LadderBlock& b);

}  // namespace ladder
