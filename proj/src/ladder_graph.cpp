#include "ladder/ladder_graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ladder/errors.hpp"

namespace ladder {

namespace {

int parity_sign(std::int64_t j) { return j % 2 == 0 ? 1 : -1; }

[[noreturn]] void not_a_graph(const std::string& why) { throw DomainError("not-a-ladder-graph", why); }

LadderBlock& block_of(LadderDatum& d, std::string_view rho_id) {
  for (auto& b : d.blocks) {
    if (b.rho.id == rho_id) return b;
  }
  throw DomainError("unknown-label", "no block with label '" + std::string(rho_id) + "'");
}

LadderDatum checked(LadderDatum d, const char* what) {
  d = canonicalize(std::move(d));
  try {
    validate_datum(d);
  } catch (const ValidationError& e) {
    throw InternalError(std::string(what) + " produced an invalid datum: " + e.what());
  }
  return d;
}

}  // namespace

int coloring(Parity parity, int c, int eta, HalfInt x, std::int64_t y) {
  const std::int64_t i = -y;
  if (i < 0 || i > c) return 0;
  if (parity == Parity::Integral) {
    if (!x.is_integer()) return 0;
    const std::int64_t j = x.whole();
    return (i - c <= j && j <= i) ? parity_sign(j) * eta : 0;
  }
  if (x.is_integer()) return 0;
  const std::int64_t j = (x.twice() + eta) / 2;
  return (i - c + eta <= j && j <= i) ? parity_sign(j) * eta : 0;
}

int LadderGraph::color(HalfInt x, std::int64_t y) const {
  auto it = vertices.find({x, y});
  return it == vertices.end() ? 0 : it->second;
}

std::int64_t LadderGraph::m() const {
  std::int64_t zeros = 0;
  for (const auto& [v, f] : vertices) zeros += f == 0;
  return zeros / 2;
}

std::vector<std::pair<GraphPoint, GraphPoint>> LadderGraph::edges() const {
  std::vector<std::pair<GraphPoint, GraphPoint>> out;
  for (const auto& [u, f] : vertices) {
    if (contains(u.x - 1, u.y)) out.push_back({u, {u.x - 1, u.y}});
    if (contains(u.x + 1, u.y - 1)) out.push_back({u, {u.x + 1, u.y - 1}});
  }
  return out;
}

bool LadderGraph::is_minimal(const GraphPoint& v) const {
  return contains(v.x, v.y) && !contains(v.x + 1, v.y) && !contains(v.x - 1, v.y + 1);
}

LadderGraph build_graph(const LadderBlock& b) {
  LadderGraph g{b.rho, b.t(), b.l, b.eta, {}};
  const int c = b.c();
  for (int i = -b.l; i <= c + b.l; ++i) {
    const HalfInt right = b.x(b.l + 1 + i);
    const HalfInt left = -b.x(b.t() - b.l - i);
    for (HalfInt x = right; x >= left; x -= HalfInt(1)) {
      g.vertices[{x, -i}] = coloring(b.rho.parity, c, b.eta, x, -i);
    }
  }
  return g;
}

LadderBlock graph_to_datum(const CuspidalLabel& rho, const std::map<GraphPoint, int>& vertices) {
  if (vertices.empty()) return {rho, {}, 0, 1};

  struct Span {
    HalfInt right, left;
    std::int64_t count = 0;
  };
  std::map<std::int64_t, Span> rows;
  bool any_colored = false;
  std::int64_t top_colored = 0, bottom_colored = 0;
  for (const auto& [v, f] : vertices) {
    if (!rho.admits(v.x)) not_a_graph("vertex abscissa " + v.x.str() + " has the wrong parity");
    auto [it, inserted] = rows.try_emplace(v.y, Span{v.x, v.x, 0});
    it->second.right = std::max(it->second.right, v.x);
    it->second.left = std::min(it->second.left, v.x);
    ++it->second.count;
    if (f != 0) {
      if (!any_colored) top_colored = bottom_colored = v.y;
      any_colored = true;
      top_colored = std::max(top_colored, v.y);
      bottom_colored = std::min(bottom_colored, v.y);
    }
  }
  for (const auto& [y, s] : rows) {
    if ((s.right - s.left).twice() / 2 + 1 != s.count) not_a_graph("row " + std::to_string(y) + " has a gap");
  }
  const std::int64_t ymax = rows.rbegin()->first;
  const std::int64_t ymin = rows.begin()->first;
  const std::int64_t levels = ymax - ymin + 1;

  std::int64_t c = 0, shift = 0;
  if (any_colored) {
    c = top_colored - bottom_colored;
    shift = -top_colored;
  } else if (levels % 2 == 0) {
    c = -1;
  } else if (rho.parity == Parity::HalfIntegral) {
    c = 0;
  } else {
    not_a_graph("uncolored integral graph with an odd number of rows");
  }
  if ((levels - c - 1) % 2 != 0 || levels < c + 1) not_a_graph("row count does not match the colored band");
  const std::int64_t l = (levels - c - 1) / 2;
  if (!any_colored) shift = l - ymax;
  if (ymax + shift != l || ymin + shift != -(c + l)) not_a_graph("colored band is not centered");

  const std::int64_t t = 2 * l + c + 1;
  std::vector<HalfInt> X(static_cast<std::size_t>(t));
  for (std::int64_t i = -l; i <= c + l; ++i) {
    auto it = rows.find(-i - shift);
    HalfInt right;
    if (it != rows.end()) {
      right = it->second.right;
    } else if (c == 0 && i == 0 && rho.parity == Parity::HalfIntegral) {
      right = kMinusHalf;
    } else {
      not_a_graph("row " + std::to_string(-i) + " is empty");
    }
    X[static_cast<std::size_t>(l + i)] = right;
  }

  std::vector<int> candidates;
  if (any_colored) {
    candidates = {1, -1};
  } else if (c == -1) {
    candidates = {-1};
  } else {
    candidates = {1};
  }
  std::map<GraphPoint, int> shifted;
  for (const auto& [v, f] : vertices) shifted[{v.x, v.y + shift}] = f;
  for (int eta : candidates) {
    LadderBlock b{rho, X, static_cast<int>(l), eta};
    try {
      validate_block(b);
    } catch (const ValidationError&) {
      continue;
    }
    if (build_graph(b).vertices == shifted) return b;
  }
  not_a_graph("no ladder block reproduces this vertex set and coloring");
}

std::optional<LadderDatum> derivative(const LadderDatum& d, std::string_view rho_id, HalfInt x) {
  LadderDatum out = d;
  LadderBlock& b = block_of(out, rho_id);
  if (!b.rho.admits(x)) return std::nullopt;
  const LadderGraph g = build_graph(b);

  std::optional<GraphPoint> found;
  for (const auto& [v, f] : g.vertices) {
    if (v.x == x && f == 0 && g.is_minimal(v)) {
      if (found) throw InternalError("two minimal vertices with abscissa " + x.str());
      found = v;
    }
  }
  if (!found) return std::nullopt;

  const GraphPoint p = g.partner(*found);
  const int i = static_cast<int>(-found->y);
  const int k = b.l + 1 + i;
  if (b.x(k) != x || g.color(p.x, p.y) != 0 || !g.contains(p.x, p.y)) {
    throw InternalError("minimal vertex is not a right end with an uncolored partner");
  }
  b.X[static_cast<std::size_t>(k - 1)] -= HalfInt(1);

  auto expected = g.vertices;
  expected.erase(*found);
  expected.erase(p);
  if (build_graph(b).vertices != expected) throw InternalError("derivative does not remove exactly two vertices");
  return checked(std::move(out), "derivative");
}

bool is_supercuspidal(const LadderDatum& d) {
  return std::all_of(d.blocks.begin(), d.blocks.end(), [](const LadderBlock& b) { return build_graph(b).m() == 0; });
}

std::int64_t gl_size(const std::vector<Segment>& gl_part) {
  std::int64_t n = 0;
  for (const auto& s : gl_part) n += s.length();
  return n;
}

std::vector<JacquetTerm> jacquet_expansion(const LadderDatum& d, std::string_view rho_id, bool raw) {
  LadderDatum base = d;
  const LadderBlock b = block_of(base, rho_id);
  const int t = b.t();
  const int l = b.l;

  std::vector<JacquetTerm> terms;
  std::vector<HalfInt> y(static_cast<std::size_t>(t));

  auto emit = [&] {
    JacquetTerm term;
    term.y = y;
    for (int i = 1; i <= t; ++i) {
      const HalfInt yi = y[static_cast<std::size_t>(i - 1)];
      if (yi != b.x(i)) term.gl_part.push_back({b.rho, b.x(i), yi + 1});
    }
    LadderBlock nb{b.rho, {}, l, b.eta};
    std::vector<bool> keep(static_cast<std::size_t>(t), true);
    for (int j = 1; j <= l; ++j) {
      if (y[static_cast<std::size_t>(j - 1)] + y[static_cast<std::size_t>(t - j)] < HalfInt(0)) {
        keep[static_cast<std::size_t>(j - 1)] = keep[static_cast<std::size_t>(t - j)] = false;
        --nb.l;
      }
    }
    for (int i = 0; i < t; ++i) {
      if (keep[static_cast<std::size_t>(i)]) nb.X.push_back(y[static_cast<std::size_t>(i)]);
    }
    LadderDatum nd = base;
    block_of(nd, rho_id) = std::move(nb);
    term.datum_part = checked(std::move(nd), "jacquet expansion");
    terms.push_back(std::move(term));
  };

  std::function<void(int)> rec = [&](int i) {
    if (i > t) {
      emit();
      return;
    }
    HalfInt lo = -b.x(t - i + 1) - 1;
    if (i > 1) lo = std::max(lo, y[static_cast<std::size_t>(i - 2)] + 1);
    if (l + 1 <= i && i <= t - l) {
      const HalfInt bound = b.rho.parity == Parity::Integral ? HalfInt(i - l - 1)
                                                             : HalfInt::from_twice(2 * (i - l - 1) - b.eta);
      lo = std::max(lo, bound);
    }
    if (i >= t - l + 1) lo = std::max(lo, HalfInt(-1) - y[static_cast<std::size_t>(t - i)]);
    for (HalfInt v = lo; v <= b.x(i); v += HalfInt(1)) {
      y[static_cast<std::size_t>(i - 1)] = v;
      rec(i + 1);
    }
  };
  rec(1);

  if (raw) return terms;

  std::vector<JacquetTerm> merged;
  std::map<std::pair<std::vector<Segment>, LadderDatum>, std::size_t> index;
  for (auto& term : terms) {
    auto key = std::make_pair(term.gl_part, term.datum_part);
    auto it = index.find(key);
    if (it != index.end()) {
      ++merged[it->second].multiplicity;
      continue;
    }
    index.emplace(std::move(key), merged.size());
    term.y.clear();
    merged.push_back(std::move(term));
  }
  std::sort(merged.begin(), merged.end(), [](const JacquetTerm& a, const JacquetTerm& b) {
    const auto ka = gl_size(a.gl_part), kb = gl_size(b.gl_part);
    if (ka != kb) return ka < kb;
    if (a.gl_part != b.gl_part) return a.gl_part < b.gl_part;
    return a.datum_part < b.datum_part;
  });
  return merged;
}

LadderBlock aubert_dual_block(const LadderBlock& b) {
  if (b.t() == 0) return b;
  const LadderGraph g = build_graph(b);
  std::map<GraphPoint, int> image;
  for (const auto& [v, f] : g.vertices) {
    if (b.rho.parity == Parity::Integral) {
      image[{-v.x, v.y + v.x.whole()}] = f;
    } else {
      image[{-v.x, v.y + (v.x.twice() + b.eta) / 2}] = -f;
    }
  }
  // Lines of the source graph that carry no vertex leave empty rows behind;
  // rows of a ladder graph are consecutive, so close the gaps in order.
  std::map<std::int64_t, std::int64_t, std::greater<>> rows;
  for (const auto& [v, f] : image) rows.emplace(v.y, 0);
  std::int64_t next = 0;
  for (auto& [y, r] : rows) r = next--;
  std::map<GraphPoint, int> packed;
  for (const auto& [v, f] : image) packed[{v.x, rows.at(v.y)}] = f;
  image = std::move(packed);
  try {
    return graph_to_datum(b.rho, image);
  } catch (const DomainError& e) {
    throw InternalError(std::string("dual graph did not parse: ") + e.what());
  }
}

LadderDatum aubert_dual(const LadderDatum& d) {
  LadderDatum out = canonicalize(d);
  for (auto& b : out.blocks) b = aubert_dual_block(b);
  return checked(std::move(out), "aubert dual");
}

}  // namespace ladder
