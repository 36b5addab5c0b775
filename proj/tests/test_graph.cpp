#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ladder/errors.hpp"
#include "ladder/ladder_graph.hpp"
#include "ladder/render.hpp"
#include "ladder/support.hpp"
#include "testkit.hpp"

using namespace ladder;

namespace {

const CuspidalLabel kInt{"1", 1, Parity::Integral};
const CuspidalLabel kHalfLabel{"1", 1, Parity::HalfIntegral};

std::vector<HalfInt> xs(std::initializer_list<int> v) {
  std::vector<HalfInt> out;
  for (int x : v) out.push_back(HalfInt(x));
  return out;
}

LadderDatum sp(std::vector<HalfInt> X, int l, int eta) { return {GroupType::Sp, {{kInt, std::move(X), l, eta}}}; }

const LadderDatum kSp8 = sp(xs({0, 1, 2}), 1, 1);

}  // namespace

TEST(Graph, SingleRow) {
  const auto g = build_graph({kInt, xs({1}), 0, 1});
  ASSERT_EQ(g.vertices.size(), 3u);
  EXPECT_EQ(g.color(HalfInt(0), 0), 1);
  EXPECT_EQ(g.color(HalfInt(1), 0), 0);
  EXPECT_EQ(g.color(HalfInt(-1), 0), 0);
  EXPECT_EQ(g.m(), 1);
  const auto e = g.edges();
  EXPECT_EQ(e.size(), 2u);
}

TEST(Graph, FirstFigure) {
  const LadderBlock b{kHalfLabel, {kHalf, HalfInt::from_twice(5), HalfInt::from_twice(7)}, 0, -1};
  const auto g = build_graph(b);
  EXPECT_EQ(g.vertices.size(), 16u);
  // Top row, left to right: 0 + - + -.
  std::vector<int> top;
  for (int tw = -7; tw <= 1; tw += 2) top.push_back(g.color(HalfInt::from_twice(tw), 0));
  EXPECT_EQ(top, (std::vector<int>{0, 1, -1, 1, -1}));
  EXPECT_EQ(g.m(), 2);
  // Both kinds of arrows of the drawing.
  EXPECT_TRUE(g.contains(HalfInt::from_twice(3), -1));
  const auto edges = g.edges();
  const GraphPoint from{HalfInt::from_twice(3), -1}, to{kHalf, 0};
  EXPECT_NE(std::find(edges.begin(), edges.end(), std::make_pair(to, from)), edges.end());
  EXPECT_EQ(graph_to_datum(g), b);
}

TEST(Graph, SecondFigure) {
  const LadderBlock b{kInt, xs({0, 1, 2, 3, 4}), 1, -1};
  const auto g = build_graph(b);
  EXPECT_EQ(g.vertices.size(), 25u);
  EXPECT_EQ(g.c(), 2);
  for (int x = -4; x <= 0; ++x) EXPECT_EQ(g.color(HalfInt(x), 1), 0);
  for (int x = 0; x <= 4; ++x) EXPECT_EQ(g.color(HalfInt(x), -3), 0);
  EXPECT_EQ(g.color(HalfInt(0), 0), -1);
  EXPECT_EQ(g.color(HalfInt(-1), 0), 1);
  EXPECT_EQ(g.m(), 8);
}

TEST(Graph, PartnersAreVertices) {
  for (const auto& d : testkit::corpus()) {
    for (const auto& b : d.blocks) {
      const auto g = build_graph(b);
      for (const auto& [v, f] : g.vertices) {
        ASSERT_TRUE(g.contains(g.partner(v).x, g.partner(v).y));
        EXPECT_EQ(g.vertices.at(g.partner(v)) == 0, f == 0);
      }
      EXPECT_EQ(static_cast<std::int64_t>(g.vertices.size()), block_weight(b));
    }
  }
}

TEST(GraphToDatum, SingleColoredVertex) {
  const std::map<GraphPoint, int> v{{{HalfInt(0), 5}, 1}};
  EXPECT_EQ(graph_to_datum(kInt, v), (LadderBlock{kInt, xs({0}), 0, 1}));
}

TEST(GraphToDatum, RejectsNonLadders) {
  const std::map<GraphPoint, int> bad{{{HalfInt(0), 0}, 1}, {{HalfInt(3), 0}, 0}};
  EXPECT_THROW(graph_to_datum(kInt, bad), DomainError);
  const std::map<GraphPoint, int> off_center{{{HalfInt(1), 0}, 1}, {{HalfInt(0), 0}, 0}, {{HalfInt(-1), 0}, 0}};
  EXPECT_THROW(graph_to_datum(kInt, off_center), DomainError);
}

TEST(GraphToDatum, RecoloredMiddleIsAnotherBlock) {
  // The global sign is not a per-block condition.
  const std::map<GraphPoint, int> recolored{{{HalfInt(1), 0}, 0}, {{HalfInt(0), 0}, -1}, {{HalfInt(-1), 0}, 0}};
  EXPECT_EQ(graph_to_datum(kInt, recolored), (LadderBlock{kInt, xs({1}), 0, -1}));
}

TEST(GraphToDatum, ExhaustiveRoundTrip) {
  for (int lo : {-4, -3}) {
    for (const auto& d : testkit::exhaustive_single_label(4, lo, 6)) {
      EXPECT_EQ(graph_to_datum(build_graph(d.blocks[0])), d.blocks[0]) << render(d);
    }
  }
}

TEST(Derivative, AtZero) {
  const auto d = derivative(kSp8, "1", HalfInt(0));
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, sp(xs({-1, 1, 2}), 1, 1));
}

TEST(Derivative, TopExponent) {
  const auto d = derivative(sp(xs({2}), 0, 1), "1", HalfInt(2));
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, sp(xs({1}), 0, 1));
}

TEST(Derivative, NotMinimalIsZero) {
  EXPECT_FALSE(derivative(kSp8, "1", HalfInt(1)));
  EXPECT_FALSE(derivative(kSp8, "1", HalfInt(7)));
}

TEST(Derivative, UnknownLabel) {
  try {
    derivative(kSp8, "nope", HalfInt(0));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.clause(), "unknown-label");
  }
}

TEST(Derivative, TwiceIsZero) {
  for (const auto& d : testkit::corpus()) {
    for (const auto& b : d.blocks) {
      for (HalfInt x : b.X) {
        if (auto once = derivative(d, b.rho.id, x); once && once->find(b.rho.id)) {
          EXPECT_FALSE(derivative(*once, b.rho.id, x)) << render(d) << " at " << x.str();
        }
      }
    }
  }
}

TEST(Supercuspidal, Examples) {
  EXPECT_TRUE(is_supercuspidal(sp(xs({0, 1, 2}), 0, -1)));
  EXPECT_FALSE(is_supercuspidal(sp(xs({1}), 0, 1)));
  EXPECT_TRUE(is_supercuspidal(LadderDatum{GroupType::SOodd, {}}));
  EXPECT_TRUE(is_supercuspidal(sp(xs({0}), 0, 1)));
}

TEST(Supercuspidal, IffNoDerivative) {
  for (const auto& d : testkit::corpus()) {
    bool any = false;
    for (const auto& b : d.blocks) {
      for (int tw = -12; tw <= 12; ++tw) {
        const HalfInt x = HalfInt::from_twice(tw);
        if (b.rho.admits(x) && derivative(d, b.rho.id, x)) any = true;
      }
    }
    EXPECT_EQ(is_supercuspidal(d), !any) << render(d);
  }
}

TEST(Jacquet, TrivialTuple) {
  const auto terms = jacquet_expansion(kSp8, "1");
  ASSERT_FALSE(terms.empty());
  EXPECT_TRUE(terms.front().gl_part.empty());
  EXPECT_EQ(terms.front().datum_part, kSp8);
}

TEST(Jacquet, SteinbergOfSp2) {
  // Middle bound y_1 >= 0 leaves the tuples y = 1 and y = 0.
  const auto terms = jacquet_expansion(sp(xs({1}), 0, 1), "1", true);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].y, xs({0}));
  ASSERT_EQ(terms[0].gl_part.size(), 1u);
  EXPECT_EQ(terms[0].gl_part[0], (Segment{kInt, HalfInt(1), HalfInt(1)}));
  EXPECT_EQ(terms[0].datum_part, sp(xs({0}), 0, 1));
  EXPECT_EQ(terms[1].y, xs({1}));
  EXPECT_TRUE(terms[1].gl_part.empty());
}

TEST(Jacquet, SiegelTerms) {
  std::vector<std::vector<Segment>> full;
  for (const auto& t : jacquet_expansion(kSp8, "1")) {
    if (gl_size(t.gl_part) == 4) full.push_back(t.gl_part);
  }
  ASSERT_EQ(full.size(), 2u);
}

TEST(Jacquet, SizesAddUp) {
  for (const auto& d : testkit::corpus()) {
    const auto n = validate_datum(d);
    for (const auto& b : d.blocks) {
      for (const auto& t : jacquet_expansion(d, b.rho.id, true)) {
        EXPECT_EQ(gl_size(t.gl_part) * b.rho.d + validate_datum(t.datum_part), n) << render(d);
      }
    }
  }
}

TEST(Jacquet, MergedKeepsTotalMultiplicity) {
  for (const auto& d : testkit::corpus()) {
    for (const auto& b : d.blocks) {
      std::int64_t total = 0;
      for (const auto& t : jacquet_expansion(d, b.rho.id)) total += t.multiplicity;
      EXPECT_EQ(static_cast<std::size_t>(total), jacquet_expansion(d, b.rho.id, true).size());
    }
  }
}

TEST(Aubert, WorkedExample) {
  const auto dual = aubert_dual(sp(xs({0, 1, 4}), 1, 1));
  EXPECT_EQ(dual, sp(xs({-4, -3, 0, 1, 2, 3, 4}), 3, 1));
  EXPECT_EQ(render_langlands(standard_module_of(dual)), "L(|·|^(-4), |·|^(-3), Δ[0,-2]; π(1^+))");
}

TEST(Aubert, SteinbergOfSp2) {
  EXPECT_EQ(aubert_dual(sp(xs({1}), 0, 1)), sp(xs({-1, 0, 1}), 1, 1));
  EXPECT_EQ(aubert_dual(sp(xs({-1, 0, 1}), 1, 1)), sp(xs({1}), 0, 1));
}

TEST(Aubert, UnlinkedRowsStayPut) {
  const LadderDatum d{GroupType::SOodd, {{kInt, xs({-2, 2}), 1, -1}}};
  EXPECT_EQ(aubert_dual(d), d);
}

TEST(Aubert, InvolutionAndSupport) {
  for (const auto& d : testkit::corpus()) {
    const auto hat = aubert_dual(d);
    EXPECT_EQ(aubert_dual(hat), d) << render(d);
    EXPECT_EQ(validate_datum(hat), validate_datum(d));
    EXPECT_EQ(supp_ladder(hat), supp_ladder(d)) << render(d);
    if (is_supercuspidal(d)) EXPECT_EQ(hat, d);
  }
}

TEST(Aubert, ExhaustiveInvolution) {
  for (int lo : {-4, -3}) {
    for (const auto& d : testkit::exhaustive_single_label(4, lo, 6)) EXPECT_EQ(aubert_dual(aubert_dual(d)), d) << render(d);
  }
}
