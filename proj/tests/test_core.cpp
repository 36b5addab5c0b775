#include <gtest/gtest.h>

#include "ladder/core_types.hpp"
#include "ladder/errors.hpp"

using namespace ladder;

namespace {

const CuspidalLabel kInt{"1", 1, Parity::Integral};
const CuspidalLabel kHalfLabel{"1", 1, Parity::HalfIntegral};

HalfInt h(const char* s) { return HalfInt::parse(s); }
Segment seg(const char* x, const char* y, const CuspidalLabel& rho = kInt) { return {rho, h(x), h(y)}; }
TemperedParam temp(std::vector<TemperedPiece> pieces, GroupType g = GroupType::Sp) { return {g, std::move(pieces)}; }

}  // namespace

TEST(HalfInt, ParsesFractionsDecimalsAndIntegers) {
  EXPECT_EQ(h("3/2").twice(), 3);
  EXPECT_EQ(h("-1/2").twice(), -1);
  EXPECT_EQ(h("1.5").twice(), 3);
  EXPECT_EQ(h("-0.5").twice(), -1);
  EXPECT_EQ(h("4").twice(), 8);
  EXPECT_EQ(h("-2").twice(), -4);
  EXPECT_EQ(h("6/2"), HalfInt(3));
}

TEST(HalfInt, RejectsOtherDenominatorsAndJunk) {
  EXPECT_THROW(h("1/3"), ParseError);
  EXPECT_THROW(h("0.25"), ParseError);
  EXPECT_THROW(h("abc"), ParseError);
  EXPECT_THROW(h(""), ParseError);
  EXPECT_THROW(h("1/2x"), ParseError);
}

TEST(HalfInt, PrintsAsFraction) {
  EXPECT_EQ(h("3/2").str(), "3/2");
  EXPECT_EQ(h("-1/2").str(), "-1/2");
  EXPECT_EQ(HalfInt(-3).str(), "-3");
  EXPECT_EQ(HalfInt(0).str(), "0");
}

TEST(HalfInt, Arithmetic) {
  EXPECT_EQ(h("1/2") + h("1/2"), HalfInt(1));
  EXPECT_EQ(h("1/2") - 1, h("-1/2"));
  EXPECT_EQ(-h("3/2"), h("-3/2"));
  EXPECT_LT(h("-1/2"), HalfInt(0));
  EXPECT_TRUE(HalfInt(2).is_integer());
  EXPECT_FALSE(kHalf.is_integer());
}

TEST(Steinberg, ProperUnitZero) {
  EXPECT_EQ(normalize_steinberg(seg("0", "-2")).kind, SteinbergFactor::Kind::Proper);
  EXPECT_EQ(normalize_steinberg(seg("-1", "0")).kind, SteinbergFactor::Kind::Unit);
  EXPECT_EQ(normalize_steinberg(seg("-3/2", "1/2", kHalfLabel)).kind, SteinbergFactor::Kind::Zero);
  EXPECT_EQ(seg("0", "-2").length(), 3);
}

TEST(Steinberg, ParityChecks) {
  EXPECT_THROW(check_segment(seg("1/2", "0")), DomainError);
  EXPECT_THROW(check_segment(seg("1/2", "-1/2")), DomainError);
  EXPECT_NO_THROW(check_segment(seg("1/2", "-1/2", kHalfLabel)));
  try {
    check_segment(seg("1", "1/2"));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.clause(), "invalid-segment");
  }
}

TEST(Tempered, DropsPositiveSZero) {
  auto t = normalize_tempered(temp({{kInt, 0, 1}, {kInt, 2, 1}}));
  ASSERT_TRUE(t);
  ASSERT_EQ(t->pieces.size(), 1u);
  EXPECT_EQ(t->pieces[0].a, 2);
}

TEST(Tempered, NegativeSZeroKills) {
  EXPECT_FALSE(normalize_tempered(temp({{kHalfLabel, 0, -1}, {kHalfLabel, 2, -1}}, GroupType::SOodd)));
}

TEST(Tempered, WithoutSZeroOnlySorts) {
  auto t = normalize_tempered(temp({{kInt, 5, 1}, {kInt, 1, -1}, {kInt, 3, -1}}));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->pieces.size(), 3u);
  EXPECT_EQ(t->pieces[0].a, 1);
  EXPECT_EQ(t->pieces[2].a, 5);
}

TEST(Tempered, NegativeSizeIsInternal) {
  EXPECT_THROW(normalize_tempered(temp({{kInt, -1, 1}})), InternalError);
}

TEST(Tempered, RankAndConditions) {
  // π(0^+,1^+,2^+) of Sp_8: phi has dimension 9.
  EXPECT_EQ(tempered_rank(temp({{kInt, 1, 1}, {kInt, 3, 1}, {kInt, 5, 1}})), 4);
  EXPECT_THROW(tempered_rank(temp({{kInt, 1, 1}, {kInt, 3, -1}, {kInt, 5, 1}})), DomainError);  // sign product
  EXPECT_THROW(tempered_rank(temp({{kInt, 2, 1}})), DomainError);                                 // bad parity
  EXPECT_THROW(tempered_rank(temp({{kInt, 3, 1}, {kInt, 3, -1}, {kInt, 1, -1}})), DomainError);   // unequal signs
  EXPECT_THROW(tempered_rank(temp({{kInt, 1, 1}, {kInt, 3, 1}})), DomainError);                   // dimension parity
}

TEST(StandardModule, SegmentAndTempered) {
  std::vector<Segment> segs{seg("0", "-2")};
  auto m = make_standard_module(segs, temp({{kInt, 3, 1}}));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->segments().size(), 1u);
  EXPECT_EQ(m->rank(), 4);
}

TEST(StandardModule, UnitDropped) {
  std::vector<Segment> segs{seg("-1", "0")};
  auto m = make_standard_module(segs, temp({{kInt, 3, 1}}));
  ASSERT_TRUE(m);
  EXPECT_TRUE(m->segments().empty());
  EXPECT_EQ(m->rank(), 1);
}

TEST(StandardModule, ZeroAnnihilates) {
  std::vector<Segment> segs{seg("-3/2", "1/2", kHalfLabel)};
  EXPECT_FALSE(make_standard_module(segs, temp({}, GroupType::SOodd)));
}

TEST(StandardModule, NonNegativeExponentSumRejected) {
  std::vector<Segment> segs{seg("1", "-1")};
  try {
    make_standard_module(segs, temp({{kInt, 1, 1}}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.clause(), "not-a-standard-module");
  }
}

TEST(StandardModule, SegmentsSortedCanonically) {
  std::vector<Segment> a{seg("0", "-2"), seg("-1", "-3")};
  std::vector<Segment> b{seg("-1", "-3"), seg("0", "-2")};
  auto ma = make_standard_module(a, temp({{kInt, 3, 1}}));
  auto mb = make_standard_module(b, temp({{kInt, 3, 1}}));
  ASSERT_TRUE(ma && mb);
  EXPECT_EQ(*ma, *mb);
  EXPECT_EQ(ma->segments().front().x, HalfInt(-1));
}

TEST(Grothendieck, Combinations) {
  std::vector<Segment> segs{seg("0", "-2")};
  const auto A = *make_standard_module(segs, temp({{kInt, 3, 1}}));
  const auto B = *make_standard_module({}, temp({{kInt, 1, 1}, {kInt, 3, 1}, {kInt, 5, 1}}));

  GrothendieckElement e(GroupType::Sp, 4);
  e.add(1, A);
  e.add(-1, A);
  EXPECT_TRUE(e.empty());

  e.add(1, A);
  e.add(1, B);
  EXPECT_EQ(e.size(), 2u);

  GrothendieckElement f(GroupType::Sp, 4);
  f.add(2, A);
  f.add(-1, A);
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(f.coefficient(A), 1);
  EXPECT_EQ(f.coefficient(B), 0);
}

TEST(Grothendieck, RankMismatch) {
  const auto A = *make_standard_module({}, temp({{kInt, 3, 1}}));
  GrothendieckElement e(GroupType::Sp, 4);
  EXPECT_THROW(e.add(1, A), DomainError);
  GrothendieckElement other(GroupType::SOodd, 1);
  GrothendieckElement sp(GroupType::Sp, 1);
  EXPECT_THROW(sp.add(1, other), DomainError);
}

TEST(Grothendieck, CombineList) {
  const auto A = *make_standard_module({}, temp({{kInt, 3, 1}}));
  GrothendieckElement e(GroupType::Sp, 1);
  e.add(1, A);
  std::vector<std::pair<std::int64_t, GrothendieckElement>> list{{2, e}, {-2, e}};
  EXPECT_TRUE(gr_combine(list).empty());
  list.pop_back();
  EXPECT_EQ(gr_combine(list).coefficient(A), 2);
}

TEST(Group, ParameterDimension) {
  EXPECT_EQ(parameter_dimension(GroupType::Sp, 4), 9);
  EXPECT_EQ(parameter_dimension(GroupType::SOodd, 2), 4);
}
