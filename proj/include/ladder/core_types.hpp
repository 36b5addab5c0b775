#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ladder/half_int.hpp"

namespace ladder {

enum class Parity { Integral, HalfIntegral };

/// A formal self-dual cuspidal representation of some GL_d.
///
/// Only the block size and the parity class of its good exponents matter;
/// two labels are the same label exactly when their ids agree.
struct CuspidalLabel {
  std::string id;
  int d = 1;
  Parity parity = Parity::Integral;

  bool admits(HalfInt x) const { return x.is_integer() == (parity == Parity::Integral); }

  friend auto operator<=>(const CuspidalLabel&, const CuspidalLabel&) = default;
};

/// SOodd is SO_{2n+1}, Sp is Sp_{2n}.
enum class GroupType { SOodd, Sp };

const char* to_string(GroupType g);
const char* to_string(Parity p);

/// Dimension of the dual parameter space of a rank-n group.
std::int64_t parameter_dimension(GroupType g, std::int64_t rank);

/// Segment [x, y]_rho. Degenerate inputs with y = x+1 or y > x+1 are allowed and
/// are resolved by normalize_steinberg.
struct Segment {
  CuspidalLabel rho;
  HalfInt x;
  HalfInt y;

  /// Number of cuspidal twists, x - y + 1 (may be <= 0 for degenerate inputs).
  std::int64_t length() const { return (x - y).twice() / 2 + 1; }

  /// Canonical order: x+y ascending, then x ascending, then label.
  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b);
  friend bool operator==(const Segment& a, const Segment& b) = default;
};

/// Throws DomainError("invalid-segment") unless x - y is integral and both
/// exponents lie in the parity class of rho.
void check_segment(const Segment& seg);

struct SteinbergFactor {
  enum class Kind { Proper, Unit, Zero };
  Kind kind = Kind::Zero;
  /// Present only for Proper.
  std::optional<Segment> segment;

  bool is_proper() const { return kind == Kind::Proper; }
};

SteinbergFactor normalize_steinberg(const Segment& seg);

/// One summand rho ⊠ S_a of a tempered parameter, with its sign.
struct TemperedPiece {
  CuspidalLabel rho;
  std::int64_t a = 1;
  int sign = 1;

  /// Exponent (a-1)/2 as used in the π(x^ε, ...) notation.
  HalfInt exponent() const { return HalfInt::from_twice(a - 1); }

  friend auto operator<=>(const TemperedPiece&, const TemperedPiece&) = default;
};

/// Good-parity tempered parameter (φ, ε).
struct TemperedParam {
  GroupType group = GroupType::Sp;
  std::vector<TemperedPiece> pieces;

  friend auto operator<=>(const TemperedParam&, const TemperedParam&) = default;
};

/// Applies the S_0 convention: nullopt when some S_0 carries sign -1, otherwise
/// drops every S_0. The result is sorted. Throws InternalError on a < 0.
std::optional<TemperedParam> normalize_tempered(const TemperedParam& t);

/// Checks good parity, equal signs on equal pieces, the sign product and the
/// dimension parity of an S_0-free parameter; returns the group rank.
std::int64_t tempered_rank(const TemperedParam& t);

/// A standard module Δ_1 × ... × Δ_r ⋊ π(φ, ε) in canonical form.
class StandardModule {
 public:
  /// Normalizes each segment and the tempered part, sorts, and checks that every
  /// retained segment has x + y < 0. Returns nullopt for the zero representation.
  static std::optional<StandardModule> make(std::span<const Segment> segments, const TemperedParam& tempered);

  GroupType group() const { return tempered_.group; }
  const std::vector<Segment>& segments() const { return segments_; }
  const TemperedParam& tempered() const { return tempered_; }
  std::int64_t rank() const { return rank_; }

  friend auto operator<=>(const StandardModule& a, const StandardModule& b) {
    if (auto c = a.segments_ <=> b.segments_; c != 0) return c;
    return a.tempered_ <=> b.tempered_;
  }
  friend bool operator==(const StandardModule& a, const StandardModule& b) {
    return a.segments_ == b.segments_ && a.tempered_ == b.tempered_;
  }

 private:
  StandardModule() = default;

  std::vector<Segment> segments_;
  TemperedParam tempered_;
  std::int64_t rank_ = 0;
};

inline std::optional<StandardModule> make_standard_module(std::span<const Segment> segments,
                                                          const TemperedParam& tempered) {
  return StandardModule::make(segments, tempered);
}

/// Integer combination of standard modules of a fixed group and rank.
class GrothendieckElement {
 public:
  GrothendieckElement(GroupType group, std::int64_t rank) : group_(group), rank_(rank) {}

  GroupType group() const { return group_; }
  std::int64_t rank() const { return rank_; }

  void add(std::int64_t coefficient, const StandardModule& m);
  void add(std::int64_t coefficient, const GrothendieckElement& other);

  std::int64_t coefficient(const StandardModule& m) const;
  const std::map<StandardModule, std::int64_t>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const GrothendieckElement&, const GrothendieckElement&) = default;

 private:
  GroupType group_;
  std::int64_t rank_;
  std::map<StandardModule, std::int64_t> terms_;
};

/// Σ c_i · e_i; all operands must share group and rank, and the list must be nonempty.
GrothendieckElement gr_combine(std::span<const std::pair<std::int64_t, GrothendieckElement>> elems);

}  // namespace ladder
