#include "ladder/core_types.hpp"

#include <algorithm>

#include "ladder/errors.hpp"

namespace ladder {

const char* to_string(GroupType g) { return g == GroupType::Sp ? "Sp" : "SOodd"; }

const char* to_string(Parity p) { return p == Parity::Integral ? "integral" : "half-integral"; }

std::int64_t parameter_dimension(GroupType g, std::int64_t rank) {
  return g == GroupType::SOodd ? 2 * rank : 2 * rank + 1;
}

std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
  if (auto c = (a.x + a.y) <=> (b.x + b.y); c != 0) return c;
  if (auto c = a.x <=> b.x; c != 0) return c;
  if (auto c = a.y <=> b.y; c != 0) return c;
  return a.rho <=> b.rho;
}

void check_segment(const Segment& seg) {
  if (!seg.rho.admits(seg.x) || !seg.rho.admits(seg.y)) {
    throw DomainError("invalid-segment", "segment [" + seg.x.str() + "," + seg.y.str() +
                                             "] does not match the parity of label '" + seg.rho.id + "'");
  }
}

SteinbergFactor normalize_steinberg(const Segment& seg) {
  check_segment(seg);
  if (seg.x >= seg.y) return {SteinbergFactor::Kind::Proper, seg};
  if (seg.y == seg.x + 1) return {SteinbergFactor::Kind::Unit, std::nullopt};
  return {SteinbergFactor::Kind::Zero, std::nullopt};
}

std::optional<TemperedParam> normalize_tempered(const TemperedParam& t) {
  TemperedParam out{t.group, {}};
  for (const auto& p : t.pieces) {
    if (p.a < 0) throw InternalError("tempered piece with negative a = " + std::to_string(p.a));
    if (p.a == 0) {
      if (p.sign < 0) return std::nullopt;
      continue;
    }
    out.pieces.push_back(p);
  }
  std::sort(out.pieces.begin(), out.pieces.end());
  return out;
}

std::int64_t tempered_rank(const TemperedParam& t) {
  std::int64_t dim = 0;
  int product = 1;
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    const auto& p = t.pieces[i];
    if (p.a < 1) throw DomainError("invalid-tempered", "unnormalized piece S_" + std::to_string(p.a));
    if (p.sign != 1 && p.sign != -1) throw DomainError("invalid-tempered", "sign must be +1 or -1");
    if (!p.rho.admits(p.exponent())) {
      throw DomainError("invalid-tempered", "piece S_" + std::to_string(p.a) + " of label '" + p.rho.id +
                                                "' is not of good parity");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto& q = t.pieces[j];
      if (q.rho.id == p.rho.id && q.a == p.a && q.sign != p.sign) {
        throw DomainError("invalid-tempered", "equal pieces S_" + std::to_string(p.a) + " carry different signs");
      }
    }
    dim += p.rho.d * p.a;
    product *= p.sign;
  }
  if (product != 1) throw DomainError("invalid-tempered", "sign product is -1");
  std::int64_t base = t.group == GroupType::SOodd ? dim : dim - 1;
  if (base < 0 || base % 2 != 0) {
    throw DomainError("invalid-tempered",
                      "parameter dimension " + std::to_string(dim) + " does not fit group " + to_string(t.group));
  }
  return base / 2;
}

std::optional<StandardModule> StandardModule::make(std::span<const Segment> segments, const TemperedParam& tempered) {
  StandardModule m;
  std::int64_t rank = 0;
  for (const auto& seg : segments) {
    auto f = normalize_steinberg(seg);
    if (f.kind == SteinbergFactor::Kind::Zero) return std::nullopt;
    if (f.kind == SteinbergFactor::Kind::Unit) continue;
    if (seg.x + seg.y >= HalfInt(0)) {
      throw DomainError("not-a-standard-module",
                        "segment [" + seg.x.str() + "," + seg.y.str() + "] has nonnegative exponent");
    }
    rank += seg.rho.d * seg.length();
    m.segments_.push_back(seg);
  }
  auto t = normalize_tempered(tempered);
  if (!t) return std::nullopt;
  std::sort(m.segments_.begin(), m.segments_.end());
  m.tempered_ = std::move(*t);
  m.rank_ = rank + tempered_rank(m.tempered_);
  return m;
}

void GrothendieckElement::add(std::int64_t coefficient, const StandardModule& m) {
  if (m.group() != group_ || m.rank() != rank_) {
    throw DomainError("rank-mismatch", std::string("module of ") + to_string(m.group()) + " rank " +
                                           std::to_string(m.rank()) + " added to element of " + to_string(group_) +
                                           " rank " + std::to_string(rank_));
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void GrothendieckElement::add(std::int64_t coefficient, const GrothendieckElement& other) {
  if (other.group_ != group_ || other.rank_ != rank_) {
    throw DomainError("rank-mismatch", "combining elements of different groups or ranks");
  }
  for (const auto& [m, c] : other.terms_) add(coefficient * c, m);
}

std::int64_t GrothendieckElement::coefficient(const StandardModule& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

GrothendieckElement gr_combine(std::span<const std::pair<std::int64_t, GrothendieckElement>> elems) {
  if (elems.empty()) throw DomainError("rank-mismatch", "cannot infer the rank of an empty combination");
  GrothendieckElement out(elems.front().second.group(), elems.front().second.rank());
  for (const auto& [c, e] : elems) out.add(c, e);
  return out;
}

}  // namespace ladder
