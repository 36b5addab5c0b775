#include "ladder/ladder_datum.hpp"

#include <algorithm>
#include <set>

#include "ladder/errors.hpp"

namespace ladder {

const LadderBlock* LadderDatum::find(std::string_view rho_id) const {
  for (const auto& b : blocks) {
    if (b.rho.id == rho_id) return &b;
  }
  return nullptr;
}

void validate_block(const LadderBlock& b) {
  const std::string& id = b.rho.id;
  if (b.rho.d < 1) throw ValidationError("label-size", id, "d must be positive");
  if (b.eta != 1 && b.eta != -1) throw ValidationError("eta-value", id, "eta must be +1 or -1");
  const int t = b.t();
  for (HalfInt x : b.X) {
    if (!b.rho.admits(x)) {
      throw ValidationError("parity", id, "exponent " + x.str() + " is not " + to_string(b.rho.parity));
    }
  }
  for (int i = 1; i < t; ++i) {
    if (b.x(i) >= b.x(i + 1)) {
      throw ValidationError("ordering", id, "exponents must be strictly increasing");
    }
  }
  if (b.l < 0 || 2 * b.l > t) {
    throw ValidationError("l-range", id, "need 0 <= 2l <= t, got l = " + std::to_string(b.l) + ", t = " +
                                             std::to_string(t));
  }
  for (int j = 1; j <= b.l; ++j) {
    if (b.x(j) + b.x(t - j + 1) < HalfInt(0)) {
      throw ValidationError("pairing-positivity", id,
                            "x_" + std::to_string(j) + " + x_" + std::to_string(t - j + 1) + " < 0");
    }
  }
  for (int i = b.l + 1; i <= t - b.l; ++i) {
    if (b.x(i) < kMinusHalf) {
      throw ValidationError("middle-positivity", id, "x_" + std::to_string(i) + " = " + b.x(i).str() + " < -1/2");
    }
  }
  if (t == 0 || (2 * b.l < t && b.x(b.l + 1) == kMinusHalf)) {
    if (b.eta != 1) throw ValidationError("eta-forcing", id, "eta must be +1 here");
  } else if (2 * b.l == t && b.eta != -1) {
    throw ValidationError("eta-forcing", id, "eta must be -1 when 2l = t");
  }
}

std::int64_t datum_dimension(const LadderDatum& d) {
  std::int64_t total = 0;
  for (const auto& b : d.blocks) {
    std::int64_t s = 0;
    for (HalfInt x : b.X) s += x.twice();
    total += (s + b.t()) * b.rho.d;
  }
  return total;
}

std::int64_t validate_datum(const LadderDatum& d) {
  std::set<std::string> seen;
  for (const auto& b : d.blocks) {
    if (!seen.insert(b.rho.id).second) throw ValidationError("duplicate-label", b.rho.id, "label appears twice");
  }
  for (const auto& b : d.blocks) validate_block(b);
  int sign = 1;
  for (const auto& b : d.blocks) {
    const int t = b.t();
    if ((t / 2 + b.l) % 2 != 0) sign = -sign;
    if (t % 2 != 0) sign *= b.eta;
  }
  if (sign != 1) throw ValidationError("global-sign", "", "product of (-1)^(floor(t/2)+l) eta^t is -1");
  const std::int64_t dim = datum_dimension(d);
  const std::int64_t base = d.group == GroupType::SOodd ? dim : dim - 1;
  if (base < 0 || base % 2 != 0) {
    throw ValidationError("dimension", "",
                          "total dimension " + std::to_string(dim) + " does not fit group " + to_string(d.group));
  }
  return base / 2;
}

LadderBlock canonicalize_block(LadderBlock b) {
  for (int j = b.l; j >= 1; --j) {
    const int t = b.t();
    if (b.x(j) + b.x(t - j + 1) == HalfInt(-1)) {
      b.X.erase(b.X.begin() + (t - j));
      b.X.erase(b.X.begin() + (j - 1));
      --b.l;
    }
  }
  if (b.t() - 2 * b.l >= 1 && b.x(b.l + 1) == kMinusHalf) {
    b.X.erase(b.X.begin() + b.l);
    b.eta = -1;
  }
  if (b.t() == 0) {
    b.eta = 1;
    b.l = 0;
  }
  return b;
}

LadderDatum canonicalize(LadderDatum d) {
  std::vector<LadderBlock> blocks;
  for (auto& b : d.blocks) {
    auto c = canonicalize_block(std::move(b));
    if (c.t() > 0) blocks.push_back(std::move(c));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const LadderBlock& a, const LadderBlock& b) { return a.rho.id < b.rho.id; });
  d.blocks = std::move(blocks);
  return d;
}

LanglandsData langlands_data_of(const LadderDatum& d) {
  LanglandsData out;
  out.tempered.group = d.group;
  for (const auto& b : d.blocks) {
    const int t = b.t();
    for (int j = 1; j <= b.l; ++j) out.segments.push_back({b.rho, b.x(j), -b.x(t - j + 1)});
    for (int i = b.l + 1; i <= t - b.l; ++i) {
      const int sign = ((i - b.l - 1) % 2 == 0 ? 1 : -1) * b.eta;
      out.tempered.pieces.push_back({b.rho, b.x(i).twice() + 1, sign});
    }
  }
  return out;
}

StandardModule standard_module_of(const LadderDatum& d) {
  auto ld = langlands_data_of(d);
  auto m = StandardModule::make(ld.segments, ld.tempered);
  if (!m) throw InternalError("standard module of a ladder datum vanished");
  return *m;
}

std::int64_t block_weight(const LadderBlock& b) {
  std::int64_t w = 0;
  for (HalfInt x : b.X) w += x.twice() + 1;
  return w;
}

}  // namespace ladder
