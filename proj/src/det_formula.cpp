#include "ladder/det_formula.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "ladder/errors.hpp"
#include "ladder/support.hpp"

namespace ladder {

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int SigmaElement::sign() const {
  int s = 1;
  for (const auto& p : perms) s *= permutation_sign(p);
  return s;
}

namespace {

std::vector<std::vector<int>> block_sigmas(const LadderBlock& b) {
  const int t = b.t(), l = b.l, mid = t - 2 * l;
  auto admissible = [&](int value, int pos) {
    const HalfInt x = b.x(value);
    if (x <= HalfInt(-1) && pos > l) return false;
    if (x == kMinusHalf && b.eta == -1 && pos > l && pos <= t - l) return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  // Bitmask choice of the values at positions 1..l and l+1..t-l; both runs are
  // increasing, the last l positions take any order of the rest.
  for (std::uint32_t first = 0; first < (1u << t); ++first) {
    if (std::popcount(first) != l) continue;
    for (std::uint32_t middle = 0; middle < (1u << t); ++middle) {
      if ((middle & first) != 0 || std::popcount(middle) != mid) continue;
      std::vector<int> p, rest;
      for (int v = 1; v <= t; ++v) {
        if (first >> (v - 1) & 1) p.push_back(v);
      }
      for (int v = 1; v <= t; ++v) {
        if (middle >> (v - 1) & 1) p.push_back(v);
      }
      for (int v = 1; v <= t; ++v) {
        if (!((first | middle) >> (v - 1) & 1)) rest.push_back(v);
      }
      do {
        std::vector<int> q = p;
        q.insert(q.end(), rest.begin(), rest.end());
        bool ok = true;
        for (int pos = 1; ok && pos <= t; ++pos) ok = admissible(q[static_cast<std::size_t>(pos - 1)], pos);
        if (ok) out.push_back(std::move(q));
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SigmaElement> enumerate_sigma(const LadderDatum& d) {
  std::vector<SigmaElement> out{SigmaElement{}};
  for (const auto& b : d.blocks) {
    auto choices = block_sigmas(b);
    std::vector<SigmaElement> next;
    for (const auto& s : out) {
      for (const auto& p : choices) {
        SigmaElement e = s;
        e.perms.push_back(p);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

SigmaParts sigma_parts(const LadderDatum& d, const SigmaElement& s) {
  if (s.perms.size() != d.blocks.size()) throw DomainError("invalid-sigma", "one permutation per block expected");
  SigmaParts out;
  out.fixed.group = d.group;
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const auto& b = d.blocks[bi];
    const auto& p = s.perms[bi];
    const int t = b.t(), l = b.l;
    if (static_cast<int>(p.size()) != t) throw DomainError("invalid-sigma", "permutation size differs from t");
    auto xs = [&](int pos) { return b.x(p[static_cast<std::size_t>(pos - 1)]); };
    for (int j = 1; j <= l; ++j) {
      const int lo = p[static_cast<std::size_t>(j - 1)], hi = p[static_cast<std::size_t>(t - j)];
      if (lo < hi) {
        out.segments.push_back({b.rho, xs(j), -xs(t - j + 1)});
      } else {
        out.minus.push_back({b.rho, xs(j).twice() + 1, xs(t - j + 1).twice() + 1});
      }
    }
    for (int i = l + 1; i <= t - l; ++i) {
      const int sign = ((i - l - 1) % 2 == 0 ? 1 : -1) * b.eta;
      out.fixed.pieces.push_back({b.rho, xs(i).twice() + 1, sign});
    }
  }
  return out;
}

std::vector<StandardModule> realize(const SigmaParts& parts) {
  for (const auto& seg : parts.segments) {
    if (normalize_steinberg(seg).kind == SteinbergFactor::Kind::Zero) return {};
  }
  for (const auto& piece : parts.fixed.pieces) {
    if (piece.a < 0) throw InternalError("assembled S_a with a < 0");
  }
  for (const auto& pr : parts.minus) {
    if (pr.a1 < 0 || pr.a2 < 0) throw InternalError("assembled S_a with a < 0");
  }

  std::vector<StandardModule> out;
  const auto& minus = parts.minus;
  const std::size_t choices = std::size_t{1} << minus.size();
  for (std::size_t mask = 0; mask < choices; ++mask) {
    TemperedParam tp = parts.fixed;
    for (std::size_t k = 0; k < minus.size(); ++k) {
      const int delta = (mask >> (minus.size() - 1 - k)) & 1 ? -1 : 1;
      tp.pieces.push_back({minus[k].rho, minus[k].a1, delta});
      tp.pieces.push_back({minus[k].rho, minus[k].a2, delta});
    }
    if (auto m = StandardModule::make(parts.segments, tp)) out.push_back(std::move(*m));
  }
  return out;
}

std::vector<StandardModule> assemble_I_sigma(const LadderDatum& d, const SigmaElement& s) {
  return realize(sigma_parts(d, s));
}

GrothendieckElement determinantal_formula(const LadderDatum& d, bool projected) {
  const std::int64_t rank = validate_datum(d);
  GrothendieckElement sum(d.group, rank);
  for (const auto& s : enumerate_sigma(d)) {
    const int sign = s.sign();
    for (const auto& m : assemble_I_sigma(d, s)) sum.add(sign, m);
  }
  if (!projected) return sum;
  return project_ps(supp_ladder(d), sum);
}

void validate_gl_ladder(const GLLadder& g) {
  for (std::size_t i = 0; i < g.segments.size(); ++i) {
    const auto [x, y] = g.segments[i];
    if (!g.rho.admits(x) || !g.rho.admits(y)) {
      throw DomainError("invalid-ladder", "segment [" + x.str() + "," + y.str() + "] has the wrong parity");
    }
    if (y > x + 1) throw DomainError("invalid-ladder", "segment [" + x.str() + "," + y.str() + "] is zero");
    if (i > 0) {
      const auto [px, py] = g.segments[i - 1];
      if (!(px < x) || !(py < y)) throw DomainError("invalid-ladder", "x and y must be strictly increasing");
    }
  }
}

GLFormula gl_determinantal_formula(const GLLadder& g) {
  validate_gl_ladder(g);
  const std::size_t t = g.segments.size();
  std::vector<int> p(t);
  std::iota(p.begin(), p.end(), 1);
  GLFormula out;
  do {
    std::vector<Segment> product;
    bool zero = false;
    for (std::size_t i = 0; i < t && !zero; ++i) {
      Segment seg{g.rho, g.segments[i].first, g.segments[static_cast<std::size_t>(p[i] - 1)].second};
      auto f = normalize_steinberg(seg);
      if (f.kind == SteinbergFactor::Kind::Zero) zero = true;
      if (f.kind == SteinbergFactor::Kind::Proper) product.push_back(seg);
    }
    if (zero) continue;
    std::sort(product.begin(), product.end());
    auto& coef = out[product];
    coef += permutation_sign(p);
    if (coef == 0) out.erase(product);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace ladder
