#include "ladder/support.hpp"

#include <algorithm>

#include "ladder/errors.hpp"
#include "ladder/ladder_graph.hpp"

namespace ladder {

void SupportMultiset::add_pair(const std::string& rho_id, HalfInt x) {
  add(rho_id, x);
  add(rho_id, -x);
}

void SupportMultiset::add(const std::string& rho_id, HalfInt x) { exponents[rho_id].push_back(x); }

void SupportMultiset::finish() {
  for (auto& [id, xs] : exponents) std::sort(xs.begin(), xs.end());
}

SupportMultiset supp_ladder(const LadderDatum& d, std::vector<SupportStep>* trace) {
  SupportMultiset out;
  LadderDatum cur = canonicalize(d);
  for (;;) {
    std::optional<SupportStep> step;
    for (const auto& b : cur.blocks) {
      const LadderGraph g = build_graph(b);
      for (const auto& [v, f] : g.vertices) {
        if (f == 0 && g.is_minimal(v)) {
          step = SupportStep{b.rho.id, v.x};
          break;
        }
      }
      if (step) break;
    }
    if (!step) break;
    auto next = derivative(cur, step->rho_id, step->x);
    if (!next) throw InternalError("minimal uncolored vertex gave a zero derivative");
    out.add_pair(step->rho_id, step->x);
    if (trace) trace->push_back(*step);
    cur = std::move(*next);
  }
  out.core = std::move(cur);
  out.finish();
  return out;
}

SupportMultiset supp_discrete_series(const TemperedParam& t) {
  SupportMultiset out;
  out.core.group = t.group;
  std::map<std::string, std::pair<CuspidalLabel, std::map<HalfInt, int>>> by_label;
  for (const auto& p : t.pieces) {
    if (p.a < 1) throw InternalError("support of an unnormalized tempered parameter");
    auto& [rho, pieces] = by_label.try_emplace(p.rho.id, p.rho, std::map<HalfInt, int>{}).first->second;
    if (!pieces.emplace(p.exponent(), p.sign).second) {
      throw DomainError("unsupported-input", "piece S_" + std::to_string(p.a) + " of label '" + p.rho.id +
                                                 "' occurs more than once");
    }
  }
  for (auto& [id, entry] : by_label) {
    auto& [rho, pieces] = entry;
    for (bool fired = true; fired;) {
      fired = false;
      for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        const HalfInt x = it->first;
        const int sign = it->second;
        auto below = pieces.find(x - 1);
        if (below == pieces.end()) {
          if (x >= HalfInt(1) || (x == kHalf && sign == 1)) {
            pieces.erase(x);
            if (x >= HalfInt(1)) pieces.emplace(x - 1, sign);
            out.add_pair(id, x);
            fired = true;
          }
        } else if (below->second == sign) {
          pieces.erase(below);
          pieces.erase(x);
          out.add_pair(id, x);
          for (HalfInt z = x - 1; z >= -(x - 1); z -= HalfInt(1)) {
            out.add(id, z);
            out.add(id, z);
          }
          fired = true;
        }
        if (fired) break;
      }
    }
    if (pieces.empty()) continue;
    LadderBlock core{rho, {}, 0, pieces.begin()->second};
    for (const auto& [x, s] : pieces) core.X.push_back(x);
    out.core.blocks.push_back(std::move(core));
  }
  out.core = canonicalize(std::move(out.core));
  out.finish();
  return out;
}

SupportMultiset supp_standard_module(const StandardModule& s) {
  SupportMultiset out = supp_discrete_series(s.tempered());
  for (const auto& seg : s.segments()) {
    for (HalfInt z = seg.x; z >= seg.y; z -= HalfInt(1)) out.add_pair(seg.rho.id, z);
  }
  out.finish();
  return out;
}

GrothendieckElement project_ps(const SupportMultiset& target, const GrothendieckElement& e) {
  GrothendieckElement out(e.group(), e.rank());
  for (const auto& [m, c] : e.terms()) {
    if (supp_standard_module(m) == target) out.add(c, m);
  }
  return out;
}

}  // namespace ladder
