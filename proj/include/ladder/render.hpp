#pragma once

#include <string>
#include <vector>

#include "ladder/det_formula.hpp"
#include "ladder/ladder_graph.hpp"
#include "ladder/support.hpp"

namespace ladder {

std::string render(const Segment& s);
std::string render(const TemperedParam& t);
/// Δ[x,y] × ... ⋊ π(...), or just the tempered part.
std::string render(const StandardModule& m);
/// L(Δ[x,y], ...; π(...)) in the canonical segment order.
std::string render_langlands(const StandardModule& m);
/// ({x_1,...,x_t}, l, ±1) per block; blocks joined by "; ".
std::string render(const LadderDatum& d);
/// One "±c [module]" line per term, or "0".
std::string render(const GrothendieckElement& e);
std::string render(const SupportMultiset& s);
std::string render(const std::vector<JacquetTerm>& terms);
std::string render(const GLFormula& f);
std::string render_sigma(const SigmaElement& s);

/// σ, sgn(σ), I_σ(L) rows separated by " | ".
std::string render_sigma_table(const LadderDatum& d);

/// Rows top to bottom; "+", "-" colored, "o" uncolored, "." absent.
std::string render_ascii(const LadderGraph& g);
/// Edges u -> v for u ≺ v.
std::string render_dot(const LadderGraph& g);

}  // namespace ladder
