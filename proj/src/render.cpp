#include "ladder/render.hpp"

#include <algorithm>
#include <sstream>

namespace ladder {

namespace {

std::string exponent(HalfInt e) {
  if (e.is_integer() && e >= HalfInt(0)) return e.str();
  return "(" + e.str() + ")";
}

std::string tag(const CuspidalLabel& rho) { return rho.id == "1" ? "" : "@" + rho.id; }

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

std::string pad(const std::string& s, std::size_t width) {
  // Column widths count code points, not bytes.
  std::size_t len = 0;
  for (unsigned char ch : s) len += (ch & 0xC0) != 0x80;
  return std::string(width > len ? width - len : 0, ' ') + s;
}

}  // namespace

std::string render(const Segment& s) {
  if (s.x == s.y) return "|·|^" + exponent(s.x) + tag(s.rho);
  return "Δ[" + s.x.str() + "," + s.y.str() + "]" + tag(s.rho);
}

std::string render(const TemperedParam& t) {
  if (t.pieces.empty()) return "1";
  std::string out = "π(";
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    const auto& p = t.pieces[i];
    if (i) out += ",";
    out += exponent(p.exponent()) + "^" + sign_char(p.sign) + tag(p.rho);
  }
  return out + ")";
}

std::string render(const StandardModule& m) {
  std::string out;
  for (const auto& s : m.segments()) out += (out.empty() ? "" : " × ") + render(s);
  if (out.empty()) return render(m.tempered());
  return out + " ⋊ " + render(m.tempered());
}

std::string render_langlands(const StandardModule& m) {
  if (m.segments().empty()) return render(m.tempered());
  std::string out = "L(";
  for (std::size_t i = 0; i < m.segments().size(); ++i) out += (i ? ", " : "") + render(m.segments()[i]);
  return out + "; " + render(m.tempered()) + ")";
}

std::string render(const LadderDatum& d) {
  std::string out;
  for (const auto& b : d.blocks) {
    if (!out.empty()) out += "; ";
    out += "({";
    for (std::size_t i = 0; i < b.X.size(); ++i) out += (i ? "," : "") + b.X[i].str();
    out += "}, " + std::to_string(b.l) + ", " + sign_char(b.eta) + "1)" + tag(b.rho);
  }
  return out.empty() ? "()" : out;
}

std::string render(const GrothendieckElement& e) {
  if (e.empty()) return "0\n";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    out += c > 0 ? "+" : "-";
    const auto a = c > 0 ? c : -c;
    if (a != 1) out += std::to_string(a);
    out += " [" + render(m) + "]\n";
  }
  return out;
}

std::string render(const SupportMultiset& s) {
  std::string out;
  for (const auto& [id, xs] : s.exponents) {
    out += "exponents" + (id == "1" ? std::string() : "@" + id) + ": {";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].str();
    out += "}\n";
  }
  return out + "core: " + render(s.core) + "\n";
}

std::string render(const std::vector<JacquetTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (t.multiplicity != 1) out += std::to_string(t.multiplicity) + " ";
    std::string gl;
    for (const auto& s : t.gl_part) gl += (gl.empty() ? "" : ", ") + render(s);
    out += "[" + (gl.empty() ? std::string("1") : "L(" + gl + ")") + "] ⊗ [" + render(t.datum_part) + "]";
    if (!t.y.empty()) {
      out += "  y = (";
      for (std::size_t i = 0; i < t.y.size(); ++i) out += (i ? "," : "") + t.y[i].str();
      out += ")";
    }
    out += "\n";
  }
  return out;
}

std::string render(const GLFormula& f) {
  if (f.empty()) return "0\n";
  std::string out;
  for (const auto& [product, c] : f) {
    out += c > 0 ? "+" : "-";
    const auto a = c > 0 ? c : -c;
    if (a != 1) out += std::to_string(a);
    std::string text;
    for (const auto& s : product) text += (text.empty() ? "" : " × ") + render(s);
    out += " [" + (text.empty() ? std::string("1") : text) + "]\n";
  }
  return out;
}

std::string render_sigma(const SigmaElement& s) {
  std::string out;
  for (std::size_t b = 0; b < s.perms.size(); ++b) {
    if (b) out += "; ";
    out += "(";
    for (std::size_t i = 0; i < s.perms[b].size(); ++i) out += (i ? " " : "") + std::to_string(s.perms[b][i]);
    out += ")";
  }
  return out;
}

std::string render_sigma_table(const LadderDatum& d) {
  std::string out;
  for (const auto& s : enumerate_sigma(d)) {
    std::string row;
    for (const auto& m : assemble_I_sigma(d, s)) row += (row.empty() ? "" : " ⊕ ") + render(m);
    out += render_sigma(s) + " | " + (s.sign() > 0 ? "+1" : "-1") + " | " + (row.empty() ? "0" : row) + "\n";
  }
  return out;
}

std::string render_ascii(const LadderGraph& g) {
  if (g.vertices.empty()) return "(empty graph)\n";
  HalfInt lo = g.vertices.begin()->first.x, hi = lo;
  std::int64_t ytop = g.vertices.begin()->first.y, ybot = ytop;
  for (const auto& [v, f] : g.vertices) {
    lo = std::min(lo, v.x);
    hi = std::max(hi, v.x);
    ytop = std::max(ytop, v.y);
    ybot = std::min(ybot, v.y);
  }
  std::size_t width = 2;
  for (HalfInt x = lo; x <= hi; x += HalfInt(1)) width = std::max(width, x.str().size() + 1);
  const std::size_t ywidth = std::max(std::to_string(ytop).size(), std::to_string(ybot).size()) + 2;

  std::ostringstream os;
  os << std::string(ywidth + 1, ' ');
  for (HalfInt x = lo; x <= hi; x += HalfInt(1)) os << pad(x.str(), width);
  os << "\n";
  for (std::int64_t y = ytop; y >= ybot; --y) {
    os << pad("y=" + std::to_string(y), ywidth) << " ";
    for (HalfInt x = lo; x <= hi; x += HalfInt(1)) {
      auto it = g.vertices.find({x, y});
      std::string cell = it == g.vertices.end() ? "." : it->second == 0 ? "o" : sign_char(it->second);
      os << pad(cell, width);
    }
    os << "\n";
  }
  return os.str();
}

std::string render_dot(const LadderGraph& g) {
  auto name = [](const GraphPoint& v) { return "\"(" + v.x.str() + "," + std::to_string(v.y) + ")\""; };
  std::ostringstream os;
  os << "digraph ladder {\n  node [shape=circle];\n";
  for (const auto& [v, f] : g.vertices) {
    os << "  " << name(v) << " [label=\"" << (f == 0 ? "o" : sign_char(f)) << "\""
       << (f == 0 ? ", style=dashed" : "") << "];\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << name(u) << " -> " << name(v) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ladder
