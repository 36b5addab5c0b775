#include "ladder/json_io.hpp"

#include "ladder/errors.hpp"
#include "ladder/render.hpp"

namespace ladder {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

GroupType group_from_json(const Json& j) {
  if (j == "Sp") return GroupType::Sp;
  if (j == "SOodd") return GroupType::SOodd;
  throw ParseError("group must be \"Sp\" or \"SOodd\"");
}

Json labels_json(const LabelTable& labels) {
  Json out = Json::array();
  for (const auto& [id, rho] : labels) out.push_back(to_json(rho));
  return out;
}

const CuspidalLabel& resolve(const Json& j, const LabelTable& labels) {
  if (!j.is_string()) throw ParseError("label reference must be a string id");
  auto it = labels.find(j.get<std::string>());
  if (it == labels.end()) throw ParseError("unknown label '" + j.get<std::string>() + "'");
  return it->second;
}

Json segments_json(const std::vector<Segment>& segs) {
  Json out = Json::array();
  for (const auto& s : segs) out.push_back(to_json(s));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

HalfInt half_from_json(const Json& j) {
  if (j.is_string()) return HalfInt::parse(j.get<std::string>());
  if (j.is_number_integer()) return HalfInt(j.get<std::int64_t>());
  if (j.is_number_float()) {
    const double v = j.get<double>() * 2;
    if (v != static_cast<double>(static_cast<std::int64_t>(v))) throw ParseError("not a half-integer: " + j.dump());
    return HalfInt::from_twice(static_cast<std::int64_t>(v));
  }
  throw ParseError("expected a half-integer, got " + j.dump());
}

Json to_json(HalfInt h) { return h.str(); }

Json to_json(const CuspidalLabel& rho) {
  return Json{{"id", rho.id}, {"d", rho.d}, {"parity", to_string(rho.parity)}};
}

CuspidalLabel label_from_json(const Json& j) {
  CuspidalLabel rho;
  const Json& id = field(j, "id");
  if (!id.is_string()) throw ParseError("label id must be a string");
  rho.id = id.get<std::string>();
  rho.d = static_cast<int>(j.contains("d") ? int_field(j, "d") : 1);
  const Json& p = field(j, "parity");
  if (p == "integral") {
    rho.parity = Parity::Integral;
  } else if (p == "half-integral") {
    rho.parity = Parity::HalfIntegral;
  } else {
    throw ParseError("parity must be \"integral\" or \"half-integral\"");
  }
  return rho;
}

LadderDatum datum_from_json(const Json& j) {
  try {
    LadderDatum d;
    d.group = group_from_json(field(j, "group"));
    auto read_block = [](const Json& bj, CuspidalLabel rho) {
      LadderBlock b;
      b.rho = std::move(rho);
      const Json& xs = field(bj, "X");
      if (!xs.is_array()) throw ParseError("X must be an array");
      for (const auto& x : xs) b.X.push_back(half_from_json(x));
      b.l = static_cast<int>(int_field(bj, "l"));
      b.eta = static_cast<int>(int_field(bj, "eta"));
      return b;
    };
    if (!j.contains("blocks")) {
      CuspidalLabel rho{"1", 1, d.group == GroupType::Sp ? Parity::Integral : Parity::HalfIntegral};
      if (j.contains("parity")) rho = label_from_json(Json{{"id", "1"}, {"d", 1}, {"parity", j["parity"]}});
      d.blocks.push_back(read_block(j, rho));
      return d;
    }
    const Json& blocks = field(j, "blocks");
    if (!blocks.is_array()) throw ParseError("blocks must be an array");
    for (const auto& bj : blocks) d.blocks.push_back(read_block(bj, label_from_json(field(bj, "rho"))));
    return d;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed datum: ") + e.what());
  }
}

Json to_json(const LadderDatum& d) {
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    Json xs = Json::array();
    for (HalfInt x : b.X) xs.push_back(to_json(x));
    blocks.push_back(Json{{"rho", to_json(b.rho)}, {"X", xs}, {"l", b.l}, {"eta", b.eta}});
  }
  return Json{{"group", to_string(d.group)}, {"blocks", blocks}};
}

LabelTable labels_of(const LadderDatum& d) {
  LabelTable out;
  for (const auto& b : d.blocks) out[b.rho.id] = b.rho;
  return out;
}

Json to_json(const Segment& s) { return Json{{"rho", s.rho.id}, {"x", to_json(s.x)}, {"y", to_json(s.y)}}; }

Segment segment_from_json(const Json& j, const LabelTable& labels) {
  return {resolve(field(j, "rho"), labels), half_from_json(field(j, "x")), half_from_json(field(j, "y"))};
}

Json to_json(const TemperedParam& t) {
  Json out = Json::array();
  for (const auto& p : t.pieces) out.push_back(Json{{"rho", p.rho.id}, {"a", p.a}, {"sign", p.sign}});
  return out;
}

TemperedParam tempered_from_json(const Json& j, GroupType group, const LabelTable& labels) {
  if (!j.is_array()) throw ParseError("tempered part must be an array");
  TemperedParam t{group, {}};
  for (const auto& pj : j) {
    t.pieces.push_back({resolve(field(pj, "rho"), labels), int_field(pj, "a"), static_cast<int>(int_field(pj, "sign"))});
  }
  return t;
}

Json to_json(const StandardModule& m) {
  return Json{{"segments", segments_json(m.segments())}, {"tempered", to_json(m.tempered())}};
}

std::optional<StandardModule> standard_module_from_json(const Json& j, GroupType group, const LabelTable& labels) {
  try {
    std::vector<Segment> segs;
    for (const auto& sj : field(j, "segments")) segs.push_back(segment_from_json(sj, labels));
    return StandardModule::make(segs, tempered_from_json(field(j, "tempered"), group, labels));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed standard module: ") + e.what());
  }
}

Json to_json(const GrothendieckElement& e, const LabelTable& labels) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) {
    terms.push_back(Json{{"coefficient", c}, {"standard_module", to_json(m)}, {"text", render(m)}});
  }
  return Json{{"group", to_string(e.group())}, {"rank", e.rank()}, {"labels", labels_json(labels)}, {"terms", terms}};
}

Json to_json(const SupportMultiset& s) {
  Json ex = Json::object();
  for (const auto& [id, xs] : s.exponents) {
    Json list = Json::array();
    for (HalfInt x : xs) list.push_back(to_json(x));
    ex[id] = list;
  }
  return Json{{"exponents", ex}, {"core", to_json(s.core)}};
}

Json to_json(const LadderGraph& g) {
  Json vs = Json::array();
  for (const auto& [v, f] : g.vertices) vs.push_back(Json{{"x", to_json(v.x)}, {"y", v.y}, {"color", f}});
  Json es = Json::array();
  for (const auto& [u, v] : g.edges()) {
    es.push_back(Json{{"from", Json{{"x", to_json(u.x)}, {"y", u.y}}}, {"to", Json{{"x", to_json(v.x)}, {"y", v.y}}}});
  }
  return Json{{"rho", to_json(g.rho)}, {"t", g.t},         {"l", g.l},         {"eta", g.eta},
              {"m", g.m()},          {"vertices", vs}, {"edges", es}};
}

Json jacquet_to_json(const std::vector<JacquetTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) {
    Json term{{"gl", segments_json(t.gl_part)}, {"datum", to_json(t.datum_part)}, {"multiplicity", t.multiplicity}};
    if (!t.y.empty()) {
      Json ys = Json::array();
      for (HalfInt y : t.y) ys.push_back(to_json(y));
      term["y"] = ys;
    }
    out.push_back(std::move(term));
  }
  return Json{{"terms", out}};
}

Json sigma_table_to_json(const LadderDatum& d) {
  Json rows = Json::array();
  for (const auto& s : enumerate_sigma(d)) {
    Json summands = Json::array();
    for (const auto& m : assemble_I_sigma(d, s)) summands.push_back(to_json(m));
    rows.push_back(Json{{"sigma", s.perms}, {"sign", s.sign()}, {"summands", summands}});
  }
  return Json{{"labels", labels_json(labels_of(d))}, {"rows", rows}};
}

GLLadder gl_ladder_from_json(const Json& j) {
  try {
    GLLadder g;
    const Json& segs = field(j, "segments");
    if (!segs.is_array()) throw ParseError("segments must be an array");
    for (const auto& s : segs) {
      if (s.is_array() && s.size() == 2) {
        g.segments.push_back({half_from_json(s[0]), half_from_json(s[1])});
      } else {
        g.segments.push_back({half_from_json(field(s, "x")), half_from_json(field(s, "y"))});
      }
    }
    if (j.contains("rho")) {
      g.rho = label_from_json(j["rho"]);
    } else {
      const bool integral = g.segments.empty() || g.segments.front().first.is_integer();
      g.rho = {"1", 1, integral ? Parity::Integral : Parity::HalfIntegral};
    }
    return g;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed GL ladder: ") + e.what());
  }
}

Json to_json(const GLFormula& f) {
  Json terms = Json::array();
  for (const auto& [product, c] : f) {
    std::string text;
    for (const auto& s : product) text += (text.empty() ? "" : " × ") + render(s);
    terms.push_back(Json{{"coefficient", c}, {"product", segments_json(product)}, {"text", text.empty() ? "1" : text}});
  }
  return Json{{"terms", terms}};
}

}  // namespace ladder
