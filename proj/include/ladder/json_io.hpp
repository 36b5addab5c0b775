#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladder/det_formula.hpp"
#include "ladder/ladder_graph.hpp"
#include "ladder/support.hpp"

namespace ladder {

using Json = nlohmann::ordered_json;

/// Labels by id, used to resolve "rho": "<id>" references.
using LabelTable = std::map<std::string, CuspidalLabel>;

HalfInt half_from_json(const Json& j);
Json to_json(HalfInt h);

Json to_json(const CuspidalLabel& rho);
CuspidalLabel label_from_json(const Json& j);

/// Accepts the general {"group", "blocks": [...]} form and the single-label
/// shorthand {"group", "X", "l", "eta"}. The shorthand label is id "1", d = 1,
/// integral for Sp and half-integral for SOodd unless "parity" is given.
/// Structure only; call validate_datum for the ladder conditions.
LadderDatum datum_from_json(const Json& j);
Json to_json(const LadderDatum& d);

LabelTable labels_of(const LadderDatum& d);

Json to_json(const Segment& s);
Segment segment_from_json(const Json& j, const LabelTable& labels);
Json to_json(const TemperedParam& t);
TemperedParam tempered_from_json(const Json& j, GroupType group, const LabelTable& labels);
Json to_json(const StandardModule& m);
/// nullopt when the module is zero.
std::optional<StandardModule> standard_module_from_json(const Json& j, GroupType group, const LabelTable& labels);

Json to_json(const GrothendieckElement& e, const LabelTable& labels);
Json to_json(const SupportMultiset& s);
Json to_json(const LadderGraph& g);
Json jacquet_to_json(const std::vector<JacquetTerm>& terms);
Json sigma_table_to_json(const LadderDatum& d);

GLLadder gl_ladder_from_json(const Json& j);
Json to_json(const GLFormula& f);

/// Wraps nlohmann parse errors and type errors as ParseError.
Json parse_json(const std::string& text);

}  // namespace ladder
