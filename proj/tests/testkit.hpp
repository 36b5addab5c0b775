#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ladder/json_io.hpp"
#include "ladder/ladder_datum.hpp"

namespace ladder::testkit {

/// Parsed contents of tests/golden/<name>.
Json load_golden(const std::string& name);

/// Reads a module from {"segments", "tempered"}; fails the caller's check when it is zero.
StandardModule module_from(const Json& j, const LadderDatum& d);

/// Distinct valid canonical data (blocks sorted by id), sampled with std::mt19937.
/// Groups, parities, label sizes and block counts are all mixed.
std::vector<LadderDatum> corpus(std::uint32_t seed = 20240527, std::size_t count = 240);

/// Every valid canonical datum with t <= max_t on a single trivial label.
std::vector<LadderDatum> exhaustive_single_label(int max_t, int lo_twice, int hi_twice);

struct ShiftCheck {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> disagreements;
};

/// Compares the raw formula of D_x(d) with the exponent-shift image of the raw
/// formula of d, for every nonzero derivative whose σ sets coincide.
void shift_compatibility(const LadderDatum& d, ShiftCheck& out);

/// Cuspidal support of a GL product as a sorted list of (label, exponent).
std::vector<std::pair<std::string, HalfInt>> gl_support(const std::vector<Segment>& gl_part);

}  // namespace ladder::testkit
