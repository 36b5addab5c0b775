#include "ladder/half_int.hpp"

#include <charconv>

#include "ladder/errors.hpp"

namespace ladder {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v > (std::int64_t{1} << 60) ||
      v < -(std::int64_t{1} << 60)) {
    throw ParseError("not a half-integer: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 1) return HalfInt(num);
    if (den == 2) return from_twice(num);
    throw ParseError("denominator must be 1 or 2: '" + std::string(text) + "'");
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    std::string_view ip = text.substr(0, dot);
    bool negative = !ip.empty() && ip.front() == '-';
    std::int64_t whole = parse_int(ip, text);
    if (frac == "0") return HalfInt(whole);
    if (frac == "5") return from_twice(2 * whole + (negative ? -1 : 1));
    throw ParseError("not a half-integer: '" + std::string(text) + "'");
  }
  return HalfInt(parse_int(text, text));
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace ladder
