#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace ladder {

/// An exact element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t whole) : twice_(2 * whole) {}

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  /// Accepts "3/2", "-1/2", "2", "-1", "1.5", "-0.5".
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Integer part, valid only when is_integer().
  constexpr std::int64_t whole() const { return twice_ / 2; }

  std::string str() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator+(HalfInt a, std::int64_t k) { return from_twice(a.twice_ + 2 * k); }
  friend constexpr HalfInt operator-(HalfInt a, std::int64_t k) { return from_twice(a.twice_ - 2 * k); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  std::int64_t twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);
inline constexpr HalfInt kMinusHalf = HalfInt::from_twice(-1);

}  // namespace ladder

template <>
struct std::hash<ladder::HalfInt> {
  std::size_t operator()(ladder::HalfInt h) const noexcept { return std::hash<std::int64_t>{}(h.twice()); }
};
