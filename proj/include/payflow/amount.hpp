#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace payflow {

/// Exact monetary quantity stored as an integer count of milli-units
/// (1/1000 of a unit). All arithmetic is integral; there is no rounding.
class Amount {
 public:
  constexpr Amount() = default;

  static constexpr Amount milli(std::int64_t m) { return Amount(m); }
  static constexpr Amount units(std::int64_t u) { return Amount(u * 1000); }
  static constexpr Amount zero() { return Amount(0); }

  constexpr std::int64_t milli_value() const { return milli_; }
  constexpr bool is_zero() const { return milli_ == 0; }
  constexpr bool is_negative() const { return milli_ < 0; }
  constexpr bool is_positive() const { return milli_ > 0; }

  /// Value in units as a double; for statistics and display only.
  constexpr double to_double() const { return static_cast<double>(milli_) / 1000.0; }

  constexpr Amount operator-() const { return Amount(-milli_); }
  constexpr Amount& operator+=(Amount o) { milli_ += o.milli_; return *this; }
  constexpr Amount& operator-=(Amount o) { milli_ -= o.milli_; return *this; }

  friend constexpr Amount operator+(Amount a, Amount b) { return Amount(a.milli_ + b.milli_); }
  friend constexpr Amount operator-(Amount a, Amount b) { return Amount(a.milli_ - b.milli_); }
  friend constexpr bool operator==(Amount a, Amount b) { return a.milli_ == b.milli_; }
  friend constexpr bool operator!=(Amount a, Amount b) { return a.milli_ != b.milli_; }
  friend constexpr bool operator<(Amount a, Amount b) { return a.milli_ < b.milli_; }
  friend constexpr bool operator<=(Amount a, Amount b) { return a.milli_ <= b.milli_; }
  friend constexpr bool operator>(Amount a, Amount b) { return a.milli_ > b.milli_; }
  friend constexpr bool operator>=(Amount a, Amount b) { return a.milli_ >= b.milli_; }

  /// Parses a decimal string with up to three fractional digits, e.g.
  /// "4", "4.001", "-0.5". Throws std::invalid_argument on anything else.
  static Amount parse(std::string_view text);

  /// Decimal rendering with trailing fractional zeros trimmed: "4", "4.001".
  std::string to_string() const;

 private:
  constexpr explicit Amount(std::int64_t m) : milli_(m) {}
  std::int64_t milli_ = 0;
};

constexpr Amount min(Amount a, Amount b) { return a < b ? a : b; }
constexpr Amount max(Amount a, Amount b) { return a < b ? b : a; }

}  // namespace payflow
