#include "payflow/amount.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace payflow {

Amount Amount::parse(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("invalid amount: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();

  std::int64_t whole = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    whole = whole * 10 + (text[pos] - '0');
    ++pos;
  }
  std::int64_t frac = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    int digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (++digits > 3) fail();  // finer than milli-units cannot be exact
      frac = frac * 10 + (text[pos] - '0');
      ++pos;
    }
    if (digits == 0) fail();
    while (digits++ < 3) frac *= 10;
  }
  if (pos != text.size()) fail();

  const std::int64_t milli = whole * 1000 + frac;
  return Amount::milli(negative ? -milli : milli);
}

std::string Amount::to_string() const {
  std::int64_t m = milli_;
  std::string sign;
  if (m < 0) {
    sign = "-";
    m = -m;
  }
  std::string out = sign + std::to_string(m / 1000);
  std::int64_t frac = m % 1000;
  if (frac != 0) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), ".%03lld", static_cast<long long>(frac));
    std::string f(buf);
    while (f.back() == '0') f.pop_back();
    out += f;
  }
  return out;
}

}  // namespace payflow
