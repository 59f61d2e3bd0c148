#include "mspace/rational.hpp"

#include "mspace/error.hpp"

#include <charconv>

namespace mspace {

namespace {

CheckedInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::uint64_t magnitude = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), magnitude);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::parse_error,
                "not a rational: \"" + std::string(whole) + "\"");
  }
  CheckedInt value(magnitude);
  return negative ? CheckedInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  CheckedInt num = parse_integer(text.substr(0, slash), text);
  CheckedInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
      throw Error(Errc::parse_error,
                  "zero denominator: \"" + std::string(text) + "\"");
    }
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  std::string out = value.numerator().str();
  if (value.denominator() != 1) {
    out += '/';
    out += value.denominator().str();
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

CheckedInt ceil(const Rational& value) {
  CheckedInt q = value.numerator() / value.denominator();
  // Integer division truncates toward zero.
  if (q * value.denominator() < value.numerator()) q += 1;
  return q;
}

}  // namespace mspace
