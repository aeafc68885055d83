#include "linepat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace linepat {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad rational: '" + std::string(whole) +
                                  "'");
    }
  }
  BigInt value{std::string(text)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  }
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  if (den < 0) {  // the two-argument constructor requires a positive one
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) { return value.str(); }

BigInt floor_to_int(const Rational& value) {
  BigInt num = numerator(value);
  BigInt den = denominator(value);  // > 0 in canonical form
  BigInt q = num / den;
  if (num % den != 0 && num < 0) {
    --q;
  }
  return q;
}

BigInt ceil_to_int(const Rational& value) { return -floor_to_int(-value); }

std::string to_decimal_string(const Rational& value, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) {
    scale *= 10;
  }
  Rational magnitude = value < 0 ? Rational(-value) : value;
  // round half away from zero
  BigInt units = floor_to_int(magnitude * scale + Rational(1, 2));
  BigInt whole = units / scale;
  BigInt frac = units % scale;
  std::string out;
  if (value < 0 && units != 0) {
    out += '-';
  }
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += '.';
    out += std::string(static_cast<size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace linepat
