#include "antidiag/rational.hpp"

#include "antidiag/error.hpp"

#include <cctype>
#include <string>

namespace antidiag {

std::string to_fraction_string(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorCode::ParseError, "bad fraction '" + std::string(whole) + "'");
  BigInt out = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::ParseError, "bad fraction '" + std::string(whole) + "'");
    }
    out = out * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-out) : out;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string to_decimal_string(const Rational& value, int decimals) {
  BigInt scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  const BigInt mag = negative ? BigInt(-num) : num;
  // round half away from zero
  BigInt scaled = (2 * mag * scale + den) / (2 * den);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string frac_str = frac.str();
  if (static_cast<int>(frac_str.size()) < decimals) {
    frac_str.insert(0, static_cast<std::size_t>(decimals) - frac_str.size(), '0');
  }
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (decimals > 0) out += "." + frac_str;
  return out;
}

}  // namespace antidiag
