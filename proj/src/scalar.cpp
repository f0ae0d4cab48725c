#include "paracontact/scalar.hpp"

#include <charconv>
#include <regex>

#include "paracontact/errors.hpp"

namespace paracontact {

namespace mp = boost::multiprecision;

std::optional<Rational> scalar_traits<Rational>::sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  mp::mpz_int num = mp::numerator(x);
  mp::mpz_int den = mp::denominator(x);
  mp::mpz_int rn = mp::sqrt(num);
  mp::mpz_int rd = mp::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

Rational scalar_traits<Rational>::from_string(const std::string& text) {
  static const std::regex fraction(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
  static const std::regex decimal(R"(\s*([+-]?)(\d*)\.?(\d*)(?:[eE]([+-]?\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    mp::mpz_int num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
    mp::mpz_int den(1);
    if (m[2].matched) den = mp::mpz_int(m[2].str());
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (std::regex_match(text, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    std::string digits = m[2].str() + m[3].str();
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) exponent += std::stol(m[4].str());
    Rational value{mp::mpz_int(digits)};
    Rational ten(10);
    for (long e = 0; e < std::labs(exponent); ++e) value = exponent > 0 ? value * ten : value / ten;
    return m[1].str() == "-" ? Rational(-value) : value;
  }
  throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
}

std::string scalar_traits<double>::to_string(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double scalar_traits<double>::from_string(const std::string& text) {
  // Accept "p/q" as well as ordinary decimal notation.
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      double den = std::stod(text.substr(slash + 1));
      if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
      return std::stod(text.substr(0, slash)) / den;
    }
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "not a number: '" + text + "'");
  }
}

}  // namespace paracontact
