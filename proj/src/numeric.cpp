#include "unitary/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "unitary/errors.hpp"

namespace unitary {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in \"" + text + "\"");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const DomainError*>(&e)) throw;
    throw DomainError("not a rational number: \"" + text + "\"");
  }
}

std::string to_decimal(const Rational& r, int digits) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const BigInt whole = num / den;
  BigInt frac = num % den;
  std::string out = sign + whole.str();
  if (digits <= 0) return out;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    frac *= 10;
    out += static_cast<char>('0' + static_cast<int>(frac / den));
    frac %= den;
  }
  return out;
}

BigInt binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 0; i < bottom; ++i) {
    num *= (top - i);
    den *= (i + 1);
  }
  return num / den;
}

}  // namespace unitary
