#include "holedim/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace holedim {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) { return BigInt(std::string(s)); }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto bad = [&] {
    return std::invalid_argument("cannot parse '" + std::string(text) +
                                 "' as an exact rational (use p/q or a plain decimal)");
  };

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    const BigInt d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(parse_integer(num), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw bad();
    }
    const BigInt w = whole.empty() ? BigInt(0) : parse_integer(whole);
    const BigInt f = frac.empty() ? BigInt(0) : parse_integer(frac);
    const BigInt scale = big_pow(10, static_cast<unsigned>(frac.size()));
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) throw bad();
    value = Rational(parse_integer(s));
  }
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& x, unsigned places) {
  const bool negative = x < 0;
  const Rational mag = negative ? Rational(-x) : x;
  const BigInt scale = big_pow(10, places);
  // round half away from zero
  const BigInt scaled = floor_of(mag * scale + Rational(1, 2));
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  if (negative && scaled != 0) out.insert(0, "-");
  return out;
}

BigInt floor_of(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

BigInt ceil_of(const Rational& x) { return -floor_of(Rational(-x)); }

BigInt big_pow(unsigned base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > BigInt(UINT64_MAX)) throw std::overflow_error("value does not fit in 64 bits: " + x.str());
  return x.convert_to<std::uint64_t>();
}

}  // namespace holedim
