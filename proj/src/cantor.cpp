#include "holedim/cantor.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace holedim {

namespace {

void require_closed_unit(const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("expected a point of [0,1], got " + to_fraction_string(x));
}

bool is_cantor_digit(unsigned d, unsigned k) { return d == 0 || d == k - 1; }

// Walk of the expansion of x up to the first digit outside {0, k-1}.
struct CantorWalk {
  std::vector<unsigned> prefix;           // digits before the stop, all in {0, k-1}
  std::optional<unsigned> bad_digit;      // first digit outside {0, k-1}
  bool tail_zero_after_bad = false;       // remainder after the bad digit is 0
  std::size_t cycle_start = 0;            // valid when !bad_digit
};

CantorWalk walk(const Rational& x, unsigned k) {
  DigitStream stream(x, k);
  std::map<BigInt, std::size_t> seen;
  CantorWalk w;
  while (true) {
    const auto [it, inserted] = seen.emplace(stream.remainder(), w.prefix.size());
    if (!inserted) {
      w.cycle_start = it->second;
      return w;
    }
    const unsigned d = stream.next();
    if (!is_cantor_digit(d, k)) {
      w.bad_digit = d;
      w.tail_zero_after_bad = stream.remainder() == 0;
      return w;
    }
    w.prefix.push_back(d);
  }
}

std::vector<unsigned> halve(const std::vector<unsigned>& digits, unsigned k) {
  std::vector<unsigned> out;
  out.reserve(digits.size());
  for (const auto d : digits) out.push_back(d / (k - 1));
  return out;
}

}  // namespace

Rational PlateauInterval::level() const {
  const Word bits = binary_image(prefix);
  return bits.value() + Rational(BigInt(1), big_pow(2, static_cast<unsigned>(bits.size() + 1)));
}

bool in_cantor(const Rational& x, unsigned k) {
  require_closed_unit(x);
  if (k == 2 || x == 1) return true;
  const auto w = walk(x, k);
  // prefix 1 0^inf equals prefix 0 (k-1)^inf
  return !w.bad_digit || (*w.bad_digit == 1 && w.tail_zero_after_bad);
}

Rational cantor_function(const Rational& x, unsigned k) {
  require_closed_unit(x);
  if (k < 2) throw std::invalid_argument("base must be at least 2");
  if (x == 1) return Rational(1);
  if (k == 2) return x;
  const auto w = walk(x, k);
  const auto bits = halve(w.prefix, k);
  if (w.bad_digit) {
    return Word(2, bits).value() + Rational(BigInt(1), big_pow(2, static_cast<unsigned>(bits.size() + 1)));
  }
  const auto start = static_cast<std::ptrdiff_t>(w.cycle_start);
  PeriodicExpansion e{{bits.begin(), bits.begin() + start}, {bits.begin() + start, bits.end()}};
  return periodic_value(e, 2);
}

Rational cantor_inverse(const Rational& y, unsigned k) {
  require_closed_unit(y);
  if (k < 2) throw std::invalid_argument("base must be at least 2");
  if (y == 1) return Rational(1);
  return periodic_value(periodic_expansion(y, 2), k, k - 1);
}

Rational thue_morse_preimage(unsigned k, std::size_t digits) {
  if (digits == 0) throw std::invalid_argument("thue_morse_preimage needs at least one digit");
  std::vector<unsigned> out(digits);
  for (std::size_t n = 0; n < digits; ++n) out[n] = (k - 1) * thue_morse_bit(n);
  return Word(k, std::move(out)).value();
}

std::optional<PlateauInterval> plateau_of(const Rational& x, unsigned k) {
  require_closed_unit(x);
  if (k == 2 || x == 1) return std::nullopt;
  const auto w = walk(x, k);
  if (!w.bad_digit || (*w.bad_digit == 1 && w.tail_zero_after_bad)) return std::nullopt;
  Word prefix(k, w.prefix);
  Word lo = prefix;
  lo.push_back(1);
  Word hi = prefix;
  hi.push_back(k - 1);
  return PlateauInterval{std::move(prefix), lo.value(), hi.value()};
}

Word binary_image(const Word& w) {
  const unsigned k = w.base();
  for (const auto d : w.digits()) {
    if (!is_cantor_digit(d, k)) {
      throw std::invalid_argument("digit " + std::to_string(d) + " is not in {0, " + std::to_string(k - 1) + "}");
    }
  }
  return Word(2, halve(w.digits(), k));
}

}  // namespace holedim
