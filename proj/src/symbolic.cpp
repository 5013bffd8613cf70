#include "holedim/symbolic.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace holedim {

namespace {

void require_base(unsigned k) {
  if (k < 2) throw std::invalid_argument("base must be at least 2, got " + std::to_string(k));
}

void require_unit_interval(const Rational& x) {
  if (x < 0 || x >= 1) {
    throw std::domain_error("expected a point of [0,1), got " + to_fraction_string(x));
  }
}

}  // namespace

Word::Word(unsigned base, std::vector<digit_type> digits) : base_(base), digits_(std::move(digits)) {
  require_base(base_);
  for (const auto d : digits_) {
    if (d >= base_) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
    }
  }
}

Rational Word::value() const {
  BigInt num = 0;
  for (const auto d : digits_) num = num * base_ + d;
  return Rational(num, big_pow(base_, static_cast<unsigned>(digits_.size())));
}

std::uint64_t Word::index() const {
  std::uint64_t v = 0;
  for (const auto d : digits_) {
    if (v > (UINT64_MAX - d) / base_) throw std::overflow_error("word index does not fit in 64 bits");
    v = v * base_ + d;
  }
  return v;
}

void Word::push_back(digit_type d) {
  if (d >= base_) throw std::invalid_argument("digit out of range");
  digits_.push_back(d);
}

DigitStream::DigitStream(const Rational& x, unsigned base)
    : remainder_(boost::multiprecision::numerator(x)),
      denominator_(boost::multiprecision::denominator(x)),
      base_(base) {
  require_base(base);
  require_unit_interval(x);
}

unsigned DigitStream::next() {
  remainder_ *= base_;
  const BigInt d = remainder_ / denominator_;
  remainder_ -= d * denominator_;
  return d.convert_to<unsigned>();
}

KExpansionPrefix k_expansion_prefix(const Rational& x, unsigned k, std::size_t n) {
  DigitStream stream(x, k);
  std::vector<unsigned> digits;
  digits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) digits.push_back(stream.next());
  return {Word(k, std::move(digits)), stream.remainder() == 0};
}

Word k_expansion(const Rational& x, unsigned k, std::size_t n) { return k_expansion_prefix(x, k, n).word; }

PeriodicExpansion periodic_expansion(const Rational& x, unsigned k) {
  DigitStream stream(x, k);
  std::map<BigInt, std::size_t> seen;
  std::vector<unsigned> digits;
  while (true) {
    const auto [it, inserted] = seen.emplace(stream.remainder(), digits.size());
    if (!inserted) {
      const auto start = it->second;
      return {std::vector<unsigned>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start)),
              std::vector<unsigned>(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end())};
    }
    digits.push_back(stream.next());
  }
}

Rational periodic_value(const PeriodicExpansion& e, unsigned k, unsigned digit_scale) {
  require_base(k);
  if (e.period.empty()) throw std::invalid_argument("periodic expansion needs a nonempty period");
  BigInt pre = 0;
  for (const auto d : e.preperiod) pre = pre * k + BigInt(d) * digit_scale;
  BigInt rep = 0;
  for (const auto d : e.period) rep = rep * k + BigInt(d) * digit_scale;
  const BigInt pre_scale = big_pow(k, static_cast<unsigned>(e.preperiod.size()));
  const BigInt rep_scale = big_pow(k, static_cast<unsigned>(e.period.size())) - 1;
  return Rational(pre, pre_scale) + Rational(rep, pre_scale * rep_scale);
}

Interval cylinder(const Word& w) {
  Rational left = w.value();
  Rational right = left + Rational(BigInt(1), big_pow(w.base(), static_cast<unsigned>(w.size())));
  return {std::move(left), std::move(right)};
}

bool is_k_adic(const Rational& x, unsigned k) {
  require_base(k);
  BigInt den = boost::multiprecision::denominator(x);
  const BigInt base(k);
  while (den != 1) {
    const BigInt g = boost::multiprecision::gcd(den, base);
    if (g == 1) return false;
    den /= g;
  }
  return true;
}

Word reflect_word(const Word& w) {
  std::vector<unsigned> out;
  out.reserve(w.size());
  for (const auto d : w.digits()) out.push_back(w.base() - 1 - d);
  return Word(w.base(), std::move(out));
}

Word shift_word(const Word& w) {
  if (w.empty()) return w;
  return Word(w.base(), std::vector<unsigned>(w.digits().begin() + 1, w.digits().end()));
}

Rational shift_map(const Rational& x, unsigned k) {
  require_base(k);
  const Rational y = x * k;
  return y - Rational(floor_of(y));
}

Word thue_morse_digits(std::size_t n) {
  std::vector<unsigned> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m] = thue_morse_bit(m);
  return Word(2, std::move(out));
}

Rational thue_morse_constant(std::size_t bits) {
  if (bits == 0) throw std::invalid_argument("thue_morse_constant needs at least one bit");
  return thue_morse_digits(bits).value();
}

}  // namespace holedim
