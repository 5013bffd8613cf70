#pragma once

// Base-k digit words, k-expansions of exact rationals, cylinders and the
// Thue-Morse sequence.

#include "holedim/rational.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace holedim {

/// A finite string over {0, ..., base-1}.
class Word {
 public:
  using digit_type = unsigned;

  explicit Word(unsigned base, std::vector<digit_type> digits = {});
  Word(unsigned base, std::initializer_list<digit_type> digits)
      : Word(base, std::vector<digit_type>(digits)) {}

  unsigned base() const noexcept { return base_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  const std::vector<digit_type>& digits() const noexcept { return digits_; }
  digit_type operator[](std::size_t i) const { return digits_[i]; }

  /// Sum of w_i k^-i, the left end of the cylinder.
  Rational value() const;

  /// The word read as a base-k integer (most significant digit first).
  std::uint64_t index() const;

  void push_back(digit_type d);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  unsigned base_;
  std::vector<digit_type> digits_;
};

/// First digits of the expansion of a point of [0,1), together with a flag
/// telling whether the rest of the expansion is all zeros.
struct KExpansionPrefix {
  Word word;
  bool exact_tail_zero;
};

/// Half-open interval [left, right).
struct Interval {
  Rational left;
  Rational right;
};

/// Eventually periodic digit expansion: preperiod followed by period
/// repeated forever. A terminating expansion has period {0}.
struct PeriodicExpansion {
  std::vector<unsigned> preperiod;
  std::vector<unsigned> period;
};

/// Generates the digits of a rational x in [0,1) one at a time by long
/// division. The stream state is the current remainder, so two positions
/// with equal remainders produce identical tails.
class DigitStream {
 public:
  DigitStream(const Rational& x, unsigned base);

  unsigned next();
  const BigInt& remainder() const noexcept { return remainder_; }

 private:
  BigInt remainder_;
  BigInt denominator_;
  unsigned base_;
};

/// The first n digits of the expansion of x in [0,1) that does not end in
/// (k-1)^inf. Throws std::domain_error outside [0,1).
Word k_expansion(const Rational& x, unsigned k, std::size_t n);
KExpansionPrefix k_expansion_prefix(const Rational& x, unsigned k, std::size_t n);

/// Full expansion of x in [0,1) with cycle detection on remainders.
PeriodicExpansion periodic_expansion(const Rational& x, unsigned k);

/// Exact value of an eventually periodic digit sequence read in base k,
/// with each digit multiplied by `digit_scale`.
Rational periodic_value(const PeriodicExpansion& e, unsigned k, unsigned digit_scale = 1);

Interval cylinder(const Word& w);

/// True iff x = l / k^n for some n (denominator divides a power of k).
bool is_k_adic(const Rational& x, unsigned k);

/// Digit-wise d -> k-1-d.
Word reflect_word(const Word& w);

/// Drops the first digit.
Word shift_word(const Word& w);

/// T_k(x) = k x mod 1.
Rational shift_map(const Rational& x, unsigned k);

/// t_0 ... t_{n-1} of the Thue-Morse sequence, t_m = parity of popcount(m).
Word thue_morse_digits(std::size_t n);

/// Sum over m < bits of t_m 2^-(m+1); under-approximates the constant by
/// less than 2^-bits.
Rational thue_morse_constant(std::size_t bits);

inline unsigned thue_morse_bit(std::uint64_t m) { return static_cast<unsigned>(std::popcount(m) & 1); }

}  // namespace holedim
