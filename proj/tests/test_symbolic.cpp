#include <doctest.h>

#include "holedim/symbolic.hpp"

#include <random>
#include <stdexcept>

using namespace holedim;

namespace {

Word word(unsigned k, std::vector<unsigned> d) { return Word(k, std::move(d)); }

Word random_word(std::mt19937& rng, unsigned k, std::size_t n) {
  std::uniform_int_distribution<unsigned> digit(0, k - 1);
  std::vector<unsigned> d(n);
  for (auto& x : d) x = digit(rng);
  return Word(k, d);
}

}  // namespace

TEST_CASE("k_expansion") {
  CHECK(k_expansion(Rational(7, 9), 3, 3) == word(3, {2, 1, 0}));
  CHECK(k_expansion(Rational(0), 5, 4) == word(5, {0, 0, 0, 0}));
  CHECK(k_expansion(Rational(1, 3), 3, 4) == word(3, {1, 0, 0, 0}));
  CHECK(k_expansion(Rational(1, 4), 3, 6) == word(3, {0, 2, 0, 2, 0, 2}));
  CHECK_THROWS_AS(k_expansion(Rational(1), 3, 2), std::domain_error);
  CHECK_THROWS_AS(k_expansion(Rational(-1, 2), 3, 2), std::domain_error);
  CHECK_THROWS(k_expansion(Rational(1, 2), 1, 2));
}

TEST_CASE("k_expansion_prefix reports a terminating tail") {
  CHECK(k_expansion_prefix(Rational(1, 3), 3, 1).exact_tail_zero);
  CHECK_FALSE(k_expansion_prefix(Rational(1, 4), 3, 5).exact_tail_zero);
}

TEST_CASE("cylinder") {
  auto c = cylinder(word(3, {1}));
  CHECK(c.left == Rational(1, 3));
  CHECK(c.right == Rational(2, 3));
  c = cylinder(word(3, {1, 1}));
  CHECK(c.left == Rational(4, 9));
  CHECK(c.right == Rational(5, 9));
  c = cylinder(Word(4));
  CHECK(c.left == 0);
  CHECK(c.right == 1);
}

TEST_CASE("cylinders of one length partition [0,1)") {
  const unsigned k = 3;
  const unsigned n = 4;
  Rational expected_left = 0;
  for (std::uint64_t i = 0; i < 81; ++i) {
    std::vector<unsigned> d(n);
    std::uint64_t r = i;
    for (unsigned j = n; j-- > 0;) {
      d[j] = static_cast<unsigned>(r % k);
      r /= k;
    }
    const auto c = cylinder(Word(k, d));
    CHECK(c.left == expected_left);
    CHECK(c.right - c.left == Rational(1, 81));
    CHECK(Word(k, d).index() == i);
    expected_left = c.right;
  }
  CHECK(expected_left == 1);
}

TEST_CASE("is_k_adic") {
  CHECK(is_k_adic(Rational(5, 9), 3));
  CHECK_FALSE(is_k_adic(Rational(1, 2), 3));
  CHECK(is_k_adic(Rational(6, 8), 2));
  CHECK(is_k_adic(Rational(1, 6), 6));
  CHECK(is_k_adic(Rational(1, 4), 6));
  CHECK_FALSE(is_k_adic(Rational(1, 5), 6));
}

TEST_CASE("reflect_word") {
  CHECK(reflect_word(word(3, {0, 2, 1})) == word(3, {2, 0, 1}));
  CHECK(reflect_word(word(2, {0, 0})) == word(2, {1, 1}));
}

TEST_CASE("reflection is an involution and commutes with the shift") {
  std::mt19937 rng(7);
  for (unsigned k = 2; k <= 6; ++k) {
    for (int t = 0; t < 50; ++t) {
      const Word w = random_word(rng, k, 1 + t % 9);
      CHECK(reflect_word(reflect_word(w)) == w);
      CHECK(shift_word(reflect_word(w)) == reflect_word(shift_word(w)));
    }
  }
}

TEST_CASE("lexicographic order matches numeric order") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    const unsigned k = 2 + t % 5;
    const Word u = random_word(rng, k, 6);
    const Word v = random_word(rng, k, 6);
    CHECK((u.digits() < v.digits()) == (u.value() < v.value()));
  }
}

TEST_CASE("shift map agrees with the digit shift") {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const unsigned k = 2 + t % 5;
    const Rational x(std::uniform_int_distribution<int>(0, 996)(rng), 997);
    const Word w = k_expansion(x, k, 8);
    CHECK(k_expansion(shift_map(x, k), k, 7) == shift_word(w));
  }
}

TEST_CASE("periodic expansions round trip") {
  const auto e = periodic_expansion(Rational(1, 4), 3);
  CHECK(e.preperiod.empty());
  CHECK(e.period == std::vector<unsigned>{0, 2});
  const auto f = periodic_expansion(Rational(9, 10), 4);
  CHECK(f.preperiod == std::vector<unsigned>{3});
  CHECK(f.period == std::vector<unsigned>{2, 1});
  for (unsigned k = 2; k <= 7; ++k) {
    for (int p = 0; p < 60; ++p) {
      const Rational x(p, 61);
      CHECK(periodic_value(periodic_expansion(x, k), k) == x);
    }
  }
}

TEST_CASE("digit stream repeats with its remainder") {
  DigitStream s(Rational(1, 7), 10);
  std::vector<unsigned> digits;
  for (int i = 0; i < 12; ++i) digits.push_back(s.next());
  CHECK(digits == std::vector<unsigned>{1, 4, 2, 8, 5, 7, 1, 4, 2, 8, 5, 7});
}

TEST_CASE("Thue-Morse digits") {
  CHECK(thue_morse_digits(8) == word(2, {0, 1, 1, 0, 1, 0, 0, 1}));
  CHECK(thue_morse_digits(1) == word(2, {0}));
  CHECK(thue_morse_digits(16) == word(2, {0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0}));
}

TEST_CASE("Thue-Morse recurrence t(2m) = t(m), t(2m+1) = 1 - t(m)") {
  const Word t = thue_morse_digits(1024);
  for (std::size_t m = 0; m < 512; ++m) {
    CHECK(t[2 * m] == t[m]);
    CHECK(t[2 * m + 1] == 1 - t[m]);
  }
}

TEST_CASE("Thue-Morse constant") {
  CHECK(thue_morse_constant(1) == 0);
  CHECK(thue_morse_constant(4) == Rational(3, 8));
  CHECK(to_decimal_string(thue_morse_constant(60), 10) == "0.4124540336");
}

TEST_CASE("words validate their digits") {
  CHECK_THROWS(Word(3, {0, 3}));
  CHECK_THROWS(Word(1, {}));
  Word w(2);
  CHECK_THROWS(w.push_back(2));
}
