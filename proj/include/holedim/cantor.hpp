#pragma once

// The middle-(k-2)-intervals Cantor set C_k and its Cantor function g_k,
// which collapses every gap of C_k to a point and conjugates T_k on C_k with
// the doubling map.

#include "holedim/rational.hpp"
#include "holedim/symbolic.hpp"

#include <cstddef>
#include <optional>

namespace holedim {

/// A maximal closed interval on which the Cantor function is constant:
/// [prefix 1 0^inf, prefix (k-1) 0^inf] with prefix over {0, k-1}.
struct PlateauInterval {
  Word prefix;
  Rational left;
  Rational right;

  /// The constant value of the Cantor function on this interval.
  Rational level() const;
};

/// Membership in the closed set C_k; endpoints such as 1/k are included.
/// Throws std::domain_error outside [0,1].
bool in_cantor(const Rational& x, unsigned k);

/// Exact value of g_k at a rational point of [0,1].
///
/// The digits of x are walked until the first digit outside {0, k-1}; if
/// the remainder sequence cycles first, x lies in C_k and the induced binary
/// series is summed in closed form.
Rational cantor_function(const Rational& x, unsigned k);

/// The point of C_k whose {0,k-1}-digits are (k-1) times the binary digits
/// of y. Dyadic y use the expansion ending in 0^inf, which lands on the
/// right end of the plateau over y.
Rational cantor_inverse(const Rational& y, unsigned k);

/// Lower approximant of g_k^{-1} of the Thue-Morse constant from the first
/// `digits` Thue-Morse digits; the error is below k^-digits.
Rational thue_morse_preimage(unsigned k, std::size_t digits);

/// The plateau whose interior gap contains x, or nothing when x is in C_k.
std::optional<PlateauInterval> plateau_of(const Rational& x, unsigned k);

/// Digit-wise division by k-1 of a word over {0, k-1}.
/// Throws std::invalid_argument on any digit in 1..k-2.
Word binary_image(const Word& w);

}  // namespace holedim
