#pragma once

// Region classification, positivity certificates and the top-level
// Hausdorff dimension estimator for survivor sets of T_k.

#include "holedim/rational.hpp"
#include "holedim/sft.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace holedim {

enum class RegionTag { R1Left, R1Right, R2 };

std::string to_string(RegionTag t);

/// All tags that apply to a hole, with the comparisons that decided them.
struct RegionClass {
  bool b_at_most_top = false;      // b <= (k-1)/k
  bool a_at_least_bottom = false;  // a >= 1/k
  bool a_at_most_bottom = false;   // a <= 1/k
  bool b_at_least_top = false;     // b >= (k-1)/k
  bool a_below_bottom = false;     // a < 1/k
  bool b_above_top = false;        // b > (k-1)/k

  bool r1_left() const { return b_at_most_top; }
  bool r1_right() const { return a_at_least_bottom; }
  bool r2() const { return a_at_most_bottom && b_at_least_top; }
  /// The hypothesis of the reduction to the doubling map.
  bool strict_r2() const { return a_below_bottom && b_above_top; }

  std::vector<RegionTag> tags() const;
  /// R1 wins over R2; R1-left wins over R1-right.
  RegionTag preferred() const;
};

RegionClass classify(const Hole& hole);

/// log j / log k for the largest j in 2..k-1 with b <= (k-j)/k or a >= j/k:
/// the full shift on the top (or bottom) j digits then survives.
std::optional<double> digit_block_lower_bound(const Hole& hole);

/// The largest such j, if any.
std::optional<unsigned> digit_block_size(const Hole& hole);

/// (g_k(a), g_k(b)); requires a < 1/k and b > (k-1)/k.
std::pair<Rational, Rational> reduce_hole(const Hole& hole);

/// (1-b, 1-a).
Hole reflect_hole(const Hole& hole);

/// Upper rational bound for g_k^{-1} of the Thue-Morse constant, from
/// `digits` Thue-Morse digits plus the truncation error k^-digits.
Rational thue_morse_preimage_upper(unsigned k, unsigned digits = 64);

enum class CertificateKind {
  R1Subshift,      // U_N embeds in the survivor set
  DigitBlock,      // full shift on j digits embeds in the survivor set
  WidthBound,      // b - a < 1 - 2 g_k^{-1}(a*)
  SubshiftRadius,  // an inner/window SFT with spectral radius > 1
};

std::string to_string(CertificateKind c);

struct Certificate {
  CertificateKind kind = CertificateKind::DigitBlock;
  /// R1Subshift: N used; DigitBlock: j; SubshiftRadius: depth.
  unsigned parameter = 0;
  /// R1Subshift: spectral radius of U_N; SubshiftRadius: its certified lower end.
  double radius = 0.0;
  /// R1Subshift: true when applied to the reflected hole.
  bool reflected = false;
  /// WidthBound: the threshold 1 - 2 * (upper approximant), exact.
  Rational threshold;
  /// SubshiftRadius: which approximation certified it, and whether it was
  /// built for the doubling-map hole (g_k(a), g_k(b)).
  Mode mode = Mode::Window;
  bool on_reduced_hole = false;

  std::string describe() const;
};

enum class Verdict { Positive, Undetermined };

std::string to_string(Verdict v);

struct Positivity {
  Verdict verdict = Verdict::Undetermined;
  std::optional<Certificate> certificate;
  unsigned depth = 0;  // deepest SFT consulted (0 when none)
};

struct EstimatorOptions {
  SftOptions sft{};
  unsigned thue_morse_digits = 64;
};

/// Decides dim > 0 where a certificate is available, in this order: the
/// U_N embedding for R1 holes, the digit-block embedding, the width bound
/// for holes with a < 1/k and b > (k-1)/k, and finally the inner and window
/// subshifts at `depth_budget`. Never concludes that the dimension is zero.
Positivity positivity(const Hole& hole, unsigned depth_budget, const EstimatorOptions& options = {});

/// Re-checks a certificate from scratch. Returns false if it does not hold.
bool verify_certificate(const Hole& hole, const Certificate& c, const EstimatorOptions& options = {});

enum class EstimateMode { Direct, Reduced, Both };

std::string to_string(EstimateMode m);

struct DimensionBracket {
  double lower = 0.0;
  double upper = 1.0;
};

struct DimensionEstimate {
  double lower = 0.0;
  double upper = 1.0;
  Positivity positivity;
  std::vector<std::string> methods;
  unsigned depth = 0;
  RegionClass region;
  std::optional<std::pair<Rational, Rational>> reduced_hole;
  std::optional<DimensionBracket> direct;
  std::optional<DimensionBracket> reduced;
};

/// Dimension bounds at SFT depth `depth`.
///
/// Direct bounds come from the approximations of the hole itself. Reduced
/// bounds (a < 1/k, b > (k-1)/k only) come from the doubling-map hole
/// (g_k(a), g_k(b)) scaled by log 2 / log k. Both intersects the two; an
/// empty intersection is an internal error (std::logic_error).
///
/// Throws std::invalid_argument when Reduced is requested for a hole outside
/// the reduction hypothesis.
DimensionEstimate estimate_dimension(const Hole& hole, unsigned depth, EstimateMode mode,
                                     const EstimatorOptions& options = {});

}  // namespace holedim
