#pragma once

// Finite-depth subshift approximations of the survivor set of T_k with an
// open hole, their word counts, and the entropy bounds they certify.

#include "holedim/rational.hpp"
#include "holedim/spectral.hpp"
#include "holedim/symbolic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace holedim {

/// Open interval (a, b) removed from [0,1) under T_k.
class Hole {
 public:
  /// Throws std::invalid_argument unless 0 <= a < b <= 1 and k >= 2.
  Hole(Rational a, Rational b, unsigned k);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  unsigned k() const noexcept { return k_; }

  /// Strict membership in the open interval.
  bool contains(const Rational& x) const { return a_ < x && x < b_; }

  friend bool operator==(const Hole&, const Hole&) = default;

 private:
  Rational a_;
  Rational b_;
  unsigned k_;
};

/// How a depth-n word is admitted.
///
/// Inner: the cylinder of every suffix of the word is disjoint from the hole.
/// Outer: no closed suffix cylinder lies inside the hole.
/// Window: the cylinder of the word itself is disjoint from the hole.
///
/// Every sequence whose length-n windows are all Inner- or Window-admitted
/// projects into the survivor set; every survivor has all of its length-n
/// windows Outer-admitted.
enum class Mode { Inner, Outer, Window };

std::string to_string(Mode m);

struct SftOptions {
  /// Largest k^n for which a depth-n approximation is materialized.
  std::uint64_t max_states = std::uint64_t{1} << 24;
  SpectralOptions spectral{};
};

/// Admitted depth-n words, stored as a bitmap indexed by the base-k value
/// of the word. Transitions w -> w' require the last n-1 digits of w to be
/// the first n-1 digits of w'.
class DepthApproximation {
 public:
  DepthApproximation(unsigned k, unsigned depth, Mode mode, std::vector<bool> admitted);

  unsigned base() const noexcept { return k_; }
  unsigned depth() const noexcept { return depth_; }
  Mode mode() const noexcept { return mode_; }
  std::uint64_t word_space() const noexcept { return admitted_.size(); }

  bool admits(std::uint64_t word_index) const { return admitted_[word_index]; }
  bool admits(const Word& w) const;
  std::uint64_t count() const;
  std::vector<Word> admitted_words() const;

  /// The transition relation restricted to admitted words, vertices
  /// numbered in increasing word order.
  Digraph transition_graph() const;

 private:
  unsigned k_;
  unsigned depth_;
  Mode mode_;
  std::vector<bool> admitted_;
};

/// Word counts mu(1..n_max) for one mode.
struct SurvivorCounts {
  Mode mode;
  std::vector<std::uint64_t> counts;  // counts[n-1] = mu(n)

  std::uint64_t at(unsigned n) const { return counts.at(n - 1); }
};

/// Throws BudgetError when k^depth exceeds options.max_states.
DepthApproximation build_approximation(const Hole& hole, unsigned depth, Mode mode, const SftOptions& options = {});

/// Counts for every depth up to n_max, built incrementally: a word of length
/// n+1 is Inner/Outer-admitted iff its length-n suffix is and the new full
/// word passes the cylinder test.
SurvivorCounts count_sequence(const Hole& hole, Mode mode, unsigned n_max, const SftOptions& options = {});

/// The depth-n words over base k using only `digits`; its subshift is the
/// full shift on those letters.
DepthApproximation digit_shift(unsigned k, const std::vector<unsigned>& digits, unsigned depth);

SpectralBracket spectral_radius_of(const DepthApproximation& approx, const SpectralOptions& options = {});

struct EntropyBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// lower = log of the certified lower end of `lower_radius` (0 without a
/// cycle); upper = min over n of log mu_outer(n)/n and, when given, the log
/// of the certified upper end of `outer_radius`.
EntropyBounds entropy_bounds(const SurvivorCounts& outer, const SpectralBracket& lower_radius,
                             const SpectralBracket* outer_radius = nullptr);

/// Everything the depth-n analysis of one hole produces.
struct SurvivorAnalysis {
  unsigned depth = 0;
  SurvivorCounts inner;
  SurvivorCounts outer;
  SpectralBracket inner_radius;
  SpectralBracket window_radius;
  SpectralBracket outer_radius;
  EntropyBounds bounds;
};

/// Inner/Outer counts up to `depth`, the spectral radii of the Inner,
/// Window and Outer relations at `depth`, and the resulting entropy bounds.
SurvivorAnalysis analyze_survivors(const Hole& hole, unsigned depth, const SftOptions& options = {});

/// Vertex-labelled graph of the subshift of {k-2, k-1}-sequences in which
/// every k-2 is followed by N copies of k-1. Vertex j carries the number of
/// k-1 still owed; vertex 0 owes nothing.
struct LabelledSubshift {
  unsigned base;
  Digraph graph;
  std::vector<unsigned> labels;  // symbol emitted on entering each vertex
};

/// Requires k >= 3 and N >= 1.
LabelledSubshift u_n_subshift(unsigned k, unsigned n);

/// Number of words of length 1..n_max in the language of `s`.
std::vector<std::uint64_t> language_counts(const LabelledSubshift& s, std::size_t n_max);

/// log j, the entropy of the full shift on j letters.
double full_shift_entropy(unsigned j);

}  // namespace holedim
