#include "holedim/sft.hpp"

#include "holedim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace holedim {

Hole::Hole(Rational a, Rational b, unsigned k) : a_(std::move(a)), b_(std::move(b)), k_(k) {
  if (k_ < 2) throw std::invalid_argument("require k >= 2");
  if (a_ < 0 || b_ > 1) throw std::invalid_argument("require 0 <= a < b <= 1");
  if (!(a_ < b_)) throw std::invalid_argument("require a < b");
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Inner: return "inner";
    case Mode::Outer: return "outer";
    case Mode::Window: return "window";
  }
  return "?";
}

namespace {

std::uint64_t checked_power(unsigned k, unsigned n, std::uint64_t cap) {
  std::uint64_t p = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (p > cap / k) {
      throw BudgetError("k^n = " + std::to_string(k) + "^" + std::to_string(n) + " exceeds the state budget of " +
                        std::to_string(cap));
    }
    p *= k;
  }
  return p;
}

// Integer thresholds that turn cylinder/hole comparisons at length m into
// comparisons of the word value v (cylinder [v/k^m, (v+1)/k^m)).
struct LengthThresholds {
  std::uint64_t floor_a;  // floor(a k^m)
  std::uint64_t ceil_b;   // ceil(b k^m)

  // (v+1)/k^m <= a  or  v/k^m >= b
  bool disjoint(std::uint64_t v) const { return v < floor_a || v >= ceil_b; }
  // the closed cylinder lies in (a,b): v/k^m > a  and  (v+1)/k^m < b
  bool contained(std::uint64_t v) const { return v > floor_a && v + 1 < ceil_b; }
};

std::vector<LengthThresholds> thresholds(const Hole& hole, unsigned depth) {
  std::vector<LengthThresholds> out;
  out.reserve(depth + 1);
  for (unsigned m = 0; m <= depth; ++m) {
    const BigInt scale = big_pow(hole.k(), m);
    out.push_back({to_u64(floor_of(hole.a() * scale)), to_u64(ceil_of(hole.b() * scale))});
  }
  return out;
}

bool admitted_at(const LengthThresholds& t, std::uint64_t v, Mode mode) {
  return mode == Mode::Outer ? !t.contained(v) : t.disjoint(v);
}

// Final bitmap at `depth`, recording mu(1..depth) on the way.
std::vector<bool> build_levels(const Hole& hole, unsigned depth, Mode mode, const SftOptions& options,
                               std::vector<std::uint64_t>* counts) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  const unsigned k = hole.k();
  checked_power(k, depth, options.max_states);
  const auto t = thresholds(hole, depth);

  if (mode == Mode::Window) {
    std::vector<bool> bits;
    for (unsigned m = 1; m <= depth; ++m) {
      const std::uint64_t space = checked_power(k, m, options.max_states);
      if (m < depth && counts == nullptr) continue;
      bits.assign(space, false);
      std::uint64_t c = 0;
      for (std::uint64_t v = 0; v < space; ++v) {
        if (t[m].disjoint(v)) {
          bits[v] = true;
          ++c;
        }
      }
      if (counts != nullptr) counts->push_back(c);
    }
    return bits;
  }

  std::vector<bool> prev{true};  // the empty word
  std::uint64_t prev_space = 1;
  for (unsigned m = 1; m <= depth; ++m) {
    std::vector<bool> next(prev_space * k, false);
    std::uint64_t c = 0;
    for (unsigned d = 0; d < k; ++d) {
      const std::uint64_t offset = d * prev_space;
      for (std::uint64_t u = 0; u < prev_space; ++u) {
        if (!prev[u]) continue;
        const std::uint64_t v = offset + u;
        if (admitted_at(t[m], v, mode)) {
          next[v] = true;
          ++c;
        }
      }
    }
    if (counts != nullptr) counts->push_back(c);
    prev = std::move(next);
    prev_space *= k;
  }
  return prev;
}

SpectralOptions with_default_cap(SpectralOptions options, unsigned k, unsigned depth) {
  if (options.max_iterations == 0) {
    const double n = depth;
    const auto scaled = static_cast<std::size_t>(std::ceil(10.0 * n * n * std::log(static_cast<double>(k))));
    options.max_iterations = std::max<std::size_t>(1000, scaled);
  }
  return options;
}

}  // namespace

DepthApproximation::DepthApproximation(unsigned k, unsigned depth, Mode mode, std::vector<bool> admitted)
    : k_(k), depth_(depth), mode_(mode), admitted_(std::move(admitted)) {
  if (k_ < 2) throw std::invalid_argument("require k >= 2");
  std::uint64_t space = 1;
  for (unsigned i = 0; i < depth_; ++i) space *= k_;
  if (admitted_.size() != space) throw std::invalid_argument("admitted bitmap must have k^depth entries");
}

bool DepthApproximation::admits(const Word& w) const {
  if (w.base() != k_ || w.size() != depth_) throw std::invalid_argument("word does not match approximation shape");
  return admitted_[w.index()];
}

std::uint64_t DepthApproximation::count() const {
  return static_cast<std::uint64_t>(std::count(admitted_.begin(), admitted_.end(), true));
}

std::vector<Word> DepthApproximation::admitted_words() const {
  std::vector<Word> out;
  for (std::uint64_t v = 0; v < admitted_.size(); ++v) {
    if (!admitted_[v]) continue;
    std::vector<unsigned> digits(depth_);
    std::uint64_t r = v;
    for (unsigned i = depth_; i-- > 0;) {
      digits[i] = static_cast<unsigned>(r % k_);
      r /= k_;
    }
    out.emplace_back(k_, std::move(digits));
  }
  return out;
}

Digraph DepthApproximation::transition_graph() const {
  const std::uint64_t space = admitted_.size();
  if (space > std::numeric_limits<std::uint32_t>::max()) throw BudgetError("too many words for a 32-bit vertex index");
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> rank(space, kNone);
  std::uint32_t next = 0;
  for (std::uint64_t v = 0; v < space; ++v) {
    if (admitted_[v]) rank[v] = next++;
  }
  const std::uint64_t tail_space = space / k_;  // k^(n-1)
  Digraph g;
  std::vector<std::uint32_t> succ;
  succ.reserve(k_);
  for (std::uint64_t v = 0; v < space; ++v) {
    if (!admitted_[v]) continue;
    succ.clear();
    const std::uint64_t base = (v % tail_space) * k_;
    for (unsigned d = 0; d < k_; ++d) {
      if (admitted_[base + d]) succ.push_back(rank[base + d]);
    }
    g.add_vertex(succ);
  }
  return g;
}

DepthApproximation build_approximation(const Hole& hole, unsigned depth, Mode mode, const SftOptions& options) {
  return DepthApproximation(hole.k(), depth, mode, build_levels(hole, depth, mode, options, nullptr));
}

SurvivorCounts count_sequence(const Hole& hole, Mode mode, unsigned n_max, const SftOptions& options) {
  SurvivorCounts out{mode, {}};
  build_levels(hole, n_max, mode, options, &out.counts);
  return out;
}

DepthApproximation digit_shift(unsigned k, const std::vector<unsigned>& digits, unsigned depth) {
  if (k < 2) throw std::invalid_argument("require k >= 2");
  std::vector<bool> allowed(k, false);
  for (const auto d : digits) {
    if (d >= k) throw std::invalid_argument("digit out of range for base");
    allowed[d] = true;
  }
  std::vector<bool> prev{true};
  for (unsigned m = 1; m <= depth; ++m) {
    std::vector<bool> next(prev.size() * k, false);
    for (unsigned d = 0; d < k; ++d) {
      if (!allowed[d]) continue;
      for (std::uint64_t u = 0; u < prev.size(); ++u) next[d * prev.size() + u] = prev[u];
    }
    prev = std::move(next);
  }
  return DepthApproximation(k, depth, Mode::Inner, std::move(prev));
}

SpectralBracket spectral_radius_of(const DepthApproximation& approx, const SpectralOptions& options) {
  return spectral_bracket(approx.transition_graph(), with_default_cap(options, approx.base(), approx.depth()));
}

EntropyBounds entropy_bounds(const SurvivorCounts& outer, const SpectralBracket& lower_radius,
                             const SpectralBracket* outer_radius) {
  EntropyBounds b;
  b.lower = lower_radius.lower > 1.0 ? std::log(lower_radius.lower) : 0.0;
  b.upper = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < outer.counts.size(); ++i) {
    const auto mu = outer.counts[i];
    const double per_symbol = mu == 0 ? 0.0 : std::log(static_cast<double>(mu)) / static_cast<double>(i + 1);
    b.upper = std::min(b.upper, per_symbol);
  }
  if (outer_radius != nullptr) {
    b.upper = std::min(b.upper, outer_radius->upper > 1.0 ? std::log(outer_radius->upper) : 0.0);
  }
  if (!std::isfinite(b.upper)) b.upper = 0.0;
  return b;
}

SurvivorAnalysis analyze_survivors(const Hole& hole, unsigned depth, const SftOptions& options) {
  SurvivorAnalysis out;
  out.depth = depth;
  out.inner.mode = Mode::Inner;
  out.outer.mode = Mode::Outer;
  const auto spectral = with_default_cap(options.spectral, hole.k(), depth);

  const DepthApproximation inner(hole.k(), depth, Mode::Inner,
                                 build_levels(hole, depth, Mode::Inner, options, &out.inner.counts));
  out.inner_radius = spectral_bracket(inner.transition_graph(), spectral);

  const auto window = build_approximation(hole, depth, Mode::Window, options);
  out.window_radius = spectral_bracket(window.transition_graph(), spectral);

  const DepthApproximation outer(hole.k(), depth, Mode::Outer,
                                 build_levels(hole, depth, Mode::Outer, options, &out.outer.counts));
  out.outer_radius = spectral_bracket(outer.transition_graph(), spectral);

  const auto& best_lower = out.window_radius.lower >= out.inner_radius.lower ? out.window_radius : out.inner_radius;
  out.bounds = entropy_bounds(out.outer, best_lower, &out.outer_radius);
  return out;
}

LabelledSubshift u_n_subshift(unsigned k, unsigned n) {
  if (k < 3) throw std::invalid_argument("the U_N subshift needs k >= 3");
  if (n < 1) throw std::invalid_argument("the U_N subshift needs N >= 1");
  std::vector<std::vector<std::uint32_t>> succ(n + 1);
  succ[0] = {0, n};
  for (std::uint32_t j = 1; j <= n; ++j) succ[j] = {j - 1};
  std::vector<unsigned> labels(n + 1, k - 1);
  labels[n] = k - 2;
  return {k, Digraph::from_adjacency(succ), std::move(labels)};
}

std::vector<std::uint64_t> language_counts(const LabelledSubshift& s, std::size_t n_max) {
  // From vertex 0 the labelling is deterministic and every factor can be
  // read (a factor is always preceded by a run of k-1), so words of length n
  // are exactly the walks of length n out of vertex 0.
  return walk_counts_from(s.graph, 0, n_max);
}

double full_shift_entropy(unsigned j) {
  if (j < 1) throw std::invalid_argument("full shift needs at least one letter");
  return std::log(static_cast<double>(j));
}

}  // namespace holedim
