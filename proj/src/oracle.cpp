#include "holedim/oracle.hpp"

#include "holedim/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace holedim::oracle {

namespace {

using i128 = __int128;

struct SmallFraction {
  i128 num;
  i128 den;
};

SmallFraction small(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const BigInt limit(std::numeric_limits<std::int64_t>::max());
  if (num > limit || den > limit || num < 0) throw BudgetError("hole endpoint too large for the brute-force oracle");
  return {num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>()};
}

// p/q < r/s for positive denominators
bool less(i128 p, i128 q, i128 r, i128 s) { return p * s < r * q; }

}  // namespace

SurvivorCounts brute_counts(const Hole& hole, unsigned depth, Mode mode) {
  const unsigned k = hole.k();
  i128 total = 1;
  for (unsigned i = 0; i < depth; ++i) {
    total *= k;
    if (total > 10'000'000) throw BudgetError("brute-force oracle is limited to k^n <= 1e7 words");
  }
  const auto a = small(hole.a());
  const auto b = small(hole.b());

  SurvivorCounts out{mode, {}};
  std::vector<unsigned> word;
  for (unsigned n = 1; n <= depth; ++n) {
    i128 words = 1;
    for (unsigned i = 0; i < n; ++i) words *= k;
    std::uint64_t admitted = 0;
    word.assign(n, 0);
    for (i128 w = 0; w < words; ++w) {
      // decode w into digits, most significant first
      i128 r = w;
      for (unsigned i = n; i-- > 0;) {
        word[i] = static_cast<unsigned>(r % k);
        r /= k;
      }
      bool ok = true;
      for (unsigned start = 0; start < n && ok; ++start) {
        if (mode == Mode::Window && start > 0) break;
        // suffix word[start..n) names [left/scale, (left+1)/scale)
        i128 left = 0;
        i128 scale = 1;
        for (unsigned i = start; i < n; ++i) {
          left = left * k + word[i];
          scale *= k;
        }
        const i128 right = left + 1;
        // meets (a,b)  <=>  left/scale < b  and  right/scale > a
        const bool meets = less(left, scale, b.num, b.den) && less(a.num, a.den, right, scale);
        // closed cylinder inside (a,b) <=>  left/scale > a  and  right/scale < b
        const bool inside = less(a.num, a.den, left, scale) && less(right, scale, b.num, b.den);
        ok = mode == Mode::Outer ? !inside : !meets;
      }
      if (ok) ++admitted;
    }
    out.counts.push_back(admitted);
  }
  return out;
}

std::vector<EscapeRow> orbit_escape_table(const Hole& hole, unsigned grid, unsigned steps) {
  if (grid < 1) throw std::invalid_argument("grid must be at least 1");
  std::vector<EscapeRow> rows;
  rows.reserve(grid);
  for (unsigned i = 0; i < grid; ++i) {
    const Rational x0(i, grid);
    Rational x = x0;
    std::optional<unsigned> escape;
    for (unsigned n = 0; n <= steps; ++n) {
      if (hole.a() < x && x < hole.b()) {
        escape = n;
        break;
      }
      x *= hole.k();
      while (x >= 1) x -= 1;
    }
    rows.push_back({x0, escape});
  }
  return rows;
}

double poly_root(const std::vector<double>& coeffs, double lo, double hi, double tolerance) {
  const auto eval = [&](double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  double flo = eval(lo);
  const double fhi = eval(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0)) throw std::invalid_argument("no sign change on the bracket");
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = eval(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace holedim::oracle
