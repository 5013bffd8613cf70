#include "holedim/spectral.hpp"

#include "holedim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace holedim {

Digraph Digraph::from_adjacency(const std::vector<std::vector<std::uint32_t>>& successors) {
  Digraph g;
  for (const auto& row : successors) g.add_vertex(row);
  for (const auto t : g.targets_) {
    if (t >= g.size()) throw std::out_of_range("edge target out of range");
  }
  return g;
}

void Digraph::add_vertex(std::span<const std::uint32_t> successors) {
  targets_.insert(targets_.end(), successors.begin(), successors.end());
  offsets_.push_back(targets_.size());
}

std::vector<std::uint32_t> strongly_connected_components(const Digraph& g, std::uint32_t* component_count) {
  constexpr auto kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.size();
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> calls;  // vertex, next edge
  std::uint32_t next_index = 0;
  std::uint32_t count = 0;

  const auto open = [&](std::uint32_t v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    calls.emplace_back(v, 0);
  };

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    open(root);
    while (!calls.empty()) {
      const std::uint32_t v = calls.back().first;
      const auto succ = g.successors(v);
      if (calls.back().second < succ.size()) {
        const std::uint32_t w = succ[calls.back().second++];
        if (index[w] == kUnvisited) {
          open(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      calls.pop_back();
      if (!calls.empty()) {
        const std::uint32_t u = calls.back().first;
        low[u] = std::min(low[u], low[v]);
      }
    }
  }
  if (component_count != nullptr) *component_count = count;
  return comp;
}

namespace {

struct Component {
  std::uint32_t id;
  std::size_t begin;  // into the member array
  std::size_t end;
  std::size_t min_degree;
  std::size_t max_degree;
};

}  // namespace

SpectralBracket spectral_bracket(const Digraph& g, const SpectralOptions& options) {
  if (!(options.tolerance > 0)) throw std::invalid_argument("spectral tolerance must be positive");
  const std::size_t max_iterations = options.max_iterations == 0 ? 1000 : options.max_iterations;
  const std::size_t n = g.size();

  std::uint32_t count = 0;
  const auto comp = strongly_connected_components(g, &count);

  // Members grouped by component (counting sort).
  std::vector<std::size_t> start(count + 1, 0);
  for (const auto c : comp) ++start[c + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::uint32_t> members(n);
  {
    auto fill = start;
    for (std::uint32_t v = 0; v < n; ++v) members[fill[comp[v]]++] = v;
  }

  std::vector<Component> cyclic;
  for (std::uint32_t c = 0; c < count; ++c) {
    Component info{c, start[c], start[c + 1], std::numeric_limits<std::size_t>::max(), 0};
    for (std::size_t m = info.begin; m < info.end; ++m) {
      std::size_t degree = 0;
      for (const auto w : g.successors(members[m])) degree += comp[w] == c ? 1 : 0;
      info.min_degree = std::min(info.min_degree, degree);
      info.max_degree = std::max(info.max_degree, degree);
    }
    if (info.max_degree > 0) cyclic.push_back(info);
  }
  std::sort(cyclic.begin(), cyclic.end(), [](const Component& x, const Component& y) {
    if (x.max_degree != y.max_degree) return x.max_degree > y.max_degree;
    return (x.end - x.begin) > (y.end - y.begin);
  });

  SpectralBracket best;
  std::vector<double> v;
  std::vector<double> w;
  for (const auto& c : cyclic) {
    if (static_cast<double>(c.max_degree) <= best.lower) continue;

    if (c.min_degree == c.max_degree) {
      // constant internal row sums: the all-ones vector is a Perron vector
      const auto r = static_cast<double>(c.max_degree);
      best.estimate = std::max(best.estimate, r);
      best.lower = std::max(best.lower, r);
      best.upper = std::max(best.upper, r);
      continue;
    }

    if (v.empty()) {
      v.assign(n, 0.0);
      w.assign(n, 0.0);
    }
    const auto size = static_cast<double>(c.end - c.begin);
    for (std::size_t m = c.begin; m < c.end; ++m) v[members[m]] = 1.0 / size;

    double lo = 0.0;
    double hi = 0.0;
    double estimate = 0.0;
    bool converged = false;
    std::size_t it = 0;
    while (it < max_iterations && !converged) {
      ++it;
      lo = std::numeric_limits<double>::infinity();
      hi = 0.0;
      double total = 0.0;
      for (std::size_t m = c.begin; m < c.end; ++m) {
        const auto i = members[m];
        double acc = v[i];
        for (const auto j : g.successors(i)) {
          if (comp[j] == c.id) acc += v[j];
        }
        w[i] = acc;
        const double ratio = acc / v[i];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        total += acc;
      }
      estimate = total;  // v sums to 1
      for (std::size_t m = c.begin; m < c.end; ++m) v[members[m]] = w[members[m]] / total;
      converged = hi - lo <= options.tolerance * std::max(1.0, estimate);
    }
    // brackets above are for A + I
    best.estimate = std::max(best.estimate, estimate - 1.0);
    best.lower = std::max(best.lower, lo - 1.0);
    best.upper = std::max(best.upper, hi - 1.0);
    best.iterations += it;
    best.converged = best.converged && converged;
  }
  return best;
}

double spectral_radius(const Digraph& g, const SpectralOptions& options) {
  const auto b = spectral_bracket(g, options);
  if (!b.converged) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "power iteration did not converge; spectral radius in [" << b.lower << ", " << b.upper << "]";
    throw ConvergenceError(msg.str(), b.lower, b.upper);
  }
  return b.estimate;
}

std::vector<std::uint64_t> walk_counts_from(const Digraph& g, std::uint32_t start, std::size_t n_max) {
  if (start >= g.size()) throw std::out_of_range("start vertex out of range");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> x(g.size(), 1);
  std::vector<std::uint64_t> y(g.size(), 0);
  std::vector<std::uint64_t> out;
  out.reserve(n_max);
  for (std::size_t step = 0; step < n_max; ++step) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t acc = 0;
      for (const auto j : g.successors(i)) acc = (acc > kMax - x[j]) ? kMax : acc + x[j];
      y[i] = acc;
    }
    std::swap(x, y);
    out.push_back(x[start]);
  }
  return out;
}

}  // namespace holedim
