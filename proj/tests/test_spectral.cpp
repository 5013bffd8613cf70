#include <doctest.h>

#include "holedim/errors.hpp"
#include "holedim/spectral.hpp"

#include <cmath>
#include <random>

using namespace holedim;

namespace {

Digraph complete(std::uint32_t j) {
  std::vector<std::vector<std::uint32_t>> adj(j);
  for (auto& row : adj) {
    for (std::uint32_t v = 0; v < j; ++v) row.push_back(v);
  }
  return Digraph::from_adjacency(adj);
}

// 0 -> {0, 2}, 2 -> 1, 1 -> 0: characteristic polynomial x^3 - x^2 - 1.
Digraph u2() { return Digraph::from_adjacency({{0, 2}, {0}, {1}}); }

}  // namespace

TEST_CASE("full shifts have integer radius") {
  for (std::uint32_t j = 1; j <= 8; ++j) {
    const auto b = spectral_bracket(complete(j));
    CHECK(b.lower == doctest::Approx(j).epsilon(1e-14));
    CHECK(b.upper == doctest::Approx(j).epsilon(1e-14));
    CHECK(b.converged);
  }
}

TEST_CASE("radius of the U_2 graph") {
  const auto b = spectral_bracket(u2());
  CHECK(b.lower <= 1.4655712318767682);
  CHECK(b.upper >= 1.4655712318767680);
  CHECK(spectral_radius(u2()) == doctest::Approx(1.4655712318767682).epsilon(1e-11));
}

TEST_CASE("acyclic and empty relations have radius zero") {
  CHECK(spectral_radius(Digraph()) == 0.0);
  CHECK(spectral_radius(Digraph::from_adjacency({{1}, {2}, {}})) == 0.0);
  CHECK(spectral_radius(Digraph::from_adjacency({{}, {}})) == 0.0);
}

TEST_CASE("a single loop has radius one") {
  CHECK(spectral_radius(Digraph::from_adjacency({{0}})) == 1.0);
  CHECK(spectral_radius(Digraph::from_adjacency({{1}, {0}})) == doctest::Approx(1.0));
}

TEST_CASE("the largest component wins") {
  // a golden-mean block feeding a single loop
  const auto g = Digraph::from_adjacency({{0, 1}, {0, 2}, {2}});
  CHECK(spectral_radius(g) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-11));
}

TEST_CASE("strongly connected components") {
  std::uint32_t count = 0;
  const auto comp = strongly_connected_components(Digraph::from_adjacency({{1}, {0, 2}, {3}, {2}, {}}), &count);
  CHECK(count == 3);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[2] == comp[3]);
  CHECK(comp[0] != comp[2]);
  CHECK(comp[4] != comp[0]);
  CHECK(comp[4] != comp[2]);
}

TEST_CASE("walk counts") {
  CHECK(walk_counts_from(u2(), 0, 8) == std::vector<std::uint64_t>{2, 3, 4, 6, 9, 13, 19, 28});
  const auto c = walk_counts_from(complete(2), 0, 70);
  CHECK(c[62] == std::uint64_t{1} << 63);
  CHECK(c[69] == UINT64_MAX);
}

TEST_CASE("the bracket encloses the radius of random graphs") {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::uint32_t n = 2 + t % 10;
    std::vector<std::vector<std::uint32_t>> adj(n);
    std::bernoulli_distribution edge(0.35);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (edge(rng)) adj[i].push_back(j);
      }
    }
    const auto g = Digraph::from_adjacency(adj);
    const auto b = spectral_bracket(g);
    CHECK(b.lower <= b.upper);
    // growth rate of total walks approximates the radius from both sides
    double total = 0;
    for (std::uint32_t v = 0; v < n; ++v) total += static_cast<double>(walk_counts_from(g, v, 60).back());
    if (total > 0) {
      CHECK(std::pow(total, 1.0 / 60) <= std::pow(static_cast<double>(n), 1.0 / 60) * b.upper * 1.3 + 1e-9);
    }
  }
}

TEST_CASE("the iteration cap raises with the bracket") {
  SpectralOptions tight;
  tight.tolerance = 1e-300;
  tight.max_iterations = 3;
  try {
    spectral_radius(u2(), tight);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.lower() <= 1.4655712318767682);
    CHECK(e.upper() >= 1.4655712318767680);
  }
}
