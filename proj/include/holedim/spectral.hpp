#pragma once

// Perron root of 0/1 transition relations by power iteration.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace holedim {

/// Directed graph in compressed sparse row form. An edge i -> j is a 1 in
/// row i, column j of the adjacency matrix.
class Digraph {
 public:
  Digraph() : offsets_{0} {}

  /// Builds from per-vertex successor lists.
  static Digraph from_adjacency(const std::vector<std::vector<std::uint32_t>>& successors);

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  std::span<const std::uint32_t> successors(std::size_t v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  /// Appends a vertex whose successors are given; targets may refer to
  /// vertices that are added later.
  void add_vertex(std::span<const std::uint32_t> successors);

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

struct SpectralOptions {
  double tolerance = 1e-12;
  /// Per strongly connected component; 0 selects 1000.
  std::size_t max_iterations = 0;
};

/// Enclosure lower <= rho <= upper of the spectral radius, from
/// Collatz-Wielandt ratios of the final iterate, plus the sum-normalized
/// estimate. `converged` is false when some component hit the iteration cap.
struct SpectralBracket {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
};

/// Spectral radius of the adjacency matrix of `g`.
///
/// The graph is split into strongly connected components; the radius is the
/// largest radius of a component carrying a cycle, so an acyclic relation
/// yields exactly 0. Each component is iterated with A + I, which is
/// primitive on an irreducible block, and stops once its bracket is narrower
/// than the tolerance. Components whose maximum internal out-degree cannot
/// beat the best lower bound found so far are skipped.
SpectralBracket spectral_bracket(const Digraph& g, const SpectralOptions& options = {});

/// As spectral_bracket, but throws ConvergenceError (carrying the bracket)
/// when the iteration cap is reached.
double spectral_radius(const Digraph& g, const SpectralOptions& options = {});

/// Component id per vertex (Tarjan, iterative); ids are in reverse
/// topological order of the condensation.
std::vector<std::uint32_t> strongly_connected_components(const Digraph& g, std::uint32_t* component_count = nullptr);

/// Number of walks of length n = 1..n_max starting at `start`, i.e. the
/// entry `start` of A^n 1. Saturates at UINT64_MAX.
std::vector<std::uint64_t> walk_counts_from(const Digraph& g, std::uint32_t start, std::size_t n_max);

}  // namespace holedim
