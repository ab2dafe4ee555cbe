// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace coqa {

/// One ZZ term of the cost Hamiltonian, always stored with `i < j`.
struct Edge {
  int i = 0;
  int j = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted undirected graph over logical qubits 0..n-1.
///
/// Edges are kept sorted by (i, j) and unique. A weight of exactly zero means
/// "no interaction", so such pairs are never stored.
class ProblemGraph {
 public:
  ProblemGraph() = default;
  explicit ProblemGraph(int n);

  [[nodiscard]] int num_nodes() const noexcept { return n_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Inserts or overwrites the weight on {a, b}. Weight 0 removes the edge.
  void set_weight(int a, int b, double w);
  [[nodiscard]] double weight(int a, int b) const;
  [[nodiscard]] bool has_edge(int a, int b) const;

  [[nodiscard]] std::vector<int> degrees() const;
  /// Neighbour lists, each sorted ascending.
  [[nodiscard]] std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const ProblemGraph&, const ProblemGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Draws the weight for a freshly generated edge.
using WeightSampler = std::function<double(std::mt19937_64&)>;

/// Weight 1.0 for every edge.
[[nodiscard]] WeightSampler unit_weights();
/// Uniform on (0, 1], platform independent.
[[nodiscard]] WeightSampler uniform_weights();

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
/// Used instead of std::uniform_real_distribution, whose output is not
/// pinned by the standard.
[[nodiscard]] double uniform01(std::mt19937_64& rng);
/// Unbiased integer in [0, bound) by rejection.
[[nodiscard]] std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

[[nodiscard]] ProblemGraph gen_erdos_renyi(int n, double p, std::uint64_t seed,
                                           const WeightSampler& weights = unit_weights());

/// Random k-regular graph via the pairing model, rejecting self-loops and
/// multi-edges. Throws GenerationError after `max_retries` rejected pairings.
[[nodiscard]] ProblemGraph gen_k_regular(int n, int k, std::uint64_t seed,
                                         const WeightSampler& weights = unit_weights(),
                                         int max_retries = 1000);

[[nodiscard]] ProblemGraph gen_clique(int n);

/// Line-based edge list: `n=<int>` header, then `<i> <j> <w>` per line.
/// `#` starts a comment, blank lines are ignored.
[[nodiscard]] ProblemGraph load_graph(std::string_view text);
/// Canonical form: header, then edges in ascending (i, j), weights printed
/// with round-trip precision.
[[nodiscard]] std::string save_graph(const ProblemGraph& g);

/// Shortest decimal text that parses back to exactly `v`.
[[nodiscard]] std::string format_double(double v);

}  // namespace coqa
