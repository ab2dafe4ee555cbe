// SPDX-License-Identifier: Apache-2.0

#include "coqa/problem_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "coqa/errors.hpp"
#include "text_util.hpp"

namespace coqa {

namespace {

template <class Edges>
auto find_edge(Edges& edges, int i, int j) {
  return std::lower_bound(edges.begin(), edges.end(), std::pair{i, j},
                          [](const Edge& e, const std::pair<int, int>& key) {
                            return std::pair{e.i, e.j} < key;
                          });
}

void check_node(int n, int v) {
  if (v < 0 || v >= n) {
    throw ParameterError("node index " + std::to_string(v) + " out of range for n=" +
                         std::to_string(n));
  }
}

}  // namespace

ProblemGraph::ProblemGraph(int n) : n_(n) {
  if (n < 0) throw ParameterError("node count must be non-negative");
}

void ProblemGraph::set_weight(int a, int b, double w) {
  check_node(n_, a);
  check_node(n_, b);
  if (a == b) throw ParameterError("self-loop on node " + std::to_string(a));
  if (!std::isfinite(w)) throw ParameterError("edge weight must be finite");
  const int i = std::min(a, b);
  const int j = std::max(a, b);
  auto it = find_edge(edges_, i, j);
  const bool present = it != edges_.end() && it->i == i && it->j == j;
  if (w == 0.0) {
    if (present) edges_.erase(it);
    return;
  }
  if (present) {
    it->w = w;
  } else {
    edges_.insert(it, Edge{i, j, w});
  }
}

double ProblemGraph::weight(int a, int b) const {
  if (a == b) return 0.0;
  const int i = std::min(a, b);
  const int j = std::max(a, b);
  auto it = find_edge(edges_, i, j);
  return (it != edges_.end() && it->i == i && it->j == j) ? it->w : 0.0;
}

bool ProblemGraph::has_edge(int a, int b) const { return weight(a, b) != 0.0; }

std::vector<int> ProblemGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) {
    ++deg[static_cast<std::size_t>(e.i)];
    ++deg[static_cast<std::size_t>(e.j)];
  }
  return deg;
}

std::vector<std::vector<int>> ProblemGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e.i)].push_back(e.j);
    adj[static_cast<std::size_t>(e.j)].push_back(e.i);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ParameterError("uniform_below: empty range");
  // Rejection on the tail keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

WeightSampler unit_weights() {
  return [](std::mt19937_64&) { return 1.0; };
}

WeightSampler uniform_weights() {
  return [](std::mt19937_64& rng) { return 1.0 - uniform01(rng); };
}

ProblemGraph gen_erdos_renyi(int n, double p, std::uint64_t seed, const WeightSampler& weights) {
  if (n < 1) throw ParameterError("erdos-renyi: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("erdos-renyi: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  ProblemGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform01(rng) < p) g.set_weight(i, j, weights(rng));
    }
  }
  return g;
}

ProblemGraph gen_k_regular(int n, int k, std::uint64_t seed, const WeightSampler& weights,
                           int max_retries) {
  if (n < 1 || k < 0) throw ParameterError("k-regular: n must be >= 1 and k >= 0");
  if (k >= n) throw ParameterError("k-regular: k must be smaller than n");
  if ((static_cast<long long>(n) * k) % 2 != 0) throw ParameterError("k-regular: n*k must be even");

  std::mt19937_64 rng(seed);
  const auto un = static_cast<std::size_t>(n);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    // Pairing model, drawing one suitable stub pair at a time so that dense
    // configurations (e.g. n=25, k=10) do not need astronomically many
    // whole-pairing restarts.
    std::vector<int> stubs;
    stubs.reserve(un * static_cast<std::size_t>(k));
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(k), v);
    std::vector<std::vector<char>> linked(un, std::vector<char>(un, 0));
    std::vector<std::pair<int, int>> pairs;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      bool placed = false;
      for (int tries = 0; tries < 64 && !placed; ++tries) {
        const auto a = uniform_below(rng, stubs.size());
        auto b = uniform_below(rng, stubs.size() - 1);
        if (b >= a) ++b;
        const int u = stubs[a];
        const int v = stubs[b];
        if (u == v || linked[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
        linked[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        linked[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
        pairs.emplace_back(u, v);
        // Erase the higher index first so the lower one stays valid.
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(std::max(a, b)));
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(std::min(a, b)));
        placed = true;
      }
      if (!placed) {
        // Only give up on this pairing if no suitable pair is left at all.
        bool any = false;
        for (std::size_t a = 0; a < stubs.size() && !any; ++a) {
          for (std::size_t b = a + 1; b < stubs.size() && !any; ++b) {
            const int u = stubs[a];
            const int v = stubs[b];
            any = u != v && !linked[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
          }
        }
        stuck = !any;
      }
    }
    if (stuck) continue;
    ProblemGraph g(n);
    std::sort(pairs.begin(), pairs.end(), [](auto x, auto y) {
      return std::minmax(x.first, x.second) < std::minmax(y.first, y.second);
    });
    for (auto [u, v] : pairs) g.set_weight(u, v, weights(rng));
    return g;
  }
  throw GenerationError("k-regular: no simple pairing found after " +
                        std::to_string(max_retries) + " attempts");
}

ProblemGraph gen_clique(int n) {
  if (n < 1) throw ParameterError("clique: n must be >= 1");
  ProblemGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.set_weight(i, j, 1.0);
  }
  return g;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ProblemGraph load_graph(std::string_view text) {
  std::optional<ProblemGraph> g;
  detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    if (!g) {
      if (line.substr(0, 2) != "n=") throw ParseError("expected header 'n=<int>'", lineno);
      int n = 0;
      if (!detail::parse_number(detail::trim(line.substr(2)), n) || n < 0) {
        throw ParseError("bad node count in header", lineno);
      }
      g.emplace(n);
      return;
    }
    const auto toks = detail::split_ws(line);
    if (toks.size() != 3) throw ParseError("expected '<i> <j> <w>'", lineno);
    int i = 0;
    int j = 0;
    double w = 0.0;
    if (!detail::parse_number(toks[0], i) || !detail::parse_number(toks[1], j)) {
      throw ParseError("bad node index", lineno);
    }
    if (!detail::parse_number(toks[2], w) || !std::isfinite(w)) throw ParseError("bad weight", lineno);
    if (i < 0 || j < 0 || i >= g->num_nodes() || j >= g->num_nodes()) {
      throw ParseError("node index out of range", lineno);
    }
    if (i == j) throw ParseError("self-loop on node " + std::to_string(i), lineno);
    if (g->has_edge(i, j)) throw ParseError("duplicate edge", lineno);
    g->set_weight(i, j, w);
  });
  if (!g) throw ParseError("missing header 'n=<int>'", 0);
  return *g;
}

std::string save_graph(const ProblemGraph& g) {
  std::ostringstream out;
  out << "n=" << g.num_nodes() << '\n';
  for (const auto& e : g.edges()) out << e.i << ' ' << e.j << ' ' << format_double(e.w) << '\n';
  return out.str();
}

}  // namespace coqa
