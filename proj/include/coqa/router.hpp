// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "coqa/circuit.hpp"
#include "coqa/problem_graph.hpp"
#include "coqa/topology.hpp"

namespace coqa {

/// Logical <-> physical assignment. `phys2log` spans every physical id the
/// layout uses; unused ids hold -1.
struct Mapping {
  std::vector<int> log2phys;
  std::vector<int> phys2log;

  static Mapping from_log2phys(std::vector<int> log2phys, int n_physical);
  void apply_swap(int pa, int pb);
  [[nodiscard]] bool consistent() const;

  friend bool operator==(const Mapping&, const Mapping&) = default;
};

enum class Placement { identity, degree_sorted };

[[nodiscard]] Placement parse_placement(std::string_view s);

struct RouteOptions {
  int layers = 1;
  /// Per-layer gamma; missing entries fall back to `gamma`.
  std::vector<double> gammas;
  double gamma = 1.0;
  /// Mixer angle parameter, used with `full_ansatz` (RX(2 beta)).
  std::vector<double> betas;
  double beta = 1.0;
  Placement placement = Placement::identity;
  /// Skip crossings whose swap no remaining interaction needs.
  bool prune = true;
  /// Roll both choices forward at each skippable crossing and keep the
  /// cheaper one. -1: only for graphs with at most `lookahead_max_n` nodes.
  int lookahead = -1;
  int lookahead_max_n = 40;
  bool fuse = true;
  bool restore_permutation = false;
  bool full_ansatz = false;
};

struct RouteStats {
  int swap_count = 0;  ///< SWAP and ZZSWAP gates
  int zz_count = 0;    ///< ZZ and ZZSWAP gates
  int depth = 0;
  int elided_swaps = 0;     ///< removed by the dead-SWAP pass
  int skipped_crossings = 0;
  int termination_step = 0;  ///< brick rounds entered before coverage completed
};

struct RouteResult {
  Circuit circuit;
  Mapping initial_mapping;
  Mapping final_mapping;
  RouteStats stats;
  int layers = 1;
  std::vector<double> gammas;  ///< one per layer
};

/// Mapping placing logical qubits on the first g.n layout labels.
/// identity: logical k on label k. degree_sorted: lowest-degree qubits on
/// the dangler labels, the rest on the backbone in id order.
[[nodiscard]] Mapping initial_placement(const ProblemGraph& g, const LinearLayout& layout,
                                        Placement mode = Placement::identity);

/// Schedules every edge of `g`, once per layer, on `layout`.
/// Throws CapacityError if g has more nodes than the layout.
[[nodiscard]] RouteResult route(const ProblemGraph& g, const LinearLayout& layout,
                                const RouteOptions& opts = {});

/// Same swap pattern run to completion without skipping or trimming. The
/// SWAP count depends only on the node count and the layout.
[[nodiscard]] RouteResult route_baseline_clique_pattern(const ProblemGraph& g,
                                                        const LinearLayout& layout,
                                                        const RouteOptions& opts = {});

/// Drops every SWAP that no later ZZ depends on. Returns how many went.
int eliminate_dead_swaps(Circuit& c);

/// Replays the SWAP parts of `c` onto `m`.
[[nodiscard]] Mapping replay_mapping(const Circuit& c, Mapping m);

}  // namespace coqa
