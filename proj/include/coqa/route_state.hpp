// SPDX-License-Identifier: Apache-2.0

// Internal state of the swap-network router, exposed for white-box tests.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "coqa/problem_graph.hpp"
#include "coqa/topology.hpp"

namespace coqa::detail {

/// Gate on layout labels. For ZZ, (i, j) is the logical pair.
struct LabelOp {
  bool zz = false;
  int a = 0;
  int b = 0;
  int i = -1;
  int j = -1;
};

/// The brickwork runs over virtual slots 0..n-1 (layout labels). A dangler
/// label and its attachment label form a cell: their slots meet through a
/// relabel, and an outside crossing needs the slot's qubit on the backbone.
///
/// Each qubit follows a trajectory of the always-swap network. Skipping a
/// crossing exchanges the two trajectories; this is allowed only when every
/// partner still uncovered meets the new trajectory later.
class RouteState {
 public:
  /// `layout` must hold exactly g.num_nodes() labels. `placement[label]` is
  /// the logical qubit starting there.
  RouteState(const ProblemGraph& g, const LinearLayout& layout, const std::vector<int>& placement);

  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] int occupant(int label) const { return occ_[static_cast<std::size_t>(label)]; }
  [[nodiscard]] int site_of(int q) const { return where_[static_cast<std::size_t>(q)]; }
  [[nodiscard]] int remaining() const noexcept { return left_; }
  [[nodiscard]] bool uncovered(int x, int y) const;
  [[nodiscard]] const std::vector<LabelOp>& ops() const noexcept { return ops_; }
  [[nodiscard]] int round() const noexcept { return r_; }
  [[nodiscard]] bool exhausted() const noexcept { return r_ >= n_; }
  [[nodiscard]] int skipped() const noexcept { return skipped_; }

  /// SWAP the dangler occupant with the backbone qubit above it, then emit
  /// ZZ for every newly adjacent uncovered pair around both sites.
  void step_dangling(int dangler_label);

  /// Two qubits with more uncovered partners than this between them are
  /// never exchanged, which keeps each check O(1).
  static constexpr std::size_t kSkipScanLimit = 64;

  /// True if the next crossing may be skipped without losing coverage.
  [[nodiscard]] bool can_skip() const;
  /// Processes the next crossing. `skip` must only be set when can_skip().
  /// With `truncate`, the swap that would follow the last cover is dropped.
  void step(bool prune, bool skip, bool truncate);

 private:
  struct Tables {
    int n = 0;
    std::vector<std::int16_t> meet;  ///< n*n, round where two trajectories cross
    std::vector<std::vector<int>> nbrs;  ///< label neighbours
    std::vector<int> cell;    ///< partner slot or -1
    std::vector<int> attach;  ///< attachment label of a dangler, else -1
  };

  [[nodiscard]] bool adjacent(int la, int lb) const;
  [[nodiscard]] bool safe(int x, int y, int t) const;
  void cover(int x, int y);
  void check_pair(int la, int lb);
  void check_around(int l);
  void phys_swap(int la, int lb);
  void advance();

  std::shared_ptr<const Tables> t_;
  int n_ = 0;
  std::vector<int> occ_;    // label -> qubit
  std::vector<int> where_;  // qubit -> label
  std::vector<int> vq_;     // slot -> qubit
  std::vector<int> tr_;     // qubit -> trajectory
  std::vector<std::vector<int>> partners_;  // uncovered partners per qubit
  std::vector<std::int16_t> ppos_;  // n*n index into partners_, -1 when covered
  std::vector<std::uint64_t> open_;  // n rows of bits, set while uncovered
  std::size_t words_ = 0;            // words per open_ row
  int left_ = 0;
  std::vector<LabelOp> ops_;
  int r_ = 0;
  int j_ = 0;
  int skipped_ = 0;
};

}  // namespace coqa::detail
