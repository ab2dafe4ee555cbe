// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coqa {

/// Row/bridge structure remembered by build_heavy_hex so that linearize can
/// lay the serpentine without searching.
struct HeavyHexGeometry {
  struct Bridge {
    int qubit = -1;
    int upper_row = 0;  ///< the bridge links row `upper_row` and `upper_row + 1`
    int column = 0;
    int upper = -1;  ///< qubit id in the upper row
    int lower = -1;  ///< qubit id in the lower row
  };

  int rows = 0;
  int width = 0;  ///< columns per long row
  /// rows x width; -1 where a corner qubit is absent.
  std::vector<std::vector<int>> row_qubits;
  std::vector<Bridge> bridges;
};

/// Undirected physical connectivity of a device.
class CouplingMap {
 public:
  CouplingMap() = default;
  /// Links are normalized to (min, max), sorted and deduplicated. Self-loops
  /// and out-of-range ids throw ParameterError.
  CouplingMap(int num_qubits, std::vector<std::pair<int, int>> links);

  [[nodiscard]] int num_qubits() const noexcept { return m_; }
  [[nodiscard]] const std::vector<std::pair<int, int>>& links() const noexcept { return links_; }
  [[nodiscard]] bool has_link(int a, int b) const;
  [[nodiscard]] const std::vector<int>& neighbors(int q) const {
    return adj_.at(static_cast<std::size_t>(q));
  }
  [[nodiscard]] int degree(int q) const { return static_cast<int>(neighbors(q).size()); }
  [[nodiscard]] bool is_connected() const;

  [[nodiscard]] const std::optional<HeavyHexGeometry>& geometry() const noexcept {
    return geometry_;
  }
  void set_geometry(HeavyHexGeometry g) { geometry_ = std::move(g); }

  friend bool operator==(const CouplingMap& a, const CouplingMap& b) {
    return a.m_ == b.m_ && a.links_ == b.links_;
  }

 private:
  int m_ = 0;
  std::vector<std::pair<int, int>> links_;
  std::vector<std::vector<int>> adj_;
  std::optional<HeavyHexGeometry> geometry_;
};

/// Heavy-hex lattice with `rows` long rows of width 4*cols+3, joined by
/// bridge qubits every four columns (offset 0 and 2 alternating), with the
/// two unbridged corners removed. (7, 3) is the 127-qubit Eagle geometry.
[[nodiscard]] CouplingMap build_heavy_hex(int rows, int cols);

/// A degree-1 qubit hanging off backbone position `position`.
struct Dangler {
  int position = 0;
  int qubit = 0;
  friend bool operator==(const Dangler&, const Dangler&) = default;
};

/// One entry of the label order: backbone qubits in line order, each
/// dangler directly after the backbone qubit it hangs from.
struct Site {
  int qubit = 0;     ///< physical id
  int position = 0;  ///< backbone position (of the attachment, for danglers)
  bool dangler = false;
};

/// Backbone line plus degree-1 danglers.
///
/// Labels are consecutive along the backbone, and a dangler is labelled
/// right after the line qubit it hangs from. Appending another group of
/// qubits therefore never changes an existing label.
class LinearLayout {
 public:
  LinearLayout() = default;
  /// Validates the structural invariants (distinct qubits, strictly
  /// increasing dangler positions inside the backbone).
  LinearLayout(std::vector<int> backbone, std::vector<Dangler> danglers);

  [[nodiscard]] const std::vector<int>& backbone() const noexcept { return backbone_; }
  [[nodiscard]] const std::vector<Dangler>& danglers() const noexcept { return danglers_; }
  [[nodiscard]] int capacity() const noexcept {
    return static_cast<int>(backbone_.size() + danglers_.size());
  }
  /// Sites indexed by label.
  [[nodiscard]] const std::vector<Site>& sites() const noexcept { return sites_; }
  /// Physical id -> label, -1 for qubits outside the layout.
  [[nodiscard]] int label_of(int qubit) const;
  [[nodiscard]] int qubit_of(int label) const {
    return sites_.at(static_cast<std::size_t>(label)).qubit;
  }
  /// Largest physical id used, plus one.
  [[nodiscard]] int id_bound() const noexcept { return static_cast<int>(label_.size()); }

  /// Links the layout keeps: backbone neighbours and dangler attachments.
  [[nodiscard]] std::vector<std::pair<int, int>> links() const;
  [[nodiscard]] bool has_link(int a, int b) const;

  /// Layout restricted to the first `n` labels.
  [[nodiscard]] LinearLayout trimmed(int n) const;

  /// Throws LinearizationError if a layout link is missing from `cm`.
  void check_against(const CouplingMap& cm) const;

  friend bool operator==(const LinearLayout& a, const LinearLayout& b) {
    return a.backbone_ == b.backbone_ && a.danglers_ == b.danglers_;
  }

 private:
  std::vector<int> backbone_;
  std::vector<Dangler> danglers_;
  std::vector<Site> sites_;
  std::vector<int> label_;
};

enum class BridgeSide { upper, lower };

struct LinearizeOptions {
  /// Which row keeps its link to a non-turning bridge qubit.
  BridgeSide side = BridgeSide::upper;
  /// Per-column override of `side`.
  std::map<int, BridgeSide> side_by_column;
  /// Node budget for the search used on maps without heavy-hex geometry.
  long search_budget = 2'000'000;
};

/// Removal-only transform of `cm` into a backbone line with danglers.
///
/// Maps from build_heavy_hex are laid out as a serpentine through the long
/// rows (first row right-to-left, then alternating) with the turning bridges
/// on the backbone and every other bridge as a dangler. Other maps go
/// through a bounded search for a spanning path-plus-leaves structure.
[[nodiscard]] LinearLayout linearize(const CouplingMap& cm, const LinearizeOptions& opts = {});

/// `n_backbone` line qubits with a dangler after every `stride`-th one
/// (stride 0: none). Physical ids equal labels.
[[nodiscard]] LinearLayout synthetic_line(int n_backbone, int dangler_stride);

/// Coupling map made of exactly the layout's links.
[[nodiscard]] CouplingMap layout_coupling_map(const LinearLayout& layout);

/// `m=<int>` header then one `<a> <b>` link per line.
[[nodiscard]] CouplingMap load_coupling_map(std::string_view text);
[[nodiscard]] std::string save_coupling_map(const CouplingMap& cm);

/// `backbone <id>...` (may repeat, appending) and `dangler <pos> <id>` lines.
[[nodiscard]] LinearLayout load_layout(std::string_view text);
[[nodiscard]] std::string save_layout(const LinearLayout& layout);

}  // namespace coqa
