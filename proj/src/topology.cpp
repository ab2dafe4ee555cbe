// SPDX-License-Identifier: Apache-2.0

#include "coqa/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "coqa/errors.hpp"
#include "text_util.hpp"

namespace coqa {

// ---------------------------------------------------------------------------
// CouplingMap

CouplingMap::CouplingMap(int num_qubits, std::vector<std::pair<int, int>> links)
    : m_(num_qubits), adj_(static_cast<std::size_t>(std::max(num_qubits, 0))) {
  if (num_qubits < 0) throw ParameterError("coupling map: negative qubit count");
  for (auto& [a, b] : links) {
    if (a < 0 || b < 0 || a >= m_ || b >= m_) {
      throw ParameterError("coupling map: link (" + std::to_string(a) + ", " + std::to_string(b) +
                           ") out of range");
    }
    if (a == b) throw ParameterError("coupling map: self-loop on qubit " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  links_ = std::move(links);
  for (auto [a, b] : links_) {
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool CouplingMap::has_link(int a, int b) const {
  if (a < 0 || a >= m_) return false;
  const auto& row = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(row.begin(), row.end(), b);
}

bool CouplingMap::is_connected() const {
  if (m_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(m_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == m_;
}

// ---------------------------------------------------------------------------
// Heavy-hex

CouplingMap build_heavy_hex(int rows, int cols) {
  if (rows < 1 || cols < 0) throw ParameterError("heavy-hex: need rows >= 1 and cols >= 0");
  const int width = 4 * cols + 3;
  auto bridge_cols = [&](int k) {
    std::vector<int> out;
    for (int c = (k % 2 == 0) ? 0 : 2; c < width; c += 4) out.push_back(c);
    return out;
  };
  auto present = [&](int r, int c) {
    if (rows < 2) return true;
    if (r == 0 && c == width - 1) return false;
    if (r == rows - 1) {
      const int dropped = ((rows - 2) % 2 == 1) ? 0 : width - 1;
      if (c == dropped) return false;
    }
    return true;
  };

  HeavyHexGeometry geo;
  geo.rows = rows;
  geo.width = width;
  geo.row_qubits.assign(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(width), -1));
  std::vector<std::pair<int, int>> links;
  int next = 0;
  for (int r = 0; r < rows; ++r) {
    auto& row = geo.row_qubits[static_cast<std::size_t>(r)];
    int prev = -1;
    for (int c = 0; c < width; ++c) {
      if (!present(r, c)) continue;
      row[static_cast<std::size_t>(c)] = next;
      if (prev >= 0) links.emplace_back(prev, next);
      prev = next++;
    }
    if (r + 1 == rows) break;
    // Bridge ids come before the next row's, as on IBM devices.
    for (int c : bridge_cols(r)) {
      HeavyHexGeometry::Bridge b;
      b.qubit = next++;
      b.upper_row = r;
      b.column = c;
      b.upper = row[static_cast<std::size_t>(c)];
      geo.bridges.push_back(b);
    }
  }
  for (auto& b : geo.bridges) {
    b.lower = geo.row_qubits[static_cast<std::size_t>(b.upper_row + 1)][static_cast<std::size_t>(b.column)];
    links.emplace_back(b.upper, b.qubit);
    links.emplace_back(b.qubit, b.lower);
  }
  CouplingMap cm(next, std::move(links));
  cm.set_geometry(std::move(geo));
  return cm;
}

// ---------------------------------------------------------------------------
// LinearLayout

LinearLayout::LinearLayout(std::vector<int> backbone, std::vector<Dangler> danglers)
    : backbone_(std::move(backbone)), danglers_(std::move(danglers)) {
  int bound = 0;
  for (int q : backbone_) bound = std::max(bound, q + 1);
  for (const auto& d : danglers_) bound = std::max(bound, d.qubit + 1);
  label_.assign(static_cast<std::size_t>(bound), -1);

  const int nb = static_cast<int>(backbone_.size());
  for (std::size_t k = 0; k < danglers_.size(); ++k) {
    const auto& d = danglers_[k];
    if (d.position < 0 || d.position >= nb) {
      throw ParameterError("layout: dangler position " + std::to_string(d.position) +
                           " outside the backbone");
    }
    if (k > 0 && d.position <= danglers_[k - 1].position) {
      throw ParameterError("layout: dangler positions must be strictly increasing");
    }
  }

  auto add_site = [&](int q, int pos, bool dangler) {
    if (q < 0) throw ParameterError("layout: negative qubit id");
    auto& slot = label_[static_cast<std::size_t>(q)];
    if (slot >= 0) throw ParameterError("layout: qubit " + std::to_string(q) + " used twice");
    slot = static_cast<int>(sites_.size());
    sites_.push_back(Site{q, pos, dangler});
  };
  std::size_t next_dangler = 0;
  for (int p = 0; p < nb; ++p) {
    add_site(backbone_[static_cast<std::size_t>(p)], p, false);
    if (next_dangler < danglers_.size() && danglers_[next_dangler].position == p) {
      add_site(danglers_[next_dangler].qubit, p, true);
      ++next_dangler;
    }
  }
}

int LinearLayout::label_of(int qubit) const {
  if (qubit < 0 || qubit >= id_bound()) return -1;
  return label_[static_cast<std::size_t>(qubit)];
}

std::vector<std::pair<int, int>> LinearLayout::links() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t p = 1; p < backbone_.size(); ++p) out.emplace_back(backbone_[p - 1], backbone_[p]);
  for (const auto& d : danglers_) out.emplace_back(backbone_[static_cast<std::size_t>(d.position)], d.qubit);
  return out;
}

bool LinearLayout::has_link(int a, int b) const {
  const int la = label_of(a);
  const int lb = label_of(b);
  if (la < 0 || lb < 0 || la == lb) return false;
  const auto& sa = sites_[static_cast<std::size_t>(la)];
  const auto& sb = sites_[static_cast<std::size_t>(lb)];
  if (sa.dangler && sb.dangler) return false;
  if (sa.dangler || sb.dangler) return sa.position == sb.position;
  return std::abs(sa.position - sb.position) == 1;
}

LinearLayout LinearLayout::trimmed(int n) const {
  if (n < 0) throw ParameterError("layout: negative trim size");
  if (n > capacity()) {
    throw CapacityError("layout holds " + std::to_string(capacity()) + " qubits, " +
                        std::to_string(n) + " requested");
  }
  std::vector<int> bb;
  std::vector<Dangler> dg;
  for (int l = 0; l < n; ++l) {
    const auto& s = sites_[static_cast<std::size_t>(l)];
    if (s.dangler) {
      dg.push_back(Dangler{s.position, s.qubit});
    } else {
      bb.push_back(s.qubit);
    }
  }
  return LinearLayout(std::move(bb), std::move(dg));
}

void LinearLayout::check_against(const CouplingMap& cm) const {
  for (const auto& s : sites_) {
    if (s.qubit >= cm.num_qubits()) {
      throw LinearizationError("layout qubit " + std::to_string(s.qubit) + " not in coupling map");
    }
  }
  for (auto [a, b] : links()) {
    if (!cm.has_link(a, b)) {
      throw LinearizationError("layout link (" + std::to_string(a) + ", " + std::to_string(b) +
                               ") not in coupling map");
    }
  }
}

// ---------------------------------------------------------------------------
// linearize

namespace {

LinearLayout serpentine(const HeavyHexGeometry& geo, const LinearizeOptions& opts) {
  const int w = geo.width;
  std::vector<int> backbone;
  std::vector<int> pos_of;
  auto push = [&](int q) {
    if (q < 0) return;
    if (static_cast<int>(pos_of.size()) <= q) pos_of.resize(static_cast<std::size_t>(q) + 1, -1);
    pos_of[static_cast<std::size_t>(q)] = static_cast<int>(backbone.size());
    backbone.push_back(q);
  };
  auto turning_col = [&](int k) { return (k % 2 == 0) ? 0 : w - 1; };
  auto bridge_at = [&](int k, int c) -> const HeavyHexGeometry::Bridge* {
    for (const auto& b : geo.bridges) {
      if (b.upper_row == k && b.column == c) return &b;
    }
    return nullptr;
  };

  for (int r = 0; r < geo.rows; ++r) {
    const auto& row = geo.row_qubits[static_cast<std::size_t>(r)];
    if (r % 2 == 0) {
      for (int c = w - 1; c >= 0; --c) push(row[static_cast<std::size_t>(c)]);
    } else {
      for (int c = 0; c < w; ++c) push(row[static_cast<std::size_t>(c)]);
    }
    if (r + 1 < geo.rows) {
      const auto* b = bridge_at(r, turning_col(r));
      if (b == nullptr) throw LinearizationError("heavy-hex geometry lacks a turning bridge");
      push(b->qubit);
    }
  }

  std::vector<Dangler> danglers;
  for (const auto& b : geo.bridges) {
    if (b.column == turning_col(b.upper_row)) continue;
    BridgeSide side = opts.side;
    if (auto it = opts.side_by_column.find(b.column); it != opts.side_by_column.end()) side = it->second;
    const int attach = side == BridgeSide::upper ? b.upper : b.lower;
    danglers.push_back(Dangler{pos_of[static_cast<std::size_t>(attach)], b.qubit});
  }
  std::sort(danglers.begin(), danglers.end(),
            [](const Dangler& a, const Dangler& b) { return a.position < b.position; });
  for (std::size_t k = 1; k < danglers.size(); ++k) {
    if (danglers[k].position == danglers[k - 1].position) {
      throw LinearizationError("bridge side choice puts two danglers on backbone qubit " +
                               std::to_string(backbone[static_cast<std::size_t>(danglers[k].position)]));
    }
  }
  return LinearLayout(std::move(backbone), std::move(danglers));
}

/// Depth-first search for a simple path whose complement can be hung off it
/// as degree-1 danglers, at most one per path vertex.
class PathSearch {
 public:
  PathSearch(const CouplingMap& cm, long budget)
      : cm_(cm), n_(cm.num_qubits()), budget_(budget), on_path_(static_cast<std::size_t>(n_), 0) {}

  std::optional<LinearLayout> run() {
    std::vector<int> starts;
    for (int v = 0; v < n_; ++v) {
      if (cm_.degree(v) == 1) starts.push_back(v);
    }
    for (int v = 0; v < n_; ++v) {
      if (cm_.degree(v) != 1) starts.push_back(v);
    }
    for (int s : starts) {
      if (extend(s)) return result_;
      if (budget_ <= 0) break;
    }
    return std::nullopt;
  }

  [[nodiscard]] int stranded() const noexcept { return stranded_; }

 private:
  bool extend(int v) {
    if (--budget_ < 0) return false;
    path_.push_back(v);
    on_path_[static_cast<std::size_t>(v)] = 1;

    std::vector<int> next;
    for (int u : cm_.neighbors(v)) {
      if (!on_path_[static_cast<std::size_t>(u)]) next.push_back(u);
    }
    // Fewest onward moves first; ties to the lower id.
    std::sort(next.begin(), next.end(), [&](int a, int b) {
      const int fa = free_degree(a);
      const int fb = free_degree(b);
      return fa != fb ? fa < fb : a < b;
    });

    bool done = false;
    if (next.empty()) {
      done = try_finish(false);
    } else if (try_finish(true)) {
      for (int u : next) {
        if (extend(u)) {
          done = true;
          break;
        }
        if (budget_ < 0) break;
      }
    }
    if (!done) {
      on_path_[static_cast<std::size_t>(v)] = 0;
      path_.pop_back();
    }
    return done;
  }

  int free_degree(int v) const {
    int k = 0;
    for (int u : cm_.neighbors(v)) k += on_path_[static_cast<std::size_t>(u)] ? 0 : 1;
    return k;
  }

  /// With `partial`, only checks the vertices that can no longer join the
  /// path. Otherwise every off-path vertex must be matched, and on success
  /// the layout is stored.
  bool try_finish(bool partial) {
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (std::size_t p = 0; p < path_.size(); ++p) pos[static_cast<std::size_t>(path_[p])] = static_cast<int>(p);
    std::vector<int> off;
    for (int v = 0; v < n_; ++v) {
      if (on_path_[static_cast<std::size_t>(v)]) continue;
      if (partial && free_degree(v) > 0) continue;
      off.push_back(v);
    }
    std::vector<int> match_of_pos(path_.size(), -1);
    for (int v : off) {
      std::vector<char> seen(path_.size(), 0);
      if (!augment(v, pos, match_of_pos, seen)) {
        if (stranded_ < 0) stranded_ = v;
        return false;
      }
    }
    if (partial) return true;
    std::vector<Dangler> dg;
    for (std::size_t p = 0; p < path_.size(); ++p) {
      if (match_of_pos[p] >= 0) dg.push_back(Dangler{static_cast<int>(p), match_of_pos[p]});
    }
    result_ = LinearLayout(path_, std::move(dg));
    return true;
  }

  bool augment(int v, const std::vector<int>& pos, std::vector<int>& match_of_pos,
               std::vector<char>& seen) {
    for (int u : cm_.neighbors(v)) {
      const int p = pos[static_cast<std::size_t>(u)];
      if (p < 0 || seen[static_cast<std::size_t>(p)]) continue;
      seen[static_cast<std::size_t>(p)] = 1;
      if (match_of_pos[static_cast<std::size_t>(p)] < 0 ||
          augment(match_of_pos[static_cast<std::size_t>(p)], pos, match_of_pos, seen)) {
        match_of_pos[static_cast<std::size_t>(p)] = v;
        return true;
      }
    }
    return false;
  }

  const CouplingMap& cm_;
  int n_;
  long budget_;
  std::vector<char> on_path_;
  std::vector<int> path_;
  LinearLayout result_;
  int stranded_ = -1;
};

}  // namespace

LinearLayout linearize(const CouplingMap& cm, const LinearizeOptions& opts) {
  if (cm.geometry()) {
    auto layout = serpentine(*cm.geometry(), opts);
    layout.check_against(cm);
    return layout;
  }
  const int n = cm.num_qubits();
  if (n == 0) return {};
  if (!cm.is_connected()) {
    for (int v = 0; v < n; ++v) {
      if (cm.degree(v) == 0) {
        throw LinearizationError("qubit " + std::to_string(v) + " has no links");
      }
    }
    throw LinearizationError("coupling map is not connected");
  }
  PathSearch search(cm, opts.search_budget);
  if (auto layout = search.run()) return *layout;
  if (search.stranded() >= 0) {
    throw LinearizationError("qubit " + std::to_string(search.stranded()) +
                             " is neither on a backbone line nor a dangler of one");
  }
  throw LinearizationError("no backbone-with-danglers decomposition found within search budget");
}

LinearLayout synthetic_line(int n_backbone, int dangler_stride) {
  if (n_backbone < 0 || dangler_stride < 0) throw ParameterError("synthetic line: negative size");
  std::vector<int> backbone;
  std::vector<Dangler> danglers;
  int next = 0;
  for (int p = 0; p < n_backbone; ++p) {
    backbone.push_back(next++);
    if (dangler_stride > 0 && p % dangler_stride == dangler_stride - 1) {
      danglers.push_back(Dangler{p, next++});
    }
  }
  return LinearLayout(std::move(backbone), std::move(danglers));
}

CouplingMap layout_coupling_map(const LinearLayout& layout) {
  return CouplingMap(layout.id_bound(), layout.links());
}

// ---------------------------------------------------------------------------
// I/O

CouplingMap load_coupling_map(std::string_view text) {
  int m = -1;
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> links;
  detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    if (m < 0) {
      if (line.substr(0, 2) != "m=" || !detail::parse_number(detail::trim(line.substr(2)), m) || m < 0) {
        m = -1;
        throw ParseError("expected header 'm=<int>'", lineno);
      }
      return;
    }
    const auto toks = detail::split_ws(line);
    int a = 0;
    int b = 0;
    if (toks.size() != 2 || !detail::parse_number(toks[0], a) || !detail::parse_number(toks[1], b)) {
      throw ParseError("expected '<a> <b>'", lineno);
    }
    if (a < 0 || b < 0 || a >= m || b >= m) throw ParseError("qubit id out of range", lineno);
    if (a == b) throw ParseError("self-loop on qubit " + std::to_string(a), lineno);
    if (!seen.insert(std::minmax(a, b)).second) throw ParseError("duplicate link", lineno);
    links.emplace_back(a, b);
  });
  if (m < 0) throw ParseError("missing header 'm=<int>'", 0);
  return CouplingMap(m, std::move(links));
}

std::string save_coupling_map(const CouplingMap& cm) {
  std::ostringstream out;
  out << "m=" << cm.num_qubits() << '\n';
  for (auto [a, b] : cm.links()) out << a << ' ' << b << '\n';
  return out.str();
}

LinearLayout load_layout(std::string_view text) {
  std::vector<int> backbone;
  std::vector<Dangler> danglers;
  detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    const auto toks = detail::split_ws(line);
    if (toks[0] == "backbone") {
      for (std::size_t k = 1; k < toks.size(); ++k) {
        int q = 0;
        if (!detail::parse_number(toks[k], q) || q < 0) throw ParseError("bad qubit id", lineno);
        backbone.push_back(q);
      }
    } else if (toks[0] == "dangler") {
      Dangler d;
      if (toks.size() != 3 || !detail::parse_number(toks[1], d.position) ||
          !detail::parse_number(toks[2], d.qubit) || d.qubit < 0) {
        throw ParseError("expected 'dangler <pos> <id>'", lineno);
      }
      danglers.push_back(d);
    } else {
      throw ParseError("unknown directive '" + std::string(toks[0]) + "'", lineno);
    }
  });
  try {
    return LinearLayout(std::move(backbone), std::move(danglers));
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string save_layout(const LinearLayout& layout) {
  std::ostringstream out;
  out << "backbone";
  for (int q : layout.backbone()) out << ' ' << q;
  out << '\n';
  for (const auto& d : layout.danglers()) out << "dangler " << d.position << ' ' << d.qubit << '\n';
  return out.str();
}

}  // namespace coqa
