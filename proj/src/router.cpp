// SPDX-License-Identifier: Apache-2.0

#include "coqa/router.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "coqa/errors.hpp"
#include "coqa/route_state.hpp"

namespace coqa {

// ---------------------------------------------------------------------------
// Mapping

Mapping Mapping::from_log2phys(std::vector<int> log2phys, int n_physical) {
  Mapping m;
  m.phys2log.assign(static_cast<std::size_t>(n_physical), -1);
  for (std::size_t q = 0; q < log2phys.size(); ++q) {
    const int p = log2phys[q];
    if (p < 0 || p >= n_physical || m.phys2log[static_cast<std::size_t>(p)] >= 0) {
      throw ParameterError("mapping: physical id " + std::to_string(p) + " invalid or reused");
    }
    m.phys2log[static_cast<std::size_t>(p)] = static_cast<int>(q);
  }
  m.log2phys = std::move(log2phys);
  return m;
}

void Mapping::apply_swap(int pa, int pb) {
  auto& la = phys2log.at(static_cast<std::size_t>(pa));
  auto& lb = phys2log.at(static_cast<std::size_t>(pb));
  std::swap(la, lb);
  if (la >= 0) log2phys[static_cast<std::size_t>(la)] = pa;
  if (lb >= 0) log2phys[static_cast<std::size_t>(lb)] = pb;
}

bool Mapping::consistent() const {
  std::size_t used = 0;
  for (std::size_t p = 0; p < phys2log.size(); ++p) {
    const int q = phys2log[p];
    if (q < 0) continue;
    ++used;
    if (static_cast<std::size_t>(q) >= log2phys.size() ||
        log2phys[static_cast<std::size_t>(q)] != static_cast<int>(p)) {
      return false;
    }
  }
  return used == log2phys.size();
}

Placement parse_placement(std::string_view s) {
  if (s == "identity") return Placement::identity;
  if (s == "degree-sorted") return Placement::degree_sorted;
  throw ParameterError("unknown placement '" + std::string(s) + "'");
}

Mapping initial_placement(const ProblemGraph& g, const LinearLayout& layout, Placement mode) {
  const int n = g.num_nodes();
  const LinearLayout trimmed = layout.trimmed(n);
  std::vector<int> label_to_log(static_cast<std::size_t>(n));
  std::iota(label_to_log.begin(), label_to_log.end(), 0);
  if (mode == Placement::degree_sorted) {
    const auto deg = g.degrees();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return deg[static_cast<std::size_t>(a)] < deg[static_cast<std::size_t>(b)];
    });
    std::vector<int> dangler_labels;
    std::vector<int> backbone_labels;
    for (int l = 0; l < n; ++l) {
      (trimmed.sites()[static_cast<std::size_t>(l)].dangler ? dangler_labels : backbone_labels).push_back(l);
    }
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < dangler_labels.size(); ++k) {
      label_to_log[static_cast<std::size_t>(dangler_labels[k])] = order[k];
      placed[static_cast<std::size_t>(order[k])] = 1;
    }
    std::size_t next = 0;
    for (int q = 0; q < n; ++q) {
      if (!placed[static_cast<std::size_t>(q)]) {
        label_to_log[static_cast<std::size_t>(backbone_labels[next++])] = q;
      }
    }
  }
  std::vector<int> log2phys(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    log2phys[static_cast<std::size_t>(label_to_log[static_cast<std::size_t>(l)])] = trimmed.qubit_of(l);
  }
  return Mapping::from_log2phys(std::move(log2phys), layout.id_bound());
}

// ---------------------------------------------------------------------------
// RouteState

namespace detail {

RouteState::RouteState(const ProblemGraph& g, const LinearLayout& layout,
                       const std::vector<int>& placement)
    : n_(g.num_nodes()) {
  if (layout.capacity() != n_ || static_cast<int>(placement.size()) != n_) {
    throw ParameterError("route state: layout and placement must match the graph size");
  }
  if (n_ > std::numeric_limits<std::int16_t>::max()) {
    throw CapacityError("route state: at most 32767 logical qubits");
  }
  const auto un = static_cast<std::size_t>(n_);
  auto tables = std::make_shared<Tables>();
  tables->n = n_;

  tables->meet.assign(un * un, -1);
  std::vector<int> slot(un);
  std::iota(slot.begin(), slot.end(), 0);
  for (int r = 0; r < n_; ++r) {
    for (int j = r % 2; j + 1 < n_; j += 2) {
      const auto a = static_cast<std::size_t>(slot[static_cast<std::size_t>(j)]);
      const auto b = static_cast<std::size_t>(slot[static_cast<std::size_t>(j) + 1]);
      tables->meet[a * un + b] = tables->meet[b * un + a] = static_cast<std::int16_t>(r);
      std::swap(slot[static_cast<std::size_t>(j)], slot[static_cast<std::size_t>(j) + 1]);
    }
  }

  partners_.assign(un, {});
  ppos_.assign(un * un, -1);
  words_ = (un + 63) / 64;
  open_.assign(un * words_, 0);
  for (const auto& e : g.edges()) {
    const auto i = static_cast<std::size_t>(e.i);
    const auto j = static_cast<std::size_t>(e.j);
    open_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    open_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    ppos_[i * un + j] = static_cast<std::int16_t>(partners_[i].size());
    partners_[i].push_back(e.j);
    ppos_[j * un + i] = static_cast<std::int16_t>(partners_[j].size());
    partners_[j].push_back(e.i);
  }
  left_ = static_cast<int>(g.num_edges());

  const auto& sites = layout.sites();
  tables->nbrs.assign(un, {});
  tables->cell.assign(un, -1);
  tables->attach.assign(un, -1);
  for (int l = 0; l < n_; ++l) {
    for (int m = 0; m < n_; ++m) {
      if (l != m && layout.has_link(sites[static_cast<std::size_t>(l)].qubit, sites[static_cast<std::size_t>(m)].qubit)) {
        tables->nbrs[static_cast<std::size_t>(l)].push_back(m);
      }
    }
    if (sites[static_cast<std::size_t>(l)].dangler) {
      // The attachment is labelled right before its dangler.
      tables->attach[static_cast<std::size_t>(l)] = l - 1;
      tables->cell[static_cast<std::size_t>(l)] = l - 1;
      tables->cell[static_cast<std::size_t>(l) - 1] = l;
    }
  }
  t_ = std::move(tables);

  occ_ = placement;
  vq_ = placement;
  where_.assign(un, -1);
  tr_.assign(un, -1);
  for (int l = 0; l < n_; ++l) {
    const int q = placement[static_cast<std::size_t>(l)];
    if (q < 0 || q >= n_ || where_[static_cast<std::size_t>(q)] >= 0) {
      throw ParameterError("route state: placement is not a permutation");
    }
    where_[static_cast<std::size_t>(q)] = l;
    tr_[static_cast<std::size_t>(q)] = l;
  }

  r_ = 0;
  j_ = 0;
  if (n_ < 2) r_ = n_;
}

bool RouteState::uncovered(int x, int y) const {
  const auto ux = static_cast<std::size_t>(x);
  const auto uy = static_cast<std::size_t>(y);
  return (open_[ux * words_ + uy / 64] >> (uy % 64)) & 1U;
}

bool RouteState::adjacent(int la, int lb) const {
  const auto& nb = t_->nbrs[static_cast<std::size_t>(la)];
  return std::find(nb.begin(), nb.end(), lb) != nb.end();
}

bool RouteState::safe(int x, int y, int t) const {
  if (partners_[static_cast<std::size_t>(x)].size() + partners_[static_cast<std::size_t>(y)].size() >
      kSkipScanLimit) {
    return false;
  }
  const auto un = static_cast<std::size_t>(n_);
  const auto* meet = t_->meet.data();
  // After the exchange x rides y's trajectory and vice versa.
  const auto tx = static_cast<std::size_t>(tr_[static_cast<std::size_t>(y)]) * un;
  const auto ty = static_cast<std::size_t>(tr_[static_cast<std::size_t>(x)]) * un;
  for (int z : partners_[static_cast<std::size_t>(x)]) {
    if (z != y && meet[tx + static_cast<std::size_t>(tr_[static_cast<std::size_t>(z)])] <= t) return false;
  }
  for (int z : partners_[static_cast<std::size_t>(y)]) {
    if (z != x && meet[ty + static_cast<std::size_t>(tr_[static_cast<std::size_t>(z)])] <= t) return false;
  }
  return true;
}

void RouteState::cover(int x, int y) {
  const auto un = static_cast<std::size_t>(n_);
  auto drop = [&](int u, int v) {
    auto& list = partners_[static_cast<std::size_t>(u)];
    const auto idx = static_cast<std::size_t>(ppos_[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)]);
    const int last = list.back();
    list[idx] = last;
    ppos_[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(last)] = static_cast<std::int16_t>(idx);
    list.pop_back();
    ppos_[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)] = -1;
    open_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] &=
        ~(std::uint64_t{1} << (static_cast<std::size_t>(v) % 64));
  };
  drop(x, y);
  drop(y, x);
  --left_;
}

void RouteState::check_pair(int la, int lb) {
  const int x = occ_[static_cast<std::size_t>(la)];
  const int y = occ_[static_cast<std::size_t>(lb)];
  if (!uncovered(x, y)) return;
  cover(x, y);
  ops_.push_back(LabelOp{true, la, lb, x, y});
}

void RouteState::check_around(int l) {
  for (int m : t_->nbrs[static_cast<std::size_t>(l)]) check_pair(l, m);
}

void RouteState::phys_swap(int la, int lb) {
  ops_.push_back(LabelOp{false, la, lb, -1, -1});
  auto& x = occ_[static_cast<std::size_t>(la)];
  auto& y = occ_[static_cast<std::size_t>(lb)];
  std::swap(x, y);
  where_[static_cast<std::size_t>(x)] = la;
  where_[static_cast<std::size_t>(y)] = lb;
}

void RouteState::step_dangling(int dangler_label) {
  const int up = t_->attach.at(static_cast<std::size_t>(dangler_label));
  if (up < 0) throw ParameterError("step_dangling: label is not a dangler");
  phys_swap(dangler_label, up);
  check_around(up);
  check_around(dangler_label);
}

void RouteState::advance() {
  j_ += 2;
  while (r_ < n_ && j_ + 1 >= n_) {
    ++r_;
    j_ = r_ % 2;
  }
}

bool RouteState::can_skip() const {
  if (exhausted()) return false;
  const int a = j_;
  const int b = j_ + 1;
  if (t_->cell[static_cast<std::size_t>(a)] == b) return false;
  const int x = vq_[static_cast<std::size_t>(a)];
  const int y = vq_[static_cast<std::size_t>(b)];
  return safe(x, y, r_) &&
         (!uncovered(x, y) || adjacent(where_[static_cast<std::size_t>(x)], where_[static_cast<std::size_t>(y)]));
}

void RouteState::step(bool prune, bool skip, bool truncate) {
  const int a = j_;
  const int b = j_ + 1;
  const int r = r_;
  advance();
  auto ua = static_cast<std::size_t>(a);
  auto ub = static_cast<std::size_t>(b);
  int x = vq_[ua];
  int y = vq_[ub];

  if (t_->cell[ua] == b) {
    // Inside a cell the two slots are already linked: relabel only.
    check_pair(where_[static_cast<std::size_t>(x)], where_[static_cast<std::size_t>(y)]);
    std::swap(vq_[ua], vq_[ub]);
    return;
  }
  if (skip) {
    const int pa = where_[static_cast<std::size_t>(x)];
    const int pb = where_[static_cast<std::size_t>(y)];
    if (adjacent(pa, pb)) check_pair(pa, pb);
    std::swap(tr_[static_cast<std::size_t>(x)], tr_[static_cast<std::size_t>(y)]);
    ++skipped_;
    return;
  }
  for (int s : {a, b}) {
    const int o = t_->cell[static_cast<std::size_t>(s)];
    if (o < 0) continue;
    const int q = vq_[static_cast<std::size_t>(s)];
    const int site = where_[static_cast<std::size_t>(q)];
    if (t_->attach[static_cast<std::size_t>(site)] < 0) continue;
    const int other = vq_[static_cast<std::size_t>(o)];
    if (prune && safe(q, other, r)) {
      std::swap(vq_[static_cast<std::size_t>(s)], vq_[static_cast<std::size_t>(o)]);
      std::swap(tr_[static_cast<std::size_t>(q)], tr_[static_cast<std::size_t>(other)]);
      continue;
    }
    step_dangling(site);
  }
  x = vq_[ua];
  y = vq_[ub];
  const int pa = where_[static_cast<std::size_t>(x)];
  const int pb = where_[static_cast<std::size_t>(y)];
  check_pair(pa, pb);
  if (truncate && left_ == 0) return;
  phys_swap(pa, pb);
  std::swap(vq_[ua], vq_[ub]);
  check_around(pa);
  check_around(pb);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Circuit passes

namespace {

std::vector<char> live_mask(const std::vector<Gate>& gates, int n_phys) {
  std::vector<char> live(static_cast<std::size_t>(n_phys), 0);
  std::vector<char> keep(gates.size(), 1);
  for (std::size_t k = gates.size(); k-- > 0;) {
    const auto& g = gates[k];
    if (g.kind == GateKind::SWAP) {
      auto& la = live[static_cast<std::size_t>(g.a)];
      auto& lb = live[static_cast<std::size_t>(g.b)];
      if (la || lb) {
        la = lb = 1;
      } else {
        keep[k] = 0;
      }
      continue;
    }
    live[static_cast<std::size_t>(g.a)] = 1;
    if (g.two_qubit()) live[static_cast<std::size_t>(g.b)] = 1;
  }
  return keep;
}

}  // namespace

int eliminate_dead_swaps(Circuit& c) {
  auto& gates = c.mutable_gates();
  const auto keep = live_mask(gates, c.num_qubits());
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (std::size_t k = 0; k < gates.size(); ++k) {
    if (keep[k]) out.push_back(gates[k]);
  }
  const int removed = static_cast<int>(gates.size() - out.size());
  gates = std::move(out);
  return removed;
}

Mapping replay_mapping(const Circuit& c, Mapping m) {
  for (const auto& g : c.gates()) {
    if (g.has_swap()) m.apply_swap(g.a, g.b);
  }
  return m;
}

// ---------------------------------------------------------------------------
// route

namespace {

using detail::LabelOp;
using detail::RouteState;

/// Gate count after dead-SWAP removal and fusion, on label ids.
int pilot_score(const std::vector<LabelOp>& ops, int n) {
  Circuit c(n);
  auto& gs = c.mutable_gates();
  gs.reserve(ops.size());
  for (const auto& op : ops) {
    gs.push_back(op.zz ? Gate::zz(op.a, op.b, 1.0, Provenance{op.i, op.j, 1.0, 0})
                       : Gate::swap(op.a, op.b));
  }
  eliminate_dead_swaps(c);
  return static_cast<int>(fuse_zz_swap(c).size());
}

struct PatternRun {
  std::vector<LabelOp> ops;
  int skipped = 0;
  int rounds = 0;
};

PatternRun run_pattern(const ProblemGraph& g, const LinearLayout& trimmed,
                       const std::vector<int>& placement, bool prune, bool truncate, bool pilot) {
  RouteState st(g, trimmed, placement);
  auto finished = [&](const RouteState& s) { return s.exhausted() || (truncate && s.remaining() == 0); };
  while (!finished(st)) {
    bool skip = prune && st.can_skip();
    if (skip && pilot) {
      RouteState with = st;
      RouteState without = st;
      with.step(true, true, true);
      without.step(true, false, true);
      while (!finished(with)) with.step(true, with.can_skip(), true);
      while (!finished(without)) without.step(true, without.can_skip(), true);
      skip = pilot_score(with.ops(), g.num_nodes()) <= pilot_score(without.ops(), g.num_nodes());
    }
    st.step(prune, skip, truncate);
  }
  if (st.remaining() != 0) throw std::logic_error("swap pattern finished with uncovered edges");
  return PatternRun{st.ops(), st.skipped(), std::min(st.round() + 1, g.num_nodes())};
}

/// Leaf-by-leaf token swapping on the layout tree, highest label first.
std::vector<std::pair<int, int>> restore_swaps(const LinearLayout& trimmed, std::vector<int> occ,
                                               const std::vector<int>& target_label) {
  const int n = trimmed.capacity();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) pos[static_cast<std::size_t>(occ[static_cast<std::size_t>(l)])] = l;
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (auto [a, b] : trimmed.links()) {
    nbrs[static_cast<std::size_t>(trimmed.label_of(a))].push_back(trimmed.label_of(b));
    nbrs[static_cast<std::size_t>(trimmed.label_of(b))].push_back(trimmed.label_of(a));
  }
  std::vector<std::pair<int, int>> out;
  for (int leaf = n - 1; leaf > 0; --leaf) {
    int token = -1;
    for (int q = 0; q < n; ++q) {
      if (target_label[static_cast<std::size_t>(q)] == leaf) token = q;
    }
    int at = pos[static_cast<std::size_t>(token)];
    if (at == leaf) continue;
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::queue<int> bfs;
    bfs.push(leaf);
    parent[static_cast<std::size_t>(leaf)] = leaf;
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      for (int u : nbrs[static_cast<std::size_t>(v)]) {
        if (u <= leaf && parent[static_cast<std::size_t>(u)] < 0) {
          parent[static_cast<std::size_t>(u)] = v;
          bfs.push(u);
        }
      }
    }
    while (at != leaf) {
      const int nxt = parent[static_cast<std::size_t>(at)];
      out.emplace_back(at, nxt);
      const int other = occ[static_cast<std::size_t>(nxt)];
      std::swap(occ[static_cast<std::size_t>(at)], occ[static_cast<std::size_t>(nxt)]);
      pos[static_cast<std::size_t>(other)] = at;
      pos[static_cast<std::size_t>(token)] = nxt;
      at = nxt;
    }
  }
  return out;
}

// Appends gates while fusing ZZ/SWAP pairs on the fly and keeping depth,
// counts and the running mapping. Same result as building the list and
// running fuse_zz_swap, two_qubit_depth and replay_mapping afterwards.
class Emitter {
 public:
  Emitter(std::vector<Gate>& out, int n_phys, bool fuse, Mapping m)
      : out_(out),
        fuse_(fuse),
        last_(static_cast<std::size_t>(n_phys), kNone),
        level_(static_cast<std::size_t>(n_phys), 0),
        map_(std::move(m)) {}

  void push(Gate g) {
    const auto a = static_cast<std::size_t>(g.a);
    if (!g.two_qubit()) {
      last_[a] = out_.size();
      out_.push_back(std::move(g));
      return;
    }
    const auto b = static_cast<std::size_t>(g.b);
    if (g.has_swap()) {
      map_.apply_swap(g.a, g.b);
      ++swaps_;
    }
    if (g.has_zz()) ++zzs_;
    const std::size_t k = last_[a];
    if (fuse_ && k != kNone && k == last_[b] && merge(out_[k], g)) return;
    const int l = std::max(level_[a], level_[b]) + 1;
    level_[a] = level_[b] = l;
    depth_ = std::max(depth_, l);
    last_[a] = last_[b] = out_.size();
    out_.push_back(std::move(g));
  }

  [[nodiscard]] const Mapping& mapping() const noexcept { return map_; }
  [[nodiscard]] int depth() const noexcept { return depth_; }
  [[nodiscard]] int swaps() const noexcept { return swaps_; }
  [[nodiscard]] int zzs() const noexcept { return zzs_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  static bool merge(Gate& prev, const Gate& g) {
    if (std::minmax(prev.a, prev.b) != std::minmax(g.a, g.b)) return false;
    const Gate* zz = nullptr;
    if (prev.kind == GateKind::ZZ && g.kind == GateKind::SWAP) zz = &prev;
    if (prev.kind == GateKind::SWAP && g.kind == GateKind::ZZ) zz = &g;
    if (zz == nullptr) return false;
    prev = Gate::zzswap(zz->a, zz->b, zz->angle, *zz->prov);
    return true;
  }

  std::vector<Gate>& out_;
  bool fuse_;
  std::vector<std::size_t> last_;
  std::vector<int> level_;
  Mapping map_;
  int depth_ = 0;
  int swaps_ = 0;
  int zzs_ = 0;
};

double layer_param(const std::vector<double>& v, double fallback, int layer) {
  return static_cast<std::size_t>(layer) < v.size() ? v[static_cast<std::size_t>(layer)] : fallback;
}

RouteResult compile(const ProblemGraph& g, const LinearLayout& layout, const RouteOptions& opts,
                    bool baseline) {
  const int n = g.num_nodes();
  if (n > layout.capacity()) {
    throw CapacityError("graph has " + std::to_string(n) + " nodes, layout holds " +
                        std::to_string(layout.capacity()));
  }
  if (opts.layers < 1) throw ParameterError("layer count must be >= 1");
  const LinearLayout trimmed = layout.trimmed(n);
  const Mapping initial = initial_placement(g, layout, opts.placement);
  std::vector<int> placement(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    placement[static_cast<std::size_t>(l)] = initial.phys2log[static_cast<std::size_t>(trimmed.qubit_of(l))];
  }

  const bool prune = !baseline && opts.prune;
  const bool pilot = prune && (opts.lookahead > 0 || (opts.lookahead < 0 && n <= opts.lookahead_max_n));
  const PatternRun run = run_pattern(g, trimmed, placement, prune, !baseline, pilot);

  RouteResult res;
  res.layers = opts.layers;
  for (int l = 0; l < opts.layers; ++l) res.gammas.push_back(layer_param(opts.gammas, opts.gamma, l));

  const int n_phys = layout.id_bound();
  const std::size_t per_layer = run.ops.size();
  const std::size_t total = per_layer * static_cast<std::size_t>(opts.layers);
  // Odd layers run the previous sweep backwards.
  auto op_at = [&](std::size_t k) -> const LabelOp& {
    const std::size_t layer = k / per_layer, r = k % per_layer;
    return run.ops[layer % 2 == 0 ? r : per_layer - 1 - r];
  };

  // Dead SWAPs: nothing later reads either wire.
  std::vector<char> keep(total, 1);
  int elided = 0;
  if (!baseline) {
    std::vector<char> live(static_cast<std::size_t>(n), 0);
    for (std::size_t k = total; k-- > 0;) {
      const auto& op = op_at(k);
      auto& la = live[static_cast<std::size_t>(op.a)];
      auto& lb = live[static_cast<std::size_t>(op.b)];
      if (op.zz || la || lb) {
        la = lb = 1;
      } else {
        keep[k] = 0;
        ++elided;
      }
    }
  }

  // Edges are sorted by (i, j); index rows so weight lookups stay local.
  const auto& edges = g.edges();
  std::vector<std::size_t> row(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges) ++row[static_cast<std::size_t>(e.i) + 1];
  for (int v = 0; v < n; ++v) row[static_cast<std::size_t>(v) + 1] += row[static_cast<std::size_t>(v)];
  auto weight = [&](int i, int j) {
    const auto lo = edges.begin() + static_cast<std::ptrdiff_t>(row[static_cast<std::size_t>(i)]);
    const auto hi = edges.begin() + static_cast<std::ptrdiff_t>(row[static_cast<std::size_t>(i) + 1]);
    return std::lower_bound(lo, hi, j, [](const auto& e, int v) { return e.j < v; })->w;
  };

  Circuit c(n_phys);
  auto& gates = c.mutable_gates();
  std::vector<int> used;
  for (int l = 0; l < n; ++l) used.push_back(trimmed.qubit_of(l));
  gates.reserve(total - static_cast<std::size_t>(elided) +
                (opts.full_ansatz ? used.size() * static_cast<std::size_t>(opts.layers + 1) : 0));
  Emitter out(gates, n_phys, opts.fuse, initial);
  if (opts.full_ansatz) {
    for (int p : used) out.push(Gate::h(p));
  }
  for (int layer = 0; layer < opts.layers; ++layer) {
    const double gamma = res.gammas[static_cast<std::size_t>(layer)];
    const std::size_t base = per_layer * static_cast<std::size_t>(layer);
    for (std::size_t k = base; k < base + per_layer; ++k) {
      if (!keep[k]) continue;
      const auto& op = op_at(k);
      const int pa = trimmed.qubit_of(op.a);
      const int pb = trimmed.qubit_of(op.b);
      if (op.zz) {
        const double w = weight(std::min(op.i, op.j), std::max(op.i, op.j));
        out.push(Gate::zz(pa, pb, 2.0 * gamma * w,
                          Provenance{std::min(op.i, op.j), std::max(op.i, op.j), w, layer}));
      } else {
        out.push(Gate::swap(pa, pb));
      }
    }
    if (opts.full_ansatz) {
      const double beta = layer_param(opts.betas, opts.beta, layer);
      for (int p : used) out.push(Gate::rx(p, 2.0 * beta));
    }
  }

  if (opts.restore_permutation) {
    const Mapping& now = out.mapping();
    std::vector<int> occ(static_cast<std::size_t>(n));
    std::vector<int> target(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
      occ[static_cast<std::size_t>(l)] = now.phys2log[static_cast<std::size_t>(trimmed.qubit_of(l))];
    }
    for (int q = 0; q < n; ++q) {
      target[static_cast<std::size_t>(q)] = trimmed.label_of(initial.log2phys[static_cast<std::size_t>(q)]);
    }
    for (auto [la, lb] : restore_swaps(trimmed, occ, target)) {
      out.push(Gate::swap(trimmed.qubit_of(la), trimmed.qubit_of(lb)));
    }
  }

  res.final_mapping = out.mapping();
  res.initial_mapping = initial;
  res.stats.elided_swaps = elided;
  res.stats.skipped_crossings = run.skipped;
  res.stats.termination_step = run.rounds;
  res.stats.swap_count = out.swaps();
  res.stats.zz_count = out.zzs();
  res.stats.depth = out.depth();
  res.circuit = std::move(c);
  return res;
}

}  // namespace

RouteResult route(const ProblemGraph& g, const LinearLayout& layout, const RouteOptions& opts) {
  return compile(g, layout, opts, false);
}

RouteResult route_baseline_clique_pattern(const ProblemGraph& g, const LinearLayout& layout,
                                          const RouteOptions& opts) {
  return compile(g, layout, opts, true);
}

}  // namespace coqa
