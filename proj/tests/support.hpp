// SPDX-License-Identifier: Apache-2.0
// Shared helpers for the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coqa/circuit.hpp"
#include "coqa/router.hpp"

namespace coqa::test {

#ifdef COQA_TEST_DATA
inline std::string data_path(const std::string& name) { return std::string(COQA_TEST_DATA) + "/" + name; }
#endif

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using cplx = std::complex<double>;
using State = std::vector<cplx>;

/// Plain state-vector simulator, written separately from the verifier so the
/// two can check each other. Bit q of the index is qubit q.
class DenseSim {
 public:
  explicit DenseSim(int n) : n_(n), psi_(std::size_t{1} << n) {
    if (n > 12) throw std::invalid_argument("DenseSim: n too large");
  }

  void set_basis(std::size_t x) {
    std::fill(psi_.begin(), psi_.end(), cplx{});
    psi_[x] = 1.0;
  }
  [[nodiscard]] const State& state() const { return psi_; }

  void apply(const Gate& g) {
    switch (g.kind) {
      case GateKind::H: h(g.a); break;
      case GateKind::RX: rx(g.a, g.angle); break;
      case GateKind::ZZ: zz(g.a, g.b, g.angle); break;
      case GateKind::SWAP: swap(g.a, g.b); break;
      case GateKind::ZZSWAP:
        zz(g.a, g.b, g.angle);
        swap(g.a, g.b);
        break;
    }
  }
  void run(const Circuit& c) {
    for (const auto& g : c.gates()) apply(g);
  }

 private:
  void h(int q) {
    const std::size_t m = std::size_t{1} << q;
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t x = 0; x < psi_.size(); ++x) {
      if (x & m) continue;
      const cplx a = psi_[x], b = psi_[x | m];
      psi_[x] = s * (a + b);
      psi_[x | m] = s * (a - b);
    }
  }
  void rx(int q, double t) {
    const std::size_t m = std::size_t{1} << q;
    const cplx c{std::cos(t / 2), 0.0}, s{0.0, -std::sin(t / 2)};
    for (std::size_t x = 0; x < psi_.size(); ++x) {
      if (x & m) continue;
      const cplx a = psi_[x], b = psi_[x | m];
      psi_[x] = c * a + s * b;
      psi_[x | m] = s * a + c * b;
    }
  }
  void zz(int a, int b, double t) {
    for (std::size_t x = 0; x < psi_.size(); ++x) {
      const int za = ((x >> a) & 1U) ? -1 : 1;
      const int zb = ((x >> b) & 1U) ? -1 : 1;
      psi_[x] *= std::polar(1.0, -t / 2.0 * za * zb);
    }
  }
  void swap(int a, int b) {
    for (std::size_t x = 0; x < psi_.size(); ++x) {
      const bool ba = (x >> a) & 1U, bb = (x >> b) & 1U;
      if (ba && !bb) std::swap(psi_[x], psi_[x ^ ((std::size_t{1} << a) | (std::size_t{1} << b))]);
    }
  }

  int n_;
  State psi_;
};

/// Columns of the unitary of `c` on n qubits.
inline std::vector<State> unitary(const Circuit& c, int n) {
  DenseSim sim(n);
  std::vector<State> cols;
  for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
    sim.set_basis(x);
    sim.run(c);
    cols.push_back(sim.state());
  }
  return cols;
}

/// Equal up to one global phase.
inline bool same_unitary(const std::vector<State>& u, const std::vector<State>& v, double tol = 1e-9) {
  cplx phase{0.0, 0.0};
  for (std::size_t c = 0; c < u.size(); ++c) {
    for (std::size_t r = 0; r < u[c].size(); ++r) {
      if (std::abs(phase) == 0.0 && std::abs(v[c][r]) > 0.5) phase = u[c][r] / v[c][r];
      if (std::abs(u[c][r] - phase * v[c][r]) > tol) return false;
    }
  }
  return true;
}

/// Longest chain in the two-qubit dependency DAG, by explicit edges.
inline int dag_longest_path(const Circuit& c) {
  std::vector<const Gate*> g2;
  for (const auto& g : c.gates()) {
    if (g.two_qubit()) g2.push_back(&g);
  }
  std::vector<int> len(g2.size(), 1);
  int best = 0;
  for (std::size_t k = 0; k < g2.size(); ++k) {
    for (std::size_t p = 0; p < k; ++p) {
      const bool dep = g2[p]->touches(g2[k]->a) || g2[p]->touches(g2[k]->b);
      if (dep) len[k] = std::max(len[k], len[p] + 1);
    }
    best = std::max(best, len[k]);
  }
  return best;
}

/// Physical pairs of every ZZ-bearing gate, replayed to logical pairs.
inline std::vector<std::pair<int, int>> logical_zz_sequence(const RouteResult& r) {
  Mapping m = r.initial_mapping;
  std::vector<std::pair<int, int>> out;
  for (const auto& g : r.circuit.gates()) {
    if (!g.two_qubit()) continue;
    if (g.has_zz()) {
      const int x = m.phys2log[static_cast<std::size_t>(g.a)];
      const int y = m.phys2log[static_cast<std::size_t>(g.b)];
      out.emplace_back(std::min(x, y), std::max(x, y));
    }
    if (g.has_swap()) m.apply_swap(g.a, g.b);
  }
  return out;
}

}  // namespace coqa::test
