// SPDX-License-Identifier: Apache-2.0

#include "coqa/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "coqa/errors.hpp"

namespace coqa {

namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

AuditReport audit(const ProblemGraph& g, const RouteResult& r, const LinearLayout& layout) {
  AuditReport rep;
  Mapping m = r.initial_mapping;
  const int n_phys = r.circuit.num_qubits();
  const int n = g.num_nodes();
  const int layers = std::max(r.layers, 1);

  bool mapping_ok = m.consistent() && static_cast<int>(m.log2phys.size()) == n &&
                    static_cast<int>(m.phys2log.size()) >= n_phys;
  if (!mapping_ok) rep.mapping_mismatch = "initial mapping is not a bijection over the circuit";

  std::map<LayerEdge, int> seen;
  const auto& gates = r.circuit.gates();
  for (std::size_t k = 0; k < gates.size() && mapping_ok; ++k) {
    const auto& gate = gates[k];
    if (!gate.two_qubit()) continue;
    ++rep.gate_total;
    if (!layout.has_link(gate.a, gate.b)) {
      rep.illegal.push_back({k, gate.a, gate.b, "not a layout link"});
    }
    if (gate.has_zz()) {
      const int x = m.phys2log[static_cast<std::size_t>(gate.a)];
      const int y = m.phys2log[static_cast<std::size_t>(gate.b)];
      const auto& p = *gate.prov;
      if (x < 0 || y < 0 || std::minmax(x, y) != std::minmax(p.i, p.j)) {
        rep.illegal.push_back({k, gate.a, gate.b, "provenance does not match occupants"});
      }
      const LayerEdge key{std::min(p.i, p.j), std::max(p.i, p.j), p.layer};
      rep.covered.push_back(key);
      ++seen[key];
      if (p.layer < 0 || p.layer >= layers) {
        rep.illegal.push_back({k, gate.a, gate.b, "layer out of range"});
      } else {
        const double w = g.weight(p.i, p.j);
        const double gamma = static_cast<std::size_t>(p.layer) < r.gammas.size()
                                 ? r.gammas[static_cast<std::size_t>(p.layer)]
                                 : 1.0;
        if (w != 0.0 && p.w != w) {
          rep.illegal.push_back({k, gate.a, gate.b, "provenance weight differs from graph"});
        }
        if (!close(gate.angle, 2.0 * gamma * w, 1e-12)) {
          rep.illegal.push_back({k, gate.a, gate.b, "angle is not 2*gamma*w"});
        }
      }
    }
    if (gate.has_swap()) m.apply_swap(gate.a, gate.b);
  }
  std::sort(rep.covered.begin(), rep.covered.end());

  for (int layer = 0; layer < layers; ++layer) {
    for (const auto& e : g.edges()) {
      const LayerEdge key{e.i, e.j, layer};
      auto it = seen.find(key);
      const int count = it == seen.end() ? 0 : it->second;
      if (count == 0) rep.missing.push_back(key);
      for (int c = 1; c < count; ++c) rep.extra.push_back(key);
    }
  }
  for (const auto& [key, count] : seen) {
    if (!g.has_edge(key.i, key.j) || key.layer < 0 || key.layer >= layers) {
      for (int c = 0; c < count; ++c) rep.extra.push_back(key);
    }
  }
  std::sort(rep.extra.begin(), rep.extra.end());

  if (mapping_ok && !(m == r.final_mapping)) {
    for (std::size_t q = 0; q < m.log2phys.size(); ++q) {
      const int got = m.log2phys[q];
      const int want = q < r.final_mapping.log2phys.size() ? r.final_mapping.log2phys[q] : -1;
      if (got != want) {
        rep.mapping_mismatch = "logical " + std::to_string(q) + " replays to physical " +
                               std::to_string(got) + ", final mapping says " + std::to_string(want);
        break;
      }
    }
    if (!rep.mapping_mismatch) rep.mapping_mismatch = "final mapping differs from replay";
  }

  rep.pass = rep.missing.empty() && rep.extra.empty() && rep.illegal.empty() && !rep.mapping_mismatch;
  return rep;
}

std::string AuditReport::to_json(int indent) const {
  using nlohmann::ordered_json;
  auto edges = [](const std::vector<LayerEdge>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : v) arr.push_back({e.i, e.j, e.layer});
    return arr;
  };
  ordered_json j;
  j["pass"] = pass;
  j["covered"] = edges(covered);
  j["missing"] = edges(missing);
  j["extra"] = edges(extra);
  ordered_json ill = ordered_json::array();
  for (const auto& g : illegal) {
    ordered_json item;
    item["index"] = g.index;
    item["qubits"] = {g.a, g.b};
    item["reason"] = g.reason;
    ill.push_back(item);
  }
  j["illegal"] = ill;
  j["mapping_mismatch"] = mapping_mismatch ? ordered_json(*mapping_mismatch) : ordered_json(nullptr);
  return j.dump(indent);
}

PhasePoly phase_poly_of(const Circuit& c) {
  const int n = c.num_qubits();
  if (n > 24) throw ScopeError("phase polynomial limited to 24 wires");
  PhasePoly pp;
  pp.n = n;
  std::vector<int> src(static_cast<std::size_t>(n));  // output wire -> input wire
  for (int w = 0; w < n; ++w) src[static_cast<std::size_t>(w)] = w;
  for (const auto& g : c.gates()) {
    if (!g.two_qubit()) throw ScopeError("phase polynomial covers ZZ, SWAP and ZZSWAP only");
    auto& sa = src[static_cast<std::size_t>(g.a)];
    auto& sb = src[static_cast<std::size_t>(g.b)];
    if (g.has_zz()) pp.coeff[std::minmax(sa, sb)] += g.angle / 2.0;
    if (g.has_swap()) std::swap(sa, sb);
  }
  pp.perm.assign(static_cast<std::size_t>(n), -1);
  for (int w = 0; w < n; ++w) pp.perm[static_cast<std::size_t>(src[static_cast<std::size_t>(w)])] = w;
  return pp;
}

std::map<std::pair<int, int>, double> logical_coefficients(const PhasePoly& pp, const Mapping& initial) {
  std::map<std::pair<int, int>, double> out;
  for (const auto& [key, v] : pp.coeff) {
    const int x = initial.phys2log.at(static_cast<std::size_t>(key.first));
    const int y = initial.phys2log.at(static_cast<std::size_t>(key.second));
    if (x < 0 || y < 0) throw ScopeError("ZZ term on a wire with no logical qubit");
    out[std::minmax(x, y)] += v;
  }
  return out;
}

bool phase_poly_matches(const PhasePoly& pp, const ProblemGraph& g, const std::vector<double>& gammas,
                        const Mapping& initial, const Mapping& final_mapping, double tol) {
  const auto got = logical_coefficients(pp, initial);
  double gamma_sum = 0.0;
  for (double x : gammas) gamma_sum += x;
  std::map<std::pair<int, int>, double> want;
  for (const auto& e : g.edges()) want[{e.i, e.j}] = gamma_sum * e.w;
  for (const auto& [key, v] : got) {
    auto it = want.find(key);
    if (!close(v, it == want.end() ? 0.0 : it->second, tol)) return false;
  }
  for (const auto& [key, v] : want) {
    auto it = got.find(key);
    if (!close(it == got.end() ? 0.0 : it->second, v, tol)) return false;
  }
  for (std::size_t q = 0; q < initial.log2phys.size(); ++q) {
    const int from = initial.log2phys[q];
    if (from >= pp.n || pp.perm[static_cast<std::size_t>(from)] != final_mapping.log2phys.at(q)) {
      return false;
    }
  }
  return true;
}

namespace {

/// Image of basis state `x`: target index and phase angle.
std::pair<std::uint32_t, double> apply_column(const Circuit& c, std::uint32_t x) {
  double phase = 0.0;
  for (const auto& g : c.gates()) {
    const std::uint32_t ba = (x >> g.a) & 1U;
    const std::uint32_t bb = (x >> g.b) & 1U;
    if (g.has_zz()) phase += (ba == bb ? -1.0 : 1.0) * g.angle / 2.0;
    if (g.has_swap() && ba != bb) x ^= (1U << g.a) | (1U << g.b);
  }
  return {x, phase};
}

void check_sv_scope(const Circuit& c, int n) {
  for (const auto& g : c.gates()) {
    if (!g.two_qubit()) throw ScopeError("statevector_equiv covers ZZ, SWAP and ZZSWAP only");
    if (g.a >= n || g.b >= n) throw ScopeError("gate operand beyond n");
  }
}

}  // namespace

bool statevector_equiv(const Circuit& c1, const Circuit& c2, int n, double tol) {
  if (n < 0 || n > 14) throw ScopeError("statevector_equiv supports n <= 14");
  check_sv_scope(c1, n);
  check_sv_scope(c2, n);
  const std::uint32_t dim = 1U << n;
  std::complex<double> rel{0.0, 0.0};
  for (std::uint32_t x = 0; x < dim; ++x) {
    const auto [t1, p1] = apply_column(c1, x);
    const auto [t2, p2] = apply_column(c2, x);
    if (t1 != t2) return false;
    const auto a1 = std::polar(1.0, p1);
    const auto a2 = std::polar(1.0, p2);
    // Global phase fixed by the first column.
    if (x == 0) rel = a1 / a2;
    if (std::abs(a1 - rel * a2) > tol) return false;
  }
  return true;
}

}  // namespace coqa
