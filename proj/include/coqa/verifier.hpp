// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coqa/circuit.hpp"
#include "coqa/problem_graph.hpp"
#include "coqa/router.hpp"
#include "coqa/topology.hpp"

namespace coqa {

struct LayerEdge {
  int i = 0;
  int j = 0;
  int layer = 0;
  friend auto operator<=>(const LayerEdge&, const LayerEdge&) = default;
};

struct IllegalGate {
  std::size_t index = 0;
  int a = 0;
  int b = -1;
  std::string reason;
};

struct AuditReport {
  std::vector<LayerEdge> covered;  ///< one entry per ZZ-bearing gate, sorted
  std::vector<LayerEdge> missing;
  std::vector<LayerEdge> extra;
  std::vector<IllegalGate> illegal;
  std::optional<std::string> mapping_mismatch;
  int gate_total = 0;  ///< two-qubit gates audited
  bool pass = false;

  /// Keys in fixed order: pass, covered, missing, extra, illegal,
  /// mapping_mismatch.
  [[nodiscard]] std::string to_json(int indent = 2) const;
};

/// Replays `r.circuit` from `r.initial_mapping` and checks link legality,
/// that each ZZ acts on the pair its provenance names with angle
/// 2*gamma*w, that every edge is hit once per layer, and that the replay
/// ends in `r.final_mapping`.
[[nodiscard]] AuditReport audit(const ProblemGraph& g, const RouteResult& r, const LinearLayout& layout);

/// U = P * diag(exp(i phi(x))) with phi(x) = -sum_{a<b} coeff[a,b] z_a z_b,
/// z = +-1. Keys and `perm` are in terms of input wires.
struct PhasePoly {
  int n = 0;
  std::vector<int> perm;  ///< input wire -> output wire
  std::map<std::pair<int, int>, double> coeff;
};

/// Throws ScopeError on H/RX gates or more than 24 wires.
[[nodiscard]] PhasePoly phase_poly_of(const Circuit& c);

/// Coefficients rekeyed by logical pair through `initial`.
[[nodiscard]] std::map<std::pair<int, int>, double> logical_coefficients(const PhasePoly& pp,
                                                                         const Mapping& initial);

/// True if the logical coefficients equal sum_layers gamma*w for every edge
/// (and zero elsewhere) within `tol`, and the permutation matches the
/// mapping change from `initial` to `final_mapping`.
[[nodiscard]] bool phase_poly_matches(const PhasePoly& pp, const ProblemGraph& g,
                                      const std::vector<double>& gammas, const Mapping& initial,
                                      const Mapping& final_mapping, double tol = 1e-12);

/// Compares both circuits column by column on all 2^n basis states, up to
/// global phase. Only ZZ/SWAP/ZZSWAP; n <= 14, otherwise ScopeError.
[[nodiscard]] bool statevector_equiv(const Circuit& c1, const Circuit& c2, int n, double tol = 1e-9);

}  // namespace coqa
