// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coqa {

enum class GateKind { H, RX, ZZ, SWAP, ZZSWAP };

[[nodiscard]] std::string_view to_string(GateKind k);

/// Which problem-graph term a ZZ-bearing gate implements.
struct Provenance {
  int i = 0;
  int j = 0;
  double w = 0.0;
  int layer = 0;  ///< QAOA layer, 0-based
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// ZZ(theta) is exp(-i theta/2 Z(x)Z); ZZSWAP applies ZZ(theta) then SWAP.
struct Gate {
  GateKind kind = GateKind::SWAP;
  int a = 0;
  int b = -1;  ///< -1 for single-qubit gates
  double angle = 0.0;
  std::optional<Provenance> prov;

  static Gate h(int q) { return {GateKind::H, q, -1, 0.0, std::nullopt}; }
  static Gate rx(int q, double theta) { return {GateKind::RX, q, -1, theta, std::nullopt}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, a, b, 0.0, std::nullopt}; }
  static Gate zz(int a, int b, double theta, Provenance p) { return {GateKind::ZZ, a, b, theta, p}; }
  static Gate zzswap(int a, int b, double theta, Provenance p) {
    return {GateKind::ZZSWAP, a, b, theta, p};
  }

  [[nodiscard]] bool two_qubit() const noexcept { return b >= 0; }
  [[nodiscard]] bool has_zz() const noexcept {
    return kind == GateKind::ZZ || kind == GateKind::ZZSWAP;
  }
  [[nodiscard]] bool has_swap() const noexcept {
    return kind == GateKind::SWAP || kind == GateKind::ZZSWAP;
  }
  [[nodiscard]] bool touches(int q) const noexcept { return a == q || b == q; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_physical);

  [[nodiscard]] int num_qubits() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Gate>& gates() const noexcept { return gates_; }
  [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
  [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

  /// Throws ParameterError on bad arity, out-of-range or equal operands, or
  /// a ZZ-bearing gate without a nonzero-weight provenance.
  void add(const Gate& g);
  /// Unchecked access for passes that rewrite the gate list.
  std::vector<Gate>& mutable_gates() noexcept { return gates_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
};

enum class CountMode { abstract, cx };

/// "abstract" or "cx"; anything else throws ParameterError.
[[nodiscard]] CountMode parse_count_mode(std::string_view s);

/// ASAP layer count over two-qubit gates only.
[[nodiscard]] int two_qubit_depth(const Circuit& c);
/// abstract: 1 per two-qubit gate. cx: ZZ 2, SWAP 3, ZZSWAP 3.
[[nodiscard]] int two_qubit_count(const Circuit& c, CountMode mode);
[[nodiscard]] int count_kind(const Circuit& c, GateKind k);

/// Merges each ZZ(a,b) with a SWAP(a,b) that follows or precedes it with
/// nothing else on a or b in between.
[[nodiscard]] Circuit fuse_zz_swap(const Circuit& c);
void fuse_zz_swap_in_place(std::vector<Gate>& gates, int num_qubits);

/// OpenQASM 2.0 text.
[[nodiscard]] std::string export_qasm(const Circuit& c);

/// Native gate list: `qubits <n>` header, then one gate per line
/// (`h q`, `rx q theta`, `swap a b`, `zz a b theta i j w layer`,
/// `zzswap a b theta i j w layer`). Round-trips exactly.
[[nodiscard]] std::string save_circuit(const Circuit& c);
[[nodiscard]] Circuit load_circuit(std::string_view text);

}  // namespace coqa
