// SPDX-License-Identifier: Apache-2.0

#include "coqa/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coqa/errors.hpp"
#include "coqa/problem_graph.hpp"
#include "text_util.hpp"

namespace coqa {

std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::RX: return "rx";
    case GateKind::ZZ: return "zz";
    case GateKind::SWAP: return "swap";
    case GateKind::ZZSWAP: return "zzswap";
  }
  return "?";
}

Circuit::Circuit(int n_physical) : n_(n_physical) {
  if (n_physical < 0) throw ParameterError("circuit: negative qubit count");
}

void Circuit::add(const Gate& g) {
  const bool two = g.kind == GateKind::ZZ || g.kind == GateKind::SWAP || g.kind == GateKind::ZZSWAP;
  auto in_range = [&](int q) { return q >= 0 && q < n_; };
  if (!in_range(g.a)) throw ParameterError("gate operand " + std::to_string(g.a) + " out of range");
  if (two) {
    if (!in_range(g.b)) throw ParameterError("gate operand " + std::to_string(g.b) + " out of range");
    if (g.a == g.b) throw ParameterError("two-qubit gate on a single qubit");
  } else if (g.b != -1) {
    throw ParameterError("single-qubit gate with two operands");
  }
  if (g.has_zz() && (!g.prov || g.prov->w == 0.0)) {
    throw ParameterError("ZZ gate without nonzero-weight provenance");
  }
  gates_.push_back(g);
}

CountMode parse_count_mode(std::string_view s) {
  if (s == "abstract") return CountMode::abstract;
  if (s == "cx") return CountMode::cx;
  throw ParameterError("unknown count mode '" + std::string(s) + "'");
}

int two_qubit_depth(const Circuit& c) {
  std::vector<int> level(static_cast<std::size_t>(c.num_qubits()), 0);
  int depth = 0;
  for (const auto& g : c.gates()) {
    if (!g.two_qubit()) continue;
    auto& la = level[static_cast<std::size_t>(g.a)];
    auto& lb = level[static_cast<std::size_t>(g.b)];
    const int l = std::max(la, lb) + 1;
    la = lb = l;
    depth = std::max(depth, l);
  }
  return depth;
}

int two_qubit_count(const Circuit& c, CountMode mode) {
  int total = 0;
  for (const auto& g : c.gates()) {
    if (!g.two_qubit()) continue;
    if (mode == CountMode::abstract) {
      ++total;
    } else {
      total += g.kind == GateKind::ZZ ? 2 : 3;
    }
  }
  return total;
}

int count_kind(const Circuit& c, GateKind k) {
  return static_cast<int>(std::count_if(c.gates().begin(), c.gates().end(),
                                        [k](const Gate& g) { return g.kind == k; }));
}

void fuse_zz_swap_in_place(std::vector<Gate>& gates, int num_qubits) {
  const std::size_t n = gates.size();
  // next_a[k], next_b[k]: index of the next gate after k touching gate k's
  // first or second operand.
  std::vector<std::size_t> next_a(n, n);
  std::vector<std::size_t> next_b(n, n);
  std::vector<std::size_t> last(static_cast<std::size_t>(num_qubits), n);
  for (std::size_t k = n; k-- > 0;) {
    const auto& g = gates[k];
    next_a[k] = last[static_cast<std::size_t>(g.a)];
    if (g.two_qubit()) next_b[k] = last[static_cast<std::size_t>(g.b)];
    last[static_cast<std::size_t>(g.a)] = k;
    if (g.two_qubit()) last[static_cast<std::size_t>(g.b)] = k;
  }

  std::vector<char> dropped(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& g = gates[k];
    if (dropped[k] || !g.two_qubit() || g.kind == GateKind::ZZSWAP) continue;
    const std::size_t nx = next_a[k];
    if (nx == n || nx != next_b[k] || dropped[nx]) continue;
    const auto& h = gates[nx];
    if (!h.two_qubit() || std::minmax(h.a, h.b) != std::minmax(g.a, g.b)) continue;
    const Gate* zz = nullptr;
    if (g.kind == GateKind::ZZ && h.kind == GateKind::SWAP) zz = &g;
    if (g.kind == GateKind::SWAP && h.kind == GateKind::ZZ) zz = &h;
    if (zz == nullptr) continue;
    gates[k] = Gate::zzswap(zz->a, zz->b, zz->angle, *zz->prov);
    dropped[nx] = 1;
  }
  std::size_t out = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (dropped[k]) continue;
    if (out != k) gates[out] = std::move(gates[k]);
    ++out;
  }
  gates.resize(out);
}

Circuit fuse_zz_swap(const Circuit& c) {
  Circuit out = c;
  fuse_zz_swap_in_place(out.mutable_gates(), c.num_qubits());
  return out;
}

std::string export_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << c.num_qubits() << "];\n";
  auto q = [](int i) { return "q[" + std::to_string(i) + "]"; };
  for (const auto& g : c.gates()) {
    const std::string th = format_double(g.angle);
    switch (g.kind) {
      case GateKind::H:
        out << "h " << q(g.a) << ";\n";
        break;
      case GateKind::RX:
        out << "rx(" << th << ") " << q(g.a) << ";\n";
        break;
      case GateKind::ZZ:
        out << "cx " << q(g.a) << "," << q(g.b) << ";\n";
        out << "rz(" << th << ") " << q(g.b) << ";\n";
        out << "cx " << q(g.a) << "," << q(g.b) << ";\n";
        break;
      case GateKind::SWAP:
        out << "swap " << q(g.a) << "," << q(g.b) << ";\n";
        break;
      case GateKind::ZZSWAP:
        out << "cx " << q(g.a) << "," << q(g.b) << ";\n";
        out << "rz(" << th << ") " << q(g.b) << ";\n";
        out << "cx " << q(g.b) << "," << q(g.a) << ";\n";
        out << "cx " << q(g.a) << "," << q(g.b) << ";\n";
        break;
    }
  }
  return out.str();
}

std::string save_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.num_qubits() << '\n';
  for (const auto& g : c.gates()) {
    out << to_string(g.kind) << ' ' << g.a;
    if (g.two_qubit()) out << ' ' << g.b;
    if (g.kind == GateKind::RX || g.has_zz()) out << ' ' << format_double(g.angle);
    if (g.has_zz()) {
      out << ' ' << g.prov->i << ' ' << g.prov->j << ' ' << format_double(g.prov->w) << ' '
          << g.prov->layer;
    }
    out << '\n';
  }
  return out.str();
}

Circuit load_circuit(std::string_view text) {
  std::optional<Circuit> c;
  detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    const auto t = detail::split_ws(line);
    if (!c) {
      int n = 0;
      if (t.size() != 2 || t[0] != "qubits" || !detail::parse_number(t[1], n) || n < 0) {
        throw ParseError("expected header 'qubits <n>'", lineno);
      }
      c.emplace(n);
      return;
    }
    auto num = [&](std::size_t k, auto& out) {
      if (k >= t.size() || !detail::parse_number(t[k], out)) {
        throw ParseError("bad field " + std::to_string(k) + " in '" + std::string(line) + "'", lineno);
      }
    };
    Gate g;
    std::size_t expect = 0;
    if (t[0] == "h") {
      g.kind = GateKind::H;
      expect = 2;
    } else if (t[0] == "rx") {
      g.kind = GateKind::RX;
      expect = 3;
    } else if (t[0] == "swap") {
      g.kind = GateKind::SWAP;
      expect = 3;
    } else if (t[0] == "zz") {
      g.kind = GateKind::ZZ;
      expect = 8;
    } else if (t[0] == "zzswap") {
      g.kind = GateKind::ZZSWAP;
      expect = 8;
    } else {
      throw ParseError("unknown gate '" + std::string(t[0]) + "'", lineno);
    }
    if (t.size() != expect) throw ParseError("wrong field count for " + std::string(t[0]), lineno);
    num(1, g.a);
    std::size_t k = 2;
    if (g.kind != GateKind::H && g.kind != GateKind::RX) num(k++, g.b);
    if (g.kind == GateKind::RX || g.has_zz()) num(k++, g.angle);
    if (g.has_zz()) {
      Provenance p;
      num(k++, p.i);
      num(k++, p.j);
      num(k++, p.w);
      num(k++, p.layer);
      g.prov = p;
    }
    try {
      c->add(g);
    } catch (const ParameterError& e) {
      throw ParseError(e.what(), lineno);
    }
  });
  if (!c) throw ParseError("missing header 'qubits <n>'", 0);
  return *c;
}

}  // namespace coqa
