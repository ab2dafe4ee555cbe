// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "coqa/errors.hpp"
#include "coqa/verifier.hpp"
#include "mutation.hpp"
#include "support.hpp"

using namespace coqa;

namespace {

Provenance prov(int i, int j, double w = 1.0) { return {std::min(i, j), std::max(i, j), w, 0}; }

// Unitary predicted by a phase polynomial: phase on the input basis state,
// then the wire permutation.
std::vector<test::State> unitary_of(const PhasePoly& pp) {
  const std::size_t dim = std::size_t{1} << pp.n;
  std::vector<test::State> cols(dim, test::State(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    double phi = 0.0;
    for (const auto& [key, c] : pp.coeff) {
      const int za = ((x >> key.first) & 1U) ? -1 : 1;
      const int zb = ((x >> key.second) & 1U) ? -1 : 1;
      phi -= c * za * zb;
    }
    std::size_t y = 0;
    for (int w = 0; w < pp.n; ++w) {
      if ((x >> w) & 1U) y |= std::size_t{1} << pp.perm[static_cast<std::size_t>(w)];
    }
    cols[x][y] = std::polar(1.0, phi);
  }
  return cols;
}

}  // namespace

TEST(Audit, PassesOnRouterOutput) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_erdos_renyi(10, 0.5, seed);
    const auto l = synthetic_line(8, 4);
    const auto r = route(g, l);
    const auto rep = audit(g, r, l);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.covered.size(), g.num_edges());
    EXPECT_EQ(rep.gate_total, two_qubit_count(r.circuit, CountMode::abstract));
  }
}

TEST(Audit, JsonKeyOrder) {
  const auto g = gen_clique(4);
  const auto l = synthetic_line(4, 0);
  const auto j = nlohmann::ordered_json::parse(audit(g, route(g, l), l).to_json());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"pass", "covered", "missing", "extra", "illegal", "mapping_mismatch"}));
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_TRUE(j["mapping_mismatch"].is_null());
}

TEST(Audit, DeletedZZIsMissing) {
  const auto g = gen_erdos_renyi(8, 0.6, 2);
  const auto l = synthetic_line(8, 0);
  RouteOptions o;
  o.fuse = false;
  auto r = route(g, l, o);
  auto& gs = r.circuit.mutable_gates();
  const auto it = std::find_if(gs.begin(), gs.end(), [](const Gate& x) { return x.kind == GateKind::ZZ; });
  ASSERT_NE(it, gs.end());
  const LayerEdge lost{it->prov->i, it->prov->j, 0};
  gs.erase(it);
  const auto rep = audit(g, r, l);
  EXPECT_FALSE(rep.pass);
  ASSERT_EQ(rep.missing.size(), 1u);
  EXPECT_EQ(rep.missing[0], lost);
}

TEST(Audit, DuplicateZZIsExtra) {
  const auto g = gen_clique(3);
  const auto l = synthetic_line(3, 0);
  auto r = route(g, l);
  r.circuit.mutable_gates().insert(r.circuit.mutable_gates().begin(), r.circuit.gates().front());
  const auto rep = audit(g, r, l);
  EXPECT_FALSE(rep.pass);
}

TEST(Audit, SwapOperandChangeIsCaught) {
  const auto g = gen_clique(6);
  const auto l = synthetic_line(6, 0);
  RouteOptions o;
  o.fuse = false;
  const auto r = route(g, l, o);
  int checked = 0;
  for (std::size_t k = 0; k < r.circuit.size(); ++k) {
    const auto& gate = r.circuit.gates()[k];
    if (gate.kind != GateKind::SWAP) continue;
    auto bad = r;
    auto& target = bad.circuit.mutable_gates()[k];
    target.b = target.b + 1 < 6 && target.b + 1 != target.a ? target.b + 1 : (target.a + 5) % 6;
    EXPECT_FALSE(audit(g, bad, l).pass) << k;
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Audit, IllegalLinkAndWrongMapping) {
  ProblemGraph g(3);
  g.set_weight(0, 2, 1.0);
  const auto l = synthetic_line(3, 0);
  RouteResult r;
  r.circuit = Circuit(3);
  r.circuit.add(Gate::zz(0, 2, 2.0, prov(0, 2)));
  r.initial_mapping = r.final_mapping = Mapping::from_log2phys({0, 1, 2}, 3);
  r.gammas = {1.0};
  auto rep = audit(g, r, l);
  EXPECT_FALSE(rep.pass);
  ASSERT_EQ(rep.illegal.size(), 1u);
  EXPECT_EQ(rep.illegal[0].index, 0u);

  r.circuit = Circuit(3);
  r.circuit.add(Gate::swap(1, 2));
  r.circuit.add(Gate::zz(0, 1, 2.0, prov(0, 2)));
  rep = audit(g, r, l);
  EXPECT_TRUE(rep.illegal.empty());
  EXPECT_TRUE(rep.mapping_mismatch.has_value());
  r.final_mapping = replay_mapping(r.circuit, r.initial_mapping);
  EXPECT_TRUE(audit(g, r, l).pass);
}

TEST(Audit, WrongAngleOrWeight) {
  ProblemGraph g(2);
  g.set_weight(0, 1, 0.5);
  const auto l = synthetic_line(2, 0);
  RouteResult r;
  r.circuit = Circuit(2);
  r.circuit.add(Gate::zz(0, 1, 0.5 * 2.0 * 0.8, prov(0, 1, 0.5)));
  r.initial_mapping = r.final_mapping = Mapping::from_log2phys({0, 1}, 2);
  r.gammas = {0.8};
  EXPECT_TRUE(audit(g, r, l).pass);
  r.gammas = {0.9};
  EXPECT_FALSE(audit(g, r, l).pass);
  r.gammas = {0.8};
  r.circuit.mutable_gates()[0].prov->w = 1.0;
  EXPECT_FALSE(audit(g, r, l).pass);
}

TEST(PhasePoly, EmptyAndSingle) {
  const auto e = phase_poly_of(Circuit(3));
  EXPECT_EQ(e.perm, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(e.coeff.empty());
  Circuit c(2);
  c.add(Gate::zz(1, 0, 2.0 * 0.3 * 1.5, prov(0, 1, 1.5)));
  const auto pp = phase_poly_of(c);
  ASSERT_EQ(pp.coeff.size(), 1u);
  EXPECT_DOUBLE_EQ(pp.coeff.at({0, 1}), 0.3 * 1.5);
}

TEST(PhasePoly, SwapMovesWires) {
  Circuit c(3);
  c.add(Gate::swap(0, 1));
  c.add(Gate::zz(1, 2, 1.0, prov(1, 2)));
  const auto pp = phase_poly_of(c);
  EXPECT_EQ(pp.perm, (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(pp.coeff.count({0, 2}), 1u);
}

TEST(PhasePoly, RandomRoutesAreExact) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = gen_erdos_renyi(10, 0.5, seed, uniform_weights());
    const auto l = synthetic_line(8, 4);
    RouteOptions o;
    o.gamma = 0.1 + 0.01 * static_cast<double>(seed);
    const auto r = route(g, l, o);
    EXPECT_TRUE(phase_poly_matches(phase_poly_of(r.circuit), g, r.gammas, r.initial_mapping, r.final_mapping))
        << seed;
    EXPECT_FALSE(phase_poly_matches(phase_poly_of(r.circuit), g, {o.gamma * 1.01}, r.initial_mapping,
                                    r.final_mapping));
  }
}

TEST(PhasePoly, AgreesWithDenseSimulation) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const auto g = gen_erdos_renyi(n, 0.6, seed, uniform_weights());
    const auto l = synthetic_line(n, seed % 2 ? 4 : 0).trimmed(n);
    const auto r = route(g, l);
    const auto pp = phase_poly_of(r.circuit);
    EXPECT_TRUE(test::same_unitary(test::unitary(r.circuit, pp.n), unitary_of(pp))) << seed;
  }
}

TEST(StateVector, FusionIsEquivalent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_erdos_renyi(9, 0.5, seed);
    RouteOptions o;
    o.fuse = false;
    const auto r = route(g, synthetic_line(9, 0), o);
    EXPECT_TRUE(statevector_equiv(r.circuit, fuse_zz_swap(r.circuit), 9));
  }
}

TEST(StateVector, DetectsPerturbation) {
  const auto g = gen_erdos_renyi(8, 0.5, 1);
  const auto r = route(g, synthetic_line(8, 0));
  for (std::size_t k = 0; k < r.circuit.size(); ++k) {
    if (!r.circuit.gates()[k].has_zz()) continue;
    auto c = r.circuit;
    c.mutable_gates()[k].angle += 0.1;
    EXPECT_FALSE(statevector_equiv(r.circuit, c, 8));
  }
}

TEST(StateVector, AgreesWithDenseOnRandomPairs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_erdos_renyi(6, 0.5, seed);
    const auto l = synthetic_line(6, 0);
    const auto a = route(g, l).circuit;
    const auto b = route(gen_erdos_renyi(6, 0.5, seed + 1000), l).circuit;
    const bool dense = test::same_unitary(test::unitary(a, 6), test::unitary(b, 6));
    EXPECT_EQ(statevector_equiv(a, b, 6), dense);
    EXPECT_TRUE(statevector_equiv(a, a, 6));
  }
}

TEST(StateVector, RouteMatchesBaselineWithRestore) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    const auto g = gen_erdos_renyi(n, 0.5, seed);
    const auto l = synthetic_line(n, seed % 2 ? 4 : 0).trimmed(n);
    RouteOptions o;
    o.restore_permutation = true;
    const auto a = route(g, l, o);
    const auto b = route_baseline_clique_pattern(g, l, o);
    ASSERT_EQ(a.circuit.num_qubits(), b.circuit.num_qubits());
    EXPECT_TRUE(statevector_equiv(a.circuit, b.circuit, a.circuit.num_qubits())) << seed;
  }
}

TEST(Scope, Limits) {
  Circuit h(2);
  h.add(Gate::h(0));
  EXPECT_THROW((void)phase_poly_of(h), ScopeError);
  EXPECT_THROW((void)statevector_equiv(h, h, 2), ScopeError);
  EXPECT_THROW((void)statevector_equiv(Circuit(15), Circuit(15), 15), ScopeError);
  EXPECT_THROW((void)phase_poly_of(Circuit(25)), ScopeError);
}

TEST(Mutation, CatalogIsFullyKilled) {
  const auto catalog = nlohmann::json::parse(test::read_file(test::data_path("mutation_catalog.json")));
  const auto fixtures = test::load_fixtures(catalog);
  const auto tally = test::run_mutations(fixtures, catalog);
  EXPECT_GT(tally.total, 1000);
  EXPECT_EQ(tally.killed, tally.total);
  for (std::size_t k = 0; k < std::min<std::size_t>(tally.survivors.size(), 10); ++k) {
    ADD_FAILURE() << "survivor " << tally.survivors[k];
  }
}
