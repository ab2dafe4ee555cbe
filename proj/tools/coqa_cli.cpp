// SPDX-License-Identifier: Apache-2.0

// coqa: compile, verify, generate and benchmark QAOA cost layers.

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "coqa/bench.hpp"
#include "coqa/errors.hpp"
#include "coqa/verifier.hpp"

namespace {

enum Exit { kOk = 0, kInput = 1, kCapacity = 2, kVerify = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw coqa::ParameterError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw coqa::ParameterError("cannot write '" + path + "'");
  out << text;
}

coqa::LinearizeOptions linearize_options(const std::string& side, const std::vector<std::string>& columns) {
  auto parse_side = [](const std::string& v) {
    return v == "lower" ? coqa::BridgeSide::lower : coqa::BridgeSide::upper;
  };
  coqa::LinearizeOptions lo;
  lo.side = parse_side(side);
  for (const auto& item : columns) {
    const auto eq = item.find('=');
    const std::string v = eq == std::string::npos ? "" : item.substr(eq + 1);
    if (v != "upper" && v != "lower") throw coqa::ParameterError("bad --dangler-column '" + item + "'");
    try {
      lo.side_by_column[std::stoi(item.substr(0, eq))] = parse_side(v);
    } catch (const std::logic_error&) {
      throw coqa::ParameterError("bad --dangler-column '" + item + "'");
    }
  }
  return lo;
}

struct LayoutArgs {
  std::string spec = "line:4";
  std::string layout_file;
  std::string coupling_file;
  std::string dangler_side = "upper";
  std::vector<std::string> dangler_columns;

  void attach(CLI::App* app) {
    app->add_option("--layout", spec, "line:<stride> or heavy-hex:<rows>x<cols>");
    app->add_option("--layout-file", layout_file, "layout file (backbone/dangler lines)");
    app->add_option("--coupling", coupling_file, "coupling map file to linearize");
    app->add_option("--dangler-side", dangler_side, "upper or lower, for heavy-hex bridges")
        ->check(CLI::IsMember({"upper", "lower"}));
    app->add_option("--dangler-column", dangler_columns, "per-column override, <col>=upper|lower");
  }

  coqa::LinearLayout build(int n) const {
    if (!layout_file.empty()) return coqa::load_layout(read_file(layout_file));
    const auto lo = linearize_options(dangler_side, dangler_columns);
    if (!coupling_file.empty()) return coqa::linearize(coqa::load_coupling_map(read_file(coupling_file)), lo);
    return coqa::layout_from_spec(spec, n, lo);
  }
};

struct RouteArgs {
  int layers = 1;
  double gamma = 1.0;
  double beta = 1.0;
  std::string placement = "identity";
  bool restore = false;
  bool full_ansatz = false;
  bool no_fuse = false;
  bool no_prune = false;
  int lookahead = -1;

  void attach(CLI::App* app) {
    app->add_option("--layers,-p", layers, "QAOA layer count")->check(CLI::PositiveNumber);
    app->add_option("--gamma", gamma, "cost angle parameter");
    app->add_option("--beta", beta, "mixer angle parameter (with --full-ansatz)");
    app->add_option("--placement", placement)->check(CLI::IsMember({"identity", "degree-sorted"}));
    app->add_flag("--restore-permutation", restore, "append swaps back to the initial mapping");
    app->add_flag("--full-ansatz", full_ansatz, "emit H and RX mixer layers too");
    app->add_flag("--no-fuse", no_fuse, "keep ZZ and SWAP separate");
    app->add_flag("--no-prune", no_prune, "never skip a crossing");
    app->add_option("--lookahead", lookahead, "1 on, 0 off, -1 by size");
  }

  coqa::RouteOptions options() const {
    coqa::RouteOptions o;
    o.layers = layers;
    o.gamma = gamma;
    o.beta = beta;
    o.placement = coqa::parse_placement(placement);
    o.restore_permutation = restore;
    o.full_ansatz = full_ansatz;
    o.fuse = !no_fuse;
    o.prune = !no_prune;
    o.lookahead = lookahead;
    return o;
  }
};

std::string route_json(const coqa::RouteResult& r) {
  nlohmann::ordered_json j;
  j["layers"] = r.layers;
  j["gammas"] = r.gammas;
  j["initial_mapping"] = r.initial_mapping.log2phys;
  j["final_mapping"] = r.final_mapping.log2phys;
  j["stats"] = {{"swap_count", r.stats.swap_count},
                {"zz_count", r.stats.zz_count},
                {"depth", r.stats.depth},
                {"elided_swaps", r.stats.elided_swaps},
                {"skipped_crossings", r.stats.skipped_crossings},
                {"termination_step", r.stats.termination_step}};
  return j.dump(2) + "\n";
}

bool only_cost_gates(const coqa::Circuit& c) {
  for (const auto& g : c.gates()) {
    if (!g.two_qubit()) return false;
  }
  return true;
}

/// Audit plus, when small enough, the phase-polynomial check.
bool verify_result(const coqa::ProblemGraph& g, const coqa::RouteResult& r, const coqa::LinearLayout& layout,
                   std::ostream& log, bool json) {
  const auto rep = coqa::audit(g, r, layout);
  bool ok = rep.pass;
  if (json) {
    log << rep.to_json() << '\n';
  } else {
    log << "audit: " << (rep.pass ? "pass" : "FAIL") << " (missing " << rep.missing.size() << ", extra "
        << rep.extra.size() << ", illegal " << rep.illegal.size() << ")\n";
  }
  if (r.circuit.num_qubits() <= 24 && only_cost_gates(r.circuit)) {
    const auto pp = coqa::phase_poly_of(r.circuit);
    const bool eq = coqa::phase_poly_matches(pp, g, r.gammas, r.initial_mapping, r.final_mapping);
    if (!json) log << "phase polynomial: " << (eq ? "pass" : "FAIL") << '\n';
    ok = ok && eq;
  }
  return ok;
}

int cmd_compile(const std::string& graph_file, const LayoutArgs& la, const RouteArgs& ra, const std::string& out,
                const std::string& format, const std::string& metric, const std::string& route_out,
                bool verify) {
  const auto g = coqa::load_graph(read_file(graph_file));
  const auto layout = la.build(g.num_nodes());
  const auto mode = coqa::parse_count_mode(metric);
  const auto r = coqa::route(g, layout, ra.options());
  write_out(out, format == "qasm" ? coqa::export_qasm(r.circuit) : coqa::save_circuit(r.circuit));
  if (!route_out.empty()) write_out(route_out, route_json(r));
  std::ostream& log = (out.empty() || out == "-") ? std::cerr : std::cout;
  log << "depth=" << r.stats.depth << " gates=" << coqa::two_qubit_count(r.circuit, mode)
      << " metric=" << metric << " swaps=" << r.stats.swap_count << " zz=" << r.stats.zz_count << '\n';
  if (verify && !verify_result(g, r, layout, log, false)) return kVerify;
  return kOk;
}

int cmd_verify(const std::string& graph_file, const std::string& circuit_file, const LayoutArgs& la,
               const RouteArgs& ra, const std::string& route_file, bool json) {
  const auto g = coqa::load_graph(read_file(graph_file));
  const auto layout = la.build(g.num_nodes());
  coqa::RouteResult r;
  r.circuit = coqa::load_circuit(read_file(circuit_file));
  const int n_phys = std::max(r.circuit.num_qubits(), layout.id_bound());
  if (!route_file.empty()) {
    const auto j = nlohmann::json::parse(read_file(route_file));
    r.layers = j.at("layers").get<int>();
    r.gammas = j.at("gammas").get<std::vector<double>>();
    r.initial_mapping = coqa::Mapping::from_log2phys(j.at("initial_mapping").get<std::vector<int>>(), n_phys);
    r.final_mapping = coqa::Mapping::from_log2phys(j.at("final_mapping").get<std::vector<int>>(), n_phys);
  } else {
    r.layers = ra.layers;
    r.gammas.assign(static_cast<std::size_t>(ra.layers), ra.gamma);
    auto m = coqa::initial_placement(g, layout, coqa::parse_placement(ra.placement));
    r.initial_mapping = coqa::Mapping::from_log2phys(m.log2phys, n_phys);
    r.final_mapping = coqa::replay_mapping(r.circuit, r.initial_mapping);
  }
  return verify_result(g, r, layout, std::cout, json) ? kOk : kVerify;
}

int cmd_bench(const std::string& suite_file, const RouteArgs& ra, const std::string& csv, const std::string& json,
              const std::string& metric) {
  const auto suite = coqa::parse_suite(read_file(suite_file));
  const auto mode = coqa::parse_count_mode(metric);
  const auto records = coqa::run_suite(suite, ra.options());
  if (!csv.empty()) write_out(csv, coqa::to_csv(records));
  if (!json.empty()) write_out(json, coqa::to_json(records));
  if (!records.empty()) std::cout << coqa::summary_table(records, mode);
  return kOk;
}

int cmd_gen(const std::vector<std::string>& args, std::uint64_t seed, const std::string& weights,
            const coqa::LinearizeOptions& lo, const std::string& out) {
  if (args.size() < 2) throw coqa::ParameterError("usage: gen graph|layout|coupling <kind> <params...>");
  const auto& what = args[0];
  const auto& kind = args[1];
  auto num = [&](std::size_t k) -> double {
    if (k >= args.size()) throw coqa::ParameterError("missing parameter for " + what + " " + kind);
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(args[k], &used);
      if (used != args[k].size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw coqa::ParameterError("bad number '" + args[k] + "'");
    }
    return v;
  };
  auto whole = [&](std::size_t k) {
    const double v = num(k);
    if (v != std::floor(v)) throw coqa::ParameterError("expected an integer, got '" + args[k] + "'");
    return static_cast<int>(v);
  };
  if (what == "graph") {
    const int n = whole(2);
    const double param = kind == "clique" ? 0.0 : num(3);
    write_out(out, coqa::save_graph(coqa::make_instance(kind, n, param, seed, weights)));
    return kOk;
  }
  if (what == "layout") {
    if (kind == "line") {
      write_out(out, coqa::save_layout(coqa::synthetic_line(whole(2), args.size() > 3 ? whole(3) : 0)));
    } else if (kind == "heavy-hex") {
      write_out(out, coqa::save_layout(coqa::linearize(coqa::build_heavy_hex(whole(2), whole(3)), lo)));
    } else {
      throw coqa::ParameterError("unknown layout kind '" + kind + "'");
    }
    return kOk;
  }
  if (what == "coupling") {
    if (kind != "heavy-hex") throw coqa::ParameterError("unknown coupling kind '" + kind + "'");
    write_out(out, coqa::save_coupling_map(coqa::build_heavy_hex(whole(2), whole(3))));
    return kOk;
  }
  throw coqa::ParameterError("gen: expected graph, layout or coupling");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coqa: swap-network compiler for QAOA cost layers on heavy-hex devices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", coqa::version_stamp());

  LayoutArgs la;
  RouteArgs ra;
  std::string format = "native";
  std::string metric = "abstract";
  std::string out;
  std::string route_out;
  bool verify = false;

  auto* compile = app.add_subcommand("compile", "route a graph onto a layout");
  std::string graph_file;
  compile->add_option("graph", graph_file, "graph file")->required();
  la.attach(compile);
  ra.attach(compile);
  compile->add_option("--format", format)->check(CLI::IsMember({"native", "qasm"}));
  compile->add_option("--metric", metric)->check(CLI::IsMember({"abstract", "cx"}));
  compile->add_option("--out,-o", out, "circuit output (default stdout)");
  compile->add_option("--route-json", route_out, "write mappings and stats as JSON");
  compile->add_flag("--verify", verify, "audit the result");

  auto* verify_cmd = app.add_subcommand("verify", "audit a compiled circuit");
  LayoutArgs vla;
  RouteArgs vra;
  std::string circuit_file;
  std::string route_file;
  bool as_json = false;
  verify_cmd->add_option("graph", graph_file, "graph file")->required();
  verify_cmd->add_option("circuit", circuit_file, "native circuit file")->required();
  vla.attach(verify_cmd);
  vra.attach(verify_cmd);
  verify_cmd->add_option("--route-json", route_file, "mappings written by compile");
  verify_cmd->add_flag("--json", as_json, "print the audit report as JSON");

  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  RouteArgs bra;
  std::string suite_file;
  std::string csv_out;
  std::string json_out;
  std::string bench_metric = "abstract";
  bench->add_option("suite", suite_file, "suite JSON")->required();
  bra.attach(bench);
  bench->add_option("--csv", csv_out, "CSV report path");
  bench->add_option("--json", json_out, "JSON report path");
  bench->add_option("--metric", bench_metric)->check(CLI::IsMember({"abstract", "cx"}));

  auto* gen = app.add_subcommand("gen", "generate a graph, layout or coupling map");
  std::vector<std::string> gen_args;
  std::uint64_t seed = 0;
  std::string weights = "unit";
  std::string gen_side = "upper";
  std::string gen_out;
  gen->add_option("args", gen_args, "graph er|regular|clique ... | layout line|heavy-hex ... | coupling heavy-hex ...")
      ->required();
  gen->add_option("--seed", seed);
  gen->add_option("--weights", weights)->check(CLI::IsMember({"unit", "uniform"}));
  std::vector<std::string> gen_columns;
  gen->add_option("--dangler-side", gen_side)->check(CLI::IsMember({"upper", "lower"}));
  gen->add_option("--dangler-column", gen_columns, "per-column override, <col>=upper|lower");
  gen->add_option("--out,-o", gen_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*compile) return cmd_compile(graph_file, la, ra, out, format, metric, route_out, verify);
    if (*verify_cmd) return cmd_verify(graph_file, circuit_file, vla, vra, route_file, as_json);
    if (*bench) return cmd_bench(suite_file, bra, csv_out, json_out, bench_metric);
    if (*gen) return cmd_gen(gen_args, seed, weights, linearize_options(gen_side, gen_columns), gen_out);
  } catch (const coqa::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const coqa::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
