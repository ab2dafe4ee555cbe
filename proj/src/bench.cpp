// SPDX-License-Identifier: Apache-2.0

#include "coqa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "coqa/errors.hpp"
#include "text_util.hpp"

namespace coqa {

std::string version_stamp() {
  std::string s = "coqa " + std::string(kVersion);
#if defined(__clang__)
  s += " / clang " __clang_version__;
#elif defined(__GNUC__)
  s += " / gcc " __VERSION__;
#endif
  return s;
}

LinearLayout layout_from_spec(std::string_view spec, int n, const LinearizeOptions& lo) {
  auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "line") {
    int stride = 0;
    if (!arg.empty() && (!detail::parse_number(arg, stride) || stride < 0)) {
      throw ParameterError("bad line stride in layout spec '" + std::string(spec) + "'");
    }
    // Enough backbone so that the first n labels exist.
    int nb = 0;
    while (synthetic_line(nb, stride).capacity() < n) ++nb;
    return synthetic_line(nb, stride);
  }
  if (kind == "heavy-hex") {
    const auto x = arg.find('x');
    int rows = 0;
    int cols = 0;
    if (x == std::string_view::npos || !detail::parse_number(arg.substr(0, x), rows) ||
        !detail::parse_number(arg.substr(x + 1), cols)) {
      throw ParameterError("expected heavy-hex:<rows>x<cols>");
    }
    return linearize(build_heavy_hex(rows, cols), lo);
  }
  throw ParameterError("unknown layout spec '" + std::string(spec) + "'");
}

namespace {

template <class T>
std::vector<T> number_list(const nlohmann::json& j, const char* key) {
  std::vector<T> out;
  if (!j.contains(key)) return out;
  const auto& v = j.at(key);
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(x.get<T>());
  } else {
    out.push_back(v.get<T>());
  }
  return out;
}

}  // namespace

Suite parse_suite(std::string_view json_text) {
  Suite s;
  try {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw ParseError("suite must be a JSON object", 0);
    s.repetitions = j.value("repetitions", 5);
    s.layout = j.value("layout", std::string("line:4"));
    s.weights = j.value("weights", std::string("unit"));
    if (j.contains("methods")) s.methods = j.at("methods").get<std::vector<std::string>>();
    for (const auto& f : j.value("families", nlohmann::json::array())) {
      SuiteFamily fam;
      fam.generator = f.at("generator").get<std::string>();
      fam.sizes = number_list<int>(f, "n");
      fam.params = number_list<double>(f, "param");
      if (f.contains("seeds") && f.at("seeds").is_number_integer()) {
        const auto count = f.at("seeds").get<std::uint64_t>();
        for (std::uint64_t k = 0; k < count; ++k) fam.seeds.push_back(k);
      } else {
        fam.seeds = number_list<std::uint64_t>(f, "seeds");
      }
      if (fam.seeds.empty()) fam.seeds.push_back(0);
      if (fam.params.empty()) fam.params.push_back(0.0);
      s.families.push_back(std::move(fam));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("suite: ") + e.what(), 0);
  }
  if (s.repetitions < 1) throw ParseError("suite: repetitions must be >= 1", 0);
  for (const auto& m : s.methods) {
    if (m != "coqa" && m != "baseline-clique-pattern") throw ParseError("suite: unknown method '" + m + "'", 0);
  }
  return s;
}

ProblemGraph make_instance(const std::string& generator, int n, double param, std::uint64_t seed,
                           const std::string& weights) {
  WeightSampler ws;
  if (weights == "unit") {
    ws = unit_weights();
  } else if (weights == "uniform") {
    ws = uniform_weights();
  } else {
    throw ParameterError("unknown weight mode '" + weights + "'");
  }
  if (generator == "er") return gen_erdos_renyi(n, param, seed, ws);
  if (generator == "regular") {
    const auto k = static_cast<int>(std::lround(param));
    return gen_k_regular(n, k, seed, ws);
  }
  if (generator == "clique") return gen_clique(n);
  throw ParameterError("unknown generator '" + generator + "'");
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const auto m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  if (x.size() < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    sxy += x[k] * y[k];
  }
  const double den = n * sxx - sx * sx;
  return den == 0.0 ? 0.0 : (n * sxy - sx * sy) / den;
}

std::vector<BenchRecord> run_suite(const Suite& suite, const RouteOptions& opts) {
  std::vector<BenchRecord> out;
  const std::string version = version_stamp();
  for (const auto& fam : suite.families) {
    for (int n : fam.sizes) {
      for (double param : fam.params) {
        for (auto seed : fam.seeds) {
          for (const auto& method : suite.methods) {
            BenchRecord rec;
            rec.generator = fam.generator;
            rec.n = n;
            rec.param = fam.generator == "clique" ? 0.0 : param;
            rec.seed = seed;
            rec.layout = suite.layout;
            rec.method = method;
            rec.version = version;
            try {
              const auto g = make_instance(fam.generator, n, param, seed, suite.weights);
              const auto layout = layout_from_spec(suite.layout, n);
              const bool base = method == "baseline-clique-pattern";
              std::vector<double> times;
              RouteResult res;
              for (int rep = 0; rep < suite.repetitions; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                res = base ? route_baseline_clique_pattern(g, layout, opts) : route(g, layout, opts);
                const auto t1 = std::chrono::steady_clock::now();
                times.push_back(std::chrono::duration<double>(t1 - t0).count());
              }
              rec.depth = res.stats.depth;
              rec.abstract_count = two_qubit_count(res.circuit, CountMode::abstract);
              rec.cx_count = two_qubit_count(res.circuit, CountMode::cx);
              rec.swap_count = res.stats.swap_count;
              rec.zz_count = res.stats.zz_count;
              rec.compile_seconds = median(times);
            } catch (const std::exception& e) {
              rec.status = e.what();
            }
            out.push_back(std::move(rec));
          }
        }
      }
    }
  }
  return out;
}

std::string csv_header() {
  return "generator,n,param,seed,layout,method,depth,abstract_count,cx_count,swap_count,zz_count,"
         "compile_seconds,status";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string seconds(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(6) << s;
  return o.str();
}

}  // namespace

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const auto& r : records) {
    out << r.generator << ',' << r.n << ',' << format_double(r.param) << ',' << r.seed << ','
        << csv_field(r.layout) << ',' << r.method << ',' << r.depth << ',' << r.abstract_count << ','
        << r.cx_count << ',' << r.swap_count << ',' << r.zz_count << ',' << seconds(r.compile_seconds)
        << ',' << csv_field(r.status) << '\n';
  }
  return out.str();
}

std::string to_json(const std::vector<BenchRecord>& records) {
  using nlohmann::ordered_json;
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    ordered_json j;
    j["instance"] = {{"generator", r.generator}, {"n", r.n}, {"param", r.param}, {"seed", r.seed}};
    j["layout"] = r.layout;
    j["method"] = r.method;
    j["metrics"] = {{"depth", r.depth},
                    {"abstract_count", r.abstract_count},
                    {"cx_count", r.cx_count},
                    {"swap_count", r.swap_count},
                    {"zz_count", r.zz_count},
                    {"compile_seconds", r.compile_seconds}};
    j["status"] = r.status;
    j["version"] = r.version;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string summary_table(const std::vector<BenchRecord>& records, CountMode metric) {
  using Key = std::tuple<std::string, int, double, std::string, std::string>;
  std::map<Key, std::vector<const BenchRecord*>> groups;
  for (const auto& r : records) {
    if (r.status == "ok") groups[{r.generator, r.n, r.param, r.layout, r.method}].push_back(&r);
  }
  std::ostringstream out;
  out << std::left << std::setw(10) << "generator" << std::setw(6) << "n" << std::setw(8) << "param"
      << std::setw(26) << "method" << std::setw(8) << "depth" << std::setw(8)
      << (metric == CountMode::abstract ? "gates" : "cx") << std::setw(8) << "swaps"
      << "seconds\n";
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> clique_fit;
  for (const auto& [key, rows] : groups) {
    std::vector<double> d, c, s, t;
    for (const auto* r : rows) {
      d.push_back(r->depth);
      c.push_back(metric == CountMode::abstract ? r->abstract_count : r->cx_count);
      s.push_back(r->swap_count);
      t.push_back(r->compile_seconds);
    }
    const auto& [gen, n, param, layout, method] = key;
    const std::string label = gen == "clique" ? "-" : format_double(param);
    out << std::left << std::setw(10) << gen << std::setw(6) << n << std::setw(8) << label << std::setw(26)
        << method << std::setw(8) << format_double(median(d)) << std::setw(8) << format_double(median(c))
        << std::setw(8) << format_double(median(s)) << seconds(median(t)) << '\n';
    if (gen == "clique") {
      auto& [xs, ys] = clique_fit[method + " on " + layout];
      xs.push_back(n);
      ys.push_back(median(d));
    }
  }
  for (const auto& [name, xy] : clique_fit) {
    if (xy.first.size() >= 2) {
      out << "clique depth slope (" << name << "): " << format_double(fit_slope(xy.first, xy.second))
          << '\n';
    }
  }
  return out.str();
}

}  // namespace coqa
