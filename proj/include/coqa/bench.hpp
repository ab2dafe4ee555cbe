// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coqa/circuit.hpp"
#include "coqa/problem_graph.hpp"
#include "coqa/router.hpp"
#include "coqa/topology.hpp"

namespace coqa {

inline constexpr std::string_view kVersion = "0.1.0";

/// "coqa <version> / <compiler>".
[[nodiscard]] std::string version_stamp();

/// `line:<stride>` (synthetic line just long enough for n) or
/// `heavy-hex:<rows>x<cols>`.
[[nodiscard]] LinearLayout layout_from_spec(std::string_view spec, int n,
                                            const LinearizeOptions& lo = {});

struct SuiteFamily {
  std::string generator;  ///< er | regular | clique
  std::vector<int> sizes;
  std::vector<double> params;  ///< p for er, k for regular, ignored for clique
  std::vector<std::uint64_t> seeds;
};

struct Suite {
  std::vector<SuiteFamily> families;
  int repetitions = 5;
  std::string layout = "line:4";
  std::vector<std::string> methods{"coqa"};
  std::string weights = "unit";  ///< unit | uniform
};

/// JSON suite file. Throws ParseError on malformed input.
[[nodiscard]] Suite parse_suite(std::string_view json_text);

struct BenchRecord {
  std::string generator;
  int n = 0;
  double param = 0.0;
  std::uint64_t seed = 0;
  std::string layout;
  std::string method;
  int depth = 0;
  int abstract_count = 0;
  int cx_count = 0;
  int swap_count = 0;
  int zz_count = 0;
  double compile_seconds = 0.0;
  std::string status = "ok";
  std::string version;
};

/// Builds the instance a record describes.
[[nodiscard]] ProblemGraph make_instance(const std::string& generator, int n, double param,
                                         std::uint64_t seed, const std::string& weights = "unit");

/// One record per (instance, method). Wall time is the median over
/// `suite.repetitions` calls of the router alone. Failures land in the
/// record's status and the run goes on.
[[nodiscard]] std::vector<BenchRecord> run_suite(const Suite& suite, const RouteOptions& opts = {});

[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string to_csv(const std::vector<BenchRecord>& records);
[[nodiscard]] std::string to_json(const std::vector<BenchRecord>& records);

/// Median metrics per (generator, n, param, layout, method), plus the
/// least-squares depth slope over n for clique rows.
[[nodiscard]] std::string summary_table(const std::vector<BenchRecord>& records, CountMode metric);

/// Least-squares slope of y over x.
[[nodiscard]] double fit_slope(const std::vector<double>& x, const std::vector<double>& y);
[[nodiscard]] double median(std::vector<double> v);

}  // namespace coqa
