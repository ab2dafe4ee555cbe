// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "coqa/bench.hpp"
#include "coqa/errors.hpp"
#include "support.hpp"

using namespace coqa;

namespace {

// CSV text with the compile_seconds column blanked.
std::string without_timing(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() > 11) cells[11].clear();
    for (std::size_t k = 0; k < cells.size(); ++k) out += (k ? "," : "") + cells[k];
    out += '\n';
  }
  return out;
}

}  // namespace

TEST(Suite, Parse) {
  const auto s = parse_suite(test::read_file(test::data_path("suites/table2.json")));
  EXPECT_EQ(s.repetitions, 1);
  EXPECT_EQ(s.layout, "line:4");
  ASSERT_EQ(s.families.size(), 3u);
  EXPECT_EQ(s.families[0].sizes, (std::vector<int>{10, 15, 20, 25}));
  EXPECT_EQ(s.families[0].seeds.size(), 10u);
  EXPECT_EQ(s.methods.size(), 2u);
  const auto t = parse_suite(R"({"families": [{"generator": "er", "n": 5, "param": 0.5, "seeds": [4, 9]}]})");
  EXPECT_EQ(t.families[0].sizes, (std::vector<int>{5}));
  EXPECT_EQ(t.families[0].seeds, (std::vector<std::uint64_t>{4, 9}));
}

TEST(Suite, ParseErrors) {
  EXPECT_THROW((void)parse_suite("{"), ParseError);
  EXPECT_THROW((void)parse_suite("[]"), ParseError);
  EXPECT_THROW((void)parse_suite(R"({"families": [{"n": 5}]})"), ParseError);
  EXPECT_THROW((void)parse_suite(R"({"methods": ["magic"]})"), ParseError);
  EXPECT_THROW((void)parse_suite(R"({"repetitions": 0})"), ParseError);
}

TEST(Bench, EmptySuite) {
  const auto s = parse_suite(test::read_file(test::data_path("suites/empty.json")));
  const auto recs = run_suite(s);
  EXPECT_TRUE(recs.empty());
  EXPECT_EQ(to_csv(recs), csv_header() + "\n");
  EXPECT_EQ(to_json(recs), "[]\n");
}

TEST(Bench, CsvHeaderGolden) {
  EXPECT_EQ(csv_header() + "\n", test::read_file(test::data_path("bench_header.csv")));
}

TEST(Bench, DeterministicApartFromTiming) {
  const auto s = parse_suite(test::read_file(test::data_path("suites/smoke.json")));
  const auto a = run_suite(s);
  const auto b = run_suite(s);
  EXPECT_EQ(a.size(), (2 * 2 * 3 + 2 + 1) * 2u);
  EXPECT_EQ(without_timing(to_csv(a)), without_timing(to_csv(b)));
  for (const auto& r : a) EXPECT_EQ(r.status, "ok") << r.generator << r.n;
}

TEST(Bench, RecordsMatchRouter) {
  Suite s;
  s.repetitions = 1;
  s.families.push_back({"er", {12}, {0.4}, {7}});
  const auto recs = run_suite(s);
  ASSERT_EQ(recs.size(), 1u);
  const auto g = make_instance("er", 12, 0.4, 7);
  const auto l = layout_from_spec("line:4", 12);
  const auto r = route(g, l);
  EXPECT_EQ(recs[0].depth, r.stats.depth);
  EXPECT_EQ(recs[0].abstract_count, two_qubit_count(r.circuit, CountMode::abstract));
  EXPECT_EQ(recs[0].cx_count, two_qubit_count(r.circuit, CountMode::cx));
  EXPECT_EQ(recs[0].swap_count, r.stats.swap_count);
  EXPECT_EQ(recs[0].zz_count, static_cast<int>(g.num_edges()));
  EXPECT_GE(recs[0].compile_seconds, 0.0);
  EXPECT_EQ(recs[0].version, version_stamp());
}

TEST(Bench, FailuresAreRecorded) {
  Suite s;
  s.repetitions = 1;
  s.layout = "heavy-hex:1x1";
  s.families.push_back({"clique", {5, 9}, {0.0}, {0}});
  s.families.push_back({"regular", {5}, {3.0}, {0}});
  const auto recs = run_suite(s);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0].status, "ok");
  EXPECT_NE(recs[1].status, "ok");
  EXPECT_NE(recs[2].status, "ok");
  EXPECT_NE(to_csv(recs).find(recs[1].status.substr(0, 10)), std::string::npos);
}

TEST(Bench, JsonShape) {
  Suite s;
  s.repetitions = 1;
  s.families.push_back({"clique", {4}, {0.0}, {0}});
  const auto j = nlohmann::json::parse(to_json(run_suite(s)));
  ASSERT_EQ(j.size(), 1u);
  for (const char* key : {"instance", "layout", "method", "metrics", "status", "version"}) {
    EXPECT_TRUE(j[0].contains(key)) << key;
  }
  EXPECT_EQ(j[0]["metrics"]["zz_count"], 6);
}

TEST(Bench, LayoutSpecs) {
  EXPECT_EQ(layout_from_spec("line:4", 10).capacity(), 10);
  EXPECT_EQ(layout_from_spec("line:0", 7), synthetic_line(7, 0));
  EXPECT_EQ(layout_from_spec("line:4", 5), synthetic_line(4, 4));
  EXPECT_EQ(layout_from_spec("heavy-hex:7x3", 10).capacity(), 127);
  EXPECT_THROW((void)layout_from_spec("ring:3", 5), ParameterError);
  EXPECT_THROW((void)layout_from_spec("heavy-hex:7", 5), ParameterError);
}

TEST(Bench, SummaryHasCliqueSlope) {
  const auto s = parse_suite(test::read_file(test::data_path("suites/clique_depth.json")));
  const auto recs = run_suite(s);
  const auto table = summary_table(recs, CountMode::abstract);
  EXPECT_NE(table.find("slope"), std::string::npos);
  std::vector<double> x, y;
  for (const auto& r : recs) {
    x.push_back(r.n);
    y.push_back(r.depth);
  }
  EXPECT_LE(fit_slope(x, y), 5.2);
}

TEST(Stats, MedianAndSlope) {
  EXPECT_EQ(median({}), 0.0);
  EXPECT_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
  EXPECT_NEAR(fit_slope({1, 2, 3, 4}, {3, 5, 7, 9}), 2.0, 1e-12);
}
