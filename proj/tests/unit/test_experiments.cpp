// Copyright 2026 The choicedag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "choicedag/errors.hpp"
#include "choicedag/experiments.hpp"
#include "choicedag/report.hpp"
#include "choicedag/sushi.hpp"

using namespace choicedag;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

ExperimentSpec small_spec(Scenario s) {
  ExperimentSpec spec;
  spec.scenario = s;
  spec.n = 6;
  spec.levels = {2, 3};
  spec.rhos = {0.0, 0.002};
  spec.num_instances = 3;
  spec.num_random_sets = 8;
  spec.m_cap = 1500;
  spec.seed = 9;
  return spec;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("summary statistics") {
  const std::vector<double> v{4.0, 1.0, 3.0, 2.0};
  CHECK(mean_of(v) == 2.5);
  CHECK_THAT(sample_std(v), WithinAbs(std::sqrt(5.0 / 3.0), 1e-15));
  CHECK(percentile_nearest_rank(v, 25) == 1.0);
  CHECK(percentile_nearest_rank(v, 50) == 2.0);
  CHECK(percentile_nearest_rank(v, 75) == 3.0);
  CHECK(percentile_nearest_rank(v, 100) == 4.0);
  CHECK(percentile_nearest_rank({7.0}, 25) == 7.0);
  CHECK_THROWS_AS(percentile_nearest_rank(v, 0.0), ValidationError);
  CHECK(sample_std({1.0}) == 0.0);

  const Summary s = summarize(v);
  CHECK(s.count == 4);
  CHECK_THAT(s.sem, WithinAbs(s.std / 2.0, 1e-15));
  CHECK(summarize({}) == Summary{});

  CHECK_THAT(*pearson({1, 2, 3}, {2, 4, 6}), WithinAbs(1.0, 1e-15));
  CHECK_THAT(*pearson({1, 2, 3}, {3, 2, 1}), WithinAbs(-1.0, 1e-15));
  CHECK_FALSE(pearson({1, 1, 1}, {1, 2, 3}).has_value());
  CHECK_FALSE(pearson({1}, {1}).has_value());
}

TEST_CASE("random assortments") {
  const auto sets = random_sets(8, 4, 200, 5);
  REQUIRE(sets.size() == 200);
  for (ItemSet s : sets) {
    CHECK(s.size() == 4);
    CHECK(s.within(8));
  }
  CHECK(random_sets(8, 4, 200, 5) == sets);
  CHECK(random_sets(8, 4, 200, 6) != sets);
}

TEST_CASE("experiment settings validation") {
  ExperimentSpec spec;
  CHECK_NOTHROW(spec.validate());
  spec.levels = {9};
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  spec = ExperimentSpec{};
  spec.rhos = {};
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  spec = ExperimentSpec{};
  spec.scenario = Scenario::kSushi;
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  CHECK(parse_scenario("recovery") == Scenario::kRecovery);
  CHECK(scenario_name(Scenario::kChoiceProb) == "choice-prob");
  CHECK_THROWS_AS(parse_scenario("nope"), ValidationError);
  CHECK_THROWS_AS(parse_format("xml"), ValidationError);
}

TEST_CASE("choice-probability experiment") {
  ExperimentSpec spec = small_spec(Scenario::kChoiceProb);
  const ExperimentReport rep = run_experiment(spec);
  CHECK(rep.choice_rows.size() == 3u * 2u * 2u * 8u);
  CHECK(rep.runs.size() == 3u * 2u * 2u);
  CHECK(rep.cells.size() == 4);
  CHECK(verify_aggregates(rep));
  for (const ChoiceRow& r : rep.choice_rows) {
    CHECK(r.l1_error >= 0.0);
    CHECK(r.l1_error <= 2.0 + 1e-12);
    CHECK(r.market_share >= 0.0);
    CHECK(r.market_share <= 1.0 + 1e-12);
    CHECK(r.set.size() == spec.set_size);
  }
  for (const RunRow& r : rep.runs) {
    CHECK(r.queries > 0);
    CHECK(r.eps == 0.01);
  }

  spec.parallel = false;
  CHECK(run_experiment(spec) == rep);

  ExperimentReport tampered = rep;
  tampered.cells[0].l1.mean += 1.0;
  CHECK_FALSE(verify_aggregates(tampered));

  std::ostringstream json;
  emit_report(rep, ReportFormat::kJson, json);
  CHECK(parse_report_json(json.str()) == rep);

  std::ostringstream a, b;
  emit_report(rep, ReportFormat::kCsv, a);
  emit_report(run_experiment(spec), ReportFormat::kCsv, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("instance,rho,eps,n0,set,market_share,l1_error\n", 0) == 0);

  const auto path = temp_path("choicedag_report.json");
  emit_report(rep, ReportFormat::kJson, path);
  CHECK(load_report(path) == rep);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(emit_report(rep, ReportFormat::kCsv, "/nonexistent/dir/r.csv"), IoError);
  CHECK_THROWS_AS(parse_report_json("{\"scenario\": 3}"), ValidationError);

  std::ostringstream summary;
  write_summary(rep, summary);
  CHECK_FALSE(summary.str().empty());
}

TEST_CASE("recovery experiment") {
  ExperimentSpec spec = small_spec(Scenario::kRecovery);
  const ExperimentReport rep = run_experiment(spec);
  CHECK(rep.recovery_rows.size() == 12);
  CHECK(verify_aggregates(rep));
  for (const RecoveryRow& r : rep.recovery_rows) {
    CHECK(r.max_discrepancy >= 0.0);
    CHECK(r.pct_diff_vertices >= 0.0);
    CHECK(r.queries_total > 0);
  }
  std::ostringstream csv;
  emit_report(rep, ReportFormat::kCsv, csv);
  CHECK(csv.str().rfind("instance,rho,n0,max_discrepancy,pct_diff_vertices,queries_total\n", 0) == 0);
  std::ostringstream json;
  emit_report(rep, ReportFormat::kJson, json);
  CHECK(parse_report_json(json.str()) == rep);
}

TEST_CASE("empty report") {
  ExperimentReport rep;
  rep.scenario = Scenario::kRecovery;
  std::ostringstream csv;
  emit_report(rep, ReportFormat::kCsv, csv);
  CHECK(csv.str() == "instance,rho,n0,max_discrepancy,pct_diff_vertices,queries_total\n");
  CHECK(verify_aggregates(rep));
}

TEST_CASE("sushi parsing") {
  const ChoiceModel plain = parse_sushi("# two rankings\n1 2 3\n1 2 3\n3 1 2 # tail\n", 0.5);
  CHECK(plain.num_items() == 3);
  REQUIRE(plain.num_types() == 2);
  CHECK_THAT(plain.type(0).prob, WithinAbs(2.0 / 3.0, 1e-15));
  CHECK_THAT(plain.rho(), WithinAbs(1.0 / 3.0, 1e-15));
  CHECK(frequent_prefix_count(plain, 1) == 1);
  CHECK(frequent_prefix_count(plain, 0) == 1);
  CHECK_THROWS_AS(frequent_prefix_count(plain, 4), ValidationError);

  const ChoiceModel same = parse_sushi("2 1 3\n2 1 3\n", 0.1);
  CHECK(same.num_types() == 1);
  CHECK(same.type(0).prob == 1.0);

  const ChoiceModel order = parse_sushi("3 2\n0 3 2 0 1\n0 3 0 1 2\n", 0.1);
  REQUIRE(order.num_types() == 2);
  CHECK(order.type(0).ranking.order() == std::vector<int>{2, 0, 1});
  CHECK(frequent_prefix_count(order, 2) == 2);

  CHECK_THROWS_WITH(parse_sushi("1 2 3\n1 2\n", 0.1, "s.txt"), ContainsSubstring("s.txt:2:"));
  CHECK_THROWS_WITH(parse_sushi("1 2 3\n1 x 3\n", 0.1, "s"), ContainsSubstring("s:2: not an integer"));
  CHECK_THROWS_WITH(parse_sushi("1 2 3\n1 1 3\n", 0.1, "s"), ContainsSubstring("s:2: not a permutation"));
  CHECK_THROWS_WITH(parse_sushi("1 2 4\n", 0.1, "s"), ContainsSubstring("s:1: item id out of range"));
  CHECK_THROWS_AS(parse_sushi("# nothing\n", 0.1), ValidationError);
  CHECK_THROWS_AS(load_sushi("/nonexistent/sushi.txt", 0.1), IoError);
}

TEST_CASE("sushi experiment on a small file") {
  const auto path = temp_path("choicedag_sushi.txt");
  {
    std::ofstream out(path);
    for (int k = 0; k < 6; ++k) out << "1 2 3 4 5\n";
    for (int k = 0; k < 3; ++k) out << "2 1 3 5 4\n";
    out << "5 4 3 2 1\n";
  }
  ExperimentSpec spec;
  spec.scenario = Scenario::kSushi;
  spec.data_path = path;
  spec.kappa = 0.2;
  spec.levels = {2};
  spec.num_instances = 2;
  spec.m_cap = 3000;
  const ExperimentReport rep = run_experiment(spec);
  CHECK(rep.distinct_types == 3);
  REQUIRE(rep.prefix_counts.size() == 5);
  CHECK(rep.prefix_counts[0] == std::pair<int, std::size_t>{1, 2});
  CHECK(rep.recovery_rows.size() == 2);
  CHECK(verify_aggregates(rep));
  std::filesystem::remove(path);
}
