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

#include "catch_amalgamated.hpp"
#include "choicedag/dag_io.hpp"
#include "choicedag/errors.hpp"
#include "oracles.hpp"

using namespace choicedag;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("DAG json roundtrip") {
  const Dag d = dag_from_model(testing::random_small_model(6, 4, 11));
  CHECK(parse_dag(dag_to_json(d).dump()) == d);
  const auto path = (std::filesystem::temp_directory_path() / "choicedag_dag_rt.json").string();
  save_dag(d, path);
  CHECK(load_dag(path) == d);
  std::filesystem::remove(path);

  const auto j = dag_to_json(dag_from_model(testing::five_type_model(), 1, false));
  CHECK(j["nodes"][1]["set"] == nlohmann::json::array({1}));
  CHECK(j["edges"][0]["item"] == 1);
}

TEST_CASE("DAG errors carry line numbers") {
  const std::string bad = R"({
  "n": 3,
  "nodes": [
    { "set": [], "prob": 1.0 },
    { "set": [4], "prob": 0.5 }
  ],
  "edges": []
})";
  CHECK_THROWS_WITH(parse_dag(bad, "g.json"), ContainsSubstring("g.json:5: nodes[1]"));

  const std::string dangling = R"({
  "n": 3,
  "nodes": [ { "set": [], "prob": 1.0 } ],
  "edges": [
    { "from": [], "item": 2, "prob": 0.5 }
  ]
})";
  CHECK_THROWS_WITH(parse_dag(dangling, "g"), ContainsSubstring("g:5: edges[0]"));
  CHECK_THROWS_AS(parse_dag("{\"n\": 3}"), ValidationError);
  CHECK_THROWS_AS(load_dag("/nonexistent/dag.json"), IoError);
}
