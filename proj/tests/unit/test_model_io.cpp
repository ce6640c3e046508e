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
#include "choicedag/errors.hpp"
#include "choicedag/model_io.hpp"
#include "oracles.hpp"

using namespace choicedag;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("model json roundtrip") {
  const ChoiceModel m = testing::random_small_model(6, 5, 3);
  const ChoiceModel back = parse_model(model_to_json(m).dump(2));
  REQUIRE(back.num_types() == m.num_types());
  CHECK(back.num_items() == 6);
  CHECK(back.kappa() == m.kappa());
  for (std::size_t t = 0; t < m.num_types(); ++t) {
    CHECK(back.type(t).ranking == m.type(t).ranking);
    CHECK(back.type(t).prob == m.type(t).prob);
  }
  const auto path = (std::filesystem::temp_directory_path() / "choicedag_model_rt.json").string();
  save_model(m, path);
  CHECK(load_model(path).num_types() == m.num_types());
  std::filesystem::remove(path);
}

TEST_CASE("model errors carry line numbers") {
  const std::string bad_ranking = R"({
  "n": 3,
  "kappa": 0.1,
  "rho": 0.0,
  "types": [
    { "ranking": [1, 2, 3], "prob": 0.5 },
    { "ranking": [1, 1, 3], "prob": 0.5 }
  ]
})";
  CHECK_THROWS_WITH(parse_model(bad_ranking, "m.json"),
                    ContainsSubstring("m.json:7: types[1]"));

  const std::string dup = R"({"n": 2, "kappa": 0.1, "rho": 0.0,
"types": [
  {"ranking": [1, 2], "prob": 0.5},
  {"ranking": [1, 2], "prob": 0.5}]})";
  CHECK_THROWS_WITH(parse_model(dup, "d"), ContainsSubstring("d:4: types[1]: duplicates types[0]"));

  const std::string syntax = "{\n\"n\": 2,\n\"types\": [,]\n}";
  CHECK_THROWS_WITH(parse_model(syntax, "s"), ContainsSubstring("s:3:"));

  const std::string sum = R"({"n": 2, "kappa": 0.1, "rho": 0.0,
"types": [{"ranking": [1, 2], "prob": 0.5}]})";
  CHECK_THROWS_AS(parse_model(sum), ValidationError);

  const std::string rare = R"({"n": 2, "kappa": 0.1, "rho": 0.0,
"types": [{"ranking": [1, 2], "prob": 0.95}, {"ranking": [2, 1], "prob": 0.05}]})";
  CHECK_THROWS_WITH(parse_model(rare), ContainsSubstring("rare mass"));

  CHECK_THROWS_AS(parse_model(R"({"n": 2})"), ValidationError);
  CHECK_THROWS_AS(load_model("/nonexistent/dir/model.json"), IoError);
}
