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

#pragma once

// DAG files:
//   { "n": 5,
//     "nodes": [ { "set": [1, 2], "prob": 0.6 }, ... ],
//     "edges": [ { "from": [1], "item": 2, "prob": 0.6 }, ... ] }
// Sets are sorted 1-based ids; nodes are written level by level.

#include <string>
#include <string_view>

#include "choicedag/dag.hpp"
#include "json.hpp"

namespace choicedag {

nlohmann::json dag_to_json(const Dag& d);
Dag parse_dag(std::string_view text, std::string_view source = "<dag>");
Dag load_dag(const std::string& path);
void save_dag(const Dag& d, const std::string& path);

}  // namespace choicedag
