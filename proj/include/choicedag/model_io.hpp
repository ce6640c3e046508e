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

// Model files:
//   { "n": 5,
//     "types": [ { "ranking": [1, 2, 3, 4, 5], "prob": 0.2 }, ... ],
//     "kappa": 0.1, "rho": 0.0 }
// Item ids are 1-based. Loading checks every ChoiceModel invariant,
// including the kappa-rho claim, and reports the line of the bad element.

#include <string>
#include <string_view>

#include "choicedag/model.hpp"
#include "json.hpp"

namespace choicedag {

nlohmann::json model_to_json(const ChoiceModel& m);

// `source` names the input in error messages.
ChoiceModel parse_model(std::string_view text,
                        std::string_view source = "<model>");

ChoiceModel load_model(const std::string& path);
void save_model(const ChoiceModel& m, const std::string& path);

// Whole-file helpers shared by the loaders; throw IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace choicedag
