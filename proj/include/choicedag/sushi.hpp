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

// Sushi preference data.
//
// Two layouts are accepted. Plain: one ranking per line as space-separated
// 1-based ids, '#' starting a comment. sushi3a .order: a header line
// "<items> <count>" and then lines "0 <len> id id ..." with 0-based ids;
// it is recognized by that header.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "choicedag/model.hpp"

namespace choicedag {

// Empirical distribution over the distinct rankings. rho is set to the
// resulting rare mass under `kappa`.
ChoiceModel parse_sushi(std::string_view text, double kappa,
                        std::string_view source = "<sushi>");
ChoiceModel load_sushi(const std::string& path, double kappa);

// Number of distinct ordered top-`length` sequences among types with
// p >= kappa.
std::size_t frequent_prefix_count(const ChoiceModel& m, int length);

}  // namespace choicedag
