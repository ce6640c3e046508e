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

// Dense choice-probability tables over every assortment, and an indexed
// loop for independent experiment instances.
//
// Each table has 2^n rows of n entries; entry [S * n + z] is q_z(S) and is
// 0 when z is not in S. The parallel kernels use OpenMP when the library
// is built with it and match the serial ones exactly.

#include <cstddef>
#include <functional>
#include <vector>

#include "choicedag/dag.hpp"
#include "choicedag/model.hpp"

namespace choicedag {

inline constexpr int kMaxTableItems = 20;

std::vector<double> choice_table_serial(const ChoiceModel& m);
std::vector<double> choice_table_parallel(const ChoiceModel& m);

std::vector<double> dag_choice_table_serial(const Dag& d);
std::vector<double> dag_choice_table_parallel(const Dag& d);

// Calls fn(0..count-1). Every index runs exactly once; the first exception
// thrown is rethrown after the loop.
void run_indexed(std::size_t count, bool parallel,
                 const std::function<void(std::size_t)>& fn);

// 1 without OpenMP.
int max_threads();

}  // namespace choicedag
