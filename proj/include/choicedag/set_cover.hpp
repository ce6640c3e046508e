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

// Covers of interfering prefixes by the one-smaller subsets of a target.
//
// Given a target prefix A and a collection P of proper subsets of A, a
// cover is a collection of sets A \ {x} (x in A) such that every member of
// P lies inside one of them.

#include <vector>

#include "choicedag/item_set.hpp"

namespace choicedag {

struct CoverInstance {
  ItemSet target;
  std::vector<ItemSet> prefixes;
};

// Greedy cover: repeatedly takes the A \ {x} containing the most
// still-uncovered prefixes, smallest x on ties. Returns the chosen sets in
// selection order. Throws ValidationError("uncoverable prefix ...") when a
// prefix is not a proper subset of the target.
std::vector<ItemSet> greedy_min_cover(const CoverInstance& inst);

// True iff every set is some target \ {x} and every prefix is covered.
bool verify_cover(const CoverInstance& inst, const std::vector<ItemSet>& cover);

}  // namespace choicedag
