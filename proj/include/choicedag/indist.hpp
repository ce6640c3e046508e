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

// Indistinguishable ranking pairs and the observationally equivalent
// alternate model built from one.
//
// r1 and r2 are indistinguishable at position i when their top-i item sets
// agree, their orders differ somewhere within the top i, and their orders
// differ somewhere below it.

#include <cstddef>
#include <vector>

#include "choicedag/model.hpp"

namespace choicedag {

struct IndistWitness {
  std::size_t pi1 = 0;
  std::size_t pi2 = 0;
  int i = 0;
  friend bool operator==(const IndistWitness&, const IndistWitness&) = default;
};

// Throws ValidationError unless 2 <= i <= n - 2 and the rankings have equal
// length.
bool is_indistinguishable(const Ranking& r1, const Ranking& r2, int i);

// All (pi1 < pi2, i) triples. With `frequent_only`, pairs are taken among
// types with p >= kappa.
std::vector<IndistWitness> find_witnesses(const ChoiceModel& m,
                                          bool frequent_only);

// Crosses the pair: pi_bar keeps pi's top i and takes pi' below, pi_bar'
// the reverse, with pi the lighter of the two. Both crossed rankings get
// p(pi); pi' keeps p(pi') - p(pi) and pi drops out. Zero-mass types are
// removed, and a crossed ranking already present absorbs the mass.
ChoiceModel confusable_model(const ChoiceModel& m, const IndistWitness& w);

}  // namespace choicedag
