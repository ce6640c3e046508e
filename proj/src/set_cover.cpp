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

#include "choicedag/set_cover.hpp"

#include <algorithm>

#include "choicedag/errors.hpp"

namespace choicedag {

std::vector<ItemSet> greedy_min_cover(const CoverInstance& inst) {
  const ItemSet a = inst.target;
  std::vector<ItemSet> open;
  for (ItemSet p : inst.prefixes) {
    if (!p.is_proper_subset_of(a)) {
      throw ValidationError("uncoverable prefix " + p.to_string() +
                            " for target " + a.to_string());
    }
    open.push_back(p);
  }
  std::sort(open.begin(), open.end());
  open.erase(std::unique(open.begin(), open.end()), open.end());

  std::vector<ItemSet> cover;
  const std::vector<int> candidates = a.items();
  while (!open.empty()) {
    int best = -1;
    std::size_t best_count = 0;
    for (int x : candidates) {
      // A \ {x} contains P' iff x is not in P'.
      const auto count = static_cast<std::size_t>(std::count_if(
          open.begin(), open.end(), [x](ItemSet p) { return !p.contains(x); }));
      if (count > best_count) {
        best = x;
        best_count = count;
      }
    }
    cover.push_back(a.without(best));
    std::erase_if(open, [best](ItemSet p) { return !p.contains(best); });
  }
  return cover;
}

bool verify_cover(const CoverInstance& inst,
                  const std::vector<ItemSet>& cover) {
  const ItemSet a = inst.target;
  for (ItemSet c : cover) {
    if (c.size() + 1 != a.size() || !c.is_subset_of(a)) return false;
  }
  for (ItemSet p : inst.prefixes) {
    const bool covered = std::any_of(cover.begin(), cover.end(),
                                     [p](ItemSet c) { return p.is_subset_of(c); });
    if (!covered) return false;
  }
  return true;
}

}  // namespace choicedag
