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

#include <map>
#include <unordered_set>

#include "catch_amalgamated.hpp"
#include "choicedag/errors.hpp"
#include "choicedag/item_set.hpp"

using namespace choicedag;

TEST_CASE("item sets basic operations") {
  const ItemSet a{0, 2, 5};
  CHECK(a.size() == 3);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK(a.with(1).size() == 4);
  CHECK(a.without(2) == ItemSet({0, 5}));
  CHECK(ItemSet({0, 5}).is_proper_subset_of(a));
  CHECK_FALSE(a.is_proper_subset_of(a));
  CHECK(a.is_subset_of(a));
  CHECK((a - ItemSet{0}) == ItemSet({2, 5}));
  CHECK((a & ItemSet{2, 3}) == ItemSet{2});
  CHECK((a | ItemSet{3}) == ItemSet({0, 2, 3, 5}));
  CHECK(a.items() == std::vector<int>{0, 2, 5});
  CHECK(a.to_string() == "{1,3,6}");
  CHECK(ItemSet{}.to_string() == "{}");
  CHECK(ItemSet::from_items({4, 1}) == ItemSet({1, 4}));
}

TEST_CASE("full sets and bounds") {
  CHECK(ItemSet::full(0).empty());
  CHECK(ItemSet::full(5).size() == 5);
  CHECK(ItemSet::full(64).size() == 64);
  CHECK_THROWS_AS(ItemSet::full(65), ValidationError);
  CHECK_THROWS_AS(ItemSet::full(-1), ValidationError);
  CHECK(ItemSet{0, 3}.within(4));
  CHECK_FALSE(ItemSet{0, 4}.within(4));
  CHECK(ItemSet::full(64).within(64));
}

TEST_CASE("ordering is by size then mask") {
  std::map<ItemSet, int> m;
  m[ItemSet{0, 1}] = 2;
  m[ItemSet{3}] = 1;
  m[ItemSet{}] = 0;
  m[ItemSet{2}] = 1;
  int prev = -1;
  for (const auto& [s, level] : m) {
    CHECK(s.size() == level);
    CHECK(level >= prev);
    prev = level;
  }
  CHECK(m.begin()->first.empty());
  std::unordered_set<ItemSet> h{ItemSet{1}, ItemSet{1}, ItemSet{2}};
  CHECK(h.size() == 2);
}
