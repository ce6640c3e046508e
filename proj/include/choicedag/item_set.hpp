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

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace choicedag {

inline constexpr int kMaxItems = 64;

// A subset of the item universe {0, ..., n-1}, stored as a 64-bit mask.
//
// Sets order first by cardinality and then by mask value, so iterating an
// ordered container of prefixes visits the DAG level by level.
class ItemSet {
 public:
  constexpr ItemSet() = default;
  constexpr explicit ItemSet(std::uint64_t bits) : bits_(bits) {}
  ItemSet(std::initializer_list<int> items);

  static ItemSet full(int n);
  static constexpr ItemSet single(int item) {
    return ItemSet(std::uint64_t{1} << item);
  }
  static ItemSet from_items(const std::vector<int>& items);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int item) const {
    return (bits_ >> item) & std::uint64_t{1};
  }
  constexpr ItemSet with(int item) const {
    return ItemSet(bits_ | (std::uint64_t{1} << item));
  }
  constexpr ItemSet without(int item) const {
    return ItemSet(bits_ & ~(std::uint64_t{1} << item));
  }
  constexpr bool is_subset_of(ItemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(ItemSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(ItemSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // True when every id is below n.
  bool within(int n) const;

  // Items in increasing order.
  std::vector<int> items() const;

  // "{1,3,4}" using 1-based ids.
  std::string to_string() const;

  friend constexpr ItemSet operator&(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ & b.bits_);
  }
  friend constexpr ItemSet operator|(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ | b.bits_);
  }
  // Set difference.
  friend constexpr ItemSet operator-(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ItemSet a, ItemSet b) = default;
  friend constexpr std::strong_ordering operator<=>(ItemSet a, ItemSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace choicedag

template <>
struct std::hash<choicedag::ItemSet> {
  std::size_t operator()(choicedag::ItemSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
