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

#include "choicedag/item_set.hpp"

#include "choicedag/errors.hpp"

namespace choicedag {

ItemSet::ItemSet(std::initializer_list<int> items) {
  for (int z : items) *this = with(z);
}

ItemSet ItemSet::full(int n) {
  if (n < 0 || n > kMaxItems) {
    throw ValidationError("item count must be in [0, 64], got " +
                          std::to_string(n));
  }
  if (n == kMaxItems) return ItemSet(~std::uint64_t{0});
  return ItemSet((std::uint64_t{1} << n) - 1);
}

ItemSet ItemSet::from_items(const std::vector<int>& items) {
  ItemSet s;
  for (int z : items) {
    if (z < 0 || z >= kMaxItems) {
      throw ValidationError("item id out of range: " + std::to_string(z));
    }
    s = s.with(z);
  }
  return s;
}

bool ItemSet::within(int n) const { return is_subset_of(full(n)); }

std::vector<int> ItemSet::items() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string ItemSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int z : items()) {
    if (!first) out += ',';
    out += std::to_string(z + 1);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace choicedag
