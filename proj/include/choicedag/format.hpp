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

#include <cstdio>
#include <string>

#include "choicedag/item_set.hpp"

namespace choicedag {

// Shortest-safe round-trip text for a double.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// "1 3 4"; empty set gives "".
inline std::string format_ids(ItemSet s) {
  std::string out;
  for (int z : s.items()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(z + 1);
  }
  return out;
}

}  // namespace choicedag
