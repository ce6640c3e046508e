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

#include "choicedag/json_lines.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace choicedag::detail {

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

std::vector<int> array_element_lines(std::string_view text,
                                     std::string_view key) {
  std::vector<int> lines;
  int line = 1;
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  std::string current;       // contents of the string being read
  std::string last_string;   // most recent completed string at depth 1
  bool want_array = false;   // saw "key": at depth 1
  int array_depth = -1;      // depth inside the target array, -1 if none
  bool expect_element = false;

  for (char c : text) {
    if (c == '\n') ++line;
    if (in_string) {
      if (escaped) {
        escaped = false;
        current += c;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
        if (depth == 1) last_string = current;
      } else {
        current += c;
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;

    if (array_depth >= 0 && depth == array_depth && expect_element &&
        c != ']') {
      lines.push_back(line);
      expect_element = false;
    }
    switch (c) {
      case '"':
        in_string = true;
        current.clear();
        break;
      case ':':
        if (depth == 1 && last_string == key) want_array = true;
        break;
      case '[':
      case '{':
        ++depth;
        if (want_array && c == '[' && array_depth < 0) {
          array_depth = depth;
          expect_element = true;
        }
        want_array = false;
        break;
      case ']':
      case '}':
        if (depth == array_depth) return lines;
        --depth;
        break;
      case ',':
        if (depth == array_depth) expect_element = true;
        if (depth == 1) want_array = false;
        break;
      default:
        break;
    }
  }
  return lines;
}

}  // namespace choicedag::detail
