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

#include <cstddef>
#include <string_view>
#include <vector>

namespace choicedag::detail {

// 1-based line of a byte offset.
int line_of_offset(std::string_view text, std::size_t offset);

// Start lines of each element of the array stored under `key` in the
// top-level object of `text`. Empty when the key is absent. Only used to
// point error messages at the offending element; the text is assumed to
// have parsed successfully already.
std::vector<int> array_element_lines(std::string_view text,
                                     std::string_view key);

}  // namespace choicedag::detail
