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

#include "choicedag/sushi.hpp"

#include <map>
#include <set>
#include <sstream>

#include "choicedag/errors.hpp"
#include "choicedag/model_io.hpp"

namespace choicedag {

namespace {

struct Line {
  int number;
  std::vector<long long> tokens;
};

[[noreturn]] void fail(std::string_view source, int line, const std::string& what) {
  throw ValidationError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(std::string_view text, std::string_view source) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::vector<long long> tokens;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) fail(source, number, "not an integer: '" + tok + "'");
      tokens.push_back(v);
    }
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
  }
  return out;
}

bool looks_like_order_file(const std::vector<Line>& lines) {
  if (lines.size() < 2 || lines[0].tokens.size() != 2) return false;
  const auto& second = lines[1].tokens;
  return second.size() >= 2 && second[0] == 0 &&
         static_cast<long long>(second.size()) == second[1] + 2;
}

}  // namespace

ChoiceModel parse_sushi(std::string_view text, double kappa, std::string_view source) {
  const auto lines = tokenize(text, source);
  if (lines.empty()) throw ValidationError(std::string(source) + ": no rankings");
  const bool order_file = looks_like_order_file(lines);
  const std::size_t first = order_file ? 1 : 0;
  const int offset = order_file ? 0 : 1;

  int n = -1;
  std::map<Ranking, std::size_t> counts;
  std::vector<Ranking> seen_order;
  std::size_t total = 0;
  for (std::size_t k = first; k < lines.size(); ++k) {
    const Line& line = lines[k];
    std::vector<long long> ids = line.tokens;
    if (order_file) {
      if (ids.size() < 2 || static_cast<long long>(ids.size()) != ids[1] + 2) {
        fail(source, line.number, "length field does not match the ids");
      }
      ids.erase(ids.begin(), ids.begin() + 2);
    }
    if (n < 0) {
      n = static_cast<int>(ids.size());
      if (n < 1 || n > kMaxItems) fail(source, line.number, "ranking length out of range");
    }
    if (static_cast<int>(ids.size()) != n) {
      fail(source, line.number, "expected " + std::to_string(n) + " items, found " +
                                    std::to_string(ids.size()));
    }
    std::vector<int> order;
    for (long long id : ids) {
      const long long z = id - offset;
      if (z < 0 || z >= n) fail(source, line.number, "item id out of range");
      order.push_back(static_cast<int>(z));
    }
    Ranking r;
    try {
      r = Ranking(std::move(order));
    } catch (const ValidationError&) {
      fail(source, line.number, "not a permutation");
    }
    auto [it, fresh] = counts.try_emplace(r, 0);
    if (fresh) seen_order.push_back(r);
    ++it->second;
    ++total;
  }
  if (total == 0) throw ValidationError(std::string(source) + ": no rankings");

  std::vector<ChoiceType> types;
  double rare = 0.0;
  for (const Ranking& r : seen_order) {
    const double p = static_cast<double>(counts[r]) / static_cast<double>(total);
    if (p < kappa) rare += p;
    types.push_back({r, p});
  }
  const double rho = std::min(rare, 1.0 - 1e-12);
  return ChoiceModel(n, std::move(types), kappa, rho);
}

ChoiceModel load_sushi(const std::string& path, double kappa) {
  return parse_sushi(read_text_file(path), kappa, path);
}

std::size_t frequent_prefix_count(const ChoiceModel& m, int length) {
  if (length < 0 || length > m.num_items()) {
    throw ValidationError("prefix length out of range");
  }
  std::set<std::vector<int>> seqs;
  for (const ChoiceType& t : m.types()) {
    if (t.prob < m.kappa()) continue;
    seqs.emplace(t.ranking.order().begin(), t.ranking.order().begin() + length);
  }
  return seqs.size();
}

}  // namespace choicedag
