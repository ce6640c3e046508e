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

#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace choicedag::testing {

ChoiceModel model_from_1based(int n,
                              const std::vector<std::vector<int>>& rankings,
                              const std::vector<double>& probs, double kappa,
                              double rho) {
  std::vector<ChoiceType> types;
  for (std::size_t t = 0; t < rankings.size(); ++t) {
    std::vector<int> order;
    for (int id : rankings[t]) order.push_back(id - 1);
    types.push_back({Ranking(order), probs[t]});
  }
  return ChoiceModel(n, std::move(types), kappa, rho);
}

ChoiceModel five_type_model(double kappa) {
  return model_from_1based(5,
                           {{1, 2, 3, 4, 5},
                            {1, 2, 3, 5, 4},
                            {1, 2, 4, 3, 5},
                            {2, 3, 4, 1, 5},
                            {2, 4, 1, 3, 5}},
                           {0.2, 0.2, 0.2, 0.2, 0.2}, kappa);
}

ChoiceModel interference_model() {
  const double p = 1.0 / 9.0;
  return model_from_1based(8,
                           {{1, 2, 3, 4, 5, 6, 7, 8},
                            {1, 2, 3, 4, 5, 6, 8, 7},
                            {1, 2, 3, 4, 7, 5, 6, 8},
                            {1, 2, 3, 5, 7, 4, 6, 8},
                            {1, 2, 3, 6, 7, 4, 5, 8},
                            {1, 7, 2, 3, 4, 5, 6, 8},
                            {2, 7, 1, 3, 4, 5, 6, 8},
                            {3, 7, 1, 2, 4, 5, 6, 8},
                            {7, 1, 2, 3, 4, 5, 6, 8}},
                           std::vector<double>(9, p), 0.1);
}

ChoiceModel random_small_model(int n, int types, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> rankings;
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  while (static_cast<int>(rankings.size()) < types) {
    std::vector<int> r = base;
    std::shuffle(r.begin(), r.end(), rng);
    if (seen.insert(r).second) rankings.push_back(r);
  }
  std::uniform_real_distribution<double> w(0.05, 1.0);
  std::vector<double> probs;
  double total = 0.0;
  for (int t = 0; t < types; ++t) {
    probs.push_back(w(rng));
    total += probs.back();
  }
  for (double& p : probs) p /= total;
  return model_from_1based(n, rankings, probs, 0.01, 0.0);
}

double ref_choice_prob(const ChoiceModel& m, std::uint64_t s, int z) {
  double q = 0.0;
  for (const ChoiceType& t : m.types()) {
    const auto& order = t.ranking.order();
    int best_pos = static_cast<int>(order.size());
    int best = -1;
    for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
      if (((s >> order[pos]) & 1) && pos < best_pos) {
        best_pos = pos;
        best = order[pos];
      }
    }
    if (best == z) q += t.prob;
  }
  return q;
}

double ref_prefix_mass(const ChoiceModel& m, std::uint64_t a) {
  const int len = std::popcount(a);
  double mass = 0.0;
  for (const ChoiceType& t : m.types()) {
    std::uint64_t top = 0;
    for (int pos = 0; pos < len; ++pos) top |= std::uint64_t{1} << t.ranking.order()[pos];
    if (top == a) mass += t.prob;
  }
  return mass;
}

double ref_edge_mass(const ChoiceModel& m, std::uint64_t a, int z) {
  const int len = std::popcount(a);
  double mass = 0.0;
  for (const ChoiceType& t : m.types()) {
    if (len >= static_cast<int>(t.ranking.order().size())) continue;
    std::uint64_t top = 0;
    for (int pos = 0; pos < len; ++pos) top |= std::uint64_t{1} << t.ranking.order()[pos];
    if (top == a && t.ranking.order()[len] == z) mass += t.prob;
  }
  return mass;
}

int ref_min_cover_size(std::uint64_t a, const std::vector<std::uint64_t>& prefixes) {
  std::vector<int> items;
  for (int x = 0; x < 64; ++x) {
    if ((a >> x) & 1) items.push_back(x);
  }
  const int k = static_cast<int>(items.size());
  int best = k + 1;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    const int size = std::popcount(pick);
    if (size >= best) continue;
    bool ok = true;
    for (std::uint64_t p : prefixes) {
      // p sits inside a \ {x} exactly when x is missing from p.
      bool covered = false;
      for (int j = 0; j < k && !covered; ++j) {
        if (((pick >> j) & 1) && !((p >> items[j]) & 1)) covered = true;
      }
      if (!covered) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

std::uint64_t ref_sample_size(int c, double eps, double delta) {
  const long double pow2 = std::ldexp(1.0L, 2 * c - 1);
  const long double inner = -std::log(static_cast<long double>(delta)) +
                            (c + 1) * std::log(2.0L);
  const long double m = pow2 * inner / (static_cast<long double>(eps) * eps);
  return static_cast<std::uint64_t>(std::ceil(m));
}

}  // namespace choicedag::testing
