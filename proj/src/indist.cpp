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

#include "choicedag/indist.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "choicedag/errors.hpp"

namespace choicedag {

namespace {

// Positions 2..n-2 at which the pair is indistinguishable.
std::vector<int> witness_positions(const Ranking& a, const Ranking& b) {
  const int n = a.size();
  std::vector<int> out;
  int first_diff = -1, last_diff = -1;
  for (int j = 0; j < n; ++j) {
    if (a.item_at(j) != b.item_at(j)) {
      if (first_diff < 0) first_diff = j;
      last_diff = j;
    }
  }
  if (first_diff < 0) return out;
  ItemSet pa, pb;
  for (int j = 0; j < n - 2; ++j) {
    pa = pa.with(a.item_at(j));
    pb = pb.with(b.item_at(j));
    const int i = j + 1;
    if (i >= 2 && pa == pb && first_diff < i && last_diff >= i) out.push_back(i);
  }
  return out;
}

Ranking cross(const Ranking& top, const Ranking& bottom, int i) {
  std::vector<int> order(top.order().begin(), top.order().begin() + i);
  order.insert(order.end(), bottom.order().begin() + i, bottom.order().end());
  return Ranking(std::move(order));
}

}  // namespace

bool is_indistinguishable(const Ranking& r1, const Ranking& r2, int i) {
  const int n = r1.size();
  if (r2.size() != n) throw ValidationError("rankings differ in length");
  if (i < 2 || i > n - 2) {
    throw ValidationError("position " + std::to_string(i) +
                          " outside [2, n-2]");
  }
  const auto pos = witness_positions(r1, r2);
  return std::find(pos.begin(), pos.end(), i) != pos.end();
}

std::vector<IndistWitness> find_witnesses(const ChoiceModel& m,
                                          bool frequent_only) {
  std::vector<std::size_t> pool;
  for (std::size_t t = 0; t < m.num_types(); ++t) {
    if (!frequent_only || m.type(t).prob >= m.kappa()) pool.push_back(t);
  }
  std::vector<IndistWitness> out;
  for (std::size_t x = 0; x < pool.size(); ++x) {
    for (std::size_t y = x + 1; y < pool.size(); ++y) {
      const Ranking& a = m.type(pool[x]).ranking;
      const Ranking& b = m.type(pool[y]).ranking;
      for (int i : witness_positions(a, b)) out.push_back({pool[x], pool[y], i});
    }
  }
  return out;
}

ChoiceModel confusable_model(const ChoiceModel& m, const IndistWitness& w) {
  if (w.pi1 >= m.num_types() || w.pi2 >= m.num_types() || w.pi1 == w.pi2) {
    throw ValidationError("witness refers to unknown types");
  }
  std::size_t lo = w.pi1, hi = w.pi2;
  if (m.type(lo).prob > m.type(hi).prob) std::swap(lo, hi);
  const Ranking& pi = m.type(lo).ranking;
  const Ranking& pi_prime = m.type(hi).ranking;
  if (!is_indistinguishable(pi, pi_prime, w.i)) {
    throw ValidationError("witness pair is not indistinguishable at " +
                          std::to_string(w.i));
  }
  const double p = m.type(lo).prob;

  std::map<Ranking, double> mass;
  std::vector<Ranking> order;
  auto add = [&](const Ranking& r, double q) {
    auto [it, fresh] = mass.try_emplace(r, 0.0);
    if (fresh) order.push_back(r);
    it->second += q;
  };
  for (std::size_t t = 0; t < m.num_types(); ++t) {
    if (t == lo) continue;
    const double q = t == hi ? m.type(t).prob - p : m.type(t).prob;
    add(m.type(t).ranking, q);
  }
  add(cross(pi, pi_prime, w.i), p);
  add(cross(pi_prime, pi, w.i), p);

  std::vector<ChoiceType> types;
  double rare = 0.0;
  for (const Ranking& r : order) {
    const double q = mass[r];
    if (q <= 0.0) continue;
    types.push_back({r, q});
    if (q < m.kappa()) rare += q;
  }
  const double rho = std::min(std::max(m.rho(), rare), 1.0 - 1e-12);
  return ChoiceModel(m.num_items(), std::move(types), m.kappa(), rho);
}

}  // namespace choicedag
