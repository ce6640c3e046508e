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

#include "choicedag/oracle.hpp"

#include <string>

#include "choicedag/errors.hpp"

namespace choicedag {

namespace {

void check_query(int n, ItemSet s, int z) {
  if (s.empty()) throw ValidationError("empty assortment");
  if (!s.within(n)) {
    throw ValidationError("assortment " + s.to_string() +
                          " has items outside the universe");
  }
  if (z < 0 || z >= n || !s.contains(z)) {
    throw ValidationError("item " + std::to_string(z + 1) +
                          " is not offered in " + s.to_string());
  }
}

}  // namespace

void QueryLedger::record(ItemSet s, std::uint64_t count) {
  total_ += count;
  assortments_.insert(s);
}

ExactOracle::ExactOracle(const ChoiceModel& model) : model_(&model) {}

double ExactOracle::choice_frequency(ItemSet s, int z, std::uint64_t) {
  check_query(model_->num_items(), s, z);
  if (cached_.empty() || cached_set_ != s) {
    cached_.assign(static_cast<std::size_t>(model_->num_items()), 0.0);
    for (const ChoiceType& t : model_->types()) {
      cached_[choose(t.ranking, s)] += t.prob;
    }
    cached_set_ = s;
  }
  ledger_.record(s, 1);
  return cached_[z];
}

SampledOracle::SampledOracle(const ChoiceModel& model, std::uint64_t seed)
    : model_(&model), sampler_(model.types()), rng_(seed) {}

int SampledOracle::offer(ItemSet s) {
  if (s.empty()) throw ValidationError("empty assortment");
  const std::size_t t = sampler_(rng_);
  ledger_.record(s, 1);
  return choose(model_->type(t).ranking, s);
}

double SampledOracle::choice_frequency(ItemSet s, int z, std::uint64_t m) {
  check_query(model_->num_items(), s, z);
  if (m == 0) throw ValidationError("sample size must be at least 1");
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::size_t t = sampler_(rng_);
    hits += choose(model_->type(t).ranking, s) == z ? 1 : 0;
  }
  ledger_.record(s, m);
  return static_cast<double>(hits) / static_cast<double>(m);
}

double estimate_frequency(SampledOracle& oracle, ItemSet s, int z,
                          std::uint64_t m) {
  return oracle.choice_frequency(s, z, m);
}

}  // namespace choicedag
