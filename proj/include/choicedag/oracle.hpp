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

// Query access to a hidden choice model: offer an assortment, observe what
// gets chosen. The exact oracle returns q_z(S); the sampled oracle draws a
// fresh consumer per query, as each consumer may only be asked once.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "choicedag/item_set.hpp"
#include "choicedag/model.hpp"
#include "choicedag/random.hpp"

namespace choicedag {

// Running totals; both counters only ever grow.
class QueryLedger {
 public:
  // `count` consumers (sampled) or oracle calls (exact) on assortment s.
  void record(ItemSet s, std::uint64_t count);

  std::uint64_t total_queries() const { return total_; }
  std::size_t distinct_assortments() const { return assortments_.size(); }

 private:
  std::uint64_t total_ = 0;
  std::unordered_set<ItemSet> assortments_;
};

class QueryOracle {
 public:
  virtual ~QueryOracle() = default;

  virtual int num_items() const = 0;
  virtual bool is_exact() const = 0;

  // Exact mode: q_z(S), `m` ignored, one query recorded.
  // Sampled mode: fraction of `m` fresh consumers choosing z from S.
  virtual double choice_frequency(ItemSet s, int z, std::uint64_t m) = 0;

  const QueryLedger& ledger() const { return ledger_; }

 protected:
  QueryLedger ledger_;
};

// The model must outlive the oracle.
class ExactOracle final : public QueryOracle {
 public:
  explicit ExactOracle(const ChoiceModel& model);

  int num_items() const override { return model_->num_items(); }
  bool is_exact() const override { return true; }
  double choice_frequency(ItemSet s, int z, std::uint64_t m) override;

 private:
  const ChoiceModel* model_;
  // Choice distribution of the most recent assortment.
  ItemSet cached_set_;
  std::vector<double> cached_;
};

// The model must outlive the oracle. Not safe for concurrent use; give each
// worker its own oracle and seed.
class SampledOracle final : public QueryOracle {
 public:
  SampledOracle(const ChoiceModel& model, std::uint64_t seed);

  int num_items() const override { return model_->num_items(); }
  bool is_exact() const override { return false; }
  double choice_frequency(ItemSet s, int z, std::uint64_t m) override;

  // One consumer, one choice.
  int offer(ItemSet s);

 private:
  const ChoiceModel* model_;
  TypeSampler sampler_;
  Rng rng_;
};

// (#consumers choosing z) / m over m fresh consumers offered S.
double estimate_frequency(SampledOracle& oracle, ItemSet s, int z,
                          std::uint64_t m);

}  // namespace choicedag
