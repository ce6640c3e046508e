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

// Synthetic and sushi experiment drivers.
//
// Instance i uses a model seeded by (seed, i) alone, so every rho cell of
// one instance shares its frequent rankings. Instances may run in
// parallel; rows are always assembled in instance order, so reports do not
// depend on the thread count.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choicedag/item_set.hpp"

namespace choicedag {

enum class Scenario { kChoiceProb, kRecovery, kSushi };

std::string scenario_name(Scenario s);
Scenario parse_scenario(const std::string& name);

struct ExperimentSpec {
  Scenario scenario = Scenario::kChoiceProb;
  int n = 8;
  std::vector<int> levels{3, 4, 5};
  std::vector<double> rhos{0.01};
  std::vector<double> epsilons{0.01};
  double kappa = 0.01;
  double delta = 0.05;
  int num_frequent = 5;
  int num_rare = 20;
  double cv = 0.1;
  int set_size = 4;
  int num_instances = 20;
  int num_random_sets = 100;
  std::uint64_t m_cap = 10000;
  std::uint64_t seed = 0;
  bool parallel = true;
  // Sushi scenario only.
  std::string data_path;

  void validate() const;
};

struct ChoiceRow {
  int instance = 0;
  double rho = 0.0;
  double eps = 0.0;
  int n0 = 0;
  ItemSet set;
  double market_share = 0.0;
  double l1_error = 0.0;
  friend bool operator==(const ChoiceRow&, const ChoiceRow&) = default;
};

struct RecoveryRow {
  int instance = 0;
  double rho = 0.0;
  int n0 = 0;
  double max_discrepancy = 0.0;
  double pct_diff_vertices = 0.0;
  std::uint64_t queries_total = 0;
  friend bool operator==(const RecoveryRow&, const RecoveryRow&) = default;
};

// One AlgDAG run.
struct RunRow {
  int instance = 0;
  double rho = 0.0;
  double eps = 0.0;
  int n0 = 0;
  std::uint64_t queries = 0;
  bool capped = false;
  friend bool operator==(const RunRow&, const RunRow&) = default;
};

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;
  double sem = 0.0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

// Aggregates per (rho, eps, n0), in order of first appearance.
struct Cell {
  double rho = 0.0;
  double eps = 0.0;
  int n0 = 0;
  Summary l1;
  Summary max_discrepancy;
  Summary pct_diff;
  // Pooled per-set correlation of L1 error with market share; empty when
  // either side has zero variance.
  std::optional<double> pearson;
  double mean_queries = 0.0;
  bool capped_any = false;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct ExperimentReport {
  Scenario scenario = Scenario::kChoiceProb;
  std::vector<ChoiceRow> choice_rows;
  std::vector<RecoveryRow> recovery_rows;
  std::vector<RunRow> runs;
  std::vector<Cell> cells;
  // Sushi scenario: distinct rankings, and (n0, count) of frequent ordered
  // top-n0 sequences.
  std::size_t distinct_types = 0;
  std::vector<std::pair<int, std::size_t>> prefix_counts;
  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

ExperimentReport run_choice_prob_experiment(const ExperimentSpec& spec);
ExperimentReport run_recovery_experiment(const ExperimentSpec& spec);
ExperimentReport run_sushi_experiment(const ExperimentSpec& spec);
ExperimentReport run_experiment(const ExperimentSpec& spec);

// Uniform size-k subsets of n items, items distinct within a set.
std::vector<ItemSet> random_sets(int n, int k, int count, std::uint64_t seed);

}  // namespace choicedag
