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

// Rankings, choice behavior and the synthetic kappa-rho generative model.
//
// Items are 0-based internally. Every file format and human-readable string
// uses 1-based ids.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "choicedag/item_set.hpp"
#include "choicedag/random.hpp"

namespace choicedag {

// A full preference order over n items; order()[0] is the favourite.
class Ranking {
 public:
  Ranking() = default;
  // Throws ValidationError unless `order` is a permutation of 0..n-1.
  explicit Ranking(std::vector<int> order);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int item_at(int position) const { return order_[position]; }
  int position_of(int item) const { return position_[item]; }

  // The unordered set of the top `length` items.
  ItemSet prefix(int length) const;

  std::string to_string() const;

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const Ranking& a, const Ranking& b) {
    return a.order_ <=> b.order_;
  }

 private:
  std::vector<int> order_;
  std::vector<int> position_;
};

// The most preferred item of `s` under `r`. Throws on an empty assortment.
int choose(const Ranking& r, ItemSet s);

struct ChoiceType {
  Ranking ranking;
  double prob = 0.0;
};

struct TypePartition {
  std::vector<std::size_t> frequent;
  std::vector<std::size_t> rare;
};

// A finite distribution over rankings together with the frequent/rare
// classification threshold kappa and the rare-mass bound rho.
class ChoiceModel {
 public:
  static constexpr double kSumTolerance = 1e-9;

  ChoiceModel() = default;
  // Validates the structural invariants: permutations over n items,
  // non-negative probabilities summing to one, distinct rankings,
  // kappa in (0,1) and rho in [0,1).
  ChoiceModel(int n, std::vector<ChoiceType> types, double kappa, double rho);

  int num_items() const { return n_; }
  std::size_t num_types() const { return types_.size(); }
  const std::vector<ChoiceType>& types() const { return types_; }
  const ChoiceType& type(std::size_t i) const { return types_[i]; }
  double kappa() const { return kappa_; }
  double rho() const { return rho_; }

  // Total probability of types with p < kappa.
  double rare_mass() const;

  // True when |frequent| <= ceil(1/kappa) and rare mass <= rho + 1e-9.
  bool satisfies_kappa_rho() const;
  // Throws ValidationError describing the first kappa-rho violation.
  void validate_kappa_rho() const;

 private:
  int n_ = 0;
  std::vector<ChoiceType> types_;
  double kappa_ = 0.01;
  double rho_ = 0.0;
};

// q_z(S): the probability that a random consumer picks z from S.
double choice_probability(const ChoiceModel& m, ItemSet s, int z);

// Partition of type indices by p >= kappa (frequent) versus p < kappa.
TypePartition classify_types(const ChoiceModel& m);

// Inverse-CDF sampler over a model's types. Zero-probability types are
// never returned.
class TypeSampler {
 public:
  explicit TypeSampler(std::span<const ChoiceType> types);
  std::size_t operator()(Rng& rng) const;

 private:
  std::vector<double> cdf_;
  std::size_t last_positive_ = 0;
};

std::size_t sample_type(const ChoiceModel& m, Rng& rng);

struct GenParams {
  int n = 8;
  int num_frequent = 5;
  int num_rare = 20;
  double rho = 0.01;
  double cv = 0.1;
  double kappa = 0.01;
  std::uint64_t seed = 0;
  // Merge duplicate frequent draws instead of redrawing them, which can
  // leave fewer than num_frequent distinct frequent types.
  bool allow_merge = false;
};

// Concentration of a symmetric Dirichlet over `k` components whose
// per-component coefficient of variation is `cv`.
double dirichlet_alpha_for_cv(int k, double cv);

std::vector<double> sample_symmetric_dirichlet(int k, double cv, Rng& rng);

Ranking uniform_ranking(int n, Rng& rng);

// Frequent rankings uniform, weights Dirichlet * (1 - rho); rare rankings
// uniform and distinct from all others, weights Dirichlet * rho. rho == 0
// yields no rare types.
ChoiceModel generate_model(const GenParams& gp);

}  // namespace choicedag
