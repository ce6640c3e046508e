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

#include "choicedag/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "choicedag/errors.hpp"

namespace choicedag {

Ranking::Ranking(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n == 0 || n > kMaxItems) {
    throw ValidationError("ranking length must be in [1, 64], got " +
                          std::to_string(n));
  }
  position_.assign(static_cast<std::size_t>(n), -1);
  for (int pos = 0; pos < n; ++pos) {
    const int z = order_[pos];
    if (z < 0 || z >= n) {
      throw ValidationError("ranking item " + std::to_string(z + 1) +
                            " outside 1.." + std::to_string(n));
    }
    if (position_[z] != -1) {
      throw ValidationError("ranking repeats item " + std::to_string(z + 1));
    }
    position_[z] = pos;
  }
}

ItemSet Ranking::prefix(int length) const {
  ItemSet s;
  for (int i = 0; i < length; ++i) s = s.with(order_[i]);
  return s;
}

std::string Ranking::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(order_[i] + 1);
  }
  return out + ")";
}

int choose(const Ranking& r, ItemSet s) {
  if (s.empty()) throw ValidationError("empty assortment");
  for (int z : r.order()) {
    if (s.contains(z)) return z;
  }
  throw ValidationError("assortment " + s.to_string() +
                        " contains no item of the ranking");
}

ChoiceModel::ChoiceModel(int n, std::vector<ChoiceType> types, double kappa,
                         double rho)
    : n_(n), types_(std::move(types)), kappa_(kappa), rho_(rho) {
  if (n < 1 || n > kMaxItems) {
    throw ValidationError("n must be in [1, 64], got " + std::to_string(n));
  }
  if (!(kappa > 0.0 && kappa < 1.0)) {
    throw ValidationError("kappa must lie in (0, 1)");
  }
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw ValidationError("rho must lie in [0, 1)");
  }
  if (types_.empty()) throw ValidationError("model has no types");
  double total = 0.0;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < types_.size(); ++i) {
    const ChoiceType& t = types_[i];
    const std::string where = "type " + std::to_string(i + 1) + ": ";
    if (t.ranking.size() != n) {
      throw ValidationError(where + "ranking has " +
                            std::to_string(t.ranking.size()) +
                            " items, expected " + std::to_string(n));
    }
    if (!(t.prob >= 0.0) || t.prob > 1.0) {
      throw ValidationError(where + "probability outside [0, 1]");
    }
    if (!seen.insert(t.ranking.order()).second) {
      throw ValidationError(where + "duplicate ranking " +
                            t.ranking.to_string());
    }
    total += t.prob;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw ValidationError("type probabilities sum to " +
                          std::to_string(total) + ", expected 1");
  }
}

double ChoiceModel::rare_mass() const {
  double mass = 0.0;
  for (const ChoiceType& t : types_) {
    if (t.prob < kappa_) mass += t.prob;
  }
  return mass;
}

bool ChoiceModel::satisfies_kappa_rho() const {
  try {
    validate_kappa_rho();
  } catch (const ValidationError&) {
    return false;
  }
  return true;
}

void ChoiceModel::validate_kappa_rho() const {
  const auto bound = static_cast<std::size_t>(std::ceil(1.0 / kappa_));
  std::size_t frequent = 0;
  for (const ChoiceType& t : types_) frequent += t.prob >= kappa_ ? 1 : 0;
  if (frequent > bound) {
    throw ValidationError(std::to_string(frequent) +
                          " frequent types exceed ceil(1/kappa) = " +
                          std::to_string(bound));
  }
  const double rare = rare_mass();
  if (rare > rho_ + kSumTolerance) {
    throw ValidationError("rare mass " + std::to_string(rare) +
                          " exceeds rho = " + std::to_string(rho_));
  }
}

double choice_probability(const ChoiceModel& m, ItemSet s, int z) {
  if (s.empty()) throw ValidationError("empty assortment");
  if (!s.within(m.num_items())) {
    throw ValidationError("assortment " + s.to_string() +
                          " has items outside the universe");
  }
  if (z < 0 || z >= m.num_items() || !s.contains(z)) {
    throw ValidationError("item " + std::to_string(z + 1) +
                          " is not in assortment " + s.to_string());
  }
  double q = 0.0;
  for (const ChoiceType& t : m.types()) {
    if (choose(t.ranking, s) == z) q += t.prob;
  }
  return q;
}

TypePartition classify_types(const ChoiceModel& m) {
  TypePartition out;
  for (std::size_t i = 0; i < m.num_types(); ++i) {
    (m.type(i).prob >= m.kappa() ? out.frequent : out.rare).push_back(i);
  }
  return out;
}

TypeSampler::TypeSampler(std::span<const ChoiceType> types) {
  cdf_.reserve(types.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < types.size(); ++i) {
    acc += types[i].prob;
    cdf_.push_back(acc);
    if (types[i].prob > 0.0) last_positive_ = i;
  }
}

std::size_t TypeSampler::operator()(Rng& rng) const {
  const double u = uniform01(rng) * cdf_.back();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto i = static_cast<std::size_t>(it - cdf_.begin());
  // u can only reach the end through rounding in the running sum.
  return std::min(i, last_positive_);
}

std::size_t sample_type(const ChoiceModel& m, Rng& rng) {
  return TypeSampler(m.types())(rng);
}

double dirichlet_alpha_for_cv(int k, double cv) {
  if (k < 1) throw ValidationError("Dirichlet needs at least one component");
  if (!(cv > 0.0)) throw ValidationError("cv must be positive");
  if (k == 1) return std::numeric_limits<double>::infinity();
  const double alpha = ((k - 1) / (cv * cv) - 1.0) / k;
  if (!(alpha > 0.0)) {
    throw ValidationError("cv " + std::to_string(cv) +
                          " is unreachable by a symmetric Dirichlet over " +
                          std::to_string(k) + " components");
  }
  return alpha;
}

std::vector<double> sample_symmetric_dirichlet(int k, double cv, Rng& rng) {
  const double alpha = dirichlet_alpha_for_cv(k, cv);
  if (k == 1) return {1.0};
  std::gamma_distribution<double> gamma(alpha, 1.0);
  std::vector<double> w(static_cast<std::size_t>(k));
  double total = 0.0;
  for (double& x : w) {
    x = gamma(rng);
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

Ranking uniform_ranking(int n, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return Ranking(std::move(order));
}

namespace {

// min(n!, cap) without overflow.
std::uint64_t saturating_factorial(int n, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    if (f > cap / static_cast<std::uint64_t>(i)) return cap;
    f *= static_cast<std::uint64_t>(i);
  }
  return std::min(f, cap);
}

}  // namespace

ChoiceModel generate_model(const GenParams& gp) {
  if (gp.n < 1 || gp.n > kMaxItems) {
    throw ValidationError("n must be in [1, 64]");
  }
  if (gp.num_frequent < 1) throw ValidationError("num_frequent must be >= 1");
  if (gp.num_rare < 0) throw ValidationError("num_rare must be >= 0");
  if (!(gp.rho >= 0.0 && gp.rho < 1.0)) {
    throw ValidationError("rho must lie in [0, 1)");
  }
  if (!(gp.cv > 0.0)) throw ValidationError("cv must be positive");
  const int num_rare = gp.rho > 0.0 ? gp.num_rare : 0;
  if (gp.rho > 0.0 && num_rare == 0) {
    throw ValidationError("rho > 0 requires at least one rare type");
  }
  const int frequent_needed = gp.allow_merge ? std::min(gp.num_frequent, 1) : gp.num_frequent;
  const auto needed = static_cast<std::uint64_t>(frequent_needed + num_rare);
  if (saturating_factorial(gp.n, needed) < needed) {
    throw ValidationError("n = " + std::to_string(gp.n) +
                          " cannot supply " + std::to_string(needed) +
                          " distinct rankings");
  }

  Rng rng(gp.seed);
  std::set<std::vector<int>> used;
  std::vector<Ranking> frequent;
  if (gp.allow_merge) {
    // Exactly K draws; a duplicate shrinks the candidate set.
    for (int i = 0; i < gp.num_frequent; ++i) {
      Ranking r = uniform_ranking(gp.n, rng);
      if (used.insert(r.order()).second) frequent.push_back(std::move(r));
    }
  } else {
    while (static_cast<int>(frequent.size()) < gp.num_frequent) {
      Ranking r = uniform_ranking(gp.n, rng);
      if (used.insert(r.order()).second) frequent.push_back(std::move(r));
    }
  }
  if (saturating_factorial(gp.n, used.size() + num_rare) < used.size() + num_rare) {
    throw ValidationError("n = " + std::to_string(gp.n) + " leaves too few rankings for " +
                          std::to_string(num_rare) + " rare types");
  }
  std::vector<Ranking> rare;
  while (static_cast<int>(rare.size()) < num_rare) {
    Ranking r = uniform_ranking(gp.n, rng);
    if (used.insert(r.order()).second) rare.push_back(std::move(r));
  }

  std::vector<ChoiceType> types;
  types.reserve(frequent.size() + rare.size());
  const auto wf =
      sample_symmetric_dirichlet(static_cast<int>(frequent.size()), gp.cv, rng);
  for (std::size_t i = 0; i < frequent.size(); ++i) {
    types.push_back({std::move(frequent[i]), wf[i] * (1.0 - gp.rho)});
  }
  if (num_rare > 0) {
    const auto wr = sample_symmetric_dirichlet(num_rare, gp.cv, rng);
    for (std::size_t i = 0; i < rare.size(); ++i) {
      types.push_back({std::move(rare[i]), wr[i] * gp.rho});
    }
  }
  return ChoiceModel(gp.n, std::move(types), gp.kappa, gp.rho);
}

}  // namespace choicedag
