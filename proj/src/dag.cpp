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

#include "choicedag/dag.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "choicedag/errors.hpp"
#include "choicedag/oracle.hpp"

namespace choicedag {

Dag::Dag(int n) : n_(n), by_item_(static_cast<std::size_t>(n)) {
  if (n < 1 || n > kMaxItems) {
    throw ValidationError("DAG item count must be in [1, 64]");
  }
}

int Dag::max_level() const {
  return nodes_.empty() ? -1 : nodes_.rbegin()->first.size();
}

void Dag::set_node(ItemSet a, double prob) {
  if (!a.within(n_)) {
    throw ValidationError("node " + a.to_string() + " outside the universe");
  }
  nodes_[a] = prob;
}

void Dag::set_edge(ItemSet from, int item, double prob) {
  if (item < 0 || item >= n_ || from.contains(item)) {
    throw ValidationError("invalid edge label " + std::to_string(item + 1) +
                          " from " + from.to_string());
  }
  if (!nodes_.contains(from)) {
    throw ValidationError("edge tail " + from.to_string() + " is not a node");
  }
  by_item_[item][from] = prob;
  nodes_.try_emplace(from.with(item), 0.0);
}

std::optional<double> Dag::node(ItemSet a) const {
  const auto it = nodes_.find(a);
  if (it == nodes_.end()) return std::nullopt;
  return it->second;
}

double Dag::node_prob(ItemSet a) const { return node(a).value_or(0.0); }

bool Dag::has_edge(ItemSet from, int item) const {
  return item >= 0 && item < n_ && by_item_[item].contains(from);
}

double Dag::edge_prob(ItemSet from, int item) const {
  if (item < 0 || item >= n_) return 0.0;
  const auto it = by_item_[item].find(from);
  return it == by_item_[item].end() ? 0.0 : it->second;
}

std::vector<ItemSet> Dag::nodes_at_level(int level) const {
  std::vector<ItemSet> out;
  if (level < 0 || level > n_) return out;
  // The smallest level-j mask is the j lowest bits.
  const ItemSet lo = level == kMaxItems
                         ? ItemSet(~std::uint64_t{0})
                         : ItemSet((std::uint64_t{1} << level) - 1);
  for (auto it = nodes_.lower_bound(lo);
       it != nodes_.end() && it->first.size() == level; ++it) {
    out.push_back(it->first);
  }
  return out;
}

std::map<EdgeKey, double> Dag::edges() const {
  std::map<EdgeKey, double> out;
  for (int z = 0; z < n_; ++z) {
    for (const auto& [from, p] : by_item_[z]) out.emplace(EdgeKey{from, z}, p);
  }
  return out;
}

std::size_t Dag::num_edges() const {
  std::size_t count = 0;
  for (const auto& m : by_item_) count += m.size();
  return count;
}

Dag dag_from_model(const ChoiceModel& m, int levels, bool frequent_only) {
  const int n = m.num_items();
  if (levels < 0 || levels > n) {
    throw ValidationError("DAG depth must lie in [0, n]");
  }
  std::set<ItemSet> keep_nodes;
  std::set<EdgeKey> keep_edges;
  if (frequent_only) {
    for (const ChoiceType& t : m.types()) {
      if (t.prob < m.kappa() || t.prob <= 0.0) continue;
      ItemSet a;
      keep_nodes.insert(a);
      for (int j = 0; j < levels; ++j) {
        keep_edges.insert({a, t.ranking.item_at(j)});
        a = a.with(t.ranking.item_at(j));
        keep_nodes.insert(a);
      }
    }
  }

  Dag d(n);
  std::map<ItemSet, double> node_mass;
  std::map<EdgeKey, double> edge_mass;
  for (const ChoiceType& t : m.types()) {
    if (t.prob <= 0.0) continue;
    ItemSet a;
    node_mass[a] += t.prob;
    for (int j = 0; j < levels; ++j) {
      const int z = t.ranking.item_at(j);
      edge_mass[{a, z}] += t.prob;
      a = a.with(z);
      node_mass[a] += t.prob;
    }
  }
  for (const auto& [a, p] : node_mass) {
    if (!frequent_only || keep_nodes.contains(a)) d.set_node(a, p);
  }
  for (const auto& [key, p] : edge_mass) {
    if (!frequent_only || keep_edges.contains(key)) {
      d.set_edge(key.from, key.item, p);
    }
  }
  return d;
}

double choice_prob_from_dag(const Dag& d, ItemSet s, int z) {
  if (z < 0 || z >= d.num_items() || !s.contains(z)) {
    throw ValidationError("item " + std::to_string(z + 1) +
                          " is not in assortment " + s.to_string());
  }
  double q = 0.0;
  for (const auto& [a, e] : d.edges_with_item(z)) {
    if (!a.intersects(s)) q += e;
  }
  return q;
}

Dag build_dag_exact(QueryOracle& oracle) {
  const int n = oracle.num_items();
  const ItemSet universe = ItemSet::full(n);
  Dag d(n);
  d.set_node(ItemSet{}, 1.0);
  for (int level = 0; level < n; ++level) {
    for (ItemSet a : d.nodes_at_level(level)) {
      for (int z = 0; z < n; ++z) {
        if (a.contains(z)) continue;
        double e = oracle.choice_frequency(universe - a, z, 1);
        // Only strictly smaller earlier tails can be stored for label z.
        for (const auto& [tail, p] : d.edges_with_item(z)) {
          if (tail.is_proper_subset_of(a)) e -= p;
        }
        if (e > kPositiveEdgeTolerance) {
          const ItemSet head = a.with(z);
          const double before = d.node_prob(head);
          d.set_edge(a, z, e);
          d.set_node(head, before + e);
        }
      }
    }
  }
  return d;
}

Dag truncate(const Dag& d, int levels) {
  Dag out(d.num_items());
  for (const auto& [a, p] : d.nodes()) {
    if (a.size() <= levels) out.set_node(a, p);
  }
  for (int z = 0; z < d.num_items(); ++z) {
    for (const auto& [a, e] : d.edges_with_item(z)) {
      if (a.size() + 1 <= levels) out.set_edge(a, z, e);
    }
  }
  return out;
}

DiffMetrics dag_diff(const Dag& truth, const Dag& est, int level) {
  if (truth.num_items() != est.num_items()) {
    throw ValidationError("cannot compare DAGs over different item counts");
  }
  DiffMetrics out;
  auto scan = [&](const Dag& a, const Dag& b) {
    for (const auto& [set, p] : a.nodes()) {
      if (set.size() > level) break;
      out.max_discrepancy =
          std::max(out.max_discrepancy, std::abs(p - b.node_prob(set)));
    }
  };
  scan(truth, est);
  scan(est, truth);

  const auto truth_level = truth.nodes_at_level(level);
  for (ItemSet a : est.nodes_at_level(level)) {
    if (!truth.has_node(a)) ++out.false_positives;
  }
  for (ItemSet a : truth_level) {
    if (!est.has_node(a)) ++out.false_negatives;
  }
  const double denom =
      static_cast<double>(std::max<std::size_t>(truth_level.size(), 1));
  out.pct_diff = 100.0 * out.vertex_diff() / denom;
  return out;
}

double market_share(const ChoiceModel& m, ItemSet s, int levels) {
  if (s.empty()) throw ValidationError("empty assortment");
  double share = 0.0;
  for (const ChoiceType& t : m.types()) {
    if (t.ranking.prefix(levels).intersects(s)) share += t.prob;
  }
  return share;
}

bool same_structure(const Dag& a, const Dag& b) {
  if (a.num_items() != b.num_items()) return false;
  if (a.nodes().size() != b.nodes().size()) return false;
  for (const auto& [set, p] : a.nodes()) {
    if (!b.has_node(set)) return false;
  }
  for (int z = 0; z < a.num_items(); ++z) {
    const auto& ea = a.edges_with_item(z);
    const auto& eb = b.edges_with_item(z);
    if (ea.size() != eb.size()) return false;
    for (const auto& [from, p] : ea) {
      if (!eb.contains(from)) return false;
    }
  }
  return true;
}

bool dags_match(const Dag& a, const Dag& b, double tol) {
  if (!same_structure(a, b)) return false;
  for (const auto& [set, p] : a.nodes()) {
    if (std::abs(p - b.node_prob(set)) > tol) return false;
  }
  for (int z = 0; z < a.num_items(); ++z) {
    for (const auto& [from, p] : a.edges_with_item(z)) {
      if (std::abs(p - b.edge_prob(from, z)) > tol) return false;
    }
  }
  return true;
}

}  // namespace choicedag
