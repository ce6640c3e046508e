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

// The prefix DAG of a choice model.
//
// Nodes are unordered prefixes A (sets of top-|A| items) with probability
// p(A); an edge (A, z) leads to A + {z} and carries e_{A+z}, the mass of
// types that rank A first in any order and z next.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "choicedag/item_set.hpp"
#include "choicedag/model.hpp"

namespace choicedag {

class QueryOracle;

struct EdgeKey {
  ItemSet from;
  int item = 0;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

class Dag {
 public:
  Dag() = default;
  explicit Dag(int n);

  int num_items() const { return n_; }
  // Deepest level holding a node; -1 for an empty DAG.
  int max_level() const;

  void set_node(ItemSet a, double prob);
  // Adds (or overwrites) edge (from, item); `from` must already be a node.
  // The head node is created with probability 0 if absent, but its
  // probability is left to the caller.
  void set_edge(ItemSet from, int item, double prob);

  bool has_node(ItemSet a) const { return nodes_.contains(a); }
  std::optional<double> node(ItemSet a) const;
  // p(A), or 0 when A is not a node.
  double node_prob(ItemSet a) const;
  bool has_edge(ItemSet from, int item) const;
  // e_{A+z}, or 0 when the edge is absent.
  double edge_prob(ItemSet from, int item) const;

  // Ordered by (level, mask).
  const std::map<ItemSet, double>& nodes() const { return nodes_; }
  // Edges carrying label z, keyed by tail.
  const std::map<ItemSet, double>& edges_with_item(int z) const {
    return by_item_[z];
  }
  std::vector<ItemSet> nodes_at_level(int level) const;
  // All edges ordered by (tail, item).
  std::map<EdgeKey, double> edges() const;
  std::size_t num_edges() const;

  friend bool operator==(const Dag&, const Dag&) = default;

 private:
  int n_ = 0;
  std::map<ItemSet, double> nodes_;
  std::vector<std::map<ItemSet, double>> by_item_;
};

// Ground truth by enumerating each type's prefixes up to `levels`.
// Zero-probability types are ignored. With `frequent_only`, the node and
// edge sets are those reached by frequent types (p >= kappa) while the
// stored probabilities stay the full-model values; this is the subgraph
// G^F of the true DAG.
Dag dag_from_model(const ChoiceModel& m, int levels, bool frequent_only);

// Complete DAG over all levels and all types.
inline Dag dag_from_model(const ChoiceModel& m) {
  return dag_from_model(m, m.num_items(), false);
}

// q_z(S) summed over stored edges (A, z) with A disjoint from S. Exact for
// complete DAGs. Truncated or frequent-only DAGs give an underestimate.
double choice_prob_from_dag(const Dag& d, ItemSet s, int z);

inline constexpr double kPositiveEdgeTolerance = 1e-12;

// Level-by-level reconstruction from exact choice probabilities:
//   e_{A+z} = q_z(N \ A) - sum over stored edges (A', z), A' strictly
//   inside A, of e_{A'+z},
// keeping edges above kPositiveEdgeTolerance. One oracle call per (A, z).
Dag build_dag_exact(QueryOracle& oracle);

// Nodes and edges of levels <= `levels`.
Dag truncate(const Dag& d, int levels);

struct DiffMetrics {
  double max_discrepancy = 0.0;
  int false_positives = 0;
  int false_negatives = 0;
  // 100 * (fp + fn) / |truth level|; the denominator is clamped to 1 when
  // the truth has no node at that level.
  double pct_diff = 0.0;

  int vertex_diff() const { return false_positives + false_negatives; }
  friend bool operator==(const DiffMetrics&, const DiffMetrics&) = default;
};

// Max |p_est(A) - p_truth(A)| over the union of nodes at levels <= `level`
// (a missing node counts as 0), and the symmetric difference of the node
// sets at exactly `level`.
DiffMetrics dag_diff(const Dag& truth, const Dag& est, int level);

// Mass of types whose top-`levels` items meet S.
double market_share(const ChoiceModel& m, ItemSet s, int levels);

// Node sets, edge sets, and all probabilities within `tol`.
bool dags_match(const Dag& a, const Dag& b, double tol);

// Same node and edge sets, probabilities ignored.
bool same_structure(const Dag& a, const Dag& b);

}  // namespace choicedag
