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

#include <cmath>

#include "catch_amalgamated.hpp"
#include "choicedag/dag.hpp"
#include "choicedag/errors.hpp"
#include "choicedag/oracle.hpp"
#include "oracles.hpp"

using namespace choicedag;
using namespace choicedag::testing;
using Catch::Matchers::WithinAbs;

namespace {

ItemSet s1(std::initializer_list<int> ids) {
  ItemSet s;
  for (int z : ids) s = s.with(z - 1);
  return s;
}

// Incoming and (complete DAGs) outgoing flow.
void check_flow(const Dag& d, bool complete) {
  for (const auto& [a, p] : d.nodes()) {
    if (!a.empty()) {
      double in = 0.0;
      for (int z : a.items()) in += d.edge_prob(a.without(z), z);
      CHECK_THAT(in, WithinAbs(p, 1e-9));
    }
    if (complete && a.size() < d.max_level()) {
      double out = 0.0;
      for (int z = 0; z < d.num_items(); ++z) {
        if (!a.contains(z)) out += d.edge_prob(a, z);
      }
      CHECK_THAT(out, WithinAbs(p, 1e-9));
    }
    CHECK(p >= 0.0);
    CHECK(p <= 1.0 + 1e-12);
  }
}

}  // namespace

TEST_CASE("five-type model DAG by enumeration") {
  const ChoiceModel m = five_type_model();
  const Dag d = dag_from_model(m, 2, false);
  CHECK(d.nodes_at_level(1) == std::vector<ItemSet>{s1({1}), s1({2})});
  CHECK_THAT(d.node_prob(s1({1})), WithinAbs(0.6, 1e-12));
  CHECK_THAT(d.node_prob(s1({2})), WithinAbs(0.4, 1e-12));
  CHECK(d.nodes_at_level(2).size() == 3);
  CHECK_THAT(d.node_prob(s1({1, 2})), WithinAbs(0.6, 1e-12));
  CHECK_THAT(d.node_prob(s1({2, 3})), WithinAbs(0.2, 1e-12));
  CHECK_THAT(d.node_prob(s1({2, 4})), WithinAbs(0.2, 1e-12));
  CHECK(d.max_level() == 2);
  CHECK_THAT(d.node_prob(ItemSet{}), WithinAbs(1.0, 0.0));

  const Dag full = dag_from_model(m);
  CHECK(full.nodes_at_level(3) ==
        std::vector<ItemSet>{s1({1, 2, 3}), s1({1, 2, 4}), s1({2, 3, 4})});
  check_flow(full, true);
  for (int j = 0; j <= 5; ++j) {
    double total = 0.0;
    for (ItemSet a : full.nodes_at_level(j)) total += full.node_prob(a);
    CHECK_THAT(total, WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("single type gives a chain") {
  const ChoiceModel m = model_from_1based(4, {{3, 1, 4, 2}}, {1.0});
  const Dag d = dag_from_model(m);
  CHECK(d.nodes().size() == 5);
  CHECK(d.num_edges() == 4);
  for (const auto& [a, p] : d.nodes()) CHECK(p == 1.0);
  ExactOracle oracle(m);
  CHECK(dags_match(build_dag_exact(oracle), d, 0.0));
}

TEST_CASE("choice probabilities from DAGs") {
  const ChoiceModel m = five_type_model();
  const Dag d = dag_from_model(m);
  CHECK_THAT(choice_prob_from_dag(d, s1({1, 2}), 0), WithinAbs(0.6, 1e-12));
  for (int z = 0; z < 5; ++z) {
    CHECK_THAT(choice_prob_from_dag(d, ItemSet::full(5), z),
               WithinAbs(d.node_prob(ItemSet::single(z)), 1e-12));
  }
  CHECK_THROWS_AS(choice_prob_from_dag(d, s1({1, 2}), 2), ValidationError);

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const ChoiceModel r = random_small_model(6, 5, seed);
    const Dag g = dag_from_model(r);
    check_flow(g, true);
    for (std::uint64_t s = 1; s < 64; ++s) {
      for (int z = 0; z < 6; ++z) {
        if (!((s >> z) & 1)) continue;
        CHECK_THAT(choice_prob_from_dag(g, ItemSet(s), z),
                   WithinAbs(ref_choice_prob(r, s, z), 1e-12));
      }
    }
  }
}

TEST_CASE("truncated DAG underestimates") {
  const ChoiceModel m = model_from_1based(8, {{1, 2, 3, 4, 5, 6, 7, 8}, {2, 1, 3, 5, 4, 6, 8, 7}},
                                          {0.5, 0.5});
  const Dag d = dag_from_model(m, 3, false);
  CHECK(choice_prob_from_dag(d, s1({4, 5, 6, 7, 8}), 3) == 0.0);
  CHECK(choice_prob_from_dag(d, s1({4, 5, 6, 7, 8}), 4) == 0.0);
}

TEST_CASE("exact reconstruction") {
  const ChoiceModel m = five_type_model();
  ExactOracle oracle(m);
  const Dag d = build_dag_exact(oracle);
  CHECK(dags_match(d, dag_from_model(m), 1e-12));
  CHECK(oracle.ledger().total_queries() <= 4u * 25u * 5u);

  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const int t = 2 + static_cast<int>(seed % 5);
    const ChoiceModel r = random_small_model(n, t, seed);
    ExactOracle o(r);
    const Dag g = build_dag_exact(o);
    CHECK(dags_match(g, dag_from_model(r), 1e-12));
    CHECK(o.ledger().total_queries() <= static_cast<std::uint64_t>(4 * n * n * t));
    for (const auto& [a, p] : g.nodes()) CHECK_THAT(p, WithinAbs(ref_prefix_mass(r, a.bits()), 1e-12));
  }
}

TEST_CASE("heavy interference edge is recovered exactly") {
  const ChoiceModel m = interference_model();
  ExactOracle oracle(m);
  const Dag d = build_dag_exact(oracle);
  const ItemSet a = s1({1, 2, 3, 4, 5, 6});
  CHECK_THAT(d.edge_prob(a, 6), WithinAbs(1.0 / 9.0, 1e-12));
  // Tails carrying label 7 below A.
  std::vector<ItemSet> tails;
  for (const auto& [tail, e] : d.edges_with_item(6)) {
    if (tail.is_proper_subset_of(a)) tails.push_back(tail);
  }
  std::sort(tails.begin(), tails.end());
  CHECK(tails == std::vector<ItemSet>{ItemSet{}, s1({1}), s1({2}), s1({3}), s1({1, 2, 3, 4}),
                                      s1({1, 2, 3, 5}), s1({1, 2, 3, 6})});
  CHECK(d.node_prob(a.with(6)) > 0.0);
}

TEST_CASE("truncation") {
  const Dag d = dag_from_model(five_type_model());
  CHECK(truncate(d, d.max_level()) == d);
  const Dag one = truncate(d, 1);
  CHECK(one.nodes().size() == 3);
  CHECK(one.has_node(ItemSet{}));
  CHECK(one.has_node(s1({1})));
  CHECK(one.has_node(s1({2})));
  CHECK(one.num_edges() == 2);
  CHECK(truncate(truncate(d, 3), 2) == truncate(d, 2));
  CHECK(truncate(d, 3) == dag_from_model(five_type_model(), 3, false));
}

TEST_CASE("frequent-only DAG is a subgraph") {
  const ChoiceModel m = model_from_1based(4, {{1, 2, 3, 4}, {2, 1, 3, 4}, {3, 4, 1, 2}},
                                          {0.6, 0.38, 0.02}, 0.1, 0.02);
  const Dag f = dag_from_model(m, 2, true);
  const Dag full = dag_from_model(m, 2, false);
  CHECK_FALSE(f.has_node(s1({3})));
  CHECK(full.has_node(s1({3})));
  for (const auto& [a, p] : f.nodes()) {
    CHECK(full.has_node(a));
    CHECK(p == full.node_prob(a));
  }
  CHECK(f.node_prob(ItemSet{}) == 1.0);
}

TEST_CASE("DAG differences") {
  const Dag t = dag_from_model(five_type_model());
  CHECK(dag_diff(t, t, 3) == DiffMetrics{});

  Dag missing(5);
  for (const auto& [a, p] : t.nodes()) {
    if (a != s1({2, 3, 4})) missing.set_node(a, p);
  }
  const DiffMetrics fn = dag_diff(t, missing, 3);
  CHECK(fn.false_negatives == 1);
  CHECK(fn.false_positives == 0);
  CHECK(fn.max_discrepancy >= 0.2);
  CHECK_THAT(fn.pct_diff, WithinAbs(100.0 / 3.0, 1e-12));

  Dag extra = truncate(t, 3);
  extra.set_node(s1({3, 4, 5}), 0.05);
  const DiffMetrics fp = dag_diff(truncate(t, 3), extra, 3);
  CHECK(fp.false_positives == 1);
  CHECK(fp.false_negatives == 0);
  CHECK_THAT(fp.max_discrepancy, WithinAbs(0.05, 1e-15));

  Dag shifted = truncate(t, 3);
  shifted.set_node(s1({1}), 0.5);
  const DiffMetrics sh = dag_diff(truncate(t, 3), shifted, 3);
  CHECK(sh.vertex_diff() == 0);
  CHECK_THAT(sh.max_discrepancy, WithinAbs(0.1, 1e-12));
}

TEST_CASE("market share") {
  const ChoiceModel m = five_type_model();
  CHECK_THAT(market_share(m, s1({1}), 1), WithinAbs(0.6, 1e-12));
  CHECK_THAT(market_share(m, s1({1, 2}), 1), WithinAbs(1.0, 1e-12));
  CHECK_THAT(market_share(m, s1({5}), 5), WithinAbs(1.0, 1e-12));
  CHECK_THAT(market_share(m, s1({5}), 3), WithinAbs(0.0, 0.0));
  CHECK_THROWS_AS(market_share(m, ItemSet{}, 2), ValidationError);
}

TEST_CASE("DAG edge validation") {
  Dag d(3);
  CHECK_THROWS_AS(d.set_edge(ItemSet{}, 0, 0.5), ValidationError);
  d.set_node(ItemSet{}, 1.0);
  CHECK_THROWS_AS(d.set_edge(ItemSet{0}, 0, 0.5), ValidationError);
  CHECK_THROWS_AS(d.set_edge(ItemSet{}, 3, 0.5), ValidationError);
  d.set_edge(ItemSet{}, 1, 0.5);
  CHECK(d.has_node(ItemSet{1}));
  CHECK(d.node_prob(ItemSet{1}) == 0.0);
  CHECK(d.nodes_at_level(4).empty());
  CHECK_THROWS_AS(Dag(0), ValidationError);
}
