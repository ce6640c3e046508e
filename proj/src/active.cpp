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

#include "choicedag/active.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "choicedag/errors.hpp"
#include "choicedag/format.hpp"
#include "choicedag/set_cover.hpp"

namespace choicedag {

namespace {

constexpr int kMaxCoverSize = 24;

}  // namespace

int EstimationConfig::levels(int n) const {
  const int n0 = static_cast<int>(std::ceil(alpha * n - 1e-9));
  return std::clamp(n0, 0, n);
}

int EstimationConfig::frequent_bound() const {
  if (K > 0) return K;
  return static_cast<int>(std::ceil(1.0 / kappa - 1e-9));
}

void EstimationConfig::validate(int n) const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha must lie in (0, 1]");
  }
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("delta must lie in (0, 1)");
  }
  if (!(kappa > 0.0 && kappa < 1.0)) {
    throw ValidationError("kappa must lie in (0, 1)");
  }
  if (K < 0) throw ValidationError("K must be non-negative");
  if (n < 1 || levels(n) > n) throw ValidationError("too many levels");
}

std::uint64_t sample_size(int cover_size, double eps, double delta) {
  if (cover_size < 0) throw ValidationError("negative cover size");
  if (!(eps > 0.0)) throw ValidationError("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("delta must lie in (0, 1)");
  }
  const double c = cover_size;
  const double m = std::exp2(2.0 * c - 1.0) *
                   (std::log(1.0 / delta) + (c + 1.0) * std::log(2.0)) /
                   (eps * eps);
  const double top = static_cast<double>(std::numeric_limits<std::uint64_t>::max());
  if (!(m < top)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(m));
}

std::vector<ItemSet> interfering_prefixes(const Dag& g_hat, ItemSet a, int z) {
  std::vector<ItemSet> out;
  for (const auto& [p, prob] : g_hat.nodes()) {
    if (p.size() >= a.size()) break;
    if (p.is_proper_subset_of(a) && !p.contains(z) && g_hat.has_node(p.with(z))) {
      out.push_back(p);
    }
  }
  return out;
}

std::vector<IeTerm> ie_terms(int n, ItemSet a,
                             const std::vector<ItemSet>& cover) {
  const int c = static_cast<int>(cover.size());
  if (c > kMaxCoverSize) throw ValidationError("cover too large to expand");
  const ItemSet universe = ItemSet::full(n);
  std::map<ItemSet, int> coef;
  coef[universe - a] += 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
    ItemSet inter = a;
    for (int j = 0; j < c; ++j) {
      if ((mask >> j) & 1) inter = inter & cover[j];
    }
    coef[universe - inter] += std::popcount(mask) % 2 == 0 ? 1 : -1;
  }
  std::vector<IeTerm> out;
  for (const auto& [s, k] : coef) {
    if (k != 0) out.push_back({s, k});
  }
  return out;
}

IeResult alg_ie(const Dag& g_hat, ItemSet a, int z, double eps, double delta,
                QueryOracle& oracle, std::uint64_t m_cap) {
  const int n = oracle.num_items();
  if (z < 0 || z >= n || a.contains(z) || !a.within(n)) {
    throw ValidationError("invalid (prefix, item) pair " + a.to_string() +
                          ", " + std::to_string(z + 1));
  }
  IeResult res;
  res.cover = greedy_min_cover({a, interfering_prefixes(g_hat, a, z)});
  res.m_formula = sample_size(static_cast<int>(res.cover.size()), eps, delta);
  res.m = res.m_formula;
  if (m_cap > 0 && res.m > m_cap) {
    res.m = m_cap;
    res.capped = true;
  }
  res.terms = ie_terms(n, a, res.cover);
  for (const IeTerm& t : res.terms) {
    res.estimate += t.coefficient * oracle.choice_frequency(t.assortment, z, res.m);
  }
  res.terms_queried = res.terms.size();
  return res;
}

double edge_prob_incl_excl_exact(QueryOracle& oracle, ItemSet a, int z,
                                 const std::vector<ItemSet>& cover) {
  const int n = oracle.num_items();
  if (z < 0 || z >= n || a.contains(z) || !a.within(n)) {
    throw ValidationError("invalid (prefix, item) pair");
  }
  std::vector<ItemSet> seen;
  for (ItemSet c : cover) {
    if (c.size() + 1 != a.size() || !c.is_subset_of(a)) {
      throw ValidationError("invalid cover: " + c.to_string() +
                            " is not a one-smaller subset of " + a.to_string());
    }
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) {
      throw ValidationError("invalid cover: repeated set " + c.to_string());
    }
    seen.push_back(c);
  }
  double e = 0.0;
  for (const IeTerm& t : ie_terms(n, a, cover)) {
    e += t.coefficient * oracle.choice_frequency(t.assortment, z, 1);
  }
  return e;
}

AlgDagResult alg_dag(QueryOracle& oracle, const EstimationConfig& cfg) {
  const int n = oracle.num_items();
  cfg.validate(n);
  AlgDagResult out;
  out.levels = cfg.levels(n);
  out.eps_prime = std::min(cfg.epsilon / std::max(out.levels, 1), cfg.kappa / 4.0);
  out.delta_prime = cfg.delta / (cfg.alpha * n * n * cfg.frequent_bound());
  const double threshold = cfg.kappa / 2.0;
  const std::uint64_t before = oracle.ledger().total_queries();

  Dag g(n);
  g.set_node(ItemSet{}, 1.0);
  for (int level = 0; level < out.levels; ++level) {
    for (ItemSet a : g.nodes_at_level(level)) {
      for (int z = 0; z < n; ++z) {
        if (a.contains(z)) continue;
        const IeResult r =
            alg_ie(g, a, z, out.eps_prime, out.delta_prime, oracle, cfg.m_cap);
        out.ledger.push_back({level, a, z, static_cast<int>(r.cover.size()), r.m,
                              r.terms_queried, r.estimate, r.capped});
        out.capped_any = out.capped_any || r.capped;
        if (r.estimate >= threshold) {
          const ItemSet head = a.with(z);
          const double p = g.node_prob(head);
          g.set_edge(a, z, r.estimate);
          g.set_node(head, p + r.estimate);
        }
      }
    }
  }
  out.dag = std::move(g);
  out.total_queries = oracle.ledger().total_queries() - before;
  return out;
}

void write_ledger_csv(std::ostream& out, const std::vector<LedgerRow>& rows) {
  out << "level,prefix,item,cover_size,m,terms_queried,e_hat,capped_flag\n";
  for (const LedgerRow& r : rows) {
    out << r.level << ',' << format_ids(r.prefix) << ',' << r.item + 1 << ','
        << r.cover_size << ',' << r.m << ',' << r.terms_queried << ','
        << format_double(r.e_hat) << ',' << (r.capped ? 1 : 0) << '\n';
  }
}

}  // namespace choicedag
