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

// Active learning of the truncated frequent-type DAG.
//
// alg_ie estimates one edge probability e_{A+z} by inclusion-exclusion over
// a greedy cover of the interfering ancestors; alg_dag grows the DAG level
// by level, keeping edges whose estimate reaches kappa / 2.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "choicedag/dag.hpp"
#include "choicedag/item_set.hpp"
#include "choicedag/oracle.hpp"

namespace choicedag {

struct EstimationConfig {
  double alpha = 0.5;
  double epsilon = 0.01;
  double delta = 0.05;
  double kappa = 0.01;
  // Bound on the number of frequent types; 0 means ceil(1 / kappa).
  int K = 0;
  // Per-assortment sample ceiling; 0 means none.
  std::uint64_t m_cap = 0;

  // n0 = ceil(alpha * n).
  int levels(int n) const;
  int frequent_bound() const;
  void validate(int n) const;
};

// ceil(2^(2c-1) * (ln(1/delta) + (c+1) ln 2) / eps^2), saturating at the
// largest uint64.
std::uint64_t sample_size(int cover_size, double eps, double delta);

struct IeTerm {
  ItemSet assortment;
  int coefficient = 0;
};

struct IeResult {
  double estimate = 0.0;
  std::vector<ItemSet> cover;
  // Consumers per assortment, after the cap.
  std::uint64_t m = 0;
  std::uint64_t m_formula = 0;
  // Distinct assortments offered.
  std::size_t terms_queried = 0;
  // m was cut by m_cap, so the accuracy guarantee no longer applies.
  bool capped = false;
  std::vector<IeTerm> terms;
};

// Interfering ancestors of (A, z) in g_hat: nodes A' strictly inside A
// with A' + {z} also a node.
std::vector<ItemSet> interfering_prefixes(const Dag& g_hat, ItemSet a, int z);

// Signed assortments N \ A (+1) and N \ (intersection of B) ((-1)^|B|) for
// every non-empty B inside `cover`, merged by assortment.
std::vector<IeTerm> ie_terms(int n, ItemSet a, const std::vector<ItemSet>& cover);

IeResult alg_ie(const Dag& g_hat, ItemSet a, int z, double eps, double delta,
                QueryOracle& oracle, std::uint64_t m_cap = 0);

// Exact edge probability from exact choice probabilities and a cover of
// the interfering prefixes. Throws if a cover member is not some A \ {x}.
double edge_prob_incl_excl_exact(QueryOracle& oracle, ItemSet a, int z,
                                 const std::vector<ItemSet>& cover);

struct LedgerRow {
  int level = 0;
  ItemSet prefix;
  int item = 0;
  int cover_size = 0;
  std::uint64_t m = 0;
  std::size_t terms_queried = 0;
  double e_hat = 0.0;
  bool capped = false;
};

struct AlgDagResult {
  Dag dag;
  std::vector<LedgerRow> ledger;
  int levels = 0;
  double eps_prime = 0.0;
  double delta_prime = 0.0;
  std::uint64_t total_queries = 0;
  bool capped_any = false;
};

AlgDagResult alg_dag(QueryOracle& oracle, const EstimationConfig& cfg);

// The accuracy contract assumes rho < kappa / 4.
inline bool rho_within_guarantee(double rho, double kappa) {
  return rho < kappa / 4.0;
}

// Columns: level,prefix,item,cover_size,m,terms_queried,e_hat,capped_flag.
// Prefixes are space-separated 1-based ids.
void write_ledger_csv(std::ostream& out, const std::vector<LedgerRow>& rows);

}  // namespace choicedag
