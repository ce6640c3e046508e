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

#include "choicedag/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "choicedag/active.hpp"
#include "choicedag/dag.hpp"
#include "choicedag/errors.hpp"
#include "choicedag/kernels.hpp"
#include "choicedag/model.hpp"
#include "choicedag/oracle.hpp"
#include "choicedag/random.hpp"
#include "choicedag/report.hpp"
#include "choicedag/sushi.hpp"

namespace choicedag {

namespace {

constexpr std::uint64_t kSetStream = 0x5e75;
constexpr std::uint64_t kOracleStream = 0x0a11;

ChoiceModel instance_model(const ExperimentSpec& spec, int instance,
                           double rho) {
  GenParams gp;
  gp.n = spec.n;
  gp.num_frequent = spec.num_frequent;
  gp.num_rare = rho > 0.0 ? spec.num_rare : 0;
  gp.rho = rho;
  gp.cv = spec.cv;
  gp.kappa = spec.kappa;
  gp.seed = derive_seed(spec.seed, {static_cast<std::uint64_t>(instance)});
  ChoiceModel m = generate_model(gp);
  m.validate_kappa_rho();
  return m;
}

EstimationConfig config_for(const ExperimentSpec& spec, int n, int n0,
                            double eps) {
  EstimationConfig cfg;
  cfg.alpha = static_cast<double>(n0) / n;
  cfg.epsilon = eps;
  cfg.delta = spec.delta;
  cfg.kappa = spec.kappa;
  cfg.m_cap = spec.m_cap;
  return cfg;
}

std::uint64_t oracle_seed(const ExperimentSpec& spec, int instance,
                          std::size_t r, std::size_t e, std::size_t l) {
  return derive_seed(spec.seed, {static_cast<std::uint64_t>(instance),
                                 kOracleStream, r, e, l});
}

}  // namespace

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kChoiceProb: return "choice-prob";
    case Scenario::kRecovery: return "recovery";
    case Scenario::kSushi: return "sushi";
  }
  return "unknown";
}

Scenario parse_scenario(const std::string& name) {
  if (name == "choice-prob") return Scenario::kChoiceProb;
  if (name == "recovery") return Scenario::kRecovery;
  if (name == "sushi") return Scenario::kSushi;
  throw ValidationError("unknown scenario '" + name + "'");
}

void ExperimentSpec::validate() const {
  if (levels.empty() || rhos.empty() || epsilons.empty()) {
    throw ValidationError("parameter lists must be non-empty");
  }
  if (scenario != Scenario::kSushi) {
    if (n < 2 || n > kMaxItems) throw ValidationError("n must lie in [2, 64]");
    for (int n0 : levels) {
      if (n0 < 1 || n0 > n) throw ValidationError("n0 must lie in [1, n]");
    }
    if (set_size < 1 || set_size > n) {
      throw ValidationError("set size must lie in [1, n]");
    }
  }
  for (double r : rhos) {
    if (!(r >= 0.0 && r < 1.0)) throw ValidationError("rho must lie in [0, 1)");
  }
  for (double e : epsilons) {
    if (!(e > 0.0)) throw ValidationError("epsilon must be positive");
  }
  if (!(kappa > 0.0 && kappa < 1.0)) throw ValidationError("kappa must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");
  if (num_instances < 1) throw ValidationError("need at least one instance");
  if (num_random_sets < 0) throw ValidationError("negative set count");
  if (num_frequent < 1) throw ValidationError("need at least one frequent type");
  if (!(cv > 0.0)) throw ValidationError("cv must be positive");
  if (scenario == Scenario::kSushi && data_path.empty()) {
    throw ValidationError("sushi scenario needs a data file");
  }
}

std::vector<ItemSet> random_sets(int n, int k, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> items(static_cast<std::size_t>(n));
  std::iota(items.begin(), items.end(), 0);
  std::vector<ItemSet> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    std::vector<int> picked;
    std::sample(items.begin(), items.end(), std::back_inserter(picked), k, rng);
    out.push_back(ItemSet::from_items(picked));
  }
  return out;
}

ExperimentReport run_choice_prob_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const auto instances = static_cast<std::size_t>(spec.num_instances);
  std::vector<std::vector<ChoiceRow>> rows(instances);
  std::vector<std::vector<RunRow>> runs(instances);

  run_indexed(instances, spec.parallel, [&](std::size_t idx) {
    const int inst = static_cast<int>(idx);
    const auto sets = random_sets(
        n, spec.set_size, spec.num_random_sets,
        derive_seed(spec.seed, {idx, kSetStream}));
    for (std::size_t r = 0; r < spec.rhos.size(); ++r) {
      const double rho = spec.rhos[r];
      const ChoiceModel m = instance_model(spec, inst, rho);
      for (std::size_t e = 0; e < spec.epsilons.size(); ++e) {
        for (std::size_t l = 0; l < spec.levels.size(); ++l) {
          const int n0 = spec.levels[l];
          SampledOracle oracle(m, oracle_seed(spec, inst, r, e, l));
          const AlgDagResult res =
              alg_dag(oracle, config_for(spec, n, n0, spec.epsilons[e]));
          runs[idx].push_back({inst, rho, spec.epsilons[e], n0,
                               res.total_queries, res.capped_any});
          for (ItemSet s : sets) {
            double l1 = 0.0;
            for (int z : s.items()) {
              l1 += std::abs(choice_prob_from_dag(res.dag, s, z) -
                             choice_probability(m, s, z));
            }
            rows[idx].push_back({inst, rho, spec.epsilons[e], n0, s,
                                 market_share(m, s, n0), l1});
          }
        }
      }
    }
  });

  ExperimentReport rep;
  rep.scenario = Scenario::kChoiceProb;
  for (std::size_t i = 0; i < instances; ++i) {
    rep.choice_rows.insert(rep.choice_rows.end(), rows[i].begin(), rows[i].end());
    rep.runs.insert(rep.runs.end(), runs[i].begin(), runs[i].end());
  }
  aggregate(rep);
  return rep;
}

ExperimentReport run_recovery_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const double eps = spec.epsilons.front();
  const auto instances = static_cast<std::size_t>(spec.num_instances);
  std::vector<std::vector<RecoveryRow>> rows(instances);
  std::vector<std::vector<RunRow>> runs(instances);

  run_indexed(instances, spec.parallel, [&](std::size_t idx) {
    const int inst = static_cast<int>(idx);
    for (std::size_t r = 0; r < spec.rhos.size(); ++r) {
      const double rho = spec.rhos[r];
      const ChoiceModel m = instance_model(spec, inst, rho);
      for (std::size_t l = 0; l < spec.levels.size(); ++l) {
        const int n0 = spec.levels[l];
        SampledOracle oracle(m, oracle_seed(spec, inst, r, 0, l));
        const AlgDagResult res = alg_dag(oracle, config_for(spec, n, n0, eps));
        const DiffMetrics d = dag_diff(dag_from_model(m, n0, true), res.dag, n0);
        rows[idx].push_back({inst, rho, n0, d.max_discrepancy, d.pct_diff,
                             res.total_queries});
        runs[idx].push_back({inst, rho, eps, n0, res.total_queries, res.capped_any});
      }
    }
  });

  ExperimentReport rep;
  rep.scenario = Scenario::kRecovery;
  for (std::size_t i = 0; i < instances; ++i) {
    rep.recovery_rows.insert(rep.recovery_rows.end(), rows[i].begin(), rows[i].end());
    rep.runs.insert(rep.runs.end(), runs[i].begin(), runs[i].end());
  }
  aggregate(rep);
  return rep;
}

ExperimentReport run_sushi_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const ChoiceModel m = load_sushi(spec.data_path, spec.kappa);
  const int n = m.num_items();
  for (int n0 : spec.levels) {
    if (n0 < 1 || n0 > n) throw ValidationError("n0 must lie in [1, n]");
  }
  const double eps = spec.epsilons.front();
  const auto instances = static_cast<std::size_t>(spec.num_instances);
  std::vector<std::vector<RecoveryRow>> rows(instances);
  std::vector<std::vector<RunRow>> runs(instances);

  run_indexed(instances, spec.parallel, [&](std::size_t idx) {
    const int inst = static_cast<int>(idx);
    for (std::size_t l = 0; l < spec.levels.size(); ++l) {
      const int n0 = spec.levels[l];
      SampledOracle oracle(m, oracle_seed(spec, inst, 0, 0, l));
      const AlgDagResult res = alg_dag(oracle, config_for(spec, n, n0, eps));
      const DiffMetrics d = dag_diff(dag_from_model(m, n0, true), res.dag, n0);
      rows[idx].push_back({inst, m.rho(), n0, d.max_discrepancy, d.pct_diff,
                           res.total_queries});
      runs[idx].push_back({inst, m.rho(), eps, n0, res.total_queries, res.capped_any});
    }
  });

  ExperimentReport rep;
  rep.scenario = Scenario::kSushi;
  for (std::size_t i = 0; i < instances; ++i) {
    rep.recovery_rows.insert(rep.recovery_rows.end(), rows[i].begin(), rows[i].end());
    rep.runs.insert(rep.runs.end(), runs[i].begin(), runs[i].end());
  }
  rep.distinct_types = m.num_types();
  for (int len = 1; len <= std::min(n, 5); ++len) {
    rep.prefix_counts.emplace_back(len, frequent_prefix_count(m, len));
  }
  aggregate(rep);
  return rep;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  switch (spec.scenario) {
    case Scenario::kChoiceProb: return run_choice_prob_experiment(spec);
    case Scenario::kRecovery: return run_recovery_experiment(spec);
    case Scenario::kSushi: return run_sushi_experiment(spec);
  }
  throw ValidationError("unknown scenario");
}

}  // namespace choicedag
