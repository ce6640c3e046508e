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

// Serial vs OpenMP choice-table kernels and instance loop.
//
//   bench_kernels [n] [types] [reps]

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "choicedag/dag.hpp"
#include "choicedag/experiments.hpp"
#include "choicedag/kernels.hpp"
#include "choicedag/model.hpp"

using namespace choicedag;

namespace {

template <class Fn>
double best_ms(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << name << "  serial " << serial << " ms  parallel " << parallel
            << " ms  speedup " << serial / parallel << (same ? "" : "  MISMATCH")
            << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 16;
  const int types = argc > 2 ? std::atoi(argv[2]) : 200;
  const int reps = argc > 3 ? std::atoi(argv[3]) : 3;

  GenParams gp;
  gp.n = n;
  gp.num_frequent = types;
  gp.num_rare = 0;
  gp.rho = 0.0;
  gp.kappa = 1.0 / (types + 1);
  gp.seed = 1;
  const ChoiceModel m = generate_model(gp);
  const Dag d = dag_from_model(m);
  std::cout << "n=" << n << " types=" << m.num_types() << " edges=" << d.num_edges()
            << " threads=" << max_threads() << '\n';

  std::vector<double> a, b;
  const double ms_s = best_ms(reps, [&] { a = choice_table_serial(m); });
  const double ms_p = best_ms(reps, [&] { b = choice_table_parallel(m); });
  row("model table", ms_s, ms_p, a == b);

  const double ds = best_ms(reps, [&] { a = dag_choice_table_serial(d); });
  const double dp = best_ms(reps, [&] { b = dag_choice_table_parallel(d); });
  row("dag table  ", ds, dp, a == b);

  ExperimentSpec spec;
  spec.scenario = Scenario::kRecovery;
  spec.levels = {4};
  spec.rhos = {0.01};
  spec.num_instances = 16;
  spec.m_cap = 2000;
  ExperimentReport rs, rp;
  spec.parallel = false;
  const double es = best_ms(1, [&] { rs = run_experiment(spec); });
  spec.parallel = true;
  const double ep = best_ms(1, [&] { rp = run_experiment(spec); });
  row("recovery   ", es, ep, rs == rp);
  return 0;
}
