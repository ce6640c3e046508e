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

#include "choicedag/kernels.hpp"

#include <cstdint>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "choicedag/errors.hpp"

namespace choicedag {

namespace {

struct FlatEdge {
  std::uint64_t tail;
  int item;
  double prob;
};

std::size_t rows_for(int n) {
  if (n < 1 || n > kMaxTableItems) {
    throw ValidationError("choice tables need 1 <= n <= 20");
  }
  return std::size_t{1} << n;
}

void model_row(const ChoiceModel& m, std::uint64_t s, double* row) {
  const int n = m.num_items();
  for (int z = 0; z < n; ++z) row[z] = 0.0;
  if (s == 0) return;
  for (const ChoiceType& t : m.types()) {
    for (int item : t.ranking.order()) {
      if ((s >> item) & 1) {
        row[item] += t.prob;
        break;
      }
    }
  }
}

std::vector<FlatEdge> flatten(const Dag& d) {
  std::vector<FlatEdge> out;
  for (int z = 0; z < d.num_items(); ++z) {
    for (const auto& [tail, p] : d.edges_with_item(z)) {
      out.push_back({tail.bits(), z, p});
    }
  }
  return out;
}

void dag_row(const std::vector<FlatEdge>& edges, int n, std::uint64_t s,
             double* row) {
  for (int z = 0; z < n; ++z) row[z] = 0.0;
  for (const FlatEdge& e : edges) {
    if (((s >> e.item) & 1) && (e.tail & s) == 0) row[e.item] += e.prob;
  }
}

}  // namespace

std::vector<double> choice_table_serial(const ChoiceModel& m) {
  const int n = m.num_items();
  const std::size_t rows = rows_for(n);
  std::vector<double> table(rows * n);
  for (std::size_t s = 0; s < rows; ++s) model_row(m, s, &table[s * n]);
  return table;
}

std::vector<double> choice_table_parallel(const ChoiceModel& m) {
  const int n = m.num_items();
  const std::size_t rows = rows_for(n);
  std::vector<double> table(rows * n);
  const auto count = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < count; ++s) {
    model_row(m, static_cast<std::uint64_t>(s), &table[s * n]);
  }
  return table;
}

std::vector<double> dag_choice_table_serial(const Dag& d) {
  const int n = d.num_items();
  const std::size_t rows = rows_for(n);
  const auto edges = flatten(d);
  std::vector<double> table(rows * n);
  for (std::size_t s = 0; s < rows; ++s) dag_row(edges, n, s, &table[s * n]);
  return table;
}

std::vector<double> dag_choice_table_parallel(const Dag& d) {
  const int n = d.num_items();
  const std::size_t rows = rows_for(n);
  const auto edges = flatten(d);
  std::vector<double> table(rows * n);
  const auto count = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < count; ++s) {
    dag_row(edges, n, static_cast<std::uint64_t>(s), &table[s * n]);
  }
  return table;
}

void run_indexed(std::size_t count, bool parallel,
                 const std::function<void(std::size_t)>& fn) {
  std::exception_ptr error;
  if (!parallel) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        fn(i);
      } catch (...) {
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
  std::mutex mu;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace choicedag
