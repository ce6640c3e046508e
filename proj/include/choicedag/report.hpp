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

// Report statistics and serialization.
//
// CSV carries the per-row table of the scenario:
//   choice-prob  instance,rho,eps,n0,set,market_share,l1_error
//   recovery     instance,rho,n0,max_discrepancy,pct_diff_vertices,queries_total
// (sushi uses the recovery columns). JSON carries everything, including
// the aggregate cells, and loads back into an equal report.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choicedag/experiments.hpp"

namespace choicedag {

enum class ReportFormat { kCsv, kJson };

ReportFormat parse_format(const std::string& name);

double mean_of(const std::vector<double>& v);
// Sample standard deviation; 0 for fewer than two values.
double sample_std(const std::vector<double>& v);
// Nearest-rank percentile, p in (0, 100].
double percentile_nearest_rank(std::vector<double> v, double p);
std::optional<double> pearson(const std::vector<double>& x,
                              const std::vector<double>& y);
Summary summarize(const std::vector<double>& v);

// Rebuilds rep.cells from the rows.
void aggregate(ExperimentReport& rep);

// Recomputes the cells and compares every statistic within `tol`.
bool verify_aggregates(const ExperimentReport& rep, double tol = 1e-9);

void emit_report(const ExperimentReport& rep, ReportFormat fmt, std::ostream& out);
// Throws IoError when the file cannot be written.
void emit_report(const ExperimentReport& rep, ReportFormat fmt,
                 const std::string& path);
ExperimentReport parse_report_json(std::string_view text);
ExperimentReport load_report(const std::string& path);

// Human-readable cell table.
void write_summary(const ExperimentReport& rep, std::ostream& out);

}  // namespace choicedag
