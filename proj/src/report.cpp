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

#include "choicedag/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "choicedag/errors.hpp"
#include "choicedag/format.hpp"
#include "choicedag/model_io.hpp"
#include "json.hpp"

namespace choicedag {

using nlohmann::json;

namespace {

using CellKey = std::tuple<double, double, int>;

struct CellData {
  std::vector<double> l1, share, disc, pct, queries;
  bool capped = false;
};

std::vector<std::pair<CellKey, CellData>> group(const ExperimentReport& rep) {
  std::vector<std::pair<CellKey, CellData>> out;
  std::map<CellKey, std::size_t> index;
  auto slot = [&](const CellKey& k) -> CellData& {
    auto [it, fresh] = index.try_emplace(k, out.size());
    if (fresh) out.push_back({k, {}});
    return out[it->second].second;
  };
  for (const RunRow& r : rep.runs) {
    CellData& c = slot({r.rho, r.eps, r.n0});
    c.queries.push_back(static_cast<double>(r.queries));
    c.capped = c.capped || r.capped;
  }
  for (const ChoiceRow& r : rep.choice_rows) {
    CellData& c = slot({r.rho, r.eps, r.n0});
    c.l1.push_back(r.l1_error);
    c.share.push_back(r.market_share);
  }
  // Recovery rows carry no epsilon; they join the cell of their run.
  for (const RecoveryRow& r : rep.recovery_rows) {
    double eps = 0.0;
    for (const RunRow& run : rep.runs) {
      if (run.instance == r.instance && run.rho == r.rho && run.n0 == r.n0) {
        eps = run.eps;
        break;
      }
    }
    CellData& c = slot({r.rho, eps, r.n0});
    c.disc.push_back(r.max_discrepancy);
    c.pct.push_back(r.pct_diff_vertices);
  }
  return out;
}

std::vector<Cell> compute_cells(const ExperimentReport& rep) {
  std::vector<Cell> cells;
  for (const auto& [key, data] : group(rep)) {
    Cell c;
    std::tie(c.rho, c.eps, c.n0) = key;
    c.l1 = summarize(data.l1);
    c.max_discrepancy = summarize(data.disc);
    c.pct_diff = summarize(data.pct);
    c.pearson = pearson(data.l1, data.share);
    c.mean_queries = mean_of(data.queries);
    c.capped_any = data.capped;
    cells.push_back(c);
  }
  return cells;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool close(const Summary& a, const Summary& b, double tol) {
  return a.count == b.count && close(a.mean, b.mean, tol) &&
         close(a.std, b.std, tol) && close(a.sem, b.sem, tol) &&
         close(a.p25, b.p25, tol) && close(a.p50, b.p50, tol) &&
         close(a.p75, b.p75, tol);
}

json summary_json(const Summary& s) {
  return {{"count", s.count}, {"mean", s.mean}, {"std", s.std}, {"sem", s.sem},
          {"p25", s.p25},     {"p50", s.p50},   {"p75", s.p75}};
}

Summary summary_from(const json& j) {
  Summary s;
  s.count = j.at("count").get<std::size_t>();
  s.mean = j.at("mean").get<double>();
  s.std = j.at("std").get<double>();
  s.sem = j.at("sem").get<double>();
  s.p25 = j.at("p25").get<double>();
  s.p50 = j.at("p50").get<double>();
  s.p75 = j.at("p75").get<double>();
  return s;
}

json set_json(ItemSet s) {
  json out = json::array();
  for (int z : s.items()) out.push_back(z + 1);
  return out;
}

ItemSet set_from(const json& j) {
  ItemSet s;
  for (const json& id : j) {
    const int z = id.get<int>() - 1;
    if (z < 0 || z >= kMaxItems) throw ValidationError("set id out of range");
    s = s.with(z);
  }
  return s;
}

json report_json(const ExperimentReport& rep) {
  json choice = json::array();
  for (const ChoiceRow& r : rep.choice_rows) {
    choice.push_back({{"instance", r.instance}, {"rho", r.rho}, {"eps", r.eps},
                      {"n0", r.n0}, {"set", set_json(r.set)},
                      {"market_share", r.market_share}, {"l1_error", r.l1_error}});
  }
  json recovery = json::array();
  for (const RecoveryRow& r : rep.recovery_rows) {
    recovery.push_back({{"instance", r.instance}, {"rho", r.rho}, {"n0", r.n0},
                        {"max_discrepancy", r.max_discrepancy},
                        {"pct_diff_vertices", r.pct_diff_vertices},
                        {"queries_total", r.queries_total}});
  }
  json runs = json::array();
  for (const RunRow& r : rep.runs) {
    runs.push_back({{"instance", r.instance}, {"rho", r.rho}, {"eps", r.eps},
                    {"n0", r.n0}, {"queries", r.queries}, {"capped", r.capped}});
  }
  json cells = json::array();
  for (const Cell& c : rep.cells) {
    cells.push_back({{"rho", c.rho}, {"eps", c.eps}, {"n0", c.n0},
                     {"l1", summary_json(c.l1)},
                     {"max_discrepancy", summary_json(c.max_discrepancy)},
                     {"pct_diff", summary_json(c.pct_diff)},
                     {"pearson", c.pearson ? json(*c.pearson) : json(nullptr)},
                     {"mean_queries", c.mean_queries},
                     {"capped_any", c.capped_any}});
  }
  json prefixes = json::array();
  for (const auto& [len, count] : rep.prefix_counts) {
    prefixes.push_back({{"n0", len}, {"count", count}});
  }
  return {{"scenario", scenario_name(rep.scenario)},
          {"choice_rows", std::move(choice)},
          {"recovery_rows", std::move(recovery)},
          {"runs", std::move(runs)},
          {"cells", std::move(cells)},
          {"distinct_types", rep.distinct_types},
          {"prefix_counts", std::move(prefixes)}};
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw ValidationError("unknown format '" + name + "' (expected csv or json)");
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mu = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double percentile_nearest_rank(std::vector<double> v, double p) {
  if (v.empty()) return 0.0;
  if (!(p > 0.0 && p <= 100.0)) throw ValidationError("percentile must lie in (0, 100]");
  std::sort(v.begin(), v.end());
  const auto rank = static_cast<std::size_t>(
      std::ceil(p / 100.0 * static_cast<double>(v.size()) - 1e-12));
  return v[std::clamp<std::size_t>(rank, 1, v.size()) - 1];
}

std::optional<double> pearson(const std::vector<double>& x,
                              const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const double mx = mean_of(x), my = mean_of(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

Summary summarize(const std::vector<double>& v) {
  Summary s;
  s.count = v.size();
  if (v.empty()) return s;
  s.mean = mean_of(v);
  s.std = sample_std(v);
  s.sem = s.std / std::sqrt(static_cast<double>(v.size()));
  s.p25 = percentile_nearest_rank(v, 25);
  s.p50 = percentile_nearest_rank(v, 50);
  s.p75 = percentile_nearest_rank(v, 75);
  return s;
}

void aggregate(ExperimentReport& rep) { rep.cells = compute_cells(rep); }

bool verify_aggregates(const ExperimentReport& rep, double tol) {
  const auto fresh = compute_cells(rep);
  if (fresh.size() != rep.cells.size()) return false;
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    const Cell& a = fresh[i];
    const Cell& b = rep.cells[i];
    if (a.rho != b.rho || a.eps != b.eps || a.n0 != b.n0) return false;
    if (!close(a.l1, b.l1, tol) || !close(a.max_discrepancy, b.max_discrepancy, tol) ||
        !close(a.pct_diff, b.pct_diff, tol)) {
      return false;
    }
    if (a.pearson.has_value() != b.pearson.has_value()) return false;
    if (a.pearson && !close(*a.pearson, *b.pearson, tol)) return false;
    if (!close(a.mean_queries, b.mean_queries, tol * std::max(1.0, a.mean_queries))) {
      return false;
    }
    if (a.capped_any != b.capped_any) return false;
  }
  return true;
}

void emit_report(const ExperimentReport& rep, ReportFormat fmt, std::ostream& out) {
  if (fmt == ReportFormat::kJson) {
    out << report_json(rep).dump(2) << '\n';
    return;
  }
  if (rep.scenario == Scenario::kChoiceProb) {
    out << "instance,rho,eps,n0,set,market_share,l1_error\n";
    for (const ChoiceRow& r : rep.choice_rows) {
      out << r.instance << ',' << format_double(r.rho) << ','
          << format_double(r.eps) << ',' << r.n0 << ',' << format_ids(r.set) << ','
          << format_double(r.market_share) << ',' << format_double(r.l1_error)
          << '\n';
    }
    return;
  }
  out << "instance,rho,n0,max_discrepancy,pct_diff_vertices,queries_total\n";
  for (const RecoveryRow& r : rep.recovery_rows) {
    out << r.instance << ',' << format_double(r.rho) << ',' << r.n0 << ','
        << format_double(r.max_discrepancy) << ','
        << format_double(r.pct_diff_vertices) << ',' << r.queries_total << '\n';
  }
}

void emit_report(const ExperimentReport& rep, ReportFormat fmt,
                 const std::string& path) {
  std::ostringstream buf;
  emit_report(rep, fmt, buf);
  write_text_file(path, buf.str());
}

ExperimentReport parse_report_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("report: ") + e.what());
  }
  try {
    ExperimentReport rep;
    rep.scenario = parse_scenario(j.at("scenario").get<std::string>());
    for (const json& r : j.at("choice_rows")) {
      rep.choice_rows.push_back(
          {r.at("instance").get<int>(), r.at("rho").get<double>(),
           r.at("eps").get<double>(), r.at("n0").get<int>(), set_from(r.at("set")),
           r.at("market_share").get<double>(), r.at("l1_error").get<double>()});
    }
    for (const json& r : j.at("recovery_rows")) {
      rep.recovery_rows.push_back(
          {r.at("instance").get<int>(), r.at("rho").get<double>(),
           r.at("n0").get<int>(), r.at("max_discrepancy").get<double>(),
           r.at("pct_diff_vertices").get<double>(),
           r.at("queries_total").get<std::uint64_t>()});
    }
    for (const json& r : j.at("runs")) {
      rep.runs.push_back({r.at("instance").get<int>(), r.at("rho").get<double>(),
                          r.at("eps").get<double>(), r.at("n0").get<int>(),
                          r.at("queries").get<std::uint64_t>(),
                          r.at("capped").get<bool>()});
    }
    for (const json& c : j.at("cells")) {
      Cell cell;
      cell.rho = c.at("rho").get<double>();
      cell.eps = c.at("eps").get<double>();
      cell.n0 = c.at("n0").get<int>();
      cell.l1 = summary_from(c.at("l1"));
      cell.max_discrepancy = summary_from(c.at("max_discrepancy"));
      cell.pct_diff = summary_from(c.at("pct_diff"));
      if (!c.at("pearson").is_null()) cell.pearson = c.at("pearson").get<double>();
      cell.mean_queries = c.at("mean_queries").get<double>();
      cell.capped_any = c.at("capped_any").get<bool>();
      rep.cells.push_back(cell);
    }
    rep.distinct_types = j.at("distinct_types").get<std::size_t>();
    for (const json& p : j.at("prefix_counts")) {
      rep.prefix_counts.emplace_back(p.at("n0").get<int>(),
                                     p.at("count").get<std::size_t>());
    }
    return rep;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("report: ") + e.what());
  }
}

ExperimentReport load_report(const std::string& path) {
  return parse_report_json(read_text_file(path));
}

void write_summary(const ExperimentReport& rep, std::ostream& out) {
  out << "# " << scenario_name(rep.scenario) << '\n';
  for (const Cell& c : rep.cells) {
    out << "rho=" << format_double(c.rho) << " eps=" << format_double(c.eps)
        << " n0=" << c.n0;
    if (c.l1.count > 0) {
      out << " l1 mean=" << c.l1.mean << " std=" << c.l1.std
          << " p25=" << c.l1.p25 << " p50=" << c.l1.p50 << " p75=" << c.l1.p75;
      if (c.pearson) out << " pearson=" << *c.pearson;
    }
    if (c.max_discrepancy.count > 0) {
      out << " maxdisc=" << c.max_discrepancy.mean << "+-" << c.max_discrepancy.sem
          << " pctdiff=" << c.pct_diff.mean << "+-" << c.pct_diff.sem;
    }
    out << " queries=" << c.mean_queries << (c.capped_any ? " capped" : "") << '\n';
  }
  for (const auto& [len, count] : rep.prefix_counts) {
    out << "frequent prefixes n0=" << len << ": " << count << '\n';
  }
}

}  // namespace choicedag
