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

// choicedag: command-line front end.
//
//   choicedag gen | dag build-exact | dag truth | dag diff | estimate
//             | indist | exp choice-prob | exp recovery | exp sushi
//
// Exit status: 0 success, 2 invalid input, 3 I/O failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "choicedag/active.hpp"
#include "choicedag/dag.hpp"
#include "choicedag/dag_io.hpp"
#include "choicedag/errors.hpp"
#include "choicedag/experiments.hpp"
#include "choicedag/format.hpp"
#include "choicedag/indist.hpp"
#include "choicedag/model.hpp"
#include "choicedag/model_io.hpp"
#include "choicedag/oracle.hpp"
#include "choicedag/report.hpp"

using namespace choicedag;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

// Writes to `path`, or stdout when it is empty.
void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

void require_json(const std::string& format) {
  if (format != "json") {
    throw ValidationError("this command writes JSON only (got --format " + format + ")");
  }
}

void warn_rho(double rho, double kappa) {
  if (!rho_within_guarantee(rho, kappa)) {
    std::cerr << "warning: rho=" << rho << " >= kappa/4=" << kappa / 4
              << "; the accuracy guarantee does not apply\n";
  }
}

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_option("--out", c.out, "Output file (default stdout)");
  cmd->add_option("--format", c.format, "Output format")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Choice models over rankings: DAG representation and active learning"};
  app.require_subcommand(1);

  // gen
  GenParams gp;
  Common gen_c;
  auto* gen = app.add_subcommand("gen", "Generate a random kappa-rho model");
  add_common(gen, gen_c, "json");
  gen->add_option("--n", gp.n, "Items")->capture_default_str();
  gen->add_option("--frequent", gp.num_frequent, "Frequent type draws (K)")->capture_default_str();
  gen->add_option("--rare", gp.num_rare, "Rare types")->capture_default_str();
  gen->add_option("--rho", gp.rho, "Rare mass")->capture_default_str();
  gen->add_option("--cv", gp.cv, "Dirichlet coefficient of variation")->capture_default_str();
  gen->add_option("--kappa", gp.kappa, "Frequency threshold")->capture_default_str();
  gen->add_flag("--allow-merge", gp.allow_merge, "Merge duplicate draws instead of redrawing");

  // dag
  auto* dag = app.add_subcommand("dag", "DAG construction and comparison");
  dag->require_subcommand(1);
  std::string model_path, truth_path, est_path;
  Common exact_c, truth_c, diff_c;
  auto* build = dag->add_subcommand("build-exact", "Reconstruct the DAG from exact choice probabilities");
  add_common(build, exact_c, "json");
  build->add_option("--model", model_path, "Model JSON")->required();

  int truth_levels = -1;
  bool truth_frequent = false;
  auto* truth_cmd = dag->add_subcommand("truth", "DAG of a model by prefix enumeration");
  add_common(truth_cmd, truth_c, "json");
  truth_cmd->add_option("--model", model_path, "Model JSON")->required();
  truth_cmd->add_option("--levels", truth_levels, "Deepest level (default n)");
  truth_cmd->add_flag("--frequent-only", truth_frequent, "Keep only frequent-type prefixes");

  int diff_level = 0;
  auto* diff = dag->add_subcommand("diff", "Compare an estimated DAG with a reference");
  add_common(diff, diff_c, "csv");
  diff->add_option("--truth", truth_path, "Reference DAG JSON")->required();
  diff->add_option("--est", est_path, "Estimated DAG JSON")->required();
  diff->add_option("--level", diff_level, "Level n0 (default: deepest level of --est)");

  // estimate
  EstimationConfig cfg;
  double est_kappa = -1.0;
  bool use_exact = false;
  std::string ledger_path;
  Common est_c;
  auto* estimate = app.add_subcommand("estimate", "Learn the truncated DAG by active sampling");
  add_common(estimate, est_c, "json");
  estimate->add_option("--model", model_path, "Hidden model JSON")->required();
  estimate->add_option("--alpha", cfg.alpha, "Fraction of levels")->capture_default_str();
  estimate->add_option("--eps", cfg.epsilon, "Accuracy")->capture_default_str();
  estimate->add_option("--delta", cfg.delta, "Failure probability")->capture_default_str();
  estimate->add_option("--kappa", est_kappa, "Threshold (default: the model's)");
  estimate->add_option("--K", cfg.K, "Frequent-type bound (default ceil(1/kappa))");
  estimate->add_option("--mcap", cfg.m_cap, "Per-assortment sample cap, 0 for none")->capture_default_str();
  estimate->add_option("--ledger", ledger_path, "Per-edge ledger CSV");
  estimate->add_flag("--exact", use_exact, "Use exact choice probabilities instead of sampling");

  // indist
  bool indist_frequent = false;
  int confuse = -1;
  Common ind_c;
  auto* indist = app.add_subcommand("indist", "Find indistinguishable pairs");
  add_common(indist, ind_c, "csv");
  indist->add_option("--model", model_path, "Model JSON")->required();
  indist->add_flag("--frequent-only", indist_frequent, "Only pairs of frequent types");
  indist->add_option("--confuse", confuse, "Write the alternate model for witness number w (0-based)");

  // exp
  auto* exp = app.add_subcommand("exp", "Experiments");
  exp->require_subcommand(1);
  ExperimentSpec cp_spec, rec_spec, sushi_spec;
  cp_spec.scenario = Scenario::kChoiceProb;
  rec_spec.scenario = Scenario::kRecovery;
  rec_spec.levels = {3, 5};
  rec_spec.rhos = {0.0, 0.05};
  sushi_spec.scenario = Scenario::kSushi;
  sushi_spec.levels = {2};
  sushi_spec.rhos = {0.0};
  sushi_spec.kappa = 0.0001;
  sushi_spec.num_instances = 1;
  Common cp_c, rec_c, sushi_c;
  std::string summary_path;
  bool serial = false;
  auto add_spec = [&](CLI::App* cmd, ExperimentSpec& s, Common& c) {
    add_common(cmd, c, "csv");
    cmd->add_option("--levels", s.levels, "Truncation levels n0")->delimiter(',')->capture_default_str();
    cmd->add_option("--eps", s.epsilons, "Accuracy values")->delimiter(',')->capture_default_str();
    cmd->add_option("--kappa", s.kappa, "Threshold")->capture_default_str();
    cmd->add_option("--delta", s.delta, "Failure probability")->capture_default_str();
    cmd->add_option("--instances", s.num_instances, "Instances")->capture_default_str();
    cmd->add_option("--mcap", s.m_cap, "Per-assortment sample cap")->capture_default_str();
    cmd->add_option("--summary", summary_path, "Write the aggregate table here");
    cmd->add_flag("--serial", serial, "Run instances sequentially");
  };
  auto add_synthetic = [&](CLI::App* cmd, ExperimentSpec& s) {
    cmd->add_option("--n", s.n, "Items")->capture_default_str();
    cmd->add_option("--rhos", s.rhos, "Rare masses")->delimiter(',')->capture_default_str();
    cmd->add_option("--frequent", s.num_frequent, "Frequent type draws")->capture_default_str();
    cmd->add_option("--rare", s.num_rare, "Rare types")->capture_default_str();
    cmd->add_option("--cv", s.cv, "Dirichlet coefficient of variation")->capture_default_str();
  };
  auto* cp = exp->add_subcommand("choice-prob", "L1 error of choice probabilities");
  add_spec(cp, cp_spec, cp_c);
  add_synthetic(cp, cp_spec);
  cp->add_option("--k", cp_spec.set_size, "Random set size")->capture_default_str();
  cp->add_option("--sets", cp_spec.num_random_sets, "Random sets per instance")->capture_default_str();
  auto* rec = exp->add_subcommand("recovery", "DAG recovery metrics");
  add_spec(rec, rec_spec, rec_c);
  add_synthetic(rec, rec_spec);
  auto* sushi = exp->add_subcommand("sushi", "DAG recovery on sushi rankings");
  add_spec(sushi, sushi_spec, sushi_c);
  sushi->add_option("--data", sushi_spec.data_path, "Rankings file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*gen) {
      require_json(gen_c.format);
      gp.seed = gen_c.seed;
      const ChoiceModel m = generate_model(gp);
      write_out(gen_c.out, model_to_json(m).dump(2) + "\n");
    } else if (*build) {
      require_json(exact_c.format);
      const ChoiceModel m = load_model(model_path);
      ExactOracle oracle(m);
      const Dag d = build_dag_exact(oracle);
      std::cerr << "oracle calls: " << oracle.ledger().total_queries() << '\n';
      write_out(exact_c.out, dag_to_json(d).dump(2) + "\n");
    } else if (*truth_cmd) {
      require_json(truth_c.format);
      const ChoiceModel m = load_model(model_path);
      const int levels = truth_levels < 0 ? m.num_items() : truth_levels;
      write_out(truth_c.out,
                dag_to_json(dag_from_model(m, levels, truth_frequent)).dump(2) + "\n");
    } else if (*diff) {
      const Dag t = load_dag(truth_path);
      const Dag e = load_dag(est_path);
      const int level = diff->count("--level") > 0 ? diff_level : e.max_level();
      const DiffMetrics d = dag_diff(t, e, level);
      std::string text;
      if (diff_c.format == "csv") {
        text = "max_discrepancy,false_pos,false_neg,pct_diff\n" +
               format_double(d.max_discrepancy) + "," +
               std::to_string(d.false_positives) + "," +
               std::to_string(d.false_negatives) + "," + format_double(d.pct_diff) + "\n";
      } else if (diff_c.format == "json") {
        nlohmann::json j = {{"max_discrepancy", d.max_discrepancy},
                            {"false_pos", d.false_positives},
                            {"false_neg", d.false_negatives},
                            {"pct_diff", d.pct_diff}};
        text = j.dump(2) + "\n";
      } else {
        throw ValidationError("unknown format '" + diff_c.format + "'");
      }
      write_out(diff_c.out, text);
    } else if (*estimate) {
      require_json(est_c.format);
      const ChoiceModel m = load_model(model_path);
      cfg.kappa = est_kappa > 0 ? est_kappa : m.kappa();
      warn_rho(m.rho(), cfg.kappa);
      AlgDagResult res;
      if (use_exact) {
        ExactOracle oracle(m);
        res = alg_dag(oracle, cfg);
      } else {
        SampledOracle oracle(m, est_c.seed);
        res = alg_dag(oracle, cfg);
      }
      std::cerr << "levels: " << res.levels << "  queries: " << res.total_queries
                << (res.capped_any ? "  (sample cap reached; guarantee void)" : "")
                << '\n';
      if (!ledger_path.empty()) {
        std::ostringstream buf;
        write_ledger_csv(buf, res.ledger);
        write_text_file(ledger_path, buf.str());
      }
      write_out(est_c.out, dag_to_json(res.dag).dump(2) + "\n");
    } else if (*indist) {
      const ChoiceModel m = load_model(model_path);
      const auto ws = find_witnesses(m, indist_frequent);
      if (confuse >= 0) {
        require_json(ind_c.format);
        if (static_cast<std::size_t>(confuse) >= ws.size()) {
          throw ValidationError("witness " + std::to_string(confuse) + " does not exist (" +
                                std::to_string(ws.size()) + " found)");
        }
        write_out(ind_c.out, model_to_json(confusable_model(m, ws[confuse])).dump(2) + "\n");
      } else {
        if (ind_c.format != "csv") throw ValidationError("witness lists are CSV only");
        std::string text = "type1,type2,i\n";
        for (const IndistWitness& w : ws) {
          text += std::to_string(w.pi1) + "," + std::to_string(w.pi2) + "," +
                  std::to_string(w.i) + "\n";
        }
        write_out(ind_c.out, text);
      }
    } else if (*exp) {
      ExperimentSpec* spec = nullptr;
      Common* c = nullptr;
      if (*cp) {
        spec = &cp_spec;
        c = &cp_c;
      } else if (*rec) {
        spec = &rec_spec;
        c = &rec_c;
      } else {
        spec = &sushi_spec;
        c = &sushi_c;
      }
      spec->seed = c->seed;
      spec->parallel = !serial;
      const ReportFormat fmt = parse_format(c->format);
      if (spec->scenario != Scenario::kSushi) {
        for (double rho : spec->rhos) warn_rho(rho, spec->kappa);
      }
      const ExperimentReport rep = run_experiment(*spec);
      std::ostringstream buf;
      emit_report(rep, fmt, buf);
      write_out(c->out, buf.str());
      std::ostringstream sum;
      write_summary(rep, sum);
      if (!summary_path.empty()) {
        write_text_file(summary_path, sum.str());
      } else {
        std::cerr << sum.str();
      }
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
