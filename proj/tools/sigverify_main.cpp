// Copyright 2026 The sigverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <exception>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "sigv/error.hpp"
#include "sigv/runner.hpp"

namespace {

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature verification experimentation toolkit"};
  app.require_subcommand(1);

  sigv::GenConfig gen_cfg;
  sigv::TrainConfig train_cfg;
  std::string corpus_dir = "corpus";
  std::string model_dir = "models";
  std::string results_dir = "results";
  std::string experiments = "all";
  int workers = default_workers();

  CLI::App* gen = app.add_subcommand("gen", "Generate the synthetic corpus");
  gen->add_option("--seed", gen_cfg.master_seed, "Master seed");
  gen->add_option("--users", gen_cfg.n_users, "Number of users");
  gen->add_option("--genuine-jitter", gen_cfg.genuine_jitter,
                  "Intra-user perturbation scale");
  gen->add_option("--session-shift", gen_cfg.session_shift,
                  "Per-session systematic offset scale");
  gen->add_option("--forgery-jitter", gen_cfg.forgery_jitter,
                  "Forgery perturbation scale");
  gen->add_option("--time-warp", gen_cfg.time_warp_strength,
                  "Forgery time warp strength");
  gen->add_option("--out", corpus_dir, "Corpus output directory");

  CLI::App* enroll = app.add_subcommand("enroll", "Train the enrolment model store");
  enroll->add_option("--corpus", corpus_dir, "Corpus directory");
  enroll->add_option("--out", model_dir, "Model store directory");
  enroll->add_option("--states", train_cfg.n_states, "HMM states");
  enroll->add_option("--mixtures", train_cfg.n_mixtures, "Gaussians per state");
  enroll->add_option("--iterations", train_cfg.max_iterations, "Training iterations");
  enroll->add_option("--seed", train_cfg.seed, "Training seed");
  enroll->add_option("--workers", workers, "Worker threads");

  CLI::App* experiment =
      app.add_subcommand("experiment", "Run the interoperability and fusion experiments");
  experiment->add_option("--corpus", corpus_dir, "Corpus directory");
  experiment->add_option("--models", model_dir, "Model store directory");
  experiment->add_option("--out", results_dir, "Results directory");
  experiment->add_option("--experiments", experiments,
                         "'all' or a comma list like interop_a,fusion_ii");
  experiment->add_option("--workers", workers, "Worker threads");

  CLI::App* report = app.add_subcommand("report", "Rebuild the EER report from score files");
  report->add_option("--results", results_dir, "Results directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const sigv::GenSummary summary = sigv::cmd_gen(gen_cfg, corpus_dir);
      std::printf("%s: %zu genuine + %zu forgery signatures in %s\n",
                  summary.skipped ? "corpus up to date" : "corpus written",
                  summary.n_genuine, summary.n_forgery, corpus_dir.c_str());
    } else if (enroll->parsed()) {
      const sigv::EnrollSummary summary =
          sigv::cmd_enroll(corpus_dir, model_dir, train_cfg, workers);
      std::printf("%s: %zu models in %s\n",
                  summary.skipped ? "model store up to date" : "model store written",
                  summary.n_models, model_dir.c_str());
    } else if (experiment->parsed()) {
      const sigv::ExperimentSummary summary = sigv::cmd_experiment(
          corpus_dir, model_dir, results_dir,
          sigv::ExperimentSelection::parse(experiments), workers);
      if (summary.skipped) {
        std::printf("results up to date in %s\n", results_dir.c_str());
      } else {
        std::printf("%zu experiments, %zu score records (%zu unique evaluations)\n",
                    summary.n_experiments, summary.n_records, summary.n_unique_scores);
        std::fputs(sigv::format_eer_report(summary.report).c_str(), stdout);
      }
    } else if (report->parsed()) {
      std::fputs(sigv::cmd_report(results_dir).c_str(), stdout);
    }
  } catch (const sigv::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: IoFailure: %s\n", e.what());
    return 1;
  }
  return 0;
}
