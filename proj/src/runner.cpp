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

#include "sigv/runner.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "sigv/error.hpp"
#include "sigv/rng.hpp"
#include "sigv/text.hpp"

namespace sigv {

namespace fs = std::filesystem;

void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn) {
  if (workers < 1) raise(ErrorCode::InvalidConfig, "worker count must be >= 1");
  const std::size_t thread_count =
      std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  if (thread_count <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto body = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error) return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (std::size_t w = 0; w < thread_count; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

CorpusOnDisk open_corpus(const fs::path& corpus_dir) {
  const fs::path manifest_path = corpus_dir / "manifest.txt";
  if (!fs::exists(manifest_path))
    raise(ErrorCode::IncompleteCorpus, "missing manifest " + manifest_path.string());
  CorpusOnDisk corpus;
  corpus.dir = corpus_dir;
  corpus.manifest = parse_manifest(read_text_file(manifest_path), manifest_path.string());
  for (const ManifestEntry& entry : corpus.manifest.entries)
    corpus.paths[key_of(entry.meta)] = entry.path;
  return corpus;
}

FeatureSequence load_features(const CorpusOnDisk& corpus, const SignatureKey& key) {
  const auto it = corpus.paths.find(key);
  if (it == corpus.paths.end())
    raise(ErrorCode::IncompleteCorpus,
          "signature " + signature_id(key) + " not listed in the corpus manifest");
  const fs::path path = corpus.dir / it->second;
  if (!fs::exists(path))
    raise(ErrorCode::IncompleteCorpus, "missing signature file " + path.string());
  const RawSignature raw = read_signature_file(path);
  return znormalize(extract_features(resample_uniform(raw)));
}

GenSummary cmd_gen(const GenConfig& cfg, const fs::path& corpus_dir) {
  validate_gen_config(cfg);
  const fs::path manifest_path = corpus_dir / "manifest.txt";

  // Idempotence: an existing manifest with the same config echo and all
  // files present means the corpus is already on disk.
  if (fs::exists(manifest_path)) {
    const std::string existing = read_text_file(manifest_path);
    const std::string header = format_manifest_header(cfg);
    if (existing.starts_with(header)) {
      const Manifest manifest = parse_manifest(existing, manifest_path.string());
      bool complete = true;
      for (const ManifestEntry& entry : manifest.entries) {
        if (!fs::exists(corpus_dir / entry.path)) {
          complete = false;
          break;
        }
      }
      if (complete) {
        GenSummary summary;
        summary.skipped = true;
        for (const ManifestEntry& entry : manifest.entries) {
          if (entry.meta.kind == Kind::genuine)
            ++summary.n_genuine;
          else
            ++summary.n_forgery;
        }
        return summary;
      }
    }
  }

  const Corpus corpus = generate_corpus(cfg);
  GenSummary summary;
  for (const RawSignature& raw : corpus.signatures) {
    write_signature_file(raw, corpus_dir / corpus_relative_path(raw.meta));
    if (raw.meta.kind == Kind::genuine)
      ++summary.n_genuine;
    else
      ++summary.n_forgery;
  }
  write_text_file(manifest_path, format_manifest(corpus));
  return summary;
}

namespace {

std::string train_config_echo(const TrainConfig& cfg) {
  return "# train states=" + std::to_string(cfg.n_states) +
         " mixtures=" + std::to_string(cfg.n_mixtures) +
         " max_iterations=" + std::to_string(cfg.max_iterations) +
         " ll_tolerance=" + format_double(cfg.ll_tolerance) +
         " variance_floor_factor=" + format_double(cfg.variance_floor_factor) +
         " seed=" + std::to_string(cfg.seed) + "\n";
}

std::string model_file_name(const std::string& model_id) { return model_id + ".hmm"; }

// Skip when the echoed inputs match and every listed artifact exists.
bool outputs_up_to_date(const fs::path& manifest_path, const std::string& header,
                        const fs::path& base_dir, std::vector<std::string>* listed) {
  if (!fs::exists(manifest_path)) return false;
  const std::string existing = read_text_file(manifest_path);
  if (!existing.starts_with(header)) return false;
  std::vector<std::string> files;
  std::size_t pos = 0;
  while (pos < existing.size()) {
    std::size_t eol = existing.find('\n', pos);
    if (eol == std::string::npos) eol = existing.size();
    std::string_view line = trim(std::string_view(existing).substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.starts_with("#")) continue;
    files.emplace_back(line);
  }
  for (const std::string& f : files)
    if (!fs::exists(base_dir / f)) return false;
  if (listed) *listed = std::move(files);
  return true;
}

}  // namespace

EnrollSummary cmd_enroll(const fs::path& corpus_dir, const fs::path& model_dir,
                         const TrainConfig& cfg, int workers) {
  validate_train_config(cfg);
  const CorpusOnDisk corpus = open_corpus(corpus_dir);
  const CorpusLayout layout = corpus.manifest.config.layout();
  validate_layout(layout);

  const std::vector<EnrolmentSpec> specs = all_enrolment_specs(layout);
  const std::string header = "# sigverify model store v1\n" +
                             format_manifest_header(corpus.manifest.config) +
                             train_config_echo(cfg);

  std::vector<std::string> model_files;
  for (int user = 1; user <= layout.n_users; ++user)
    for (const EnrolmentSpec& spec : specs)
      model_files.push_back(model_file_name(model_id_for(user, spec)));
  std::sort(model_files.begin(), model_files.end());

  const fs::path manifest_path = model_dir / "models_manifest.txt";
  if (outputs_up_to_date(manifest_path, header, model_dir, nullptr)) {
    EnrollSummary summary;
    summary.n_models = model_files.size();
    summary.skipped = true;
    return summary;
  }

  // Enrolment features per user: sessions 1 and 2, both sensors.
  struct Task {
    int user = 0;
    const EnrolmentSpec* spec = nullptr;
  };
  std::vector<Task> tasks;
  tasks.reserve(static_cast<std::size_t>(layout.n_users) * specs.size());
  for (int user = 1; user <= layout.n_users; ++user)
    for (const EnrolmentSpec& spec : specs) tasks.push_back(Task{user, &spec});

  std::vector<SignatureKey> enrol_keys;
  for (int user = 1; user <= layout.n_users; ++user)
    for (const std::string& sensor : layout.sensors)
      for (int session = 1; session <= 2; ++session)
        for (int index = 1; index <= layout.genuine_per_session; ++index)
          enrol_keys.push_back(SignatureKey{user, sensor, Kind::genuine, session, index});

  std::vector<FeatureSequence> enrol_features(enrol_keys.size());
  parallel_for(enrol_keys.size(), workers, [&](std::size_t i) {
    enrol_features[i] = load_features(corpus, enrol_keys[i]);
  });
  std::map<SignatureKey, const FeatureSequence*> feature_by_key;
  for (std::size_t i = 0; i < enrol_keys.size(); ++i)
    feature_by_key[enrol_keys[i]] = &enrol_features[i];

  parallel_for(tasks.size(), workers, [&](std::size_t i) {
    const Task& task = tasks[i];
    const std::string model_id = model_id_for(task.user, *task.spec);
    std::vector<FeatureSequence> train;
    train.reserve(5);
    for (const SignatureKey& key : task.spec->enrolment_keys(task.user)) {
      const auto it = feature_by_key.find(key);
      if (it == feature_by_key.end())
        raise(ErrorCode::IncompleteCorpus,
              "enrolment signature " + signature_id(key) + " unavailable");
      train.push_back(*it->second);
    }
    TrainConfig model_cfg = cfg;
    model_cfg.seed = seed_combine(cfg.seed, hash_label(model_id));
    const TrainResult result = train_model(train, model_cfg);
    write_model_file(result.model, model_dir / model_file_name(model_id));
  });

  std::string manifest = header;
  for (const std::string& f : model_files) {
    manifest += f;
    manifest += '\n';
  }
  write_text_file(manifest_path, manifest);

  EnrollSummary summary;
  summary.n_models = tasks.size();
  return summary;
}

ExperimentSelection ExperimentSelection::parse(std::string_view tokens) {
  ExperimentSelection sel;
  if (tokens.empty() || tokens == "all") return sel;
  sel = ExperimentSelection{false, false, false, false, false, false};
  for (std::string_view token : split_char(tokens, ',')) {
    token = trim(token);
    if (token == "interop_a") sel.interop_a = true;
    else if (token == "interop_b") sel.interop_b = true;
    else if (token == "interop_c") sel.interop_c = true;
    else if (token == "fusion_i") sel.fusion_i = true;
    else if (token == "fusion_ii") sel.fusion_ii = true;
    else if (token == "fusion_iii") sel.fusion_iii = true;
    else
      raise(ErrorCode::InvalidConfig,
            "unknown experiment token '" + std::string(token) + "'");
  }
  return sel;
}

std::string ExperimentSelection::echo() const {
  std::string out;
  auto add = [&out](bool on, std::string_view name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(interop_a, "interop_a");
  add(interop_b, "interop_b");
  add(interop_c, "interop_c");
  add(fusion_i, "fusion_i");
  add(fusion_ii, "fusion_ii");
  add(fusion_iii, "fusion_iii");
  return out;
}

namespace {

struct ExperimentPlan {
  std::string id;
  std::function<ScoreSet(const ScoreFn&)> run;
};

std::vector<ExperimentPlan> plan_experiments(const CorpusLayout& layout,
                                             const ExperimentSelection& sel) {
  std::vector<ExperimentPlan> plans;
  auto add_interop = [&](InteropVariant variant) {
    for (const std::string& sensor : layout.sensors)
      plans.push_back(ExperimentPlan{
          interop_experiment_id(variant, sensor), [=, &layout](const ScoreFn& fn) {
            return run_interop_experiment(layout, variant, sensor, fn);
          }});
  };
  auto add_fusion = [&](FusionVariant variant) {
    for (const std::string& sensor : layout.sensors)
      plans.push_back(ExperimentPlan{
          fusion_experiment_id(variant, sensor), [=, &layout](const ScoreFn& fn) {
            return run_fusion_experiment(layout, variant, sensor, fn);
          }});
  };
  if (sel.interop_a) add_interop(InteropVariant::same_sensor);
  if (sel.interop_b) add_interop(InteropVariant::cross_sensor);
  if (sel.interop_c) add_interop(InteropVariant::multisensor_enrol);
  if (sel.fusion_i) add_fusion(FusionVariant::single_instance);
  if (sel.fusion_ii) add_fusion(FusionVariant::multi_instance_one_sensor);
  if (sel.fusion_iii) add_fusion(FusionVariant::multi_sensor);
  return plans;
}

std::vector<EerReportRow> evaluate_scoreset(const ScoreSet& set,
                                            const fs::path& results_dir) {
  std::vector<double> genuine, real_imp, casual_imp;
  for (const ScoreRecord& r : set.records) {
    switch (r.label) {
      case ScoreLabel::genuine: genuine.push_back(r.score); break;
      case ScoreLabel::real_impostor: real_imp.push_back(r.score); break;
      case ScoreLabel::casual_impostor: casual_imp.push_back(r.score); break;
    }
  }
  std::vector<EerReportRow> rows;
  const DetCurve skilled = far_frr_curve(genuine, real_imp);
  export_det(skilled, results_dir / ("det_" + set.experiment_id + "_skilled.csv"));
  rows.push_back(EerReportRow{set.experiment_id, ForgeryMode::skilled,
                              eer(skilled, ForgeryMode::skilled).eer});
  const DetCurve random = far_frr_curve(genuine, casual_imp);
  export_det(random, results_dir / ("det_" + set.experiment_id + "_random.csv"));
  rows.push_back(EerReportRow{set.experiment_id, ForgeryMode::random,
                              eer(random, ForgeryMode::random).eer});
  return rows;
}

void sort_report(std::vector<EerReportRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const EerReportRow& a, const EerReportRow& b) {
    if (a.experiment != b.experiment) return a.experiment < b.experiment;
    return static_cast<int>(a.mode) < static_cast<int>(b.mode);
  });
}

}  // namespace

ExperimentSummary cmd_experiment(const fs::path& corpus_dir, const fs::path& model_dir,
                                 const fs::path& results_dir,
                                 const ExperimentSelection& selection, int workers) {
  const CorpusOnDisk corpus = open_corpus(corpus_dir);
  const CorpusLayout layout = corpus.manifest.config.layout();
  validate_layout(layout);

  const fs::path models_manifest = model_dir / "models_manifest.txt";
  if (!fs::exists(models_manifest))
    raise(ErrorCode::MissingModels, "missing model store " + models_manifest.string());

  const std::string header = "# sigverify results v1\n" +
                             format_manifest_header(corpus.manifest.config) +
                             "# experiments=" + selection.echo() + "\n";

  const std::vector<ExperimentPlan> plans = plan_experiments(layout, selection);

  const fs::path results_manifest = results_dir / "results_manifest.txt";
  if (outputs_up_to_date(results_manifest, header, results_dir, nullptr)) {
    ExperimentSummary summary;
    summary.skipped = true;
    summary.n_experiments = plans.size();
    return summary;
  }

  // Model registry: every model named by the protocol must exist on disk.
  const std::vector<EnrolmentSpec> specs = all_enrolment_specs(layout);
  std::unordered_map<std::string, std::size_t> model_index;
  std::vector<std::string> model_ids;
  for (int user = 1; user <= layout.n_users; ++user) {
    for (const EnrolmentSpec& spec : specs) {
      std::string id = model_id_for(user, spec);
      model_index.emplace(id, model_ids.size());
      model_ids.push_back(std::move(id));
    }
  }
  std::vector<HmmModel> models(model_ids.size());
  parallel_for(model_ids.size(), workers, [&](std::size_t i) {
    const fs::path path = model_dir / model_file_name(model_ids[i]);
    if (!fs::exists(path))
      raise(ErrorCode::MissingModels, "missing model file " + path.string());
    models[i] = read_model_file(path);
  });

  // Test signatures: session-3 genuine plus all forgeries, both sensors.
  std::vector<SignatureKey> test_keys;
  std::map<SignatureKey, std::size_t> test_index;
  for (int user = 1; user <= layout.n_users; ++user) {
    for (const std::string& sensor : layout.sensors) {
      for (int index = 1; index <= layout.genuine_per_session; ++index)
        test_keys.push_back(SignatureKey{user, sensor, Kind::genuine, 3, index});
      for (int fs_idx = 1; fs_idx <= layout.forgery_sessions; ++fs_idx)
        for (int index = 1; index <= layout.forgeries_per_session; ++index)
          test_keys.push_back(
              SignatureKey{user, sensor, Kind::skilled_forgery, fs_idx, index});
    }
  }
  for (std::size_t i = 0; i < test_keys.size(); ++i) test_index[test_keys[i]] = i;
  std::vector<FeatureSequence> test_features(test_keys.size());
  parallel_for(test_keys.size(), workers, [&](std::size_t i) {
    test_features[i] = load_features(corpus, test_keys[i]);
  });

  // First pass: enumerate the (model, test) pairs every selected experiment
  // needs; score each distinct pair once.
  std::vector<std::uint64_t> pair_keys;
  {
    std::mutex collect_mutex;
    const ScoreFn collector = [&](const std::string& model_id,
                                  const SignatureKey& key) -> double {
      const auto mi = model_index.find(model_id);
      if (mi == model_index.end())
        raise(ErrorCode::MissingModels, "unknown model id " + model_id);
      const auto ti = test_index.find(key);
      if (ti == test_index.end())
        raise(ErrorCode::IncompleteCorpus,
              "test signature " + signature_id(key) + " unavailable");
      const std::uint64_t pair =
          (static_cast<std::uint64_t>(mi->second) << 32) |
          static_cast<std::uint64_t>(ti->second);
      std::lock_guard<std::mutex> lock(collect_mutex);
      pair_keys.push_back(pair);
      return 0.0;
    };
    for (const ExperimentPlan& plan : plans) (void)plan.run(collector);
  }
  std::sort(pair_keys.begin(), pair_keys.end());
  pair_keys.erase(std::unique(pair_keys.begin(), pair_keys.end()), pair_keys.end());

  std::vector<double> pair_scores(pair_keys.size());
  parallel_for(pair_keys.size(), workers, [&](std::size_t i) {
    const std::size_t model_i = static_cast<std::size_t>(pair_keys[i] >> 32);
    const std::size_t test_i = static_cast<std::size_t>(pair_keys[i] & 0xffffffffULL);
    pair_scores[i] = log_likelihood(models[model_i], test_features[test_i]);
  });
  std::unordered_map<std::uint64_t, double> score_cache;
  score_cache.reserve(pair_keys.size() * 2);
  for (std::size_t i = 0; i < pair_keys.size(); ++i)
    score_cache.emplace(pair_keys[i], pair_scores[i]);

  const ScoreFn lookup = [&](const std::string& model_id,
                             const SignatureKey& key) -> double {
    const std::uint64_t pair =
        (static_cast<std::uint64_t>(model_index.at(model_id)) << 32) |
        static_cast<std::uint64_t>(test_index.at(key));
    return score_cache.at(pair);
  };

  ExperimentSummary summary;
  summary.n_experiments = plans.size();
  summary.n_unique_scores = pair_keys.size();

  std::vector<std::string> output_files;
  for (const ExperimentPlan& plan : plans) {
    const ScoreSet set = plan.run(lookup);
    summary.n_records += set.records.size();
    const std::string score_file = "scores_" + set.experiment_id + ".csv";
    export_scores_csv(set, results_dir / score_file);
    output_files.push_back(score_file);
    for (EerReportRow& row : evaluate_scoreset(set, results_dir)) {
      output_files.push_back("det_" + row.experiment + "_" +
                             std::string(forgery_mode_label(row.mode)) + ".csv");
      summary.report.push_back(std::move(row));
    }
  }
  sort_report(summary.report);
  write_text_file(results_dir / "eer_report.txt", format_eer_report(summary.report));
  output_files.push_back("eer_report.txt");

  std::sort(output_files.begin(), output_files.end());
  std::string manifest = header;
  for (const std::string& f : output_files) {
    manifest += f;
    manifest += '\n';
  }
  write_text_file(results_manifest, manifest);
  return summary;
}

std::string cmd_report(const fs::path& results_dir) {
  std::vector<fs::path> score_files;
  if (!fs::exists(results_dir))
    raise(ErrorCode::IoFailure, "missing results directory " + results_dir.string());
  for (const auto& entry : fs::directory_iterator(results_dir)) {
    const std::string name = entry.path().filename().string();
    if (name.starts_with("scores_") && name.ends_with(".csv"))
      score_files.push_back(entry.path());
  }
  if (score_files.empty())
    raise(ErrorCode::EmptyScoreSet, "no score files in " + results_dir.string());
  std::sort(score_files.begin(), score_files.end());

  std::vector<EerReportRow> rows;
  for (const fs::path& path : score_files) {
    const ScoreSet set = parse_scores_csv(read_text_file(path), path.string());
    for (EerReportRow& row : evaluate_scoreset(set, results_dir))
      rows.push_back(std::move(row));
  }
  sort_report(rows);
  const std::string report = format_eer_report(rows);
  write_text_file(results_dir / "eer_report.txt", report);
  return report;
}

}  // namespace sigv
