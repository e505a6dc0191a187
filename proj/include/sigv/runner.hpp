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

#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sigv/evaluation.hpp"
#include "sigv/hmm.hpp"
#include "sigv/protocol.hpp"
#include "sigv/synth.hpp"

namespace sigv {

// Deterministic task fan-out: results may be produced on any worker but the
// callers write into preallocated slots, so outputs never depend on the
// worker count. Exceptions propagate to the caller.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

struct CorpusOnDisk {
  std::filesystem::path dir;
  Manifest manifest;
  std::map<SignatureKey, std::string> paths;
};

CorpusOnDisk open_corpus(const std::filesystem::path& corpus_dir);

// Read, validate, resample to 100 Hz, extract and normalize features.
FeatureSequence load_features(const CorpusOnDisk& corpus, const SignatureKey& key);

struct GenSummary {
  std::size_t n_genuine = 0;
  std::size_t n_forgery = 0;
  bool skipped = false;
};

// Writes the signature files plus the manifest. A matching manifest header
// with all files present makes the command a no-op.
GenSummary cmd_gen(const GenConfig& cfg, const std::filesystem::path& corpus_dir);

struct EnrollSummary {
  std::size_t n_models = 0;
  bool skipped = false;
};

// Trains and serializes the 60 enrolment models per user (12 + 12 monosensor,
// 24 multisensor).
EnrollSummary cmd_enroll(const std::filesystem::path& corpus_dir,
                         const std::filesystem::path& model_dir, const TrainConfig& cfg,
                         int workers);

struct ExperimentSelection {
  bool interop_a = true;
  bool interop_b = true;
  bool interop_c = true;
  bool fusion_i = true;
  bool fusion_ii = true;
  bool fusion_iii = true;

  static ExperimentSelection parse(std::string_view tokens);  // "all" or csv list
  std::string echo() const;
};

struct ExperimentSummary {
  std::size_t n_experiments = 0;
  std::size_t n_records = 0;
  std::size_t n_unique_scores = 0;
  std::vector<EerReportRow> report;
  bool skipped = false;
};

ExperimentSummary cmd_experiment(const std::filesystem::path& corpus_dir,
                                 const std::filesystem::path& model_dir,
                                 const std::filesystem::path& results_dir,
                                 const ExperimentSelection& selection, int workers);

// Rebuilds DET exports and the EER table from the score files already in
// results_dir; returns the report text.
std::string cmd_report(const std::filesystem::path& results_dir);

}  // namespace sigv
