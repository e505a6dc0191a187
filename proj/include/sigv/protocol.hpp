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

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigv/signal_model.hpp"

namespace sigv {

// Database shape: per user and sensor, 3 sessions x 5 genuine signatures
// plus 15 skilled forgeries organized as 3 forgery sessions x 5. Sessions 1
// and 2 enrol, session 3 tests.
struct CorpusLayout {
  int n_users = 53;
  int sessions_per_user = 3;
  int genuine_per_session = 5;
  int forgery_sessions = 3;
  int forgeries_per_session = 5;
  std::array<std::string, 2> sensors = {"tabletA", "tabletB"};

  int forgeries_per_user() const { return forgery_sessions * forgeries_per_session; }
  const std::string& other_sensor(const std::string& sensor) const;
};

void validate_layout(const CorpusLayout& layout);

struct SignatureKey {
  int user = 0;
  std::string sensor;
  Kind kind = Kind::genuine;
  int session = 0;
  int index = 0;

  bool operator==(const SignatureKey&) const = default;
  auto operator<=>(const SignatureKey&) const = default;
};

SignatureKey key_of(const SignatureMeta& meta);
std::string signature_id(const SignatureKey& key);

enum class Strategy { monosensor, multisensor };

// A user-independent enrolment recipe: a 3-signature window from session 1
// on slot1_sensor and a 2-signature window from session 2 on slot2_sensor.
struct EnrolmentSpec {
  Strategy strategy = Strategy::monosensor;
  std::string slot1_sensor;
  std::string slot2_sensor;
  int w3 = 1;  // window start in session 1
  int w2 = 1;  // window start in session 2

  std::string spec_id() const;
  std::vector<SignatureKey> enrolment_keys(int user) const;  // 5 keys
};

std::string model_id_for(int user, const EnrolmentSpec& spec);

// All contiguous (w3, w2) windows on one sensor; 12 specs for the standard
// 5-signature sessions.
std::vector<EnrolmentSpec> monosensor_enrolment_sets(const CorpusLayout& layout,
                                                     const std::string& sensor);

// Both sensor-to-slot assignments crossed with every window; 24 specs.
std::vector<EnrolmentSpec> multisensor_enrolment_sets(const CorpusLayout& layout);

// 12 + 12 + 24 specs in deterministic order.
std::vector<EnrolmentSpec> all_enrolment_specs(const CorpusLayout& layout);

enum class ScoreLabel { genuine, real_impostor, casual_impostor };
std::string_view score_label_name(ScoreLabel label);
ScoreLabel parse_score_label(std::string_view text);

struct ScoreRecord {
  std::string model_id;
  std::string test_id;
  ScoreLabel label = ScoreLabel::genuine;
  double score = 0.0;
};

struct ScoreSet {
  std::string experiment_id;
  std::vector<ScoreRecord> records;
};

// Similarity of one test signature against one enrolment model. Implementations
// throw IncompleteCorpus / MissingModels when an input is unavailable.
using ScoreFn =
    std::function<double(const std::string& model_id, const SignatureKey& key)>;

enum class InteropVariant { same_sensor, cross_sensor, multisensor_enrol };
enum class FusionVariant { single_instance, multi_instance_one_sensor, multi_sensor };

std::string interop_experiment_id(InteropVariant variant, const std::string& test_sensor);
std::string fusion_experiment_id(FusionVariant variant, const std::string& test_sensor);

double max_fuse(std::span<const double> scores);  // EmptyGroup on empty input

// Session-3 signatures of test_sensor against (a) own-sensor monosensor
// models, (b) the other sensor's monosensor models, (c) the multisensor
// models. Real impostors are the target's forgeries, casual impostors the
// forgeries of every other user, all captured on test_sensor.
ScoreSet run_interop_experiment(const CorpusLayout& layout, InteropVariant variant,
                                const std::string& test_sensor, const ScoreFn& score);

// Fusion over the session-3 signatures, always against monosensor models of
// the signature's own sensor: (i) singles, (ii) max over the fixed pairs
// (1,2) and (3,4) per sensor, (iii) max over cross-sensor pairs with equal
// index and equal enrolment windows.
ScoreSet run_fusion_experiment(const CorpusLayout& layout, FusionVariant variant,
                               const std::string& test_sensor, const ScoreFn& score);

std::string format_scores_csv(const ScoreSet& scores);
ScoreSet parse_scores_csv(std::string_view text, std::string_view origin);
void export_scores_csv(const ScoreSet& scores, const std::filesystem::path& path);

}  // namespace sigv
