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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sigv/features.hpp"

namespace sigv {

// Left-to-right HMM with per-state diagonal-covariance Gaussian mixtures.
// Transitions allow self loops and single forward steps only; the initial
// distribution is fixed at state 0.
struct HmmModel {
  int n_states = 0;
  int n_mixtures = 0;
  int dim = 0;
  std::vector<double> initial;     // n_states
  std::vector<double> transition;  // n_states x n_states, row-major

  // Indexed [state * n_mixtures + mixture] (and * dim for vectors).
  std::vector<double> weight;
  std::vector<double> mean;
  std::vector<double> variance;

  double& trans(int i, int j) { return transition[i * n_states + j]; }
  double trans(int i, int j) const { return transition[i * n_states + j]; }
  double* mean_at(int s, int m) { return mean.data() + (s * n_mixtures + m) * dim; }
  const double* mean_at(int s, int m) const {
    return mean.data() + (s * n_mixtures + m) * dim;
  }
  double* var_at(int s, int m) { return variance.data() + (s * n_mixtures + m) * dim; }
  const double* var_at(int s, int m) const {
    return variance.data() + (s * n_mixtures + m) * dim;
  }
};

struct TrainConfig {
  int n_states = 2;
  int n_mixtures = 4;
  int max_iterations = 20;
  double ll_tolerance = 1e-4;           // relative gain stop rule
  double variance_floor_factor = 1e-2;  // of the global per-dimension variance
  std::uint64_t seed = 0;
};

void validate_train_config(const TrainConfig& cfg);

// Structural invariants: zero pattern, stochastic rows, weight simplex,
// positive variances. Throws InvalidConfig when violated.
void validate_model(const HmmModel& model);

// Segmental initialization: every sequence is split into n_states equal
// spans; state s is seeded by k-means over the pooled frames of span s.
HmmModel init_model(const std::vector<FeatureSequence>& train, const TrainConfig& cfg);

struct TrainResult {
  HmmModel model;
  std::vector<double> ll_trace;  // total log-likelihood entering each iteration
};

// Baum-Welch re-estimation with per-frame scaling. The left-to-right zero
// pattern is preserved and variances are floored after every M-step.
TrainResult train_baum_welch(HmmModel model, const std::vector<FeatureSequence>& train,
                             const TrainConfig& cfg);

// init_model + train_baum_welch.
TrainResult train_model(const std::vector<FeatureSequence>& train,
                        const TrainConfig& cfg);

// Length-normalized log-likelihood (1/N) ln p(O | model) via the scaled
// forward algorithm. Higher means more similar.
double log_likelihood(const HmmModel& model, const FeatureSequence& test);

// Versioned text serialization, 17 significant digits per value; the
// round trip reproduces scores exactly.
std::string serialize_model(const HmmModel& model);
HmmModel deserialize_model(std::string_view text, std::string_view origin);
void write_model_file(const HmmModel& model, const std::filesystem::path& path);
HmmModel read_model_file(const std::filesystem::path& path);

}  // namespace sigv
