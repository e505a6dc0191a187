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
#include <cstdint>
#include <string>
#include <vector>

#include "sigv/protocol.hpp"
#include "sigv/signal_model.hpp"

namespace sigv {

struct SineComponent {
  double amplitude = 0.0;
  double frequency_hz = 0.0;
  double phase = 0.0;
};

// A C1-smooth pen trajectory: sinusoidal position components per axis plus a
// pressure envelope whose weights sum to 1 so the raw envelope stays in
// [-1, 1] and maps into [30, 255]. An optional smooth monotonic warp bends
// normalized time for forgeries.
struct Trajectory {
  double duration_s = 0.0;
  std::vector<SineComponent> x_components;
  std::vector<SineComponent> y_components;
  std::vector<SineComponent> pressure_components;
  double warp_strength = 0.0;  // |w| < 1 keeps the warp monotonic

  struct Point {
    double x = 0.0;
    double y = 0.0;
    double pressure = 0.0;  // real-valued, in [30, 255]
  };
  Point evaluate(double t_s) const;
};

// Per-user signing style: the ideal trajectory every genuine signature and
// forgery derives from.
struct UserTemplate {
  int user_id = 0;
  double duration_s = 0.0;
  std::vector<SineComponent> x_components;
  std::vector<SineComponent> y_components;
  std::vector<SineComponent> pressure_components;

  Trajectory ideal() const;
};

struct GenConfig {
  std::uint64_t master_seed = 1;
  int n_users = 53;
  double genuine_jitter = 0.06;     // intra-user relative perturbation
  double session_shift = 0.05;      // per-session systematic offset scale
  double forgery_jitter = 0.16;     // must exceed genuine_jitter
  double time_warp_strength = 0.25; // forgery time-axis distortion
  SensorProfile sensor_a{"tabletA", 133.0, 0.4, 0.2, 256};
  SensorProfile sensor_b{"tabletB", 133.0, 0.0, 0.03, 256};

  CorpusLayout layout() const;
};

void validate_gen_config(const GenConfig& cfg);

UserTemplate make_user_template(const GenConfig& cfg, int user_id);

// Capture simulation: timestamps accumulate periods
// T_k = (1/mean_rate) * (1 + period_oscillation * sin(2 pi k / 16)
//                          + period_noise * eta_k)
// with seeded standard-normal eta; positions are sampled from the ideal
// trajectory at those times and pressure is quantized to integer levels.
RawSignature simulate_sensor(const Trajectory& trajectory, const SensorProfile& profile,
                             std::uint64_t seed, const SignatureMeta& meta);

RawSignature generate_genuine(const GenConfig& cfg, int user, const std::string& sensor,
                              int session, int index);

// Forger's rendition of the target template: forgery_jitter on the component
// parameters plus a smooth monotonic time warp. SelfForgery if the forger is
// the target.
RawSignature synthesize_forgery(const GenConfig& cfg, int target_user, int forger_id,
                                const std::string& sensor, int session, int index);

int forger_for(const GenConfig& cfg, int target_user, int forgery_session);

// Any signature regenerated in isolation; byte-identical to the batch output.
RawSignature regenerate_signature(const GenConfig& cfg, const SignatureKey& key);

struct Corpus {
  GenConfig config;
  std::vector<RawSignature> signatures;  // deterministic enumeration order
};

Corpus generate_corpus(const GenConfig& cfg);

std::string corpus_relative_path(const SignatureMeta& meta);
std::string format_manifest_header(const GenConfig& cfg);
std::string format_manifest(const Corpus& corpus);

struct ManifestEntry {
  std::string path;
  SignatureMeta meta;
};

struct Manifest {
  GenConfig config;
  std::vector<ManifestEntry> entries;  // sorted by path
};

Manifest parse_manifest(std::string_view text, std::string_view origin);

}  // namespace sigv
