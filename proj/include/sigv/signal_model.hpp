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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sigv {

enum class Kind { genuine, skilled_forgery };

std::string_view kind_label(Kind kind);
Kind parse_kind(std::string_view label);  // ParseError on unknown labels

// One pen sample. Time is kept in real-valued milliseconds: sub-millisecond
// period structure matters for the jittery sensor.
struct PenSample {
  double t_ms = 0.0;
  double x = 0.0;
  double y = 0.0;
  int p = 0;
};

struct SignatureMeta {
  int user = 0;
  int session = 0;  // 1..3
  int index = 0;    // 1..5 within the session
  std::string sensor;
  Kind kind = Kind::genuine;
  std::optional<int> forger;  // set iff kind == skilled_forgery

  bool operator==(const SignatureMeta&) const = default;
};

struct RawSignature {
  SignatureMeta meta;
  std::vector<PenSample> samples;
};

struct SensorProfile {
  std::string name;
  double mean_rate_hz = 133.0;
  double period_oscillation = 0.0;  // relative amplitude of the period modulation
  double period_noise = 0.0;        // relative white jitter on the period
  int pressure_levels = 256;
};

void validate_profile(const SensorProfile& profile);  // InvalidConfig

struct UniformSignature {
  SignatureMeta meta;
  double rate_hz = 100.0;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> p;

  std::size_t length() const { return x.size(); }
};

// Checks all RawSignature invariants and returns the input unchanged.
// Throws NonMonotonicTime, TooFewSamples, PressureOutOfRange or
// InvalidConfig (metadata fields out of range).
const RawSignature& validate_raw(const RawSignature& raw);

// Linear resampling onto the grid t_k = t_first + k / target_hz,
// k = 0 .. floor((t_last - t_first) * target_hz). Pressure is interpolated
// as a real value and not re-quantized.
UniformSignature resample_uniform(const RawSignature& raw, double target_hz = 100.0);

// Line-oriented signature file format:
//   '# key=value' header lines (user, session, index, sensor, kind, forger),
//   then one 't_ms x y p' sample per line.
std::string format_signature(const RawSignature& raw);
RawSignature parse_signature(std::string_view text, std::string_view origin);
void write_signature_file(const RawSignature& raw, const std::filesystem::path& path);
RawSignature read_signature_file(const std::filesystem::path& path);

}  // namespace sigv
