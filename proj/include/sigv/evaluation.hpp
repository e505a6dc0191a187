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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigv {

struct OperatingPoint {
  double threshold = 0.0;
  double far = 0.0;  // fraction of impostor scores >= threshold
  double frr = 0.0;  // fraction of genuine scores < threshold
};

struct DetCurve {
  std::vector<OperatingPoint> points;  // strictly increasing thresholds
  std::size_t n_genuine = 0;
  std::size_t n_impostor = 0;
};

enum class ForgeryMode { skilled, random };
std::string_view forgery_mode_label(ForgeryMode mode);

struct EerResult {
  double eer = 0.0;
  double threshold_at_eer = 0.0;
  ForgeryMode forgery_mode = ForgeryMode::skilled;
};

// Operating points at every distinct score plus -inf/+inf sentinels.
// Acceptance convention: accept iff score >= threshold.
DetCurve far_frr_curve(std::span<const double> genuine, std::span<const double> impostor);

// Crossing of FAR and FRR, linearly interpolated between the two adjacent
// operating points where FAR - FRR changes sign. Exact ties return the
// common value at the lowest such threshold.
EerResult eer(const DetCurve& curve, ForgeryMode mode = ForgeryMode::skilled);

std::string format_det(const DetCurve& curve);
DetCurve parse_det(std::string_view text, std::string_view origin);
void export_det(const DetCurve& curve, const std::filesystem::path& path);

struct EerReportRow {
  std::string experiment;
  ForgeryMode mode = ForgeryMode::skilled;
  double eer = 0.0;
};

// Text table with EER percentages at two decimals.
std::string format_eer_report(const std::vector<EerReportRow>& rows);

}  // namespace sigv
