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

#include "sigv/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sigv/error.hpp"
#include "sigv/text.hpp"

namespace sigv {

std::string_view forgery_mode_label(ForgeryMode mode) {
  return mode == ForgeryMode::skilled ? "skilled" : "random";
}

DetCurve far_frr_curve(std::span<const double> genuine,
                       std::span<const double> impostor) {
  if (genuine.empty() || impostor.empty())
    raise(ErrorCode::EmptyScoreSet, "both genuine and impostor sets must be nonempty");

  std::vector<double> gen(genuine.begin(), genuine.end());
  std::vector<double> imp(impostor.begin(), impostor.end());
  std::sort(gen.begin(), gen.end());
  std::sort(imp.begin(), imp.end());

  std::vector<double> thresholds;
  thresholds.reserve(gen.size() + imp.size() + 2);
  thresholds.push_back(-std::numeric_limits<double>::infinity());
  std::merge(gen.begin(), gen.end(), imp.begin(), imp.end(),
             std::back_inserter(thresholds));
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  thresholds.push_back(std::numeric_limits<double>::infinity());

  DetCurve curve;
  curve.n_genuine = gen.size();
  curve.n_impostor = imp.size();
  curve.points.reserve(thresholds.size());
  const double ng = static_cast<double>(gen.size());
  const double ni = static_cast<double>(imp.size());
  for (double t : thresholds) {
    // Counts by binary search over the sorted sets: impostors >= t are
    // accepted, genuine < t are rejected.
    const auto imp_ge =
        imp.end() - std::lower_bound(imp.begin(), imp.end(), t);
    const auto gen_lt = std::lower_bound(gen.begin(), gen.end(), t) - gen.begin();
    curve.points.push_back(OperatingPoint{
        t, static_cast<double>(imp_ge) / ni, static_cast<double>(gen_lt) / ng});
  }
  return curve;
}

EerResult eer(const DetCurve& curve, ForgeryMode mode) {
  if (curve.points.empty()) raise(ErrorCode::EmptyScoreSet, "empty DET curve");

  EerResult result;
  result.forgery_mode = mode;

  // FAR - FRR is non-increasing along the curve: find the first point at or
  // past the crossing.
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const OperatingPoint& pt = curve.points[i];
    const double diff = pt.far - pt.frr;
    if (diff == 0.0) {
      result.eer = pt.far;
      result.threshold_at_eer = pt.threshold;
      return result;
    }
    if (diff < 0.0) {
      // Sign change between i-1 and i (i > 0 because the first point has
      // far = 1, frr = 0).
      const OperatingPoint& lo = curve.points[i - 1];
      const double d0 = lo.far - lo.frr;
      const double d1 = diff;
      const double alpha = d0 / (d0 - d1);
      result.eer = lo.far + alpha * (pt.far - lo.far);
      result.threshold_at_eer = lo.threshold + alpha * (pt.threshold - lo.threshold);
      return result;
    }
  }
  // Not reachable for a curve with the sentinel endpoints.
  const OperatingPoint& last = curve.points.back();
  result.eer = last.far;
  result.threshold_at_eer = last.threshold;
  return result;
}

std::string format_det(const DetCurve& curve) {
  std::string out = "threshold,far,frr\n";
  out.reserve(out.size() + curve.points.size() * 48);
  for (const OperatingPoint& pt : curve.points) {
    out += format_double(pt.threshold);
    out += ',';
    out += format_double(pt.far);
    out += ',';
    out += format_double(pt.frr);
    out += '\n';
  }
  return out;
}

DetCurve parse_det(std::string_view text, std::string_view origin) {
  const std::string where(origin.empty() ? "det text" : origin);
  DetCurve curve;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != "threshold,far,frr")
        raise(ErrorCode::ParseError, "missing det header in " + where);
      header = false;
      continue;
    }
    auto fields = split_char(line, ',');
    if (fields.size() != 3)
      raise(ErrorCode::ParseError, "det row needs 3 fields in " + where);
    curve.points.push_back(OperatingPoint{parse_double(fields[0], where),
                                          parse_double(fields[1], where),
                                          parse_double(fields[2], where)});
  }
  return curve;
}

void export_det(const DetCurve& curve, const std::filesystem::path& path) {
  write_text_file(path, format_det(curve));
}

std::string format_eer_report(const std::vector<EerReportRow>& rows) {
  std::string out = "experiment                      forgery_mode  eer_pct\n";
  for (const EerReportRow& row : rows) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-31s %-13s %6.2f\n", row.experiment.c_str(),
                  std::string(forgery_mode_label(row.mode)).c_str(), 100.0 * row.eer);
    out += buf;
  }
  return out;
}

}  // namespace sigv
