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

#include "sigv/signal_model.hpp"

#include <algorithm>
#include <cmath>

#include "sigv/error.hpp"
#include "sigv/text.hpp"

namespace sigv {

std::string_view kind_label(Kind kind) {
  return kind == Kind::genuine ? "genuine" : "skilled_forgery";
}

Kind parse_kind(std::string_view label) {
  if (label == "genuine") return Kind::genuine;
  if (label == "skilled_forgery") return Kind::skilled_forgery;
  raise(ErrorCode::ParseError, "unknown signature kind '" + std::string(label) + "'");
}

void validate_profile(const SensorProfile& profile) {
  if (!(profile.mean_rate_hz > 0.0))
    raise(ErrorCode::InvalidConfig, "sensor mean_rate_hz must be positive");
  if (profile.period_oscillation < 0.0 || profile.period_oscillation >= 1.0)
    raise(ErrorCode::InvalidConfig, "period_oscillation must lie in [0,1)");
  if (profile.period_noise < 0.0)
    raise(ErrorCode::InvalidConfig, "period_noise must be >= 0");
  if (profile.period_oscillation + profile.period_noise >= 1.0)
    raise(ErrorCode::InvalidConfig,
          "period_oscillation + period_noise must stay below 1");
  if (profile.pressure_levels < 2)
    raise(ErrorCode::InvalidConfig, "pressure_levels must be >= 2");
}

const RawSignature& validate_raw(const RawSignature& raw) {
  if (raw.samples.size() < 2)
    raise(ErrorCode::TooFewSamples,
          "signature has " + std::to_string(raw.samples.size()) + " samples");
  for (std::size_t i = 0; i < raw.samples.size(); ++i) {
    const PenSample& s = raw.samples[i];
    if (i > 0 && !(s.t_ms > raw.samples[i - 1].t_ms))
      raise(ErrorCode::NonMonotonicTime,
            "t[" + std::to_string(i) + "] = " + format_double(s.t_ms) +
                " does not increase past " + format_double(raw.samples[i - 1].t_ms));
    if (s.p < 0 || s.p > 255)
      raise(ErrorCode::PressureOutOfRange,
            "p[" + std::to_string(i) + "] = " + std::to_string(s.p));
    if (!std::isfinite(s.t_ms) || !std::isfinite(s.x) || !std::isfinite(s.y))
      raise(ErrorCode::InvalidConfig, "non-finite sample value");
  }
  if (raw.meta.session < 1 || raw.meta.session > 3)
    raise(ErrorCode::InvalidConfig, "session must lie in 1..3");
  if (raw.meta.index < 1 || raw.meta.index > 5)
    raise(ErrorCode::InvalidConfig, "index must lie in 1..5");
  if ((raw.meta.kind == Kind::skilled_forgery) != raw.meta.forger.has_value())
    raise(ErrorCode::InvalidConfig, "forger id required iff kind is skilled_forgery");
  return raw;
}

namespace {

double interpolate(const std::vector<PenSample>& samples, double t_ms,
                   double (*get)(const PenSample&)) {
  // Bracketing segment via binary search; clamp at the ends.
  if (t_ms <= samples.front().t_ms) return get(samples.front());
  if (t_ms >= samples.back().t_ms) return get(samples.back());
  auto it = std::upper_bound(samples.begin(), samples.end(), t_ms,
                             [](double t, const PenSample& s) { return t < s.t_ms; });
  const PenSample& hi = *it;
  const PenSample& lo = *(it - 1);
  const double alpha = (t_ms - lo.t_ms) / (hi.t_ms - lo.t_ms);
  return get(lo) + (get(hi) - get(lo)) * alpha;
}

}  // namespace

UniformSignature resample_uniform(const RawSignature& raw, double target_hz) {
  validate_raw(raw);
  if (!(target_hz > 0.0))
    raise(ErrorCode::InvalidConfig, "target_hz must be positive");

  const double t_first = raw.samples.front().t_ms;
  const double t_last = raw.samples.back().t_ms;
  const double step_ms = 1000.0 / target_hz;
  const std::size_t n =
      static_cast<std::size_t>(std::floor((t_last - t_first) * target_hz / 1000.0)) + 1;

  UniformSignature out;
  out.meta = raw.meta;
  out.rate_hz = target_hz;
  out.x.resize(n);
  out.y.resize(n);
  out.p.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = t_first + static_cast<double>(k) * step_ms;
    out.x[k] = interpolate(raw.samples, t, [](const PenSample& s) { return s.x; });
    out.y[k] = interpolate(raw.samples, t, [](const PenSample& s) { return s.y; });
    out.p[k] = interpolate(raw.samples, t,
                           [](const PenSample& s) { return static_cast<double>(s.p); });
  }
  return out;
}

std::string format_signature(const RawSignature& raw) {
  std::string out;
  out.reserve(64 + raw.samples.size() * 32);
  out += "# user=" + std::to_string(raw.meta.user) + "\n";
  out += "# session=" + std::to_string(raw.meta.session) + "\n";
  out += "# index=" + std::to_string(raw.meta.index) + "\n";
  out += "# sensor=" + raw.meta.sensor + "\n";
  out += "# kind=" + std::string(kind_label(raw.meta.kind)) + "\n";
  if (raw.meta.forger) out += "# forger=" + std::to_string(*raw.meta.forger) + "\n";
  for (const PenSample& s : raw.samples) {
    out += format_double(s.t_ms);
    out += ' ';
    out += format_double(s.x);
    out += ' ';
    out += format_double(s.y);
    out += ' ';
    out += std::to_string(s.p);
    out += '\n';
  }
  return out;
}

RawSignature parse_signature(std::string_view text, std::string_view origin) {
  RawSignature raw;
  bool has_user = false, has_session = false, has_index = false, has_sensor = false,
       has_kind = false;
  const std::string where(origin.empty() ? "signature text" : origin);

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;

    if (line.starts_with("#")) {
      std::string_view body = trim(line.substr(1));
      std::size_t eq = body.find('=');
      if (eq == std::string_view::npos)
        raise(ErrorCode::ParseError, "malformed header line in " + where);
      std::string_view key = trim(body.substr(0, eq));
      std::string_view value = trim(body.substr(eq + 1));
      if (key == "user") {
        raw.meta.user = static_cast<int>(parse_int(value, where));
        has_user = true;
      } else if (key == "session") {
        raw.meta.session = static_cast<int>(parse_int(value, where));
        has_session = true;
      } else if (key == "index") {
        raw.meta.index = static_cast<int>(parse_int(value, where));
        has_index = true;
      } else if (key == "sensor") {
        raw.meta.sensor = std::string(value);
        has_sensor = true;
      } else if (key == "kind") {
        raw.meta.kind = parse_kind(value);
        has_kind = true;
      } else if (key == "forger") {
        raw.meta.forger = static_cast<int>(parse_int(value, where));
      } else {
        raise(ErrorCode::ParseError,
              "unknown header key '" + std::string(key) + "' in " + where);
      }
      continue;
    }

    auto fields = split_ws(line);
    if (fields.size() != 4)
      raise(ErrorCode::ParseError, "sample line needs 4 fields in " + where);
    PenSample s;
    s.t_ms = parse_double(fields[0], where);
    s.x = parse_double(fields[1], where);
    s.y = parse_double(fields[2], where);
    s.p = static_cast<int>(parse_int(fields[3], where));
    raw.samples.push_back(s);
  }

  if (!has_user || !has_session || !has_index || !has_sensor || !has_kind)
    raise(ErrorCode::ParseError, "missing required header key in " + where);
  return raw;
}

void write_signature_file(const RawSignature& raw, const std::filesystem::path& path) {
  write_text_file(path, format_signature(raw));
}

RawSignature read_signature_file(const std::filesystem::path& path) {
  return parse_signature(read_text_file(path), path.string());
}

}  // namespace sigv
