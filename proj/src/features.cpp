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

#include "sigv/features.hpp"

#include <cmath>

#include "sigv/error.hpp"
#include "sigv/text.hpp"

namespace sigv {

const std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "x",  "y",  "p",  "theta",  "v",  "rho",  "a",
    "dx", "dy", "dp", "dtheta", "dv", "drho", "da"};

namespace {

constexpr double kRhoEpsilon = 1e-6;
constexpr double kPi = 3.14159265358979323846;

// Central differences inside, one-sided at the ends.
std::vector<double> differentiate(const std::vector<double>& f, double dt) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  d[0] = (f[1] - f[0]) / dt;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dt);
  d[n - 1] = (f[n - 1] - f[n - 2]) / dt;
  return d;
}

double wrap_angle(double a) {
  while (a <= -kPi) a += 2.0 * kPi;
  while (a > kPi) a -= 2.0 * kPi;
  return a;
}

// Like differentiate(), but differences are reduced to the principal value
// so the branch cut of atan2 does not produce spikes.
std::vector<double> differentiate_angle(const std::vector<double>& f, double dt) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  d[0] = wrap_angle(f[1] - f[0]) / dt;
  for (std::size_t i = 1; i + 1 < n; ++i)
    d[i] = wrap_angle(f[i + 1] - f[i - 1]) / (2.0 * dt);
  d[n - 1] = wrap_angle(f[n - 1] - f[n - 2]) / dt;
  return d;
}

}  // namespace

FeatureSequence extract_features(const UniformSignature& u) {
  const std::size_t n = u.length();
  if (n < 2) raise(ErrorCode::DegenerateSignature, "need at least 2 frames");
  if (u.y.size() != n || u.p.size() != n)
    raise(ErrorCode::DimensionMismatch, "channel lengths differ");

  const double dt = 1.0 / u.rate_hz;

  const std::vector<double> dx = differentiate(u.x, dt);
  const std::vector<double> dy = differentiate(u.y, dt);
  const std::vector<double> dp = differentiate(u.p, dt);

  std::vector<double> theta(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    theta[i] = std::atan2(dy[i], dx[i]);
    v[i] = std::hypot(dx[i], dy[i]);
  }

  const std::vector<double> dtheta = differentiate_angle(theta, dt);
  const std::vector<double> dv = differentiate(v, dt);

  std::vector<double> rho(n), a(n);
  for (std::size_t i = 0; i < n; ++i) {
    rho[i] = std::log(v[i] / (std::abs(dtheta[i]) + kRhoEpsilon) + kRhoEpsilon);
    a[i] = std::hypot(dv[i], v[i] * dtheta[i]);
  }

  const std::vector<double> drho = differentiate(rho, dt);
  const std::vector<double> da = differentiate(a, dt);

  FeatureSequence out(u.meta, n, kFeatureCount);
  const std::array<const std::vector<double>*, kFeatureCount> channels = {
      &u.x, &u.y, &u.p, &theta, &v,   &rho,  &a,
      &dx,  &dy,  &dp,  &dtheta, &dv, &drho, &da};
  for (std::size_t c = 0; c < kFeatureCount; ++c)
    for (std::size_t r = 0; r < n; ++r) out.at(r, c) = (*channels[c])[r];

  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < kFeatureCount; ++c)
      if (!std::isfinite(out.at(r, c)))
        raise(ErrorCode::DegenerateSignature, "non-finite feature value");
  return out;
}

FeatureSequence znormalize(const FeatureSequence& f) {
  const std::size_t n = f.rows();
  const std::size_t d = f.cols();
  FeatureSequence out(f.meta(), n, d);
  for (std::size_t c = 0; c < d; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < n; ++r) mean += f.at(r, c);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double diff = f.at(r, c) - mean;
      var += diff * diff;
    }
    var /= static_cast<double>(n);
    const double std_dev = std::sqrt(var);
    if (std_dev < 1e-12) {
      for (std::size_t r = 0; r < n; ++r) out.at(r, c) = 0.0;
    } else {
      for (std::size_t r = 0; r < n; ++r) out.at(r, c) = (f.at(r, c) - mean) / std_dev;
    }
  }
  return out;
}

std::string format_feature_dump(const FeatureSequence& f) {
  std::string out;
  out.reserve(32 + f.rows() * f.cols() * 20);
  for (std::size_t c = 0; c < f.cols(); ++c) {
    if (c) out += ' ';
    out += (c < kFeatureNames.size()) ? std::string(kFeatureNames[c])
                                      : "ch" + std::to_string(c);
  }
  out += '\n';
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
      if (c) out += ' ';
      out += format_double(f.at(r, c));
    }
    out += '\n';
  }
  return out;
}

void write_feature_dump(const FeatureSequence& f, const std::filesystem::path& path) {
  write_text_file(path, format_feature_dump(f));
}

}  // namespace sigv
