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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "sigv/error.hpp"
#include "sigv/rng.hpp"

using namespace sigv;

namespace {

RawSignature make_raw(std::vector<PenSample> samples) {
  RawSignature raw;
  raw.meta.user = 1;
  raw.meta.session = 1;
  raw.meta.index = 1;
  raw.meta.sensor = "tabletA";
  raw.meta.kind = Kind::genuine;
  raw.samples = std::move(samples);
  return raw;
}

}  // namespace

TEST_CASE("validate_raw accepts a well-formed signature") {
  const RawSignature raw =
      make_raw({{0.0, 1.0, 2.0, 10}, {7.5, 2.0, 3.0, 255}, {15.1, 3.0, 4.0, 0}});
  CHECK(&validate_raw(raw) == &raw);
}

TEST_CASE("validate_raw rejects duplicate and decreasing timestamps") {
  const RawSignature dup = make_raw({{0.0, 0, 0, 0}, {5.0, 0, 0, 0}, {5.0, 0, 0, 0}});
  CHECK_THROWS_AS(validate_raw(dup), Error);
  CHECK_THROWS_WITH_AS(validate_raw(dup), doctest::Contains("NonMonotonicTime"), Error);

  const RawSignature dec = make_raw({{0.0, 0, 0, 0}, {5.0, 0, 0, 0}, {4.0, 0, 0, 0}});
  CHECK_THROWS_WITH_AS(validate_raw(dec), doctest::Contains("NonMonotonicTime"), Error);
}

TEST_CASE("validate_raw rejects degenerate and out-of-range input") {
  const RawSignature one = make_raw({{0.0, 0, 0, 0}});
  CHECK_THROWS_WITH_AS(validate_raw(one), doctest::Contains("TooFewSamples"), Error);

  const RawSignature high = make_raw({{0.0, 0, 0, 0}, {5.0, 0, 0, 256}});
  CHECK_THROWS_WITH_AS(validate_raw(high), doctest::Contains("PressureOutOfRange"),
                       Error);
  const RawSignature neg = make_raw({{0.0, 0, 0, -1}, {5.0, 0, 0, 0}});
  CHECK_THROWS_WITH_AS(validate_raw(neg), doctest::Contains("PressureOutOfRange"),
                       Error);
}

TEST_CASE("resampling a constant channel reproduces the constant") {
  const RawSignature raw = make_raw(
      {{0.0, 5.0, -2.0, 100}, {3.7, 5.0, -2.0, 100}, {11.2, 5.0, -2.0, 100},
       {25.0, 5.0, -2.0, 100}, {31.5, 5.0, -2.0, 100}});
  const UniformSignature u = resample_uniform(raw, 100.0);
  REQUIRE(u.length() == 4);  // floor(31.5 / 10) + 1
  for (std::size_t k = 0; k < u.length(); ++k) {
    CHECK(u.x[k] == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(u.y[k] == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(u.p[k] == doctest::Approx(100.0).epsilon(1e-14));
  }
}

TEST_CASE("two-sample line interpolates exactly") {
  const RawSignature raw = make_raw({{0.0, 0.0, 1.0, 0}, {15.0, 15.0, 31.0, 30}});
  const UniformSignature u = resample_uniform(raw, 100.0);
  REQUIRE(u.length() == 2);
  CHECK(u.x[0] == 0.0);
  CHECK(u.x[1] == doctest::Approx(10.0).epsilon(1e-13));
  CHECK(u.y[1] == doctest::Approx(21.0).epsilon(1e-13));
  CHECK(u.p[1] == doctest::Approx(20.0).epsilon(1e-13));
}

TEST_CASE("on-grid input is reproduced exactly") {
  std::vector<PenSample> samples;
  Rng rng(7);
  for (int k = 0; k < 40; ++k)
    samples.push_back({k * 10.0, rng.uniform(-50, 50), rng.uniform(-50, 50),
                       static_cast<int>(rng.index(256))});
  const RawSignature raw = make_raw(samples);
  const UniformSignature u = resample_uniform(raw, 100.0);
  REQUIRE(u.length() == 40);
  for (std::size_t k = 0; k < 40; ++k) {
    CHECK(std::abs(u.x[k] - samples[k].x) <= 1e-12);
    CHECK(std::abs(u.y[k] - samples[k].y) <= 1e-12);
    CHECK(std::abs(u.p[k] - samples[k].p) <= 1e-12);
  }
}

TEST_CASE("piecewise-linear inputs are reproduced within 1e-12") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    // Random irregular knots defining an exactly piecewise-linear signal.
    std::vector<PenSample> samples;
    double t = 0.0;
    for (int k = 0; k < 25; ++k) {
      samples.push_back(
          {t, rng.uniform(-100, 100), rng.uniform(-100, 100), 128});
      t += rng.uniform(2.0, 14.0);
    }
    const RawSignature raw = make_raw(samples);
    const UniformSignature u = resample_uniform(raw, 100.0);

    // Independent evaluation of the same piecewise-linear function.
    for (std::size_t k = 0; k < u.length(); ++k) {
      const double tk = samples.front().t_ms + 10.0 * static_cast<double>(k);
      std::size_t seg = 0;
      while (seg + 2 < samples.size() && samples[seg + 1].t_ms < tk) ++seg;
      const double alpha =
          (tk - samples[seg].t_ms) / (samples[seg + 1].t_ms - samples[seg].t_ms);
      const double expected_x =
          samples[seg].x * (1.0 - alpha) + samples[seg + 1].x * alpha;
      CHECK(std::abs(u.x[k] - expected_x) <= 1e-12);
    }
  }
}

TEST_CASE("output length follows the grid formula") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PenSample> samples;
    double t = rng.uniform(0.0, 5.0);
    const int n = 2 + static_cast<int>(rng.index(30));
    for (int k = 0; k < n; ++k) {
      samples.push_back({t, 0.0, 0.0, 0});
      t += rng.uniform(4.0, 12.0);
    }
    const RawSignature raw = make_raw(samples);
    const UniformSignature u = resample_uniform(raw, 100.0);
    const double span = samples.back().t_ms - samples.front().t_ms;
    CHECK(u.length() == static_cast<std::size_t>(std::floor(span / 10.0)) + 1);
  }
}

TEST_CASE("jittered sine stays within the piecewise-linear error bound") {
  // x(t) = sin(2 pi 2 t), captured at ~133 Hz with period jitter, then
  // resampled at 100 Hz and compared against the analytic signal.
  Rng rng(21);
  std::vector<PenSample> samples;
  double t_s = 0.0;
  double max_gap_s = 0.0;
  while (t_s < 3.0) {
    samples.push_back({t_s * 1000.0, std::sin(2.0 * M_PI * 2.0 * t_s), 0.0, 0});
    const double period = (1.0 / 133.0) * (1.0 + 0.3 * rng.uniform(-1.0, 1.0));
    max_gap_s = std::max(max_gap_s, period);
    t_s += period;
  }
  const RawSignature raw = make_raw(samples);
  const UniformSignature u = resample_uniform(raw, 100.0);

  const double bound = std::pow(2.0 * M_PI * 2.0 * max_gap_s, 2) / 8.0;
  double worst = 0.0;
  for (std::size_t k = 0; k < u.length(); ++k) {
    const double tk_s = (samples.front().t_ms + 10.0 * static_cast<double>(k)) / 1000.0;
    worst = std::max(worst, std::abs(u.x[k] - std::sin(2.0 * M_PI * 2.0 * tk_s)));
  }
  CHECK(worst <= bound);
  CHECK(worst > 0.0);  // sanity: the capture is genuinely off-grid
}

TEST_CASE("signature files round-trip byte-exactly") {
  RawSignature raw = make_raw({{0.0, 1.25, -3.5, 10}, {7.75, 2.5, 4.125, 200}});
  raw.meta.kind = Kind::skilled_forgery;
  raw.meta.forger = 9;
  const std::string text = format_signature(raw);
  const RawSignature back = parse_signature(text, "test");
  CHECK(back.meta == raw.meta);
  REQUIRE(back.samples.size() == raw.samples.size());
  for (std::size_t i = 0; i < raw.samples.size(); ++i) {
    CHECK(back.samples[i].t_ms == raw.samples[i].t_ms);
    CHECK(back.samples[i].x == raw.samples[i].x);
    CHECK(back.samples[i].y == raw.samples[i].y);
    CHECK(back.samples[i].p == raw.samples[i].p);
  }
  CHECK(format_signature(back) == text);
}

TEST_CASE("signature reader rejects unknown kinds and missing keys") {
  CHECK_THROWS_WITH_AS(
      parse_signature("# user=1\n# session=1\n# index=1\n# sensor=s\n# kind=traced\n"
                      "0 0 0 0\n1 0 0 0\n",
                      "test"),
      doctest::Contains("unknown signature kind"), Error);
  CHECK_THROWS_WITH_AS(
      parse_signature("# user=1\n# session=1\n# index=1\n# kind=genuine\n"
                      "0 0 0 0\n1 0 0 0\n",
                      "test"),
      doctest::Contains("missing required header key"), Error);
  CHECK_THROWS_WITH_AS(
      parse_signature("# user=1\n# session=1\n# index=1\n# sensor=s\n# kind=genuine\n"
                      "# pen=stylus\n0 0 0 0\n",
                      "test"),
      doctest::Contains("unknown header key"), Error);
}
