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

#include "sigv/synth.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "sigv/error.hpp"

using namespace sigv;

namespace {

GenConfig small_config(int n_users) {
  GenConfig cfg;
  cfg.n_users = n_users;
  return cfg;
}

// Mean (x, y) distance between a captured signature and an ideal trajectory,
// compared on a normalized-time grid so duration changes do not dominate.
double mean_distance(const RawSignature& raw, const Trajectory& ideal) {
  const double t0 = raw.samples.front().t_ms;
  const double span = raw.samples.back().t_ms - t0;
  double acc = 0.0;
  const int probes = 200;
  for (int i = 0; i < probes; ++i) {
    const double s = static_cast<double>(i) / (probes - 1);
    const double t_ms = t0 + s * span;
    std::size_t seg = 0;
    while (seg + 2 < raw.samples.size() && raw.samples[seg + 1].t_ms < t_ms) ++seg;
    const PenSample& lo = raw.samples[seg];
    const PenSample& hi = raw.samples[seg + 1];
    const double alpha = (t_ms - lo.t_ms) / (hi.t_ms - lo.t_ms);
    const double x = lo.x + alpha * (hi.x - lo.x);
    const double y = lo.y + alpha * (hi.y - lo.y);
    const Trajectory::Point pt = ideal.evaluate(s * ideal.duration_s);
    acc += std::hypot(x - pt.x, y - pt.y);
  }
  return acc / probes;
}

}  // namespace

TEST_CASE("a 3-user corpus has 90 genuine and 90 forgery signatures") {
  const Corpus corpus = generate_corpus(small_config(3));
  std::size_t genuine = 0, forgery = 0;
  for (const RawSignature& raw : corpus.signatures) {
    if (raw.meta.kind == Kind::genuine)
      ++genuine;
    else
      ++forgery;
  }
  CHECK(genuine == 90);
  CHECK(forgery == 90);
}

TEST_CASE("regeneration with the same seed is byte-identical") {
  const Corpus a = generate_corpus(small_config(2));
  const Corpus b = generate_corpus(small_config(2));
  REQUIRE(a.signatures.size() == b.signatures.size());
  for (std::size_t i = 0; i < a.signatures.size(); ++i)
    CHECK(format_signature(a.signatures[i]) == format_signature(b.signatures[i]));
  CHECK(format_manifest(a) == format_manifest(b));
}

TEST_CASE("every generated signature passes validation") {
  const Corpus corpus = generate_corpus(small_config(3));
  for (const RawSignature& raw : corpus.signatures) {
    CHECK_NOTHROW(validate_raw(raw));
    for (const PenSample& s : raw.samples) {
      CHECK(s.p >= 0);
      CHECK(s.p <= 255);
    }
  }
}

TEST_CASE("single signatures regenerate exactly as in the batch") {
  const GenConfig cfg = small_config(2);
  const Corpus corpus = generate_corpus(cfg);
  for (std::size_t i = 0; i < corpus.signatures.size(); i += 17) {
    const RawSignature& batch = corpus.signatures[i];
    const RawSignature alone = regenerate_signature(cfg, key_of(batch.meta));
    CHECK(format_signature(alone) == format_signature(batch));
  }
}

TEST_CASE("a jitter-free profile produces a constant sampling period") {
  SensorProfile profile{"ideal", 133.0, 0.0, 0.0, 256};
  const GenConfig cfg = small_config(2);
  const Trajectory traj = make_user_template(cfg, 1).ideal();
  const RawSignature raw = simulate_sensor(traj, profile, 42, SignatureMeta{1, 1, 1,
                                                                            "ideal"});
  const double expect_ms = 1000.0 / 133.0;
  for (std::size_t i = 1; i < raw.samples.size(); ++i)
    CHECK(std::abs((raw.samples[i].t_ms - raw.samples[i - 1].t_ms) - expect_ms) <=
          1e-9);
}

TEST_CASE("the oscillating profile matches the stated period statistics") {
  SensorProfile profile{"wobbly", 133.0, 0.4, 0.0, 256};
  const GenConfig cfg = small_config(2);
  const Trajectory traj = make_user_template(cfg, 1).ideal();
  const RawSignature raw =
      simulate_sensor(traj, profile, 42, SignatureMeta{1, 1, 1, "wobbly"});

  std::vector<double> periods;
  for (std::size_t i = 1; i < raw.samples.size(); ++i)
    periods.push_back(raw.samples[i].t_ms - raw.samples[i - 1].t_ms);
  double mean = 0.0;
  for (double p : periods) mean += p;
  mean /= static_cast<double>(periods.size());
  double var = 0.0;
  for (double p : periods) var += (p - mean) * (p - mean);
  var /= static_cast<double>(periods.size());

  CHECK(std::sqrt(var) / mean > 0.2);
  CHECK(std::abs(mean - 1000.0 / 133.0) < 0.05 * (1000.0 / 133.0));
}

TEST_CASE("forgeries converge to the target in the zero-jitter limit") {
  GenConfig cfg = small_config(2);
  cfg.genuine_jitter = 1e-13;
  cfg.forgery_jitter = 1e-12;
  cfg.time_warp_strength = 0.0;
  const RawSignature forgery = synthesize_forgery(cfg, 1, 2, cfg.sensor_b.name, 1, 1);
  const Trajectory ideal = make_user_template(cfg, 1).ideal();
  // With vanishing perturbation the capture samples the ideal path directly.
  for (std::size_t i = 0; i < forgery.samples.size(); i += 25) {
    const double t_s = forgery.samples[i].t_ms / 1000.0;
    const Trajectory::Point pt = ideal.evaluate(t_s);
    CHECK(std::abs(forgery.samples[i].x - pt.x) < 1e-6);
    CHECK(std::abs(forgery.samples[i].y - pt.y) < 1e-6);
  }
}

TEST_CASE("forgeries sit farther from the template than genuine signatures") {
  const GenConfig cfg = small_config(4);
  const Trajectory ideal = make_user_template(cfg, 1).ideal();
  double genuine_dist = 0.0, forgery_dist = 0.0;
  int n = 0;
  for (int session = 1; session <= 3; ++session) {
    for (int index = 1; index <= 5; ++index) {
      genuine_dist += mean_distance(
          generate_genuine(cfg, 1, cfg.sensor_b.name, session, index), ideal);
      forgery_dist += mean_distance(
          synthesize_forgery(cfg, 1, forger_for(cfg, 1, session), cfg.sensor_b.name,
                             session, index),
          ideal);
      ++n;
    }
  }
  CHECK(forgery_dist / n > genuine_dist / n);
}

TEST_CASE("distances order genuine, forgery, other-user signatures") {
  const GenConfig cfg = small_config(4);
  double genuine_dist = 0.0, forgery_dist = 0.0, other_dist = 0.0;
  int n = 0;
  for (int user = 1; user <= 3; ++user) {
    const Trajectory ideal = make_user_template(cfg, user).ideal();
    for (int index = 1; index <= 5; ++index) {
      genuine_dist +=
          mean_distance(generate_genuine(cfg, user, cfg.sensor_b.name, 3, index), ideal);
      forgery_dist += mean_distance(
          synthesize_forgery(cfg, user, forger_for(cfg, user, 1), cfg.sensor_b.name, 1,
                             index),
          ideal);
      other_dist += mean_distance(
          generate_genuine(cfg, user + 1, cfg.sensor_b.name, 3, index), ideal);
      ++n;
    }
  }
  CHECK(genuine_dist / n < forgery_dist / n);
  CHECK(forgery_dist / n < other_dist / n);
}

TEST_CASE("self forgery is rejected") {
  const GenConfig cfg = small_config(3);
  CHECK_THROWS_WITH_AS(synthesize_forgery(cfg, 2, 2, cfg.sensor_a.name, 1, 1),
                       doctest::Contains("SelfForgery"), Error);
}

TEST_CASE("assigned forgers never match their targets") {
  const GenConfig cfg = small_config(2);
  for (int user = 1; user <= cfg.n_users; ++user)
    for (int session = 1; session <= 3; ++session) {
      const int forger = forger_for(cfg, user, session);
      CHECK(forger != user);
      CHECK(forger >= 1);
      CHECK(forger <= cfg.n_users);
    }
}

TEST_CASE("invalid configurations are rejected") {
  GenConfig zero = small_config(0);
  CHECK_THROWS_WITH_AS(generate_corpus(zero), doctest::Contains("InvalidConfig"), Error);
  GenConfig inverted = small_config(3);
  inverted.forgery_jitter = inverted.genuine_jitter / 2.0;
  CHECK_THROWS_AS(generate_corpus(inverted), Error);
  GenConfig bad_warp = small_config(3);
  bad_warp.time_warp_strength = 1.5;
  CHECK_THROWS_AS(generate_corpus(bad_warp), Error);
}

TEST_CASE("manifest round trip preserves the configuration and entries") {
  GenConfig cfg = small_config(3);
  cfg.master_seed = 77;
  cfg.genuine_jitter = 0.055;
  const Corpus corpus = generate_corpus(cfg);
  const std::string text = format_manifest(corpus);
  const Manifest manifest = parse_manifest(text, "test");

  CHECK(manifest.config.master_seed == cfg.master_seed);
  CHECK(manifest.config.n_users == cfg.n_users);
  CHECK(manifest.config.genuine_jitter == cfg.genuine_jitter);
  CHECK(manifest.config.sensor_a.name == cfg.sensor_a.name);
  CHECK(manifest.config.sensor_a.period_oscillation ==
        cfg.sensor_a.period_oscillation);
  CHECK(manifest.entries.size() == corpus.signatures.size());
  for (std::size_t i = 1; i < manifest.entries.size(); ++i)
    CHECK(manifest.entries[i - 1].path < manifest.entries[i].path);
}

TEST_CASE("warped time stays monotone and hits the endpoints") {
  const GenConfig cfg = small_config(2);
  Trajectory traj = make_user_template(cfg, 1).ideal();
  traj.warp_strength = 0.9;
  // The warp maps normalized time monotonically with fixed endpoints, so x
  // at t = 0 and t = duration match the unwarped trajectory.
  Trajectory plain = traj;
  plain.warp_strength = 0.0;
  CHECK(traj.evaluate(0.0).x == doctest::Approx(plain.evaluate(0.0).x));
  CHECK(traj.evaluate(traj.duration_s).x ==
        doctest::Approx(plain.evaluate(traj.duration_s).x));

  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double s = i / 100.0;
    const double warped = s + (traj.warp_strength / M_PI) * std::sin(M_PI * s);
    CHECK(warped > prev);
    prev = warped;
  }
}
