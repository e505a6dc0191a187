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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sigv/error.hpp"
#include "sigv/rng.hpp"

using namespace sigv;

namespace {

std::vector<double> random_scores(Rng& rng, std::size_t max_count) {
  const std::size_t n = 1 + rng.index(max_count);
  std::vector<double> scores(n);
  for (double& s : scores) s = rng.uniform(-5.0, 5.0);
  return scores;
}

}  // namespace

TEST_CASE("perfect separation yields a zero-error operating point and EER 0") {
  const std::vector<double> genuine = {0.9, 0.8};
  const std::vector<double> impostor = {0.1, 0.2};
  const DetCurve curve = far_frr_curve(genuine, impostor);
  bool found = false;
  for (const OperatingPoint& pt : curve.points)
    if (pt.far == 0.0 && pt.frr == 0.0) found = true;
  CHECK(found);
  CHECK(eer(curve).eer == 0.0);
}

TEST_CASE("boundary semantics at a shared score value") {
  const std::vector<double> one = {0.5};
  const DetCurve curve = far_frr_curve(one, one);
  REQUIRE(curve.points.size() == 3);
  CHECK(curve.points[1].threshold == 0.5);
  CHECK(curve.points[1].far == 1.0);   // impostor 0.5 >= 0.5 accepted
  CHECK(curve.points[1].frr == 0.0);   // genuine 0.5 not rejected
  CHECK(curve.points[2].far == 0.0);   // just above: everything rejected
  CHECK(curve.points[2].frr == 1.0);
  CHECK(eer(curve).eer == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("an inverted classifier has EER 1") {
  const DetCurve curve =
      far_frr_curve(std::vector<double>{0.2}, std::vector<double>{0.8});
  const EerResult result = eer(curve);
  CHECK(result.eer == 1.0);
  CHECK(result.threshold_at_eer == 0.8);
}

TEST_CASE("interleaved scores sit at chance level") {
  // Sweep oracle over genuine {1,3,5,7} vs impostor {2,4,6,8}: FAR = FRR =
  // 0.5 exactly at threshold 5.
  const std::vector<double> genuine = {1, 3, 5, 7};
  const std::vector<double> impostor = {2, 4, 6, 8};
  CHECK(oracle::eer_sweep(genuine, impostor) == 0.5);
  const EerResult result = eer(far_frr_curve(genuine, impostor));
  CHECK(result.eer == 0.5);
  CHECK(result.threshold_at_eer == 5.0);
}

TEST_CASE("curve and EER match the brute-force sweep on random sets") {
  Rng rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::vector<double> genuine = random_scores(rng, 50);
    const std::vector<double> impostor = random_scores(rng, 50);

    const DetCurve fast = far_frr_curve(genuine, impostor);
    const DetCurve slow = oracle::far_frr_sweep(genuine, impostor);
    REQUIRE(fast.points.size() == slow.points.size());
    for (std::size_t i = 0; i < fast.points.size(); ++i) {
      CHECK(fast.points[i].threshold == slow.points[i].threshold);
      CHECK(fast.points[i].far == slow.points[i].far);
      CHECK(fast.points[i].frr == slow.points[i].frr);
    }
    CHECK(eer(fast).eer == oracle::eer_sweep(genuine, impostor));
  }
}

TEST_CASE("curves are monotone with sentinel endpoints") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<double> genuine = random_scores(rng, 40);
    const std::vector<double> impostor = random_scores(rng, 40);
    const DetCurve curve = far_frr_curve(genuine, impostor);
    CHECK(curve.points.front().far == 1.0);
    CHECK(curve.points.front().frr == 0.0);
    CHECK(curve.points.back().far == 0.0);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      CHECK(curve.points[i].threshold > curve.points[i - 1].threshold);
      CHECK(curve.points[i].far <= curve.points[i - 1].far);
      CHECK(curve.points[i].frr >= curve.points[i - 1].frr);
    }
  }
}

TEST_CASE("EER is invariant under strictly increasing score transforms") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<double> genuine = random_scores(rng, 50);
    const std::vector<double> impostor = random_scores(rng, 50);
    const double base = eer(far_frr_curve(genuine, impostor)).eer;

    auto apply = [](const std::vector<double>& v, auto fn) {
      std::vector<double> out;
      out.reserve(v.size());
      for (double s : v) out.push_back(fn(s));
      return out;
    };
    auto affine = [](double s) { return 2.5 * s + 7.0; };
    auto smooth = [](double s) { return std::atan(s); };
    CHECK(eer(far_frr_curve(apply(genuine, affine), apply(impostor, affine))).eer ==
          base);
    CHECK(eer(far_frr_curve(apply(genuine, smooth), apply(impostor, smooth))).eer ==
          base);
  }
}

TEST_CASE("swapping genuine and impostor mirrors the EER") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> genuine = random_scores(rng, 30);
    const std::vector<double> impostor = random_scores(rng, 30);
    const double e = eer(far_frr_curve(genuine, impostor)).eer;
    const double swapped = eer(far_frr_curve(impostor, genuine)).eer;
    CHECK(swapped == doctest::Approx(1.0 - e).epsilon(1e-12));
  }
}

TEST_CASE("equal score multisets give EER one half") {
  const std::vector<double> scores = {0.1, 0.4, 0.4, 0.9};
  CHECK(eer(far_frr_curve(scores, scores)).eer == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("det export round-trips and stays monotone") {
  Rng rng(17);
  const std::vector<double> genuine = random_scores(rng, 20);
  const std::vector<double> impostor = random_scores(rng, 20);
  const DetCurve curve = far_frr_curve(genuine, impostor);

  const std::string text = format_det(curve);
  const DetCurve back = parse_det(text, "test");
  REQUIRE(back.points.size() == curve.points.size());
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    CHECK(back.points[i].threshold == curve.points[i].threshold);
    CHECK(back.points[i].far == curve.points[i].far);
    CHECK(back.points[i].frr == curve.points[i].frr);
  }

  std::size_t rows = 0;
  for (char c : text)
    if (c == '\n') ++rows;
  CHECK(rows == curve.points.size() + 1);  // header + data
}

TEST_CASE("empty score sets are rejected") {
  const std::vector<double> some = {1.0};
  const std::vector<double> none;
  CHECK_THROWS_WITH_AS(far_frr_curve(none, some), doctest::Contains("EmptyScoreSet"),
                       Error);
  CHECK_THROWS_WITH_AS(far_frr_curve(some, none), doctest::Contains("EmptyScoreSet"),
                       Error);
}

TEST_CASE("eer report formats two-decimal percentages") {
  std::vector<EerReportRow> rows;
  rows.push_back(EerReportRow{"interop_a_tabletA", ForgeryMode::skilled, 0.0827});
  rows.push_back(EerReportRow{"interop_a_tabletA", ForgeryMode::random, 0.032});
  const std::string report = format_eer_report(rows);
  CHECK(report.find("8.27") != std::string::npos);
  CHECK(report.find("3.20") != std::string::npos);
  CHECK(report.find("skilled") != std::string::npos);
  CHECK(report.find("random") != std::string::npos);
}
