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
//
// Reference implementations kept deliberately independent of the library
// code paths they check: exhaustive enumeration instead of recursions,
// direct counting instead of sorted sweeps.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "sigv/evaluation.hpp"
#include "sigv/features.hpp"
#include "sigv/hmm.hpp"
#include "sigv/rng.hpp"

namespace sigv::oracle {

// Diagonal Gaussian mixture log density, written out directly.
inline double mixture_log_density(const HmmModel& m, int state, const double* frame) {
  std::vector<double> terms;
  for (int mix = 0; mix < m.n_mixtures; ++mix) {
    const double w = m.weight[state * m.n_mixtures + mix];
    if (w <= 0.0) continue;
    const double* mu = m.mean_at(state, mix);
    const double* var = m.var_at(state, mix);
    double lp = std::log(w);
    for (int d = 0; d < m.dim; ++d) {
      lp += -0.5 * (std::log(2.0 * M_PI * var[d]) +
                    (frame[d] - mu[d]) * (frame[d] - mu[d]) / var[d]);
    }
    terms.push_back(lp);
  }
  if (terms.empty()) return -std::numeric_limits<double>::infinity();
  const double peak = *std::max_element(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - peak);
  return peak + std::log(sum);
}

// Length-normalized log-likelihood by brute-force enumeration over all
// state paths.
inline double path_sum_log_likelihood(const HmmModel& m, const FeatureSequence& seq) {
  const int S = m.n_states;
  const std::size_t T = seq.rows();

  std::vector<std::vector<double>> logb(T, std::vector<double>(S));
  for (std::size_t t = 0; t < T; ++t)
    for (int s = 0; s < S; ++s) logb[t][s] = mixture_log_density(m, s, seq.row(t));

  std::vector<double> path_logs;
  std::vector<int> path(T, 0);
  while (true) {
    double lp = m.initial[path[0]] > 0.0 ? std::log(m.initial[path[0]])
                                         : -std::numeric_limits<double>::infinity();
    lp += logb[0][path[0]];
    for (std::size_t t = 1; t < T; ++t) {
      const double a = m.trans(path[t - 1], path[t]);
      lp += (a > 0.0 ? std::log(a) : -std::numeric_limits<double>::infinity());
      lp += logb[t][path[t]];
    }
    if (std::isfinite(lp)) path_logs.push_back(lp);

    // Odometer increment over the S^T paths.
    std::size_t pos = 0;
    while (pos < T && ++path[pos] == S) {
      path[pos] = 0;
      ++pos;
    }
    if (pos == T) break;
  }

  const double peak = *std::max_element(path_logs.begin(), path_logs.end());
  double sum = 0.0;
  for (double lp : path_logs) sum += std::exp(lp - peak);
  return (peak + std::log(sum)) / static_cast<double>(T);
}

// FAR/FRR by direct counting at every candidate threshold.
inline DetCurve far_frr_sweep(std::span<const double> genuine,
                              std::span<const double> impostor) {
  std::vector<double> thresholds(genuine.begin(), genuine.end());
  thresholds.insert(thresholds.end(), impostor.begin(), impostor.end());
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  thresholds.insert(thresholds.begin(), -std::numeric_limits<double>::infinity());
  thresholds.push_back(std::numeric_limits<double>::infinity());

  DetCurve curve;
  curve.n_genuine = genuine.size();
  curve.n_impostor = impostor.size();
  for (double t : thresholds) {
    std::size_t accepted_impostors = 0;
    for (double s : impostor)
      if (s >= t) ++accepted_impostors;
    std::size_t rejected_genuine = 0;
    for (double s : genuine)
      if (s < t) ++rejected_genuine;
    curve.points.push_back(OperatingPoint{
        t, static_cast<double>(accepted_impostors) / static_cast<double>(impostor.size()),
        static_cast<double>(rejected_genuine) / static_cast<double>(genuine.size())});
  }
  return curve;
}

// EER from the sweep: first exact tie, else interpolate at the sign change.
inline double eer_sweep(std::span<const double> genuine,
                        std::span<const double> impostor) {
  const DetCurve curve = far_frr_sweep(genuine, impostor);
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const double diff = curve.points[i].far - curve.points[i].frr;
    if (diff == 0.0) return curve.points[i].far;
    if (diff < 0.0) {
      const OperatingPoint& lo = curve.points[i - 1];
      const OperatingPoint& hi = curve.points[i];
      const double d0 = lo.far - lo.frr;
      const double alpha = d0 / (d0 - (hi.far - hi.frr));
      return lo.far + alpha * (hi.far - lo.far);
    }
  }
  return curve.points.back().far;
}

// Valid random left-to-right models and sequences for oracle comparisons.
inline HmmModel random_model(Rng& rng, int max_states = 3, int max_mixtures = 2,
                             int max_dim = 3) {
  HmmModel m;
  m.n_states = 1 + static_cast<int>(rng.index(max_states));
  m.n_mixtures = 1 + static_cast<int>(rng.index(max_mixtures));
  m.dim = 1 + static_cast<int>(rng.index(max_dim));
  m.initial.assign(m.n_states, 0.0);
  m.initial[0] = 1.0;
  m.transition.assign(m.n_states * m.n_states, 0.0);
  for (int s = 0; s < m.n_states; ++s) {
    if (s + 1 < m.n_states) {
      const double self = rng.uniform(0.05, 0.95);
      m.trans(s, s) = self;
      m.trans(s, s + 1) = 1.0 - self;
    } else {
      m.trans(s, s) = 1.0;
    }
  }
  const int sm = m.n_states * m.n_mixtures;
  m.weight.resize(sm);
  for (int s = 0; s < m.n_states; ++s) {
    double total = 0.0;
    for (int mix = 0; mix < m.n_mixtures; ++mix) {
      m.weight[s * m.n_mixtures + mix] = rng.uniform(0.2, 1.0);
      total += m.weight[s * m.n_mixtures + mix];
    }
    for (int mix = 0; mix < m.n_mixtures; ++mix)
      m.weight[s * m.n_mixtures + mix] /= total;
  }
  m.mean.resize(static_cast<std::size_t>(sm) * m.dim);
  m.variance.resize(static_cast<std::size_t>(sm) * m.dim);
  for (std::size_t i = 0; i < m.mean.size(); ++i) {
    m.mean[i] = rng.uniform(-2.0, 2.0);
    m.variance[i] = rng.uniform(0.2, 2.0);
  }
  return m;
}

inline FeatureSequence random_sequence(Rng& rng, int dim, std::size_t min_rows,
                                       std::size_t max_rows) {
  const std::size_t rows = min_rows + rng.index(max_rows - min_rows + 1);
  FeatureSequence seq(SignatureMeta{}, rows, static_cast<std::size_t>(dim));
  for (std::size_t r = 0; r < rows; ++r)
    for (int d = 0; d < dim; ++d) seq.at(r, d) = rng.uniform(-3.0, 3.0);
  return seq;
}

}  // namespace sigv::oracle
