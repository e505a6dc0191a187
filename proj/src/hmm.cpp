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

#include "sigv/hmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sigv/error.hpp"
#include "sigv/rng.hpp"
#include "sigv/text.hpp"

namespace sigv {

namespace {

constexpr double kLog2Pi = 1.8378770664093453;
constexpr double kMinVarianceFloor = 1e-8;
constexpr double kMinOccupancy = 1e-10;

struct GaussianTable {
  // Per (state, mixture): log weight, -0.5 * sum(log 2 pi var), 1/var.
  std::vector<double> log_weight;
  std::vector<double> log_norm;
  std::vector<double> inv_var;
};

GaussianTable prepare(const HmmModel& m) {
  const int sm = m.n_states * m.n_mixtures;
  GaussianTable t;
  t.log_weight.resize(sm);
  t.log_norm.resize(sm);
  t.inv_var.resize(sm * m.dim);
  for (int i = 0; i < sm; ++i) {
    t.log_weight[i] =
        m.weight[i] > 0.0 ? std::log(m.weight[i]) : -std::numeric_limits<double>::infinity();
    double ln = 0.0;
    for (int d = 0; d < m.dim; ++d) {
      const double var = m.variance[i * m.dim + d];
      ln += kLog2Pi + std::log(var);
      t.inv_var[i * m.dim + d] = 1.0 / var;
    }
    t.log_norm[i] = -0.5 * ln;
  }
  return t;
}

double mixture_log_density(const HmmModel& m, const GaussianTable& t, int s,
                           const double* frame, double* per_mix) {
  // per_mix (size n_mixtures) receives log(w_m N_m); returns logsumexp.
  double max_term = -std::numeric_limits<double>::infinity();
  for (int mix = 0; mix < m.n_mixtures; ++mix) {
    const int i = s * m.n_mixtures + mix;
    const double* mu = m.mean.data() + i * m.dim;
    const double* iv = t.inv_var.data() + i * m.dim;
    double quad = 0.0;
    for (int d = 0; d < m.dim; ++d) {
      const double diff = frame[d] - mu[d];
      quad += diff * diff * iv[d];
    }
    const double term = t.log_weight[i] + t.log_norm[i] - 0.5 * quad;
    per_mix[mix] = term;
    max_term = std::max(max_term, term);
  }
  if (!std::isfinite(max_term)) return max_term;
  double sum = 0.0;
  for (int mix = 0; mix < m.n_mixtures; ++mix) sum += std::exp(per_mix[mix] - max_term);
  return max_term + std::log(sum);
}

struct ForwardResult {
  double total_ll = 0.0;
  // Scaled alphas and per-frame scale data, kept only when requested.
  std::vector<double> alpha;      // T x S
  std::vector<double> scale;      // T, the c' normalizers
  std::vector<double> emit;       // T x S, exp(logb - shift)
  std::vector<double> shift;      // T, per-frame max log emission
  std::vector<double> logmix;     // T x S x M
};

ForwardResult forward_pass(const HmmModel& m, const GaussianTable& t,
                           const FeatureSequence& seq, bool keep) {
  const int S = m.n_states;
  const int M = m.n_mixtures;
  const std::size_t T = seq.rows();

  ForwardResult r;
  if (keep) {
    r.alpha.resize(T * S);
    r.scale.resize(T);
    r.emit.resize(T * S);
    r.shift.resize(T);
    r.logmix.resize(T * S * M);
  }

  std::vector<double> logb(S);
  std::vector<double> per_mix(M);
  std::vector<double> prev(S), cur(S), eb(S);

  double total = 0.0;
  for (std::size_t time = 0; time < T; ++time) {
    const double* frame = seq.row(time);
    double shift = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < S; ++s) {
      logb[s] = mixture_log_density(m, t, s, frame, per_mix.data());
      if (keep)
        std::copy(per_mix.begin(), per_mix.end(), r.logmix.begin() + (time * S + s) * M);
      shift = std::max(shift, logb[s]);
    }
    if (!std::isfinite(shift))
      raise(ErrorCode::NumericalUnderflow, "all emission densities vanished");
    for (int s = 0; s < S; ++s) eb[s] = std::exp(logb[s] - shift);

    double norm = 0.0;
    if (time == 0) {
      for (int s = 0; s < S; ++s) {
        cur[s] = m.initial[s] * eb[s];
        norm += cur[s];
      }
    } else {
      for (int s = 0; s < S; ++s) {
        double acc = 0.0;
        for (int i = 0; i < S; ++i) acc += prev[i] * m.trans(i, s);
        cur[s] = acc * eb[s];
        norm += cur[s];
      }
    }
    if (!(norm > 0.0) || !std::isfinite(norm))
      raise(ErrorCode::NumericalUnderflow, "forward scaling collapsed");
    for (int s = 0; s < S; ++s) cur[s] /= norm;
    total += std::log(norm) + shift;

    if (keep) {
      std::copy(cur.begin(), cur.end(), r.alpha.begin() + time * S);
      r.scale[time] = norm;
      std::copy(eb.begin(), eb.end(), r.emit.begin() + time * S);
      r.shift[time] = shift;
    }
    std::swap(prev, cur);
  }
  r.total_ll = total;
  return r;
}

// Floor per dimension: a fraction of the global training variance, with an
// absolute minimum so constant dimensions stay usable.
std::vector<double> variance_floor(const std::vector<FeatureSequence>& train,
                                   double factor) {
  const std::size_t dim = train.front().cols();
  std::vector<double> mean(dim, 0.0), sq(dim, 0.0);
  std::size_t count = 0;
  for (const FeatureSequence& seq : train) {
    for (std::size_t r = 0; r < seq.rows(); ++r) {
      const double* row = seq.row(r);
      for (std::size_t d = 0; d < dim; ++d) {
        mean[d] += row[d];
        sq[d] += row[d] * row[d];
      }
    }
    count += seq.rows();
  }
  std::vector<double> floor(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    const double mu = mean[d] / static_cast<double>(count);
    const double var = sq[d] / static_cast<double>(count) - mu * mu;
    floor[d] = std::max(factor * std::max(var, 0.0), kMinVarianceFloor);
  }
  return floor;
}

void check_training_input(const std::vector<FeatureSequence>& train,
                          const TrainConfig& cfg) {
  if (train.empty()) raise(ErrorCode::EmptyTrainingSet, "no training sequences");
  const std::size_t dim = train.front().cols();
  for (const FeatureSequence& seq : train) {
    if (seq.cols() != dim)
      raise(ErrorCode::DimensionMismatch, "training sequences disagree on dimension");
    if (seq.rows() < static_cast<std::size_t>(cfg.n_states))
      raise(ErrorCode::SequenceTooShort,
            "sequence of " + std::to_string(seq.rows()) + " frames cannot cover " +
                std::to_string(cfg.n_states) + " states");
  }
}

struct KmeansResult {
  std::vector<std::vector<double>> centroids;
  std::vector<int> assignment;
};

KmeansResult kmeans(const std::vector<const double*>& points, std::size_t dim, int k,
                    Rng& rng) {
  const std::size_t n = points.size();
  KmeansResult res;
  res.assignment.assign(n, 0);

  // Seed with k distinct points (partial Fisher-Yates).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (int i = 0; i < k; ++i) {
    const std::size_t j = i + rng.index(n - i);
    std::swap(order[i], order[j]);
  }
  res.centroids.resize(k);
  for (int c = 0; c < k; ++c)
    res.centroids[c].assign(points[order[c]], points[order[c]] + dim);

  auto sq_dist = [dim](const double* a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = a[d] - b[d];
      acc += diff * diff;
    }
    return acc;
  };

  std::vector<double> dist(n, 0.0);
  for (int iter = 0; iter < 100; ++iter) {
    bool changed = false;
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double best_d = sq_dist(points[i], res.centroids[0]);
      for (int c = 1; c < k; ++c) {
        const double d = sq_dist(points[i], res.centroids[c]);
        if (d < best_d) {  // ties keep the lowest index
          best_d = d;
          best = c;
        }
      }
      dist[i] = best_d;
      if (res.assignment[i] != best) {
        res.assignment[i] = best;
        changed = true;
      }
      ++sizes[best];
    }

    // Reseed empty clusters with the farthest point of a donor cluster.
    for (int c = 0; c < k; ++c) {
      if (sizes[c] > 0) continue;
      std::size_t far = n;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (sizes[res.assignment[i]] < 2) continue;
        if (dist[i] > far_d) {
          far_d = dist[i];
          far = i;
        }
      }
      if (far == n) continue;
      --sizes[res.assignment[far]];
      res.assignment[far] = c;
      sizes[c] = 1;
      dist[far] = 0.0;
      changed = true;
    }

    std::vector<std::vector<double>> next(k, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      const double* p = points[i];
      std::vector<double>& acc = next[res.assignment[i]];
      for (std::size_t d = 0; d < dim; ++d) acc[d] += p[d];
    }
    for (int c = 0; c < k; ++c) {
      if (sizes[c] == 0) continue;
      for (std::size_t d = 0; d < dim; ++d)
        next[c][d] /= static_cast<double>(sizes[c]);
    }
    res.centroids = std::move(next);
    if (!changed && iter > 0) break;
  }
  return res;
}

}  // namespace

void validate_train_config(const TrainConfig& cfg) {
  if (cfg.n_states < 1 || cfg.n_mixtures < 1 || cfg.max_iterations < 1)
    raise(ErrorCode::InvalidConfig, "counts in TrainConfig must be >= 1");
  if (!(cfg.ll_tolerance > 0.0))
    raise(ErrorCode::InvalidConfig, "ll_tolerance must be positive");
  if (!(cfg.variance_floor_factor > 0.0))
    raise(ErrorCode::InvalidConfig, "variance_floor_factor must be positive");
}

void validate_model(const HmmModel& m) {
  if (m.n_states < 1 || m.n_mixtures < 1 || m.dim < 1)
    raise(ErrorCode::InvalidConfig, "model sizes must be >= 1");
  const std::size_t sm = static_cast<std::size_t>(m.n_states) * m.n_mixtures;
  if (m.initial.size() != static_cast<std::size_t>(m.n_states) ||
      m.transition.size() != static_cast<std::size_t>(m.n_states) * m.n_states ||
      m.weight.size() != sm || m.mean.size() != sm * m.dim ||
      m.variance.size() != sm * m.dim)
    raise(ErrorCode::InvalidConfig, "model buffer sizes inconsistent");
  if (m.initial[0] != 1.0)
    raise(ErrorCode::InvalidConfig, "initial distribution must start in state 0");
  for (int s = 1; s < m.n_states; ++s)
    if (m.initial[s] != 0.0)
      raise(ErrorCode::InvalidConfig, "initial distribution must start in state 0");
  for (int i = 0; i < m.n_states; ++i) {
    double row = 0.0;
    for (int j = 0; j < m.n_states; ++j) {
      const double a = m.trans(i, j);
      if ((j < i || j > i + 1) && a != 0.0)
        raise(ErrorCode::InvalidConfig, "transition matrix breaks the left-to-right pattern");
      if (a < 0.0) raise(ErrorCode::InvalidConfig, "negative transition probability");
      row += a;
    }
    if (std::abs(row - 1.0) > 1e-9)
      raise(ErrorCode::InvalidConfig, "transition row does not sum to 1");
  }
  for (int s = 0; s < m.n_states; ++s) {
    double wsum = 0.0;
    for (int mix = 0; mix < m.n_mixtures; ++mix) {
      const double w = m.weight[s * m.n_mixtures + mix];
      if (w < 0.0) raise(ErrorCode::InvalidConfig, "negative mixture weight");
      wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
      raise(ErrorCode::InvalidConfig, "mixture weights do not sum to 1");
  }
  for (double v : m.variance)
    if (!(v > 0.0)) raise(ErrorCode::InvalidConfig, "variance must be positive");
}

HmmModel init_model(const std::vector<FeatureSequence>& train, const TrainConfig& cfg) {
  validate_train_config(cfg);
  check_training_input(train, cfg);

  const int S = cfg.n_states;
  const int M = cfg.n_mixtures;
  const int D = static_cast<int>(train.front().cols());
  const std::vector<double> floor = variance_floor(train, cfg.variance_floor_factor);

  HmmModel model;
  model.n_states = S;
  model.n_mixtures = M;
  model.dim = D;
  model.initial.assign(S, 0.0);
  model.initial[0] = 1.0;
  model.transition.assign(S * S, 0.0);
  for (int s = 0; s < S; ++s) {
    if (s + 1 < S) {
      model.trans(s, s) = 0.9;
      model.trans(s, s + 1) = 0.1;
    } else {
      model.trans(s, s) = 1.0;
    }
  }
  model.weight.assign(S * M, 0.0);
  model.mean.assign(static_cast<std::size_t>(S) * M * D, 0.0);
  model.variance.assign(static_cast<std::size_t>(S) * M * D, 1.0);

  for (int s = 0; s < S; ++s) {
    // Pool the frames of segment s across sequences.
    std::vector<const double*> pool;
    for (const FeatureSequence& seq : train) {
      const std::size_t n = seq.rows();
      const std::size_t lo = n * static_cast<std::size_t>(s) / S;
      const std::size_t hi = n * static_cast<std::size_t>(s + 1) / S;
      for (std::size_t r = lo; r < hi; ++r) pool.push_back(seq.row(r));
    }
    if (pool.size() < static_cast<std::size_t>(M))
      raise(ErrorCode::SequenceTooShort,
            "state " + std::to_string(s) + " pools " + std::to_string(pool.size()) +
                " frames for " + std::to_string(M) + " mixtures");

    Rng rng(seed_chain(cfg.seed, {hash_label("init"), static_cast<std::uint64_t>(s)}));
    const KmeansResult km = kmeans(pool, D, M, rng);

    std::vector<std::size_t> sizes(M, 0);
    for (int a : km.assignment) ++sizes[a];
    for (int mix = 0; mix < M; ++mix) {
      const int i = s * M + mix;
      model.weight[i] = static_cast<double>(sizes[mix]) / static_cast<double>(pool.size());
      double* mu = model.mean_at(s, mix);
      std::copy(km.centroids[mix].begin(), km.centroids[mix].end(), mu);
      double* var = model.var_at(s, mix);
      std::fill(var, var + D, 0.0);
      for (std::size_t p = 0; p < pool.size(); ++p) {
        if (km.assignment[p] != mix) continue;
        for (int d = 0; d < D; ++d) {
          const double diff = pool[p][d] - mu[d];
          var[d] += diff * diff;
        }
      }
      for (int d = 0; d < D; ++d) {
        if (sizes[mix] > 0) var[d] /= static_cast<double>(sizes[mix]);
        var[d] = std::max(var[d], floor[d]);
      }
    }
  }
  return model;
}

TrainResult train_baum_welch(HmmModel model, const std::vector<FeatureSequence>& train,
                             const TrainConfig& cfg) {
  validate_train_config(cfg);
  check_training_input(train, cfg);
  if (static_cast<int>(train.front().cols()) != model.dim)
    raise(ErrorCode::DimensionMismatch, "training dimension does not match model");

  const int S = model.n_states;
  const int M = model.n_mixtures;
  const int D = model.dim;
  const std::vector<double> floor = variance_floor(train, cfg.variance_floor_factor);

  TrainResult result;
  double prev_ll = 0.0;

  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    const GaussianTable table = prepare(model);

    std::vector<double> trans_num(S * S, 0.0);
    std::vector<double> occ(S * M, 0.0);
    std::vector<double> mean_acc(static_cast<std::size_t>(S) * M * D, 0.0);
    std::vector<double> sq_acc(static_cast<std::size_t>(S) * M * D, 0.0);
    double total_ll = 0.0;

    std::vector<double> beta(S), beta_next(S), gamma(S);

    for (const FeatureSequence& seq : train) {
      const std::size_t T = seq.rows();
      const ForwardResult fwd = forward_pass(model, table, seq, /*keep=*/true);
      total_ll += fwd.total_ll;

      // Backward pass interleaved with accumulation, scaled by the forward
      // normalizers so gamma = alpha * beta directly.
      std::fill(beta_next.begin(), beta_next.end(), 1.0);
      for (std::size_t time = T; time-- > 0;) {
        if (time + 1 < T) {
          const double* eb1 = fwd.emit.data() + (time + 1) * S;
          const double c1 = fwd.scale[time + 1];
          for (int i = 0; i < S; ++i) {
            double acc = 0.0;
            for (int j = 0; j < S; ++j)
              acc += model.trans(i, j) * eb1[j] * beta_next[j];
            beta[i] = acc / c1;
          }
          // Transition statistics use the same scaled quantities.
          const double* alpha_t = fwd.alpha.data() + time * S;
          for (int i = 0; i < S; ++i) {
            const double base = alpha_t[i] / c1;
            if (base == 0.0) continue;
            for (int j = 0; j < S; ++j) {
              const double a = model.trans(i, j);
              if (a == 0.0) continue;
              trans_num[i * S + j] += base * a * eb1[j] * beta_next[j];
            }
          }
        } else {
          std::copy(beta_next.begin(), beta_next.end(), beta.begin());
        }

        const double* alpha_t = fwd.alpha.data() + time * S;
        for (int s = 0; s < S; ++s) gamma[s] = alpha_t[s] * beta[s];

        // Mixture responsibilities from the cached per-mixture log terms.
        for (int s = 0; s < S; ++s) {
          if (gamma[s] == 0.0) continue;
          const double* lm = fwd.logmix.data() + (time * S + s) * M;
          double max_term = lm[0];
          for (int mix = 1; mix < M; ++mix) max_term = std::max(max_term, lm[mix]);
          double denom = 0.0;
          for (int mix = 0; mix < M; ++mix) denom += std::exp(lm[mix] - max_term);
          const double* frame = seq.row(time);
          for (int mix = 0; mix < M; ++mix) {
            const double r = gamma[s] * std::exp(lm[mix] - max_term) / denom;
            if (r == 0.0) continue;
            const int i = s * M + mix;
            occ[i] += r;
            double* macc = mean_acc.data() + static_cast<std::size_t>(i) * D;
            double* sacc = sq_acc.data() + static_cast<std::size_t>(i) * D;
            for (int d = 0; d < D; ++d) {
              macc[d] += r * frame[d];
              sacc[d] += r * frame[d] * frame[d];
            }
          }
        }
        std::swap(beta, beta_next);
      }
    }

    result.ll_trace.push_back(total_ll);
    if (iter > 0 && total_ll - prev_ll < cfg.ll_tolerance * std::abs(prev_ll)) break;
    prev_ll = total_ll;

    // M-step. Rows or mixtures with no effective occupancy keep their
    // previous parameters.
    for (int i = 0; i < S; ++i) {
      double row = 0.0;
      for (int j = 0; j < S; ++j) row += trans_num[i * S + j];
      if (row > kMinOccupancy) {
        for (int j = 0; j < S; ++j) model.trans(i, j) = trans_num[i * S + j] / row;
      }
    }
    // The last state has no outgoing arc in the statistics; keep it absorbing.
    model.trans(S - 1, S - 1) = 1.0;
    for (int j = 0; j + 1 < S; ++j) model.trans(S - 1, j) = 0.0;

    for (int s = 0; s < S; ++s) {
      double state_occ = 0.0;
      for (int mix = 0; mix < M; ++mix) state_occ += occ[s * M + mix];
      if (state_occ <= kMinOccupancy) continue;
      for (int mix = 0; mix < M; ++mix) {
        const int i = s * M + mix;
        model.weight[i] = occ[i] / state_occ;
        if (occ[i] <= kMinOccupancy) continue;
        double* mu = model.mean_at(s, mix);
        double* var = model.var_at(s, mix);
        const double* macc = mean_acc.data() + static_cast<std::size_t>(i) * D;
        const double* sacc = sq_acc.data() + static_cast<std::size_t>(i) * D;
        for (int d = 0; d < D; ++d) {
          mu[d] = macc[d] / occ[i];
          var[d] = std::max(sacc[d] / occ[i] - mu[d] * mu[d], floor[d]);
        }
      }
    }
  }

  result.model = std::move(model);
  return result;
}

TrainResult train_model(const std::vector<FeatureSequence>& train,
                        const TrainConfig& cfg) {
  return train_baum_welch(init_model(train, cfg), train, cfg);
}

double log_likelihood(const HmmModel& model, const FeatureSequence& test) {
  if (static_cast<int>(test.cols()) != model.dim)
    raise(ErrorCode::DimensionMismatch,
          "test dimension " + std::to_string(test.cols()) + " vs model dim " +
              std::to_string(model.dim));
  if (test.rows() == 0) raise(ErrorCode::DegenerateSignature, "empty test sequence");
  const GaussianTable table = prepare(model);
  const ForwardResult fwd = forward_pass(model, table, test, /*keep=*/false);
  return fwd.total_ll / static_cast<double>(test.rows());
}

std::string serialize_model(const HmmModel& m) {
  std::string out;
  out.reserve(128 + m.mean.size() * 26 * 2);
  out += "sigv_hmm v1\n";
  out += "states " + std::to_string(m.n_states) + " mixtures " +
         std::to_string(m.n_mixtures) + " dim " + std::to_string(m.dim) + "\n";
  auto emit_vector = [&out](std::string_view name, const std::vector<double>& v) {
    out += name;
    for (double x : v) {
      out += ' ';
      out += format_double_17(x);
    }
    out += '\n';
  };
  emit_vector("pi", m.initial);
  emit_vector("trans", m.transition);
  emit_vector("weights", m.weight);
  emit_vector("means", m.mean);
  emit_vector("vars", m.variance);
  return out;
}

HmmModel deserialize_model(std::string_view text, std::string_view origin) {
  const std::string where(origin.empty() ? "model text" : origin);
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    if (!line.empty()) lines.push_back(line);
    pos = eol + 1;
  }
  if (lines.size() != 7 || lines[0] != "sigv_hmm v1")
    raise(ErrorCode::ParseError, "unrecognized model format in " + where);

  auto header = split_ws(lines[1]);
  if (header.size() != 6 || header[0] != "states" || header[2] != "mixtures" ||
      header[4] != "dim")
    raise(ErrorCode::ParseError, "malformed model header in " + where);

  HmmModel m;
  m.n_states = static_cast<int>(parse_int(header[1], where));
  m.n_mixtures = static_cast<int>(parse_int(header[3], where));
  m.dim = static_cast<int>(parse_int(header[5], where));

  auto read_vector = [&where](std::string_view line, std::string_view name,
                              std::size_t expect) {
    auto fields = split_ws(line);
    if (fields.empty() || fields[0] != name)
      raise(ErrorCode::ParseError,
            "expected '" + std::string(name) + "' line in " + where);
    if (fields.size() != expect + 1)
      raise(ErrorCode::ParseError,
            "'" + std::string(name) + "' expects " + std::to_string(expect) +
                " values in " + where);
    std::vector<double> v(expect);
    for (std::size_t i = 0; i < expect; ++i) v[i] = parse_double(fields[i + 1], where);
    return v;
  };

  const std::size_t S = static_cast<std::size_t>(m.n_states);
  const std::size_t sm = S * m.n_mixtures;
  m.initial = read_vector(lines[2], "pi", S);
  m.transition = read_vector(lines[3], "trans", S * S);
  m.weight = read_vector(lines[4], "weights", sm);
  m.mean = read_vector(lines[5], "means", sm * m.dim);
  m.variance = read_vector(lines[6], "vars", sm * m.dim);
  validate_model(m);
  return m;
}

void write_model_file(const HmmModel& model, const std::filesystem::path& path) {
  write_text_file(path, serialize_model(model));
}

HmmModel read_model_file(const std::filesystem::path& path) {
  return deserialize_model(read_text_file(path), path.string());
}

}  // namespace sigv
