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

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sigv/signal_model.hpp"

namespace sigv {

inline constexpr std::size_t kFeatureCount = 14;

// Base channels x, y, p, theta, v, rho, a followed by their first
// time-derivatives.
extern const std::array<std::string_view, kFeatureCount> kFeatureNames;

// Row-major frame matrix with signature identity attached. The column count
// is 14 for extracted features but stays generic so the model engine can be
// exercised on low-dimensional data.
class FeatureSequence {
 public:
  FeatureSequence() = default;
  FeatureSequence(SignatureMeta meta, std::size_t rows, std::size_t cols)
      : meta_(std::move(meta)), rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  const SignatureMeta& meta() const { return meta_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& at(std::size_t row, std::size_t col) { return data_[row * cols_ + col]; }
  double at(std::size_t row, std::size_t col) const { return data_[row * cols_ + col]; }

  const double* row(std::size_t r) const { return data_.data() + r * cols_; }
  double* row(std::size_t r) { return data_.data() + r * cols_; }

 private:
  SignatureMeta meta_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Derives the 14-channel representation. Derivatives use central differences
// at interior rows and one-sided differences at the boundaries, with
// dt = 1 / rate_hz. Throws DegenerateSignature for inputs shorter than 2.
FeatureSequence extract_features(const UniformSignature& u);

// Per-channel standardization to zero mean / unit population std.
// Channels with std below 1e-12 become all zeros.
FeatureSequence znormalize(const FeatureSequence& f);

std::string format_feature_dump(const FeatureSequence& f);
void write_feature_dump(const FeatureSequence& f, const std::filesystem::path& path);

}  // namespace sigv
