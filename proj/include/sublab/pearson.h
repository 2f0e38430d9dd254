// Copyright 2026 The Sublab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBLAB_PEARSON_H_
#define SUBLAB_PEARSON_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

namespace sublab {

// Streaming co-moment accumulator (Welford updates, pairwise merge after
// Chan, Golub and LeVeque). Population normalization; the 1/n factors cancel
// in the correlation anyway.
class PearsonAccumulator {
 public:
  void Add(double x, double y) {
    ++n_;
    const double dx = x - mean_x_;
    mean_x_ += dx / static_cast<double>(n_);
    const double dy = y - mean_y_;
    mean_y_ += dy / static_cast<double>(n_);
    m2x_ += dx * (x - mean_x_);
    m2y_ += dy * (y - mean_y_);
    cxy_ += dx * (y - mean_y_);
  }

  void Merge(const PearsonAccumulator& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(o.n_);
    const double n = na + nb;
    const double dx = o.mean_x_ - mean_x_;
    const double dy = o.mean_y_ - mean_y_;
    mean_x_ += dx * nb / n;
    mean_y_ += dy * nb / n;
    m2x_ += o.m2x_ + dx * dx * na * nb / n;
    m2y_ += o.m2y_ + dy * dy * na * nb / n;
    cxy_ += o.cxy_ + dx * dy * na * nb / n;
    n_ += o.n_;
  }

  int64_t n() const { return n_; }
  double mean_x() const { return mean_x_; }
  double mean_y() const { return mean_y_; }
  double variance_x() const { return n_ > 0 ? m2x_ / n_ : 0.0; }
  double variance_y() const { return n_ > 0 ? m2y_ / n_ : 0.0; }
  double covariance() const { return n_ > 0 ? cxy_ / n_ : 0.0; }

  // nullopt when fewer than two samples or either variance is zero.
  std::optional<double> Correlation() const {
    if (n_ < 2 || m2x_ <= 0.0 || m2y_ <= 0.0) return std::nullopt;
    return std::clamp(cxy_ / std::sqrt(m2x_ * m2y_), -1.0, 1.0);
  }

 private:
  int64_t n_ = 0;
  double mean_x_ = 0.0;
  double mean_y_ = 0.0;
  double m2x_ = 0.0;
  double m2y_ = 0.0;
  double cxy_ = 0.0;
};

}  // namespace sublab

#endif  // SUBLAB_PEARSON_H_
