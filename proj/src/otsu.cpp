// Copyright 2026 The fuzzyedge Authors
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

#include "fuzzyedge/otsu.hpp"

#include <stdexcept>
#include <string>

namespace fuzzyedge {
namespace {

// Zeroth and first moments of one class, kept as exact integers so every
// candidate threshold sees the same inputs regardless of evaluation order.
struct ClassMoments {
  std::uint64_t count = 0;
  std::uint64_t level_sum = 0;
};

OtsuStats StatsFromMoments(int t, const ClassMoments& lower,
                           const ClassMoments& upper, std::uint64_t total,
                           std::uint64_t grand_sum) {
  OtsuStats s;
  s.t = t;
  const double n = static_cast<double>(total);
  s.mu = static_cast<double>(grand_sum) / n;
  s.omega0 = static_cast<double>(lower.count) / n;
  s.omega1 = static_cast<double>(upper.count) / n;
  s.mu0 = lower.count ? static_cast<double>(lower.level_sum) /
                            static_cast<double>(lower.count)
                      : s.mu;
  s.mu1 = upper.count ? static_cast<double>(upper.level_sum) /
                            static_cast<double>(upper.count)
                      : s.mu;
  if (lower.count == 0 || upper.count == 0) {
    s.sigma_b2 = 0.0;
  } else {
    const double d0 = s.mu0 - s.mu;
    const double d1 = s.mu1 - s.mu;
    s.sigma_b2 = s.omega0 * d0 * d0 + s.omega1 * d1 * d1;
  }
  return s;
}

void CheckHistogram(const Histogram256& hist) {
  std::uint64_t sum = 0;
  for (auto c : hist.counts) sum += c;
  if (hist.total == 0 || sum != hist.total) {
    throw std::invalid_argument("histogram counts must sum to a positive total");
  }
}

std::uint64_t GrandSum(const Histogram256& hist) {
  std::uint64_t sum = 0;
  for (int k = 0; k < kGrayLevels; ++k) {
    sum += static_cast<std::uint64_t>(k) * hist.counts[k];
  }
  return sum;
}

}  // namespace

Histogram256 histogram(const GrayImage& plane) {
  if (plane.empty()) throw std::invalid_argument("histogram of an empty plane");
  Histogram256 hist;
  for (Intensity v : plane.pixels()) ++hist.counts[v];
  hist.total = plane.size();
  return hist;
}

OtsuStats otsu_stats(const Histogram256& hist, int t) {
  if (t < 0 || t >= kGrayLevels) {
    throw std::invalid_argument("threshold " + std::to_string(t) +
                                " outside [0,255]");
  }
  CheckHistogram(hist);
  const std::uint64_t grand_sum = GrandSum(hist);
  ClassMoments lower;
  for (int k = 0; k <= t; ++k) {
    lower.count += hist.counts[k];
    lower.level_sum += static_cast<std::uint64_t>(k) * hist.counts[k];
  }
  const ClassMoments upper{hist.total - lower.count,
                           grand_sum - lower.level_sum};
  return StatsFromMoments(t, lower, upper, hist.total, grand_sum);
}

int otsu_threshold(const Histogram256& hist) {
  CheckHistogram(hist);
  int occupied = 0;
  int only_level = 0;
  for (int k = 0; k < kGrayLevels; ++k) {
    if (hist.counts[k]) {
      ++occupied;
      only_level = k;
    }
  }
  if (occupied == 1) return only_level;

  const std::uint64_t grand_sum = GrandSum(hist);
  ClassMoments lower;
  int best_t = 0;
  double best = -1.0;
  for (int t = 0; t < kGrayLevels; ++t) {
    lower.count += hist.counts[t];
    lower.level_sum += static_cast<std::uint64_t>(t) * hist.counts[t];
    const ClassMoments upper{hist.total - lower.count,
                             grand_sum - lower.level_sum};
    const double v =
        StatsFromMoments(t, lower, upper, hist.total, grand_sum).sigma_b2;
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  return best_t;
}

int resolve_threshold(const ThresholdSource& source, const GrayImage& plane) {
  if (const auto* fixed = std::get_if<FixedThreshold>(&source)) {
    if (fixed->value < 0 || fixed->value >= kGrayLevels) {
      throw std::invalid_argument("fixed threshold must lie in [0,255]");
    }
    return fixed->value;
  }
  return otsu_threshold(histogram(plane));
}

}  // namespace fuzzyedge
