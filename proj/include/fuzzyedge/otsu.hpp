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

#pragma once

#include <array>
#include <cstdint>
#include <variant>

#include "fuzzyedge/image.hpp"

namespace fuzzyedge {

inline constexpr int kGrayLevels = 256;

struct Histogram256 {
  std::array<std::uint64_t, kGrayLevels> counts{};
  std::uint64_t total = 0;

  // Normalized frequency p(k).
  double frequency(int level) const {
    return static_cast<double>(counts[level]) / static_cast<double>(total);
  }
};

// Class statistics for splitting the histogram at t: class 0 holds levels
// [0, t], class 1 holds (t, 255].
struct OtsuStats {
  int t = 0;
  double omega0 = 0.0;
  double omega1 = 0.0;
  double mu0 = 0.0;
  double mu1 = 0.0;
  double mu = 0.0;
  double sigma_b2 = 0.0;
};

// Throws std::invalid_argument on an empty plane.
Histogram256 histogram(const GrayImage& plane);

// An empty class takes the overall mean, so its variance term is zero.
// Throws std::invalid_argument if t is outside [0,255] or the histogram is
// inconsistent.
OtsuStats otsu_stats(const Histogram256& hist, int t);

// Smallest t maximizing the between-class variance. A single-level histogram
// returns that level.
int otsu_threshold(const Histogram256& hist);

struct OtsuThreshold {};
struct FixedThreshold {
  int value = 0;
};
// Where a binarization or membership threshold comes from.
using ThresholdSource = std::variant<OtsuThreshold, FixedThreshold>;

int resolve_threshold(const ThresholdSource& source, const GrayImage& plane);

}  // namespace fuzzyedge
