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
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fuzzyedge/image.hpp"
#include "fuzzyedge/stream_window.hpp"

namespace fuzzyedge {

using Kernel3x3 = std::array<std::array<int, 3>, 3>;

// Sobel masks, applied by correlation (no flip). Rows grow downward.
namespace masks {
// Responds to top-to-bottom increase.
inline constexpr Kernel3x3 kVertical = {{{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}}};
// Responds to left-to-right increase.
inline constexpr Kernel3x3 kHorizontal = {{{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}}};
inline constexpr Kernel3x3 kDiagonal = {{{-2, -1, 0}, {-1, 0, 1}, {0, 1, 2}}};
inline constexpr Kernel3x3 kAntiDiagonal = {{{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}}};
}  // namespace masks

struct GradientPair {
  int gx = 0;
  int gy = 0;

  bool operator==(const GradientPair&) const = default;
};

enum class Norm { kL1, kL2 };

inline constexpr double kDefaultEdgeThreshold = 400.0;

int convolve3x3(const Window3x3& window, const Kernel3x3& kernel);

// Adds needed to evaluate a kernel term by term, doubling counted as an add.
constexpr int direct_add_count(const Kernel3x3& kernel) {
  int terms = 0;
  int doublings = 0;
  for (const auto& row : kernel) {
    for (int k : row) {
      if (k != 0) ++terms;
      if (k == 2 || k == -2) ++doublings;
    }
  }
  return terms - 1 + doublings;
}

// Per-window adds of the direct engine: both masks plus the combining add.
inline constexpr int kDirectAddsPerWindow = direct_add_count(masks::kHorizontal) +
                                            direct_add_count(masks::kVertical) + 1;

// gx from the horizontal mask, gy from the vertical mask.
GradientPair gradient_direct(const Window3x3& window);

// Responses to the diagonal and anti-diagonal masks, as (gx, gy).
GradientPair gradient_diagonal(const Window3x3& window);

double magnitude(const GradientPair& g, Norm norm);

// 1 iff mag >= threshold.
inline bool edge_decide(double mag, double threshold) { return mag >= threshold; }

// Dense integer plane with its own extent.
struct IntPlane {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<int> values;

  int at(std::size_t row, std::size_t col) const { return values[row * width + col]; }
};

// Intermediate sums of the incremental engine, indexed by the top-left
// pixel (i, j) of the span they cover:
//   ns_r(i,j) = P(i,j) + P(i+1,j)          ns_c(i,j) = P(i,j) + P(i,j+1)
//   ps_r(i,j) = ns_r(i,j) + ns_r(i+1,j)    ps_c(i,j) = ns_c(i,j) + ns_c(i,j+1)
//   id_r(i,j) = ps_r(i,j) - ps_r(i,j+2)    id_c(i,j) = ps_c(i,j) - ps_c(i+2,j)
// id_r(i,j) = -gx and id_c(i,j) = -gy at center (i+1, j+1).
struct SumPlanes {
  IntPlane ns_r, ns_c;
  IntPlane ps_r, ps_c;
  IntPlane id_r, id_c;
};

// Builds the intermediate planes. Every two-operand add or subtract is added
// to *add_count when non-null.
SumPlanes compute_sum_planes(const GrayImage& plane, std::uint64_t* add_count);

struct SobelOptions {
  double threshold = kDefaultEdgeThreshold;
  Norm norm = Norm::kL1;
  // Adds |h3| + |h4| responses to the magnitude.
  bool diagonal = false;
};

// Window-by-window convolution; border pixels are 0.
EdgeMap sobel_plane_direct(const GrayImage& plane, const SobelOptions& options);
EdgeMap sobel_plane_direct(const GrayImage& plane, double threshold, Norm norm);

struct IncrementalResult {
  EdgeMap edges;
  std::uint64_t add_count = 0;
};

// L1 edge map from the sum planes; border pixels are 0.
IncrementalResult sobel_plane_incremental(const GrayImage& plane,
                                          double threshold);

// Incremental engine driven by the window stream of a LineBufferState.
// Sums along a window row are carried between horizontally adjacent windows
// and partial sums are kept in line buffers between window rows, so a steady
// state window costs seven adds: one neighbouring sum and one partial sum in
// each direction, two interlaced differences, and the magnitude add. Windows
// must arrive in raster order of their centers.
class StreamingSobel {
 public:
  StreamingSobel(std::size_t width, std::size_t height);

  GradientPair push(const Window3x3& window);

  // Magnitude of the pushed window's gradient; counts the combining add.
  double evaluate(const Window3x3& window, Norm norm);

  std::uint64_t add_count() const { return add_count_; }

 private:
  void StartRow(const Window3x3& window);

  std::size_t width_;
  std::uint64_t add_count_ = 0;
  std::size_t current_row_ = 0;
  std::size_t next_col_ = 1;
  // Per-column neighbouring sum of the window's top two / bottom two rows.
  std::vector<int> ns_top_, ns_bottom_;
  // Per-center-column row partial sums for the three window rows.
  std::vector<int> ps_row_above_, ps_row_center_, ps_row_below_;
  // Column partial sums of the window's three columns, left to right.
  std::array<int, 3> ps_cols_{};
  // Neighbouring sums of each window row's left pair; the upper two are only
  // needed on the first window row.
  int ns_top_left_pair_ = 0;
  int ns_middle_left_pair_ = 0;
  int ns_bottom_left_pair_ = 0;
};

}  // namespace fuzzyedge
