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

#include "fuzzyedge/sobel.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fuzzyedge {
namespace {

IntPlane MakePlane(std::size_t width, std::size_t height) {
  return IntPlane{width, height, std::vector<int>(width * height, 0)};
}

void CheckWindowable(const GrayImage& plane) {
  if (plane.width() < 3 || plane.height() < 3) {
    throw DimensionError("Sobel needs at least a 3x3 image");
  }
}

double WindowMagnitude(const Window3x3& w, const SobelOptions& options) {
  double mag = magnitude(gradient_direct(w), options.norm);
  if (options.diagonal) {
    const GradientPair d = gradient_diagonal(w);
    mag += std::abs(d.gx) + std::abs(d.gy);
  }
  return mag;
}

}  // namespace

int convolve3x3(const Window3x3& window, const Kernel3x3& kernel) {
  int acc = 0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) acc += kernel[r][c] * window.at(r, c);
  }
  return acc;
}

GradientPair gradient_direct(const Window3x3& window) {
  return {convolve3x3(window, masks::kHorizontal),
          convolve3x3(window, masks::kVertical)};
}

GradientPair gradient_diagonal(const Window3x3& window) {
  return {convolve3x3(window, masks::kDiagonal),
          convolve3x3(window, masks::kAntiDiagonal)};
}

double magnitude(const GradientPair& g, Norm norm) {
  if (norm == Norm::kL1) return std::abs(g.gx) + std::abs(g.gy);
  return std::sqrt(static_cast<double>(g.gx) * g.gx +
                   static_cast<double>(g.gy) * g.gy);
}

SumPlanes compute_sum_planes(const GrayImage& plane, std::uint64_t* add_count) {
  CheckWindowable(plane);
  const std::size_t w = plane.width();
  const std::size_t h = plane.height();
  std::uint64_t adds = 0;
  SumPlanes s;

  s.ns_r = MakePlane(w, h - 1);
  s.ns_c = MakePlane(w - 1, h);
  for (std::size_t i = 0; i + 1 < h; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      s.ns_r.values[i * w + j] = plane.at(i, j) + plane.at(i + 1, j);
    }
  }
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j + 1 < w; ++j) {
      s.ns_c.values[i * (w - 1) + j] = plane.at(i, j) + plane.at(i, j + 1);
    }
  }
  adds += s.ns_r.values.size() + s.ns_c.values.size();

  s.ps_r = MakePlane(w, h - 2);
  s.ps_c = MakePlane(w - 2, h);
  for (std::size_t i = 0; i + 2 < h; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      s.ps_r.values[i * w + j] = s.ns_r.at(i, j) + s.ns_r.at(i + 1, j);
    }
  }
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j + 2 < w; ++j) {
      s.ps_c.values[i * (w - 2) + j] = s.ns_c.at(i, j) + s.ns_c.at(i, j + 1);
    }
  }
  adds += s.ps_r.values.size() + s.ps_c.values.size();

  s.id_r = MakePlane(w - 2, h - 2);
  s.id_c = MakePlane(w - 2, h - 2);
  for (std::size_t i = 0; i + 2 < h; ++i) {
    for (std::size_t j = 0; j + 2 < w; ++j) {
      s.id_r.values[i * (w - 2) + j] = s.ps_r.at(i, j) - s.ps_r.at(i, j + 2);
      s.id_c.values[i * (w - 2) + j] = s.ps_c.at(i, j) - s.ps_c.at(i + 2, j);
    }
  }
  adds += s.id_r.values.size() + s.id_c.values.size();

  if (add_count) *add_count += adds;
  return s;
}

EdgeMap sobel_plane_direct(const GrayImage& plane, const SobelOptions& options) {
  CheckWindowable(plane);
  EdgeMap edges(plane.width(), plane.height());
  for (const Window3x3& w : windows_of(plane)) {
    edges.set(w.row, w.col,
              edge_decide(WindowMagnitude(w, options), options.threshold));
  }
  return edges;
}

EdgeMap sobel_plane_direct(const GrayImage& plane, double threshold, Norm norm) {
  return sobel_plane_direct(plane, SobelOptions{threshold, norm, false});
}

IncrementalResult sobel_plane_incremental(const GrayImage& plane,
                                          double threshold) {
  IncrementalResult result;
  const SumPlanes s = compute_sum_planes(plane, &result.add_count);
  result.edges = EdgeMap(plane.width(), plane.height());
  for (std::size_t i = 0; i < s.id_r.height; ++i) {
    for (std::size_t j = 0; j < s.id_r.width; ++j) {
      const int mag = std::abs(s.id_r.at(i, j)) + std::abs(s.id_c.at(i, j));
      result.edges.set(i + 1, j + 1, edge_decide(mag, threshold));
    }
  }
  result.add_count += s.id_r.values.size();
  return result;
}

StreamingSobel::StreamingSobel(std::size_t width, std::size_t height)
    : width_(width),
      ns_top_(width, 0),
      ns_bottom_(width, 0),
      ps_row_above_(width, 0),
      ps_row_center_(width, 0),
      ps_row_below_(width, 0) {
  if (width < 3 || height < 3) {
    throw DimensionError("Sobel needs at least a 3x3 image");
  }
}

void StreamingSobel::StartRow(const Window3x3& w) {
  const bool first_row = w.row == 1;
  if (!first_row) {
    if (w.row != current_row_ + 1) {
      throw std::logic_error("windows must arrive in raster order");
    }
    ns_top_.swap(ns_bottom_);
    ps_row_above_.swap(ps_row_center_);
    ps_row_center_.swap(ps_row_below_);
  } else {
    ns_top_[0] = w.at(0, 0) + w.at(1, 0);
    ns_top_[1] = w.at(0, 1) + w.at(1, 1);
    ns_top_left_pair_ = w.at(0, 0) + w.at(0, 1);
    ns_middle_left_pair_ = w.at(1, 0) + w.at(1, 1);
    add_count_ += 4;
  }
  current_row_ = w.row;

  ns_bottom_[0] = w.at(1, 0) + w.at(2, 0);
  ns_bottom_[1] = w.at(1, 1) + w.at(2, 1);
  ps_cols_[1] = ns_top_[0] + ns_bottom_[0];
  ps_cols_[2] = ns_top_[1] + ns_bottom_[1];
  ns_bottom_left_pair_ = w.at(2, 0) + w.at(2, 1);
  add_count_ += 5;
}

GradientPair StreamingSobel::push(const Window3x3& w) {
  const std::size_t x = w.col;
  if (x == 1) {
    StartRow(w);
  } else if (w.row != current_row_ || x != next_col_) {
    throw std::logic_error("windows must arrive in raster order");
  }
  if (x + 1 >= width_) throw std::out_of_range("window outside the image");
  const bool first_row = w.row == 1;
  const std::size_t right = x + 1;

  // Column partial sum of the incoming right column.
  if (first_row) {
    ns_top_[right] = w.at(0, 2) + w.at(1, 2);
    ++add_count_;
  }
  ns_bottom_[right] = w.at(1, 2) + w.at(2, 2);
  ps_cols_ = {ps_cols_[1], ps_cols_[2], ns_top_[right] + ns_bottom_[right]};
  add_count_ += 2;

  // Row partial sum of the bottom row, centered on x.
  const int bottom_right_pair = w.at(2, 1) + w.at(2, 2);
  ps_row_below_[x] = ns_bottom_left_pair_ + bottom_right_pair;
  ns_bottom_left_pair_ = bottom_right_pair;
  add_count_ += 2;

  if (first_row) {
    // The two upper rows have no earlier window row to inherit from.
    const int top_right_pair = w.at(0, 1) + w.at(0, 2);
    const int middle_right_pair = w.at(1, 1) + w.at(1, 2);
    ps_row_above_[x] = ns_top_left_pair_ + top_right_pair;
    ps_row_center_[x] = ns_middle_left_pair_ + middle_right_pair;
    ns_top_left_pair_ = top_right_pair;
    ns_middle_left_pair_ = middle_right_pair;
    add_count_ += 4;
  }

  const int id_r = ps_cols_[0] - ps_cols_[2];
  const int id_c = ps_row_above_[x] - ps_row_below_[x];
  add_count_ += 2;
  next_col_ = x + 1;
  return {-id_r, -id_c};
}

double StreamingSobel::evaluate(const Window3x3& window, Norm norm) {
  const GradientPair g = push(window);
  ++add_count_;
  return magnitude(g, norm);
}

}  // namespace fuzzyedge
