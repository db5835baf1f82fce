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
#include <optional>
#include <stdexcept>
#include <vector>

#include "fuzzyedge/image.hpp"

namespace fuzzyedge {

// Nine intensities in row-major order (p[0] is top-left) and the position of
// the center pixel in the source image.
struct Window3x3 {
  std::array<Intensity, 9> p{};
  std::size_t row = 0;
  std::size_t col = 0;

  Intensity at(int r, int c) const { return p[r * 3 + c]; }

  bool operator==(const Window3x3&) const = default;
};

// Fixed-depth delay line backed by a ring buffer. shift() pushes one value in
// and returns the value that entered `capacity` shifts earlier; a zero
// capacity passes values straight through.
class LineFifo {
 public:
  explicit LineFifo(std::size_t capacity) : slots_(capacity, 0) {}

  std::size_t capacity() const { return slots_.size(); }
  std::size_t occupancy() const { return occupancy_; }

  Intensity shift(Intensity in) {
    if (slots_.empty()) return in;
    const Intensity out = slots_[head_];
    slots_[head_] = in;
    head_ = head_ + 1 == slots_.size() ? 0 : head_ + 1;
    if (occupancy_ < slots_.size()) ++occupancy_;
    return out;
  }

 private:
  std::vector<Intensity> slots_;
  std::size_t head_ = 0;
  std::size_t occupancy_ = 0;
};

class StreamEndError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Window generator for a raster-order pixel stream. Three 3-slot shift stages
// hold the window rows; two line FIFOs of depth width-3 delay the stream so
// that each stage row sits exactly one image row above the next:
//
//   pixel -> bottom[3] -> fifo_b -> middle[3] -> fifo_a -> top[3]
class LineBufferState {
 public:
  // Throws DimensionError if either dimension is below 3.
  LineBufferState(std::size_t width, std::size_t height);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t pushed() const { return pushed_; }
  std::size_t fifo_capacity() const { return fifo_a_.capacity(); }
  const LineFifo& fifo_a() const { return fifo_a_; }
  const LineFifo& fifo_b() const { return fifo_b_; }
  bool finished() const { return pushed_ == width_ * height_; }

  // Clocks one pixel in. Returns the window whose bottom-right corner is the
  // pixel just pushed, once three full rows and columns are buffered.
  // Throws StreamEndError past width*height pushes.
  std::optional<Window3x3> push_pixel(Intensity pixel);

 private:
  std::size_t width_;
  std::size_t height_;
  std::size_t pushed_ = 0;
  std::array<Intensity, 3> top_{};
  std::array<Intensity, 3> middle_{};
  std::array<Intensity, 3> bottom_{};
  LineFifo fifo_a_;
  LineFifo fifo_b_;
};

inline LineBufferState new_state(std::size_t width, std::size_t height) {
  return LineBufferState(width, height);
}

// Reference: every interior window by direct indexing, centers in row-major
// order.
std::vector<Window3x3> windows_of(const GrayImage& plane);

// Streams the plane through a LineBufferState, calling `sink` for each
// emitted window.
template <class Sink>
void stream_windows(const GrayImage& plane, Sink&& sink) {
  LineBufferState state(plane.width(), plane.height());
  for (Intensity v : plane.pixels()) {
    if (auto w = state.push_pixel(v)) sink(*w);
  }
}

}  // namespace fuzzyedge
