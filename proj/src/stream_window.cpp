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

#include "fuzzyedge/stream_window.hpp"

#include <string>

namespace fuzzyedge {
namespace {

void CheckWindowable(std::size_t width, std::size_t height) {
  if (width < 3 || height < 3) {
    throw DimensionError("3x3 windows need at least a 3x3 image, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
}

// One buffered row is three stage slots plus the FIFO.
std::size_t FifoDepth(std::size_t width, std::size_t height) {
  CheckWindowable(width, height);
  return width - 3;
}

}  // namespace

LineBufferState::LineBufferState(std::size_t width, std::size_t height)
    : width_(width),
      height_(height),
      fifo_a_(FifoDepth(width, height)),
      fifo_b_(FifoDepth(width, height)) {}

std::optional<Window3x3> LineBufferState::push_pixel(Intensity pixel) {
  if (finished()) {
    throw StreamEndError("pixel pushed after the end of a " +
                         std::to_string(width_) + "x" +
                         std::to_string(height_) + " stream");
  }
  // All registers update on the same edge, so read each stage's outgoing
  // slot before it is overwritten.
  const Intensity to_top = fifo_a_.shift(middle_[0]);
  top_ = {top_[1], top_[2], to_top};
  const Intensity to_middle = fifo_b_.shift(bottom_[0]);
  middle_ = {middle_[1], middle_[2], to_middle};
  bottom_ = {bottom_[1], bottom_[2], pixel};

  const std::size_t index = pushed_++;
  const std::size_t row = index / width_;
  const std::size_t col = index % width_;
  if (row < 2 || col < 2) return std::nullopt;

  Window3x3 w;
  w.p = {top_[0],    top_[1],    top_[2],    middle_[0], middle_[1],
         middle_[2], bottom_[0], bottom_[1], bottom_[2]};
  w.row = row - 1;
  w.col = col - 1;
  return w;
}

std::vector<Window3x3> windows_of(const GrayImage& plane) {
  CheckWindowable(plane.width(), plane.height());
  std::vector<Window3x3> out;
  out.reserve((plane.width() - 2) * (plane.height() - 2));
  for (std::size_t y = 1; y + 1 < plane.height(); ++y) {
    for (std::size_t x = 1; x + 1 < plane.width(); ++x) {
      Window3x3 w;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          w.p[r * 3 + c] = plane.at(y + r - 1, x + c - 1);
        }
      }
      w.row = y;
      w.col = x;
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace fuzzyedge
