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

#include "fuzzyedge/image.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace fuzzyedge {
namespace {

void CheckDimensions(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) {
    throw DimensionError("image dimensions must be positive, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

GrayImage::GrayImage(std::size_t width, std::size_t height, Intensity fill)
    : width_(width), height_(height) {
  CheckDimensions(width, height);
  data_.assign(width * height, fill);
}

GrayImage::GrayImage(std::size_t width, std::size_t height,
                     std::vector<Intensity> data)
    : width_(width), height_(height), data_(std::move(data)) {
  CheckDimensions(width, height);
  if (data_.size() != width * height) {
    throw DimensionError("pixel count " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
}

RgbImage::RgbImage(GrayImage r, GrayImage g, GrayImage b)
    : r_(std::move(r)), g_(std::move(g)), b_(std::move(b)) {
  if (r_.width() != g_.width() || r_.width() != b_.width() ||
      r_.height() != g_.height() || r_.height() != b_.height()) {
    throw DimensionError("RGB planes differ in dimensions");
  }
}

EdgeMap::EdgeMap(std::size_t width, std::size_t height)
    : width_(width), height_(height), bits_(width * height, 0) {
  CheckDimensions(width, height);
}

EdgeMap::EdgeMap(std::size_t width, std::size_t height,
                 std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  CheckDimensions(width, height);
  if (bits_.size() != width * height) {
    throw DimensionError("edge map size does not match dimensions");
  }
  if (std::any_of(bits_.begin(), bits_.end(),
                  [](std::uint8_t v) { return v > 1; })) {
    throw std::invalid_argument("edge map values must be 0 or 1");
  }
}

std::size_t EdgeMap::count() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

}  // namespace fuzzyedge
