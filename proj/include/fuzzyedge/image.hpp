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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fuzzyedge {

using Intensity = std::uint8_t;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Row-major plane of 8-bit intensities.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::size_t width, std::size_t height, Intensity fill = 0);
  GrayImage(std::size_t width, std::size_t height, std::vector<Intensity> data);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Intensity at(std::size_t row, std::size_t col) const {
    return data_[row * width_ + col];
  }
  Intensity& at(std::size_t row, std::size_t col) {
    return data_[row * width_ + col];
  }

  std::span<const Intensity> pixels() const { return data_; }
  std::span<Intensity> pixels() { return data_; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<Intensity> data_;
};

// Three planes of identical dimensions.
class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(GrayImage r, GrayImage g, GrayImage b);

  std::size_t width() const { return r_.width(); }
  std::size_t height() const { return r_.height(); }

  const GrayImage& r() const { return r_; }
  const GrayImage& g() const { return g_; }
  const GrayImage& b() const { return b_; }

  bool operator==(const RgbImage&) const = default;

 private:
  GrayImage r_;
  GrayImage g_;
  GrayImage b_;
};

// Binary edge decisions, 1 = edge.
class EdgeMap {
 public:
  EdgeMap() = default;
  EdgeMap(std::size_t width, std::size_t height);
  EdgeMap(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return bits_.size(); }

  bool at(std::size_t row, std::size_t col) const {
    return bits_[row * width_ + col] != 0;
  }
  void set(std::size_t row, std::size_t col, bool edge) {
    bits_[row * width_ + col] = edge ? 1 : 0;
  }

  std::span<const std::uint8_t> bits() const { return bits_; }

  // Number of pixels marked as edges.
  std::size_t count() const;

  bool operator==(const EdgeMap&) const = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace fuzzyedge
