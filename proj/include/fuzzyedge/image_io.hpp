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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "fuzzyedge/image.hpp"

namespace fuzzyedge {

enum class PnmFormat { kP1, kP2, kP3, kP4, kP5, kP6 };

// Raised on any malformed PNM input. offset() is the byte position at which
// parsing stopped.
class PnmParseError : public std::runtime_error {
 public:
  enum class Kind {
    kBadMagic,
    kMalformedHeader,
    kUnsupportedMaxval,
    kTruncated,
    kBadValue,
  };

  PnmParseError(Kind kind, std::size_t offset, const std::string& what);

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

class TextChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PnmImage = std::variant<GrayImage, RgbImage>;
using Bytes = std::vector<unsigned char>;

// Accepts P2/P5 (gray) and P3/P6 (RGB) with maxval 255; '#' comments are
// allowed between header tokens.
PnmImage read_pnm(std::span<const unsigned char> bytes);

// Accepts P1/P4; 1 (black) is an edge.
EdgeMap read_pbm(std::span<const unsigned char> bytes);

// Throws std::invalid_argument if the format does not fit the image kind.
Bytes write_pnm(const GrayImage& image, PnmFormat format);
Bytes write_pnm(const RgbImage& image, PnmFormat format);
Bytes write_pnm(const EdgeMap& map, PnmFormat format);

// Headerless decimal channel: whitespace-separated values in [0,255],
// assigned row-major. Tokens beyond width*height are ignored.
GrayImage read_text_channel(std::string_view text, std::size_t width,
                            std::size_t height);
// One value per line.
std::string write_text_channel(const GrayImage& plane);

std::tuple<GrayImage, GrayImage, GrayImage> split_channels(
    const RgbImage& image);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, std::span<const unsigned char> bytes);
void write_file(const std::string& path, std::string_view text);

}  // namespace fuzzyedge
