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

#include <cstdint>
#include <functional>

#include "fuzzyedge/fuzzy.hpp"
#include "fuzzyedge/image.hpp"
#include "fuzzyedge/sobel.hpp"
#include "fuzzyedge/stream_window.hpp"

namespace fuzzyedge {

enum class Engine { kDirect, kIncremental };
enum class Combine { kOr, kMajority };

struct DetectConfig {
  bool fuzzy_enabled = true;
  EnhanceConfig enhance;
  double threshold = kDefaultEdgeThreshold;
  Norm norm = Norm::kL1;
  Engine engine = Engine::kIncremental;
  Combine combine = Combine::kOr;
  bool diagonal = false;
};

struct ChannelStats {
  std::uint64_t add_count = 0;
  std::size_t edge_pixels = 0;
};

// Fuzzy preprocessing (when enabled), then the Sobel engine fed window by
// window from a LineBufferState. Border pixels are 0. Throws
// std::invalid_argument on a negative threshold.
EdgeMap detect_channel(const GrayImage& plane, const DetectConfig& config,
                       ChannelStats* stats = nullptr);

struct ColorEdges {
  EdgeMap r, g, b;
  EdgeMap combined;
  ChannelStats r_stats, g_stats, b_stats;
};

// Runs the three channels concurrently and combines their maps.
ColorEdges detect_color(const RgbImage& image, const DetectConfig& config);

EdgeMap combine_edges(const EdgeMap& r, const EdgeMap& g, const EdgeMap& b,
                      Combine rule);

}  // namespace fuzzyedge
