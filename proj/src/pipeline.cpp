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

#include "fuzzyedge/pipeline.hpp"

#include <cstdlib>
#include <future>
#include <stdexcept>

namespace fuzzyedge {

EdgeMap detect_channel(const GrayImage& plane, const DetectConfig& config,
                       ChannelStats* stats) {
  if (!(config.threshold >= 0.0)) {
    throw std::invalid_argument("Sobel threshold must be nonnegative");
  }
  const GrayImage source =
      config.fuzzy_enabled ? enhance_image(plane, config.enhance) : plane;

  EdgeMap edges(source.width(), source.height());
  std::uint64_t adds = 0;
  auto decide = [&](const Window3x3& w, double mag) {
    if (config.diagonal) {
      const GradientPair d = gradient_diagonal(w);
      mag += std::abs(d.gx) + std::abs(d.gy);
    }
    edges.set(w.row, w.col, edge_decide(mag, config.threshold));
  };

  if (config.engine == Engine::kIncremental) {
    StreamingSobel engine(source.width(), source.height());
    stream_windows(source, [&](const Window3x3& w) {
      decide(w, engine.evaluate(w, config.norm));
    });
    adds = engine.add_count();
  } else {
    stream_windows(source, [&](const Window3x3& w) {
      decide(w, magnitude(gradient_direct(w), config.norm));
      adds += kDirectAddsPerWindow;
    });
  }

  if (stats) {
    stats->add_count = adds;
    stats->edge_pixels = edges.count();
  }
  return edges;
}

EdgeMap combine_edges(const EdgeMap& r, const EdgeMap& g, const EdgeMap& b,
                      Combine rule) {
  if (r.width() != g.width() || r.width() != b.width() ||
      r.height() != g.height() || r.height() != b.height()) {
    throw DimensionError("channel edge maps differ in dimensions");
  }
  EdgeMap out(r.width(), r.height());
  for (std::size_t y = 0; y < r.height(); ++y) {
    for (std::size_t x = 0; x < r.width(); ++x) {
      const int votes = r.at(y, x) + g.at(y, x) + b.at(y, x);
      out.set(y, x, rule == Combine::kOr ? votes >= 1 : votes >= 2);
    }
  }
  return out;
}

ColorEdges detect_color(const RgbImage& image, const DetectConfig& config) {
  ColorEdges out;
  auto run = [&config](const GrayImage& plane, ChannelStats* stats) {
    return detect_channel(plane, config, stats);
  };
  auto r = std::async(std::launch::async, run, std::cref(image.r()), &out.r_stats);
  auto g = std::async(std::launch::async, run, std::cref(image.g()), &out.g_stats);
  out.b = run(image.b(), &out.b_stats);
  out.r = r.get();
  out.g = g.get();
  out.combined = combine_edges(out.r, out.g, out.b, config.combine);
  return out;
}

}  // namespace fuzzyedge
