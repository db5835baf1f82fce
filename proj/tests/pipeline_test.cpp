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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace fuzzyedge {
namespace {

DetectConfig Config(bool fuzzy, double threshold) {
  DetectConfig c;
  c.fuzzy_enabled = fuzzy;
  c.threshold = threshold;
  return c;
}

TEST(DetectChannelTest, FuzzyWidensLowContrastStep) {
  const GrayImage plane = oracle::TwoLevelPlane(32, 32, 100, 140);
  ChannelStats plain, fuzzy;
  EXPECT_EQ(detect_channel(plane, Config(false, 200), &plain).count(), 0u);
  const EdgeMap edges = detect_channel(plane, Config(true, 200), &fuzzy);
  EXPECT_EQ(edges.count(), 60u);
  EXPECT_EQ(fuzzy.edge_pixels, 60u);
  for (std::size_t y = 1; y < 31; ++y) {
    EXPECT_TRUE(edges.at(y, 15));
    EXPECT_TRUE(edges.at(y, 16));
  }
  EXPECT_EQ(plain.add_count, fuzzy.add_count);
}

TEST(DetectChannelTest, EnginesAgree) {
  std::mt19937 rng(41);
  for (int i = 0; i < 30; ++i) {
    const GrayImage plane = oracle::RandomBlockyPlane(rng, 20 + i, 17, 4);
    for (bool fuzzy : {false, true}) {
      DetectConfig direct = Config(fuzzy, 300);
      direct.engine = Engine::kDirect;
      DetectConfig incremental = Config(fuzzy, 300);
      for (Norm norm : {Norm::kL1, Norm::kL2}) {
        direct.norm = incremental.norm = norm;
        EXPECT_EQ(detect_channel(plane, direct), detect_channel(plane, incremental));
      }
    }
  }
}

TEST(DetectChannelTest, DirectAddCount) {
  ChannelStats s;
  DetectConfig c = Config(false, 400);
  c.engine = Engine::kDirect;
  detect_channel(GrayImage(10, 8), c, &s);
  EXPECT_EQ(s.add_count, 15u * 8 * 6);
}

TEST(DetectChannelTest, RejectsNegativeThreshold) {
  EXPECT_THROW(detect_channel(GrayImage(4, 4), Config(true, -1)), std::invalid_argument);
}

TEST(DetectChannelTest, DiagonalMatchesPlaneReference) {
  std::mt19937 rng(42);
  const GrayImage plane = oracle::RandomPlane(rng, 25, 19);
  DetectConfig c = Config(false, 900);
  c.diagonal = true;
  for (Engine e : {Engine::kDirect, Engine::kIncremental}) {
    c.engine = e;
    EXPECT_EQ(detect_channel(plane, c),
              sobel_plane_direct(plane, SobelOptions{900, Norm::kL1, true}));
  }
}

TEST(CombineEdgesTest, OrIsUnionAndMajorityIsSubset) {
  std::mt19937 rng(43);
  const EdgeMap r = oracle::RandomBits(rng, 8, 8);
  const EdgeMap g = oracle::RandomBits(rng, 8, 8);
  const EdgeMap b = oracle::RandomBits(rng, 8, 8);
  const EdgeMap any = combine_edges(r, g, b, Combine::kOr);
  const EdgeMap most = combine_edges(r, g, b, Combine::kMajority);
  for (std::size_t i = 0; i < any.size(); ++i) {
    const int votes = r.bits()[i] + g.bits()[i] + b.bits()[i];
    EXPECT_EQ(any.bits()[i], votes >= 1);
    EXPECT_EQ(most.bits()[i], votes >= 2);
  }
  EXPECT_THROW(combine_edges(r, g, EdgeMap(8, 9), Combine::kOr), DimensionError);
}

TEST(CombineEdgesTest, MajorityMonotoneInInputs) {
  std::mt19937 rng(44);
  const EdgeMap r = oracle::RandomBits(rng, 8, 8);
  const EdgeMap g = oracle::RandomBits(rng, 8, 8);
  const EdgeMap b = oracle::RandomBits(rng, 8, 8);
  EdgeMap more = b;
  for (std::size_t y = 0; y < 8; ++y) more.set(y, y, true);
  const EdgeMap before = combine_edges(r, g, b, Combine::kMajority);
  const EdgeMap after = combine_edges(r, g, more, Combine::kMajority);
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before.bits()[i]) EXPECT_TRUE(after.bits()[i]);
  }
}

TEST(DetectColorTest, EqualChannelsGiveEqualMaps) {
  std::mt19937 rng(45);
  const GrayImage plane = oracle::RandomBlockyPlane(rng, 30, 30, 5);
  const ColorEdges e = detect_color(RgbImage(plane, plane, plane), DetectConfig{});
  EXPECT_EQ(e.r, e.g);
  EXPECT_EQ(e.g, e.b);
  EXPECT_EQ(e.combined, e.r);
  EXPECT_EQ(combine_edges(e.r, e.g, e.b, Combine::kMajority), e.r);
  EXPECT_EQ(e.r, detect_channel(plane, DetectConfig{}));
}

TEST(DetectColorTest, DeterministicAndPerChannel) {
  std::mt19937 rng(46);
  const RgbImage rgb = oracle::RandomRgb(rng, 40, 33);
  const DetectConfig config;
  const ColorEdges a = detect_color(rgb, config);
  const ColorEdges b = detect_color(rgb, config);
  EXPECT_EQ(a.combined, b.combined);
  EXPECT_EQ(a.r, detect_channel(rgb.r(), config));
  EXPECT_EQ(a.g, detect_channel(rgb.g(), config));
  EXPECT_EQ(a.b, detect_channel(rgb.b(), config));
  EXPECT_EQ(a.combined, combine_edges(a.r, a.g, a.b, Combine::kOr));
  EXPECT_EQ(a.r_stats.edge_pixels, a.r.count());
}

}  // namespace
}  // namespace fuzzyedge
