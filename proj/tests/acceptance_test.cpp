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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fuzzyedge/fuzzy.hpp"
#include "fuzzyedge/image_io.hpp"
#include "fuzzyedge/memristor.hpp"
#include "fuzzyedge/otsu.hpp"
#include "fuzzyedge/pipeline.hpp"
#include "fuzzyedge/sobel.hpp"
#include "fuzzyedge/stream_window.hpp"
#include "oracles.hpp"

namespace fe = fuzzyedge;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void Report(const char* id, bool pass, const std::string& detail) {
  std::cout << '[' << (pass ? "PASS" : "FAIL") << "] " << id << ' ' << detail << '\n';
  if (!pass) ++failures;
}

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void SobelEquivalence() {
  std::mt19937 rng(1001);
  std::uniform_int_distribution<int> dim(3, 64);
  std::uniform_int_distribution<int> thr(0, 1100);
  const auto start = Clock::now();
  int mismatches = 0;
  const int trials = 250;
  for (int i = 0; i < trials; ++i) {
    const fe::GrayImage p = i % 3 == 0 ? fe::oracle::RandomBlockyPlane(rng, dim(rng), dim(rng), 4)
                                       : fe::oracle::RandomPlane(rng, dim(rng), dim(rng));
    const double t = thr(rng);
    if (!(fe::sobel_plane_incremental(p, t).edges ==
          fe::sobel_plane_direct(p, t, fe::Norm::kL1))) {
      ++mismatches;
    }
  }
  const double secs = SecondsSince(start);
  std::ostringstream d;
  d << "incremental == direct(L1) on " << trials << " planes, mismatches=" << mismatches
    << ", " << secs << " s";
  Report("AC1", mismatches == 0 && secs < 10.0, d.str());
}

void SevenSums() {
  std::mt19937 rng(1002);
  const fe::GrayImage p = fe::oracle::RandomPlane(rng, 64, 64);
  const std::uint64_t plane_adds = fe::sobel_plane_incremental(p, 400).add_count;
  fe::StreamingSobel engine(64, 64);
  fe::stream_windows(p, [&](const fe::Window3x3& w) { engine.evaluate(w, fe::Norm::kL1); });
  const std::uint64_t bound = 7 * 62 * 62 + 6 * (64 + 64);
  const double ratio = static_cast<double>(plane_adds) / (62.0 * 62.0);
  const double stream_ratio = static_cast<double>(engine.add_count()) / (62.0 * 62.0);
  std::ostringstream d;
  d << "64x64 add_count=" << plane_adds << " (streaming " << engine.add_count()
    << ") bound=" << bound << " ratio=" << ratio << " (streaming " << stream_ratio
    << ") direct=" << fe::kDirectAddsPerWindow << "/window";
  Report("AC2",
         plane_adds <= bound && ratio <= 7.5 && engine.add_count() <= bound &&
             stream_ratio <= 7.5,
         d.str());
}

void OtsuOracle() {
  std::mt19937 rng(1003);
  int mismatches = 0;
  const int trials = 250;
  for (int i = 0; i < trials; ++i) {
    const fe::Histogram256 h = fe::oracle::RandomHistogram(rng);
    if (fe::otsu_threshold(h) != fe::oracle::BruteForceOtsu(h)) ++mismatches;
  }
  std::vector<fe::Intensity> px(16, 50);
  std::fill(px.begin() + 8, px.end(), 200);
  const fe::Histogram256 bimodal = fe::histogram(fe::GrayImage(4, 4, px));
  const int t = fe::otsu_threshold(bimodal);
  const double plateau = fe::otsu_stats(bimodal, t).sigma_b2;
  std::ostringstream d;
  d << trials << " histograms vs brute force, mismatches=" << mismatches
    << "; bimodal t=" << t << " sigma_b2=" << plateau;
  Report("AC3", mismatches == 0 && t == 50 && std::abs(plateau - 5625.0) <= 1e-6, d.str());
}

void WindowGenerator() {
  std::mt19937 rng(1004);
  std::uniform_int_distribution<int> dim(3, 64);
  int mismatches = 0;
  const int trials = 120;
  for (int i = 0; i < trials; ++i) {
    const std::size_t w = dim(rng), h = dim(rng);
    const fe::GrayImage p = fe::oracle::RandomPlane(rng, w, h);
    std::vector<fe::Window3x3> streamed;
    fe::stream_windows(p, [&](const fe::Window3x3& win) { streamed.push_back(win); });
    if (streamed != fe::windows_of(p) || streamed.size() != (w - 2) * (h - 2)) ++mismatches;
  }
  const std::size_t capacity = fe::new_state(256, 256).fifo_capacity();
  std::ostringstream d;
  d << trials << " planes stream == slicing, mismatches=" << mismatches
    << "; FIFO capacity at width 256 = " << capacity;
  Report("AC4", mismatches == 0 && capacity == 253, d.str());
}

void PolynomialEndpoints() {
  const fe::PolynomialQuartic q;
  const fe::MembershipSpec spec = q;
  const double at0 = q.raw(0);
  const double at255 = q.raw(255);
  int descents = 0;
  int first_descent = -1;
  for (int x = 1; x < 256; ++x) {
    if (q.raw(x) < q.raw(x - 1)) {
      ++descents;
      if (first_descent < 0) first_descent = x;
    }
  }
  bool output_monotone = true;
  for (int x = 1; x < 256; ++x) {
    if (fe::enhance_pixel(spec, static_cast<fe::Intensity>(x)) <
        fe::enhance_pixel(spec, static_cast<fe::Intensity>(x - 1))) {
      output_monotone = false;
    }
  }
  std::ostringstream d;
  d.precision(10);
  d << "f(0)=" << at0 << " f(255)=" << at255 << "; raw quartic descents over 0..255: "
    << descents;
  if (first_descent >= 0) {
    d << " (from x=" << first_descent << ", peak f(" << first_descent - 1
      << ")=" << q.raw(first_descent - 1) << ")";
  }
  Report("AC5", at0 == 0.0 && std::abs(at255 - 255.0) <= 0.2 && descents == 0, d.str());
  std::cout << "       note: rounded and clamped 8-bit output monotone over 0..255: "
            << (output_monotone ? "yes" : "no") << '\n';
}

void FuzzyBenefit() {
  const fe::GrayImage plane = fe::oracle::TwoLevelPlane(32, 32, 100, 140);
  fe::DetectConfig plain;
  plain.fuzzy_enabled = false;
  plain.threshold = 200;
  fe::DetectConfig fuzzy = plain;
  fuzzy.fuzzy_enabled = true;
  const std::size_t off = fe::detect_channel(plane, plain).count();
  const std::size_t on = fe::detect_channel(plane, fuzzy).count();
  const fe::MembershipSpec q = fe::PolynomialQuartic{};
  const int lo = fe::enhance_pixel(q, 100);
  const int hi = fe::enhance_pixel(q, 140);
  std::ostringstream d;
  d << "32x32 100|140 at threshold 200: fuzzy off=" << off << " edges, fuzzy on=" << on
    << " edges; f(100)=" << lo << " f(140)=" << hi << " step gradient " << 4 * (hi - lo);
  Report("AC6", off == 0 && on >= 30 && lo == 64 && hi == 118, d.str());
}

void OperatingPoint() {
  fe::Window3x3 step;
  step.p = {0, 0, 255, 0, 0, 255, 0, 0, 255};
  const double mag = fe::magnitude(fe::gradient_direct(step), fe::Norm::kL1);
  const bool edge = fe::edge_decide(mag, 400);
  bool constant_clean = true;
  for (double t : {1.0, 0.5, 1e-9, 400.0, 1020.0}) {
    for (fe::Intensity level : {0, 128, 255}) {
      const fe::GrayImage flat(16, 16, level);
      if (fe::sobel_plane_direct(flat, t, fe::Norm::kL1).count() != 0 ||
          fe::sobel_plane_incremental(flat, t).edges.count() != 0) {
        constant_clean = false;
      }
    }
  }
  std::ostringstream d;
  d << "step magnitude " << mag << " edge at 400: " << (edge ? "yes" : "no")
    << "; constant regions edge-free: " << (constant_clean ? "yes" : "no");
  Report("AC7", mag == 1020.0 && edge && constant_clean, d.str());
}

void Memristor() {
  using fe::memristor::MemBit;
  bool imply_ok = true;
  bool xor_ok = true;
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      const MemBit r = fe::memristor::imply(fe::memristor::to_membit(a), fe::memristor::to_membit(b));
      if (fe::memristor::to_bool(r) != (!a || b)) imply_ok = false;
      if (fe::memristor::xor_sequence(a, b) != (a != b)) xor_ok = false;
    }
  }
  std::mt19937 rng(1008);
  int mismatches = 0;
  const int trials = 120;
  for (int i = 0; i < trials; ++i) {
    const fe::EdgeMap bits = fe::oracle::RandomBits(rng, 16, 16);
    fe::GrayImage plane(16, 16);
    for (std::size_t y = 0; y < 16; ++y) {
      for (std::size_t x = 0; x < 16; ++x) plane.at(y, x) = bits.at(y, x) ? 255 : 0;
    }
    if (!(fe::memristor::memristive_edge_map(plane, fe::FixedThreshold{128}) ==
          fe::oracle::NeighborDifference(bits))) {
      ++mismatches;
    }
  }
  std::ostringstream d;
  d << "imply table " << (imply_ok ? "ok" : "wrong") << ", xor table "
    << (xor_ok ? "ok" : "wrong") << "; " << trials
    << " binary 16x16 planes vs neighbour difference, mismatches=" << mismatches;
  Report("AC8", imply_ok && xor_ok && mismatches == 0, d.str());
}

fe::RgbImage TestScene() {
  fe::GrayImage r(256, 256), g(256, 256), b(256, 256);
  std::mt19937 rng(1009);
  std::normal_distribution<double> noise(0.0, 6.0);
  auto clamp = [](double v) {
    return static_cast<fe::Intensity>(std::clamp(std::lround(v), 0L, 255L));
  };
  for (std::size_t y = 0; y < 256; ++y) {
    for (std::size_t x = 0; x < 256; ++x) {
      const double dx = x - 96.0, dy = y - 112.0;
      const bool disc = dx * dx + dy * dy < 60.0 * 60.0;
      const bool box = x > 150 && x < 230 && y > 140 && y < 220;
      const double shade = 40.0 + 0.5 * x;
      r.at(y, x) = clamp((disc ? 200.0 : shade) + noise(rng));
      g.at(y, x) = clamp((box ? 170.0 : 0.3 * y + 60.0) + noise(rng));
      b.at(y, x) = clamp((disc && !box ? 90.0 : 140.0 - 0.2 * x) + noise(rng));
    }
  }
  return fe::RgbImage(r, g, b);
}

int RunTool(const std::string& args) {
  const std::string cmd = std::string("\"") + FUZZYEDGE_TOOL + "\" " + args;
  return std::system(cmd.c_str());
}

void EndToEnd() {
  const fs::path dir = fs::temp_directory_path() / "fuzzyedge_acceptance";
  fs::create_directories(dir);
  const fe::RgbImage scene = TestScene();
  const auto path = [&](const char* name) { return (dir / name).string(); };
  fe::write_file(path("scene.ppm"), fe::write_pnm(scene, fe::PnmFormat::kP6));
  const auto [r, g, b] = fe::split_channels(scene);
  fe::write_file(path("r.txt"), fe::write_text_channel(r));
  fe::write_file(path("g.txt"), fe::write_text_channel(g));
  fe::write_file(path("b.txt"), fe::write_text_channel(b));

  const auto start = Clock::now();
  const int rc1 = RunTool("detect \"" + path("scene.ppm") + "\" -o \"" + path("run1.pbm") + "\"");
  const double secs = SecondsSince(start);
  const int rc2 = RunTool("detect \"" + path("scene.ppm") + "\" -o \"" + path("run2.pbm") + "\"");
  const int rc3 = RunTool("detect --r \"" + path("r.txt") + "\" --g \"" + path("g.txt") +
                          "\" --b \"" + path("b.txt") + "\" --width 256 --height 256 -o \"" +
                          path("text.pbm") + "\"");
  bool identical = false;
  bool text_same = false;
  std::size_t edges = 0;
  if (rc1 == 0 && rc2 == 0 && rc3 == 0) {
    const fe::Bytes run1 = fe::read_file(path("run1.pbm"));
    identical = run1 == fe::read_file(path("run2.pbm"));
    text_same = run1 == fe::read_file(path("text.pbm"));
    edges = fe::read_pbm(run1).count();
  }
  fs::remove_all(dir);
  std::ostringstream d;
  d << "256x256 RGB detect " << secs << " s, " << edges << " edge pixels; repeat identical: "
    << (identical ? "yes" : "no") << "; text channels == PPM: " << (text_same ? "yes" : "no");
  Report("AC9", rc1 == 0 && secs < 1.0 && identical && text_same, d.str());
}

}  // namespace

int main() {
  SobelEquivalence();
  SevenSums();
  OtsuOracle();
  WindowGenerator();
  PolynomialEndpoints();
  FuzzyBenefit();
  OperatingPoint();
  Memristor();
  EndToEnd();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
