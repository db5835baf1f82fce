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

#include "fuzzyedge/memristor.hpp"

namespace fuzzyedge::memristor {

MemBit imply(MemBit a, MemBit b) { return to_membit(!to_bool(a) || to_bool(b)); }

ImplyCircuit load_xor_inputs(bool p, bool q) {
  ImplyCircuit c;
  c.p = to_membit(p);
  c.q = to_membit(q);
  c.r = c.p;
  c.s = c.q;
  c.t = MemBit::kHighImpedance;
  return c;
}

XorTrace xor_trace(bool p, bool q) {
  ImplyCircuit c = load_xor_inputs(p, q);
  XorTrace trace;
  c.r = imply(c.q, c.r);
  trace[0] = c;
  c.s = imply(c.p, c.s);
  trace[1] = c;
  c.t = imply(c.r, c.t);
  trace[2] = c;
  c.t = imply(c.s, c.t);
  trace[3] = c;
  return trace;
}

bool xor_sequence(bool p, bool q) { return to_bool(xor_trace(p, q).back().t); }

EdgeMap binarize(const GrayImage& plane, int threshold) {
  EdgeMap bits(plane.width(), plane.height());
  for (std::size_t y = 0; y < plane.height(); ++y) {
    for (std::size_t x = 0; x < plane.width(); ++x) {
      bits.set(y, x, plane.at(y, x) >= threshold);
    }
  }
  return bits;
}

EdgeMap scan_edges(const EdgeMap& bits) {
  const std::size_t w = bits.width();
  const std::size_t h = bits.height();
  if (w * h < 2) throw DimensionError("memristive scan needs at least 2 pixels");
  EdgeMap edges(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const bool here = bits.at(y, x);
      const bool horizontal = x + 1 < w && xor_sequence(here, bits.at(y, x + 1));
      const bool vertical = y + 1 < h && xor_sequence(here, bits.at(y + 1, x));
      edges.set(y, x, horizontal || vertical);
    }
  }
  return edges;
}

EdgeMap memristive_edge_map(const GrayImage& plane,
                            const ThresholdSource& binarize_threshold) {
  return scan_edges(binarize(plane, resolve_threshold(binarize_threshold, plane)));
}

}  // namespace fuzzyedge::memristor
