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
#include <cstdint>

#include "fuzzyedge/image.hpp"
#include "fuzzyedge/otsu.hpp"

namespace fuzzyedge::memristor {

// Binary device state: high impedance reads 0, low impedance reads 1.
enum class MemBit : std::uint8_t { kHighImpedance = 0, kLowImpedance = 1 };

inline MemBit to_membit(bool v) {
  return v ? MemBit::kLowImpedance : MemBit::kHighImpedance;
}
inline bool to_bool(MemBit b) { return b == MemBit::kLowImpedance; }

// Stateful material implication: the target device becomes (not a) or b.
MemBit imply(MemBit a, MemBit b);

struct ImplyCircuit {
  MemBit p = MemBit::kHighImpedance;
  MemBit q = MemBit::kHighImpedance;
  MemBit r = MemBit::kHighImpedance;
  MemBit s = MemBit::kHighImpedance;
  MemBit t = MemBit::kHighImpedance;

  bool operator==(const ImplyCircuit&) const = default;
};

// Device states after each of the four stimulation steps:
//   1: r = q -> r   2: s = p -> s   3: t = r -> t   4: t = s -> t
using XorTrace = std::array<ImplyCircuit, 4>;

// Loads p and q, copies them into the work devices r and s, clears t.
ImplyCircuit load_xor_inputs(bool p, bool q);

XorTrace xor_trace(bool p, bool q);

// p XOR q, computed only through the four IMPLY steps.
bool xor_sequence(bool p, bool q);

// 1 where pixel >= threshold.
EdgeMap binarize(const GrayImage& plane, int threshold);

// Marks (i,j) when it differs from its right or bottom neighbour, each
// comparison run through xor_sequence. Throws DimensionError on a 1x1 map.
EdgeMap scan_edges(const EdgeMap& bits);

EdgeMap memristive_edge_map(const GrayImage& plane,
                            const ThresholdSource& binarize_threshold);

}  // namespace fuzzyedge::memristor
