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
#include <variant>

#include "fuzzyedge/image.hpp"
#include "fuzzyedge/otsu.hpp"

namespace fuzzyedge {

// Threshold-independent contrast curve evaluated on raw intensity:
// a4*x^4 + a3*x^3 + a2*x^2 + a1*x. Defaults map [0,255] onto itself.
struct PolynomialQuartic {
  double a4 = -2.0454098505641e-7;
  double a3 = 7.615967514125e-5;
  double a2 = -0.0041249658333;
  double a1 = 0.4911541875107;

  double raw(double x) const { return ((a4 * x + a3) * x + a2) * x * x + a1 * x; }
};

// 1 / (1 + alpha * (x - center)^beta), beta a positive even integer.
struct CauchyEven {
  double alpha = 1.0;
  int beta = 2;
  double center = 128.0;
};

// 1 / (1 + alpha * |x - center|^beta).
struct CauchyAbs {
  double alpha = 1.0;
  double beta = 1.0;
  double center = 128.0;
};

// Piecewise-quadratic S-curve: 0 up to a, rising to 1 at c, with the
// inflection at b. With b at the midpoint of [a, c] this is Zadeh's S-function.
struct SFunction {
  double a = 64.0;
  double b = 128.0;
  double c = 192.0;
};

using MembershipSpec =
    std::variant<PolynomialQuartic, CauchyEven, CauchyAbs, SFunction>;

// Throws std::invalid_argument when the parameters are inadmissible.
void validate(const MembershipSpec& spec);

// Degree of membership in the white set, in [0,1], for a gray level x in
// [0,255].
double membership_value(const MembershipSpec& spec, double x);

// Membership in the black set; the complement of membership_value.
double black_membership(const MembershipSpec& spec, double x);

// round-half-up(255 * membership), clamped to [0,255]. The polynomial is
// evaluated on x directly.
Intensity enhance_pixel(const MembershipSpec& spec, Intensity x);

// 256-entry lookup table of enhance_pixel.
std::array<Intensity, kGrayLevels> enhance_table(const MembershipSpec& spec);

struct EnhanceConfig {
  MembershipSpec membership = PolynomialQuartic{};
  ThresholdSource threshold = OtsuThreshold{};
  // When set, the Cauchy center and the S-function knots are placed at the
  // resolved threshold T. Has no effect on the polynomial.
  bool center_on_threshold = true;
  // S-function knots become [T - half_width, T, T + half_width], clipped.
  double s_half_width = 64.0;
};

// Returns `spec` re-centered on `threshold` per `config`.
MembershipSpec bind_threshold(const EnhanceConfig& config, int threshold);

GrayImage enhance_image(const GrayImage& plane, const EnhanceConfig& config);

// Whether the membership depends on the threshold at all.
bool uses_threshold(const MembershipSpec& spec);

}  // namespace fuzzyedge
