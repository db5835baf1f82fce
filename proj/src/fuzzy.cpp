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

#include "fuzzyedge/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzzyedge {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double Clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

Intensity RoundToIntensity(double v) {
  const double rounded = std::floor(v + 0.5);
  return static_cast<Intensity>(std::clamp(rounded, 0.0, 255.0));
}

double SCurve(const SFunction& s, double x) {
  if (x <= s.a) return 0.0;
  if (x > s.c) return 1.0;
  const double span = s.c - s.a;
  if (x <= s.b) {
    const double d = x - s.a;
    return d * d / ((s.b - s.a) * span);
  }
  const double d = x - s.c;
  return 1.0 - d * d / ((s.c - s.b) * span);
}

}  // namespace

void validate(const MembershipSpec& spec) {
  std::visit(
      Overloaded{
          [](const PolynomialQuartic& p) {
            if (!std::isfinite(p.a4) || !std::isfinite(p.a3) ||
                !std::isfinite(p.a2) || !std::isfinite(p.a1)) {
              throw std::invalid_argument("polynomial coefficients must be finite");
            }
          },
          [](const CauchyEven& m) {
            if (!(m.alpha > 0.0)) {
              throw std::invalid_argument("Cauchy alpha must be positive");
            }
            if (m.beta <= 0 || m.beta % 2 != 0) {
              throw std::invalid_argument(
                  "Cauchy beta must be a positive even integer");
            }
            if (!(m.center >= 0.0 && m.center <= 255.0)) {
              throw std::invalid_argument("Cauchy center must lie in [0,255]");
            }
          },
          [](const CauchyAbs& m) {
            if (!(m.alpha > 0.0) || !(m.beta > 0.0)) {
              throw std::invalid_argument(
                  "Cauchy alpha and beta must be positive");
            }
            if (!(m.center >= 0.0 && m.center <= 255.0)) {
              throw std::invalid_argument("Cauchy center must lie in [0,255]");
            }
          },
          [](const SFunction& s) {
            if (!(s.a >= 0.0 && s.a <= s.b && s.b <= s.c && s.c <= 255.0)) {
              throw std::invalid_argument(
                  "S-function knots must satisfy 0 <= a <= b <= c <= 255");
            }
          },
      },
      spec);
}

double membership_value(const MembershipSpec& spec, double x) {
  return std::visit(
      Overloaded{
          [x](const PolynomialQuartic& p) { return Clamp01(p.raw(x) / 255.0); },
          [x](const CauchyEven& m) {
            return 1.0 / (1.0 + m.alpha * std::pow(x - m.center, m.beta));
          },
          [x](const CauchyAbs& m) {
            return 1.0 / (1.0 + m.alpha * std::pow(std::abs(x - m.center), m.beta));
          },
          [x](const SFunction& s) { return SCurve(s, x); },
      },
      spec);
}

double black_membership(const MembershipSpec& spec, double x) {
  return 1.0 - membership_value(spec, x);
}

Intensity enhance_pixel(const MembershipSpec& spec, Intensity x) {
  if (const auto* poly = std::get_if<PolynomialQuartic>(&spec)) {
    return RoundToIntensity(poly->raw(x));
  }
  return RoundToIntensity(255.0 * membership_value(spec, x));
}

std::array<Intensity, kGrayLevels> enhance_table(const MembershipSpec& spec) {
  validate(spec);
  std::array<Intensity, kGrayLevels> lut{};
  for (int v = 0; v < kGrayLevels; ++v) {
    lut[v] = enhance_pixel(spec, static_cast<Intensity>(v));
  }
  return lut;
}

bool uses_threshold(const MembershipSpec& spec) {
  return !std::holds_alternative<PolynomialQuartic>(spec);
}

MembershipSpec bind_threshold(const EnhanceConfig& config, int threshold) {
  if (!config.center_on_threshold) return config.membership;
  const double t = threshold;
  return std::visit(
      Overloaded{
          [](const PolynomialQuartic& p) -> MembershipSpec { return p; },
          [t](CauchyEven m) -> MembershipSpec {
            m.center = t;
            return m;
          },
          [t](CauchyAbs m) -> MembershipSpec {
            m.center = t;
            return m;
          },
          [t, &config](SFunction s) -> MembershipSpec {
            s.a = std::max(0.0, t - config.s_half_width);
            s.b = t;
            s.c = std::min(255.0, t + config.s_half_width);
            return s;
          },
      },
      config.membership);
}

GrayImage enhance_image(const GrayImage& plane, const EnhanceConfig& config) {
  MembershipSpec spec = config.membership;
  if (uses_threshold(spec)) {
    spec = bind_threshold(config, resolve_threshold(config.threshold, plane));
  }
  const auto lut = enhance_table(spec);
  GrayImage out = plane;
  for (Intensity& v : out.pixels()) v = lut[v];
  return out;
}

}  // namespace fuzzyedge
