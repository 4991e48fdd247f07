/* Copyright 2026 The hitkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "patterns.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace hitkit {

std::string_view PatternKindName(PatternKind kind) noexcept {
  switch (kind) {
    case PatternKind::kCircle:
      return "circle";
    case PatternKind::kSquare:
      return "square";
    case PatternKind::kRhombus:
      return "rhombus";
  }
  return "unknown";
}

std::optional<PatternKind> ParsePatternKind(std::string_view name) noexcept {
  if (name == "circle") return PatternKind::kCircle;
  if (name == "square") return PatternKind::kSquare;
  if (name == "rhombus") return PatternKind::kRhombus;
  return std::nullopt;
}

std::vector<Rgb> DefaultPalette() {
  return {Rgb{255, 0, 0},   Rgb{0, 255, 0},   Rgb{0, 0, 255},
          Rgb{255, 255, 0}, Rgb{255, 0, 255}, Rgb{0, 255, 255}};
}

void ProtoPatternSpec::Validate() const {
  if (density < 1 || density > kMaxDensity) {
    ThrowInvalid("pattern density must be in [1, 12], got " +
                 std::to_string(density));
  }
  if (stroke_width < 1) {
    ThrowInvalid("stroke width must be positive, got " +
                 std::to_string(stroke_width));
  }
  if (canvas < 2 * stroke_width * density) {
    ThrowInvalid("canvas of " + std::to_string(canvas) +
                 " px cannot hold " + std::to_string(density) +
                 " shapes of stroke " + std::to_string(stroke_width));
  }
  if (palette.empty()) ThrowInvalid("pattern palette is empty");
}

double ShapeRadius(const ProtoPatternSpec& spec, int m) noexcept {
  return m * (spec.canvas / 2.0 - spec.stroke_width) / spec.density;
}

double ShapeDistance(PatternKind kind, int canvas, int y, int x) noexcept {
  const double center = canvas / 2.0;
  const double dx = std::abs((x + 0.5) - center);
  const double dy = std::abs((y + 0.5) - center);
  switch (kind) {
    case PatternKind::kCircle:
      return std::sqrt(dx * dx + dy * dy);
    case PatternKind::kSquare:
      return std::max(dx, dy);
    case PatternKind::kRhombus:
      return dx + dy;
  }
  return 0.0;
}

ProtoPattern RenderProto(const ProtoPatternSpec& spec) {
  spec.Validate();
  const int n = spec.canvas;
  const double half_stroke = spec.stroke_width / 2.0;

  std::vector<double> radii(spec.density);
  for (int m = 1; m <= spec.density; ++m) radii[m - 1] = ShapeRadius(spec, m);

  ProtoPattern out{spec, Image(n, n, 3)};
  Image& img = out.image;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const double d = ShapeDistance(spec.kind, n, y, x);
      const Rgb* color = &spec.background;
      // Outermost band wins where strokes overlap.
      for (int m = spec.density; m >= 1; --m) {
        if (d >= radii[m - 1] - half_stroke && d <= radii[m - 1] + half_stroke) {
          color = &spec.palette[(m - 1) % spec.palette.size()];
          break;
        }
      }
      for (int c = 0; c < 3; ++c) img.at(y, x, c) = (*color)[c];
    }
  }
  return out;
}

}  // namespace hitkit
