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

#ifndef HITKIT_CORE_PATTERNS_HPP_
#define HITKIT_CORE_PATTERNS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "image.hpp"

namespace hitkit {

enum class PatternKind { kCircle, kSquare, kRhombus };

using Rgb = std::array<std::uint8_t, 3>;

std::string_view PatternKindName(PatternKind kind) noexcept;
std::optional<PatternKind> ParsePatternKind(std::string_view name) noexcept;

// Red, green, blue, yellow, magenta, cyan.
std::vector<Rgb> DefaultPalette();

struct ProtoPatternSpec {
  static constexpr int kMaxDensity = 12;

  PatternKind kind = PatternKind::kCircle;
  int density = kMaxDensity;  // number of concentric shapes
  int canvas = 600;           // pixels per side
  int stroke_width = 4;
  std::vector<Rgb> palette = DefaultPalette();
  Rgb background = {0, 0, 0};

  // Throws kInvalidParameter when the pattern cannot be rendered.
  void Validate() const;
};

struct ProtoPattern {
  ProtoPatternSpec spec;
  Image image;  // canvas x canvas x 3
};

// Radius of the m-th shape (1-based): m * (canvas/2 - stroke_width) / density.
double ShapeRadius(const ProtoPatternSpec& spec, int m) noexcept;

// Distance from the canvas center of pixel (y, x), measured at the pixel
// center, under the norm associated with the kind (L2, Linf, L1).
double ShapeDistance(PatternKind kind, int canvas, int y, int x) noexcept;

// Concentric, hard-edged stroked shapes on a flat background. A pixel belongs
// to shape m when its distance lies within stroke_width / 2 of the radius;
// outer shapes are drawn over inner ones.
ProtoPattern RenderProto(const ProtoPatternSpec& spec);

}  // namespace hitkit

#endif  // HITKIT_CORE_PATTERNS_HPP_
