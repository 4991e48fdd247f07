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

#ifndef HITKIT_CORE_ATTACK_HPP_
#define HITKIT_CORE_ATTACK_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "frequency.hpp"
#include "image.hpp"
#include "patterns.hpp"
#include "tiler.hpp"

namespace hitkit {

enum class Variant {
  kWithLF,     // x*G + lambda * HFC(patch)
  kWithoutLF,  // x   + lambda * HFC(patch)
};

std::string_view VariantName(Variant v) noexcept;
std::optional<Variant> ParseVariant(std::string_view name) noexcept;

struct AttackConfig {
  double epsilon = 16.0;  // l-inf budget in 8-bit intensity units
  double lambda = 1.0;    // weight of the patch HFC
  int k = 4;              // kernel half-width, 17x17 at k = 4
  Variant variant = Variant::kWithLF;
  ProtoPatternSpec pattern;
  TileConfig tile;
  std::uint64_t seed = 0;  // noise baselines only

  static constexpr double kMaxLambda = 10.0;

  void Validate() const;
};

// Clamps `raw` into the box [max(x - eps, 0), min(x + eps, 255)].
Image ClipToBall(const Image& raw, const Image& x, double epsilon);

// Eq.-style hybrid synthesis for one patch, reusable across images of the
// patch's shape. The kernel and the weighted patch HFC are computed once.
class HybridTransform {
 public:
  HybridTransform(const Image& patch, const AttackConfig& cfg);

  // Unclipped hybrid image.
  Image Raw(const Image& x) const;
  // Raw(x) clipped to the epsilon ball around x and to [0, 255].
  Image Apply(const Image& x) const;

  const Image& weighted_patch_hfc() const noexcept { return patch_hfc_; }
  const GaussianKernel& kernel() const noexcept { return kernel_; }
  const AttackConfig& config() const noexcept { return cfg_; }

 private:
  void CheckInput(const Image& x) const;

  AttackConfig cfg_;
  GaussianKernel kernel_;
  Image patch_hfc_;  // lambda * (patch - patch*G)
};

Image Hit(const Image& x, const Image& patch, const AttackConfig& cfg);

// Renders the configured proto-pattern and runs it through the tiler with the
// given target shape.
Image BuildPatternPatch(const AttackConfig& cfg, int target_h, int target_w);

}  // namespace hitkit

#endif  // HITKIT_CORE_ATTACK_HPP_
