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

#include "attack.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace hitkit {

std::string_view VariantName(Variant v) noexcept {
  return v == Variant::kWithLF ? "with-lf" : "without-lf";
}

std::optional<Variant> ParseVariant(std::string_view name) noexcept {
  if (name == "with-lf") return Variant::kWithLF;
  if (name == "without-lf") return Variant::kWithoutLF;
  return std::nullopt;
}

void AttackConfig::Validate() const {
  if (!(epsilon >= 0.0 && epsilon <= 255.0)) {
    ThrowInvalid("epsilon must be in [0, 255], got " + std::to_string(epsilon));
  }
  if (!(lambda > 0.0 && lambda <= kMaxLambda)) {
    ThrowInvalid("lambda must be in (0, 10], got " + std::to_string(lambda));
  }
  if (k < 1) ThrowInvalid("k must be >= 1, got " + std::to_string(k));
  pattern.Validate();
  tile.Validate();
}

Image ClipToBall(const Image& raw, const Image& x, double epsilon) {
  if (!raw.SameShape(x)) ThrowInvalid("ClipToBall: shape mismatch");
  Image out(raw.height(), raw.width(), raw.channels());
  auto o = out.data();
  auto r = raw.data();
  auto xs = x.data();
  for (std::size_t i = 0; i < o.size(); ++i) {
    double lo = std::max(xs[i] - epsilon, 0.0);
    double hi = std::min(xs[i] + epsilon, 255.0);
    // Pull rounded bounds inward so |out - x| <= epsilon holds in floating point.
    while (xs[i] - lo > epsilon) lo = std::nextafter(lo, 255.0);
    while (hi - xs[i] > epsilon) hi = std::nextafter(hi, 0.0);
    o[i] = std::clamp(r[i], lo, hi);
  }
  return out;
}

HybridTransform::HybridTransform(const Image& patch, const AttackConfig& cfg)
    : cfg_(cfg), kernel_(cfg.k) {
  if (!(cfg.epsilon >= 0.0 && cfg.epsilon <= 255.0)) {
    ThrowInvalid("epsilon must be in [0, 255], got " +
                 std::to_string(cfg.epsilon));
  }
  if (!(cfg.lambda > 0.0 && cfg.lambda <= AttackConfig::kMaxLambda)) {
    ThrowInvalid("lambda must be in (0, 10], got " + std::to_string(cfg.lambda));
  }
  patch_hfc_ = HighPass(patch, kernel_);
  for (double& v : patch_hfc_.data()) v *= cfg.lambda;
}

void HybridTransform::CheckInput(const Image& x) const {
  if (!x.SameShape(patch_hfc_)) {
    ThrowInvalid("image " + std::to_string(x.height()) + "x" +
                 std::to_string(x.width()) + "x" + std::to_string(x.channels()) +
                 " does not match patch " + std::to_string(patch_hfc_.height()) +
                 "x" + std::to_string(patch_hfc_.width()) + "x" +
                 std::to_string(patch_hfc_.channels()));
  }
  if (!InDisplayRange(x)) ThrowInvalid("image values must lie in [0, 255]");
}

Image HybridTransform::Raw(const Image& x) const {
  CheckInput(x);
  Image raw = cfg_.variant == Variant::kWithLF ? LowPass(x, kernel_) : x;
  auto r = raw.data();
  auto p = patch_hfc_.data();
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += p[i];
  return raw;
}

Image HybridTransform::Apply(const Image& x) const {
  return ClipToBall(Raw(x), x, cfg_.epsilon);
}

Image Hit(const Image& x, const Image& patch, const AttackConfig& cfg) {
  if (!x.SameShape(patch)) ThrowInvalid("Hit: image and patch shapes differ");
  return HybridTransform(patch, cfg).Apply(x);
}

Image BuildPatternPatch(const AttackConfig& cfg, int target_h, int target_w) {
  TileConfig tile = cfg.tile;
  tile.target_h = target_h;
  tile.target_w = target_w;
  return MakePatch(RenderProto(cfg.pattern), tile);
}

}  // namespace hitkit
