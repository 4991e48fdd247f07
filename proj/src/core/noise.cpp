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

#include "noise.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "attack.hpp"
#include "error.hpp"

namespace hitkit {

std::uint64_t SplitMix64::Next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::Below(std::uint64_t bound) noexcept {
  // Lemire's multiply-shift; bias is below 2^-32 for any bound we use.
  __extension__ using U128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<U128>(Next()) * bound) >> 64);
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 mix(seed ^ (index * 0xD1B54A32D192ED03ULL));
  return mix.Next();
}

namespace {

void RequireShape(const NoiseShape& shape) {
  if (shape.height < 1 || shape.width < 1 || shape.channels < 1) {
    ThrowInvalid("noise shape must be positive");
  }
}

void RequireEpsilon(double eps) {
  if (!(eps >= 0.0 && eps <= 255.0)) {
    ThrowInvalid("epsilon must be in [0, 255], got " + std::to_string(eps));
  }
}

}  // namespace

Image RandomNoise(const NoiseShape& shape, const NoiseSpec& spec) {
  RequireShape(shape);
  RequireEpsilon(spec.epsilon);
  if (spec.mode != NoiseMode::kRandom) {
    ThrowInvalid("RandomNoise requires a random-mode spec");
  }
  std::vector<PixelLocation> locs = spec.pixels;
  for (const auto& p : locs) {
    if (p.y < 0 || p.y >= shape.height || p.x < 0 || p.x >= shape.width ||
        p.c < 0 || p.c >= shape.channels) {
      ThrowInvalid("noise location (" + std::to_string(p.y) + ", " +
                   std::to_string(p.x) + ", " + std::to_string(p.c) +
                   ") is out of range");
    }
  }
  std::sort(locs.begin(), locs.end());
  locs.erase(std::unique(locs.begin(), locs.end()), locs.end());

  Image noise(shape.height, shape.width, shape.channels);
  SplitMix64 rng(spec.seed);
  for (const auto& p : locs) noise.at(p.y, p.x, p.c) = spec.epsilon * rng.Sign();
  return noise;
}

Image SemiRandomNoise(const NoiseShape& shape, const NoiseSpec& spec) {
  RequireShape(shape);
  RequireEpsilon(spec.epsilon);
  if (spec.mode != NoiseMode::kSemiRandom) {
    ThrowInvalid("SemiRandomNoise requires a semi-random-mode spec");
  }
  const int extent = spec.axis == NoiseAxis::kH ? shape.height : shape.width;
  std::vector<int> idx = spec.slices;
  for (int i : idx) {
    if (i < 0 || i >= extent) {
      ThrowInvalid("slice index " + std::to_string(i) + " is out of range [0, " +
                   std::to_string(extent) + ")");
    }
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  Image noise(shape.height, shape.width, shape.channels);
  SplitMix64 rng(spec.seed);
  for (int i : idx) {
    const double v = spec.epsilon * rng.Sign();
    if (spec.axis == NoiseAxis::kH) {
      for (int x = 0; x < shape.width; ++x)
        for (int c = 0; c < shape.channels; ++c) noise.at(i, x, c) = v;
    } else {
      for (int y = 0; y < shape.height; ++y)
        for (int c = 0; c < shape.channels; ++c) noise.at(y, i, c) = v;
    }
  }
  return noise;
}

Image MakeNoise(const NoiseShape& shape, const NoiseSpec& spec) {
  return spec.mode == NoiseMode::kRandom ? RandomNoise(shape, spec)
                                         : SemiRandomNoise(shape, spec);
}

Image ApplyNoise(const Image& x, const Image& noise, double epsilon) {
  RequireEpsilon(epsilon);
  if (!x.SameShape(noise)) ThrowInvalid("ApplyNoise: shape mismatch");
  return ClipToBall(Add(x, noise), x, epsilon);
}

namespace {

// Partial Fisher-Yates over [0, n): the first `count` entries of the
// permutation.
std::vector<std::uint64_t> SampleWithoutReplacement(std::uint64_t n,
                                                    std::size_t count,
                                                    std::uint64_t seed) {
  if (count > n) {
    ThrowInvalid("cannot draw " + std::to_string(count) +
                 " distinct locations out of " + std::to_string(n));
  }
  std::vector<std::uint64_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + rng.Below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace

std::vector<PixelLocation> SamplePixelLocations(const NoiseShape& shape,
                                                std::size_t count,
                                                std::uint64_t seed) {
  RequireShape(shape);
  const std::uint64_t n = static_cast<std::uint64_t>(shape.height) *
                          shape.width * shape.channels;
  const auto flat_indices = SampleWithoutReplacement(n, count, seed);
  std::vector<PixelLocation> out;
  out.reserve(flat_indices.size());
  for (std::uint64_t flat : flat_indices) {
    const int c = static_cast<int>(flat % shape.channels);
    const std::uint64_t pix = flat / shape.channels;
    out.push_back({static_cast<int>(pix / shape.width),
                   static_cast<int>(pix % shape.width), c});
  }
  return out;
}

std::vector<int> SampleSliceIndices(int extent, std::size_t count,
                                    std::uint64_t seed) {
  if (extent < 1) ThrowInvalid("slice extent must be positive");
  const auto indices = SampleWithoutReplacement(extent, count, seed);
  std::vector<int> out;
  out.reserve(indices.size());
  for (std::uint64_t i : indices) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace hitkit
