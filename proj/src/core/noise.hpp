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

#ifndef HITKIT_CORE_NOISE_HPP_
#define HITKIT_CORE_NOISE_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "image.hpp"

namespace hitkit {

enum class NoiseMode { kRandom, kSemiRandom };
enum class NoiseAxis { kH, kW };

struct PixelLocation {
  int y = 0;
  int x = 0;
  int c = 0;
  friend auto operator<=>(const PixelLocation&, const PixelLocation&) = default;
};

struct NoiseShape {
  int height = 0;
  int width = 0;
  int channels = 3;
};

struct NoiseSpec {
  NoiseMode mode = NoiseMode::kRandom;
  NoiseAxis axis = NoiseAxis::kH;       // semi-random only
  std::vector<PixelLocation> pixels;    // random: the location set
  std::vector<int> slices;              // semi-random: row or column indices
  double epsilon = 16.0;
  std::uint64_t seed = 0;
};

// Deterministic 64-bit generator (splitmix64). Identical streams on every
// platform, unlike the std:: distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t Next() noexcept;
  // Uniform in [0, bound).
  std::uint64_t Below(std::uint64_t bound) noexcept;
  // +1 or -1 with equal probability.
  int Sign() noexcept { return (Next() >> 63) ? 1 : -1; }

 private:
  std::uint64_t state_;
};

// Seed for item `index` of a batch run with base seed `seed`.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) noexcept;

// Zero except at the (deduplicated) locations, which hold +eps or -eps.
Image RandomNoise(const NoiseShape& shape, const NoiseSpec& spec);

// Each selected row (axis H) or column (axis W) is filled with a single
// +eps or -eps value across the whole slice and all channels.
Image SemiRandomNoise(const NoiseShape& shape, const NoiseSpec& spec);

// Dispatches on spec.mode.
Image MakeNoise(const NoiseShape& shape, const NoiseSpec& spec);

// clip(x + noise) into the epsilon ball around x and [0, 255].
Image ApplyNoise(const Image& x, const Image& noise, double epsilon);

// `count` distinct pixel locations drawn uniformly without replacement.
std::vector<PixelLocation> SamplePixelLocations(const NoiseShape& shape,
                                                std::size_t count,
                                                std::uint64_t seed);

// `count` distinct indices in [0, extent).
std::vector<int> SampleSliceIndices(int extent, std::size_t count,
                                    std::uint64_t seed);

}  // namespace hitkit

#endif  // HITKIT_CORE_NOISE_HPP_
