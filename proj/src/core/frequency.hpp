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

#ifndef HITKIT_CORE_FREQUENCY_HPP_
#define HITKIT_CORE_FREQUENCY_HPP_

#include <span>
#include <vector>

#include "image.hpp"

namespace hitkit {

// Normalized (4k+1) x (4k+1) Gaussian low-pass kernel with sigma = k, sampled
// on integer offsets in [-2k, 2k]. The 2-D grid is exposed for inspection;
// filtering uses the equivalent separable 1-D taps.
class GaussianKernel {
 public:
  explicit GaussianKernel(int k);

  int k() const noexcept { return k_; }
  int size() const noexcept { return 4 * k_ + 1; }
  int radius() const noexcept { return 2 * k_; }
  double sigma() const noexcept { return static_cast<double>(k_); }

  // Row-major size() x size() grid, unit sum.
  std::span<const double> coefficients() const noexcept { return coefficients_; }
  double at(int row, int col) const noexcept {
    return coefficients_[static_cast<std::size_t>(row) * size() + col];
  }
  // 1-D taps whose outer product is the 2-D grid.
  std::span<const double> taps() const noexcept { return taps_; }

 private:
  int k_;
  std::vector<double> coefficients_;
  std::vector<double> taps_;
};

GaussianKernel BuildKernel(int k);

struct FrequencyPair {
  Image lfc;
  Image hfc;  // signed residual, img - lfc
};

// Largest kernel radius LowPass accepts for an image: 2k <= min(H, W).
bool KernelFits(const Image& img, const GaussianKernel& kernel) noexcept;

// Per-channel convolution with half-sample symmetric padding
// (... c b a | a b c ...).
Image LowPass(const Image& img, const GaussianKernel& kernel);

FrequencyPair Decompose(const Image& img, const GaussianKernel& kernel);

// img - LowPass(img). Signed.
Image HighPass(const Image& img, const GaussianKernel& kernel);

// Maps any integer index into [0, n) by symmetric reflection about the edges.
int ReflectIndex(int i, int n) noexcept;

}  // namespace hitkit

#endif  // HITKIT_CORE_FREQUENCY_HPP_
