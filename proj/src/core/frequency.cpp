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

#include "frequency.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace hitkit {

GaussianKernel::GaussianKernel(int k) : k_(k) {
  if (k < 1) {
    ThrowInvalid("kernel half-width k must be >= 1, got " + std::to_string(k));
  }
  const int n = size();
  const int r = radius();
  const double two_sigma_sq = 2.0 * sigma() * sigma();
  const double scale = 1.0 / (2.0 * std::numbers::pi * sigma() * sigma());

  coefficients_.resize(static_cast<std::size_t>(n) * n);
  double total = 0.0;
  for (int i = -r; i <= r; ++i) {
    for (int j = -r; j <= r; ++j) {
      const double g = scale * std::exp(-(i * i + j * j) / two_sigma_sq);
      coefficients_[static_cast<std::size_t>(i + r) * n + (j + r)] = g;
      total += g;
    }
  }
  for (double& g : coefficients_) g /= total;

  taps_.resize(n);
  double tap_total = 0.0;
  for (int i = -r; i <= r; ++i) {
    taps_[i + r] = std::exp(-(i * i) / two_sigma_sq);
    tap_total += taps_[i + r];
  }
  for (double& t : taps_) t /= tap_total;
}

GaussianKernel BuildKernel(int k) { return GaussianKernel(k); }

int ReflectIndex(int i, int n) noexcept {
  if (n == 1) return 0;
  const int period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - 1 - i;
}

bool KernelFits(const Image& img, const GaussianKernel& kernel) noexcept {
  return kernel.radius() <= std::min(img.height(), img.width());
}

Image LowPass(const Image& img, const GaussianKernel& kernel) {
  if (img.empty()) ThrowInvalid("LowPass: empty image");
  if (!KernelFits(img, kernel)) {
    ThrowInvalid("LowPass: kernel of size " + std::to_string(kernel.size()) +
                 " is too large for a " + std::to_string(img.height()) + "x" +
                 std::to_string(img.width()) + " image");
  }
  const int h = img.height();
  const int w = img.width();
  const int ch = img.channels();
  const int r = kernel.radius();
  const auto taps = kernel.taps();
  const std::size_t row_len = static_cast<std::size_t>(w) * ch;

  // Both passes accumulate weighted differences from the center sample, which
  // equals the plain weighted sum for unit-sum taps and keeps constant
  // regions bit-exact.

  // Horizontal pass through a reflect-padded copy of each row.
  Image tmp(h, w, ch);
  std::vector<double> padded(static_cast<std::size_t>(w + 2 * r) * ch);
  for (int y = 0; y < h; ++y) {
    const double* src = &img.data()[img.index(y, 0, 0)];
    for (int x = -r; x < w + r; ++x) {
      const double* px = src + static_cast<std::size_t>(ReflectIndex(x, w)) * ch;
      std::copy(px, px + ch, &padded[static_cast<std::size_t>(x + r) * ch]);
    }
    double* dst = &tmp.data()[tmp.index(y, 0, 0)];
    for (std::size_t i = 0; i < row_len; ++i) {
      const double* p = &padded[i];
      const double center = p[r * ch];
      double acc = 0.0;
      for (int t = 0; t < kernel.size(); ++t) acc += taps[t] * (p[t * ch] - center);
      dst[i] = center + acc;
    }
  }

  // Vertical pass, accumulating whole rows at a time.
  Image out(h, w, ch);
  for (int y = 0; y < h; ++y) {
    double* dst = &out.data()[out.index(y, 0, 0)];
    const double* center = &tmp.data()[tmp.index(y, 0, 0)];
    for (int t = 0; t < kernel.size(); ++t) {
      const int sy = ReflectIndex(y + t - r, h);
      const double* src = &tmp.data()[tmp.index(sy, 0, 0)];
      const double wt = taps[t];
      for (std::size_t i = 0; i < row_len; ++i) dst[i] += wt * (src[i] - center[i]);
    }
    for (std::size_t i = 0; i < row_len; ++i) dst[i] += center[i];
  }
  return out;
}

FrequencyPair Decompose(const Image& img, const GaussianKernel& kernel) {
  FrequencyPair pair{LowPass(img, kernel), Image()};
  pair.hfc = Subtract(img, pair.lfc);
  return pair;
}

Image HighPass(const Image& img, const GaussianKernel& kernel) {
  return Subtract(img, LowPass(img, kernel));
}

}  // namespace hitkit
