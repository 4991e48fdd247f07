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

// Test-only reference implementations. These deliberately avoid the library's
// code paths: the kernel is evaluated from the closed-form Gaussian, the
// convolution is a direct 2-D nested loop and resampling is a textbook
// four-neighbour average.

#ifndef HITKIT_TESTS_ORACLES_HPP_
#define HITKIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "image.hpp"

namespace hitkit::testing {

// (4k+1)^2 Gaussian from 1/(2 pi s^2) exp(-(i^2+j^2)/(2 s^2)), s = k, divided
// by its sum. Row-major.
inline std::vector<double> OracleKernel(int k) {
  const int r = 2 * k;
  const int n = 4 * k + 1;
  const double s = k;
  std::vector<double> g(static_cast<std::size_t>(n) * n);
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    for (int j = -r; j <= r; ++j) {
      const double v = 1.0 / (2.0 * std::numbers::pi * s * s) *
                       std::exp(-(i * i + j * j) / (2.0 * s * s));
      g[(i + r) * n + (j + r)] = v;
      sum += v;
    }
  }
  for (double& v : g) v /= sum;
  return g;
}

// Half-sample symmetric reflection for offsets no larger than the extent.
inline int OracleReflect(int i, int n) {
  if (i < 0) return -i - 1;
  if (i >= n) return 2 * n - i - 1;
  return i;
}

inline Image OracleConvolve(const Image& img, int k) {
  const auto g = OracleKernel(k);
  const int r = 2 * k;
  const int n = 4 * k + 1;
  Image out(img.height(), img.width(), img.channels());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < img.channels(); ++c) {
        double acc = 0.0;
        for (int i = -r; i <= r; ++i) {
          for (int j = -r; j <= r; ++j) {
            const int sy = OracleReflect(y + i, img.height());
            const int sx = OracleReflect(x + j, img.width());
            acc += g[(i + r) * n + (j + r)] * img.at(sy, sx, c);
          }
        }
        out.at(y, x, c) = acc;
      }
    }
  }
  return out;
}

inline Image OracleBilinear(const Image& img, int oh, int ow) {
  Image out(oh, ow, img.channels());
  const double sy = static_cast<double>(img.height()) / oh;
  const double sx = static_cast<double>(img.width()) / ow;
  for (int y = 0; y < oh; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    fy = std::min(std::max(fy, 0.0), img.height() - 1.0);
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, img.height() - 1);
    const double wy = fy - y0;
    for (int x = 0; x < ow; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      fx = std::min(std::max(fx, 0.0), img.width() - 1.0);
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, img.width() - 1);
      const double wx = fx - x0;
      for (int c = 0; c < img.channels(); ++c) {
        out.at(y, x, c) = (1 - wy) * (1 - wx) * img.at(y0, x0, c) +
                          (1 - wy) * wx * img.at(y0, x1, c) +
                          wy * (1 - wx) * img.at(y1, x0, c) +
                          wy * wx * img.at(y1, x1, c);
      }
    }
  }
  return out;
}

// Smooth gradients plus a few hard-edged blocks plus noise: enough structure
// to stand in for a natural photograph.
inline Image SyntheticNatural(int h, int w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Image img(h, w, 3);
  const double fx = 2.0 + 6.0 * u(rng);
  const double fy = 2.0 + 6.0 * u(rng);
  const int bx = static_cast<int>(u(rng) * w / 2);
  const int by = static_cast<int>(u(rng) * h / 2);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < 3; ++c) {
        double v = 128 + 60 * std::sin(fx * x / w * std::numbers::pi + c) *
                             std::cos(fy * y / h * std::numbers::pi);
        if (x >= bx && x < bx + w / 3 && y >= by && y < by + h / 3) v += 50;
        v += 20 * (u(rng) - 0.5);
        img.at(y, x, c) = std::clamp(v, 0.0, 255.0);
      }
    }
  }
  return img;
}

inline Image UniformRandomImage(int h, int w, std::uint64_t seed, int channels = 3) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 255.0);
  Image img(h, w, channels);
  for (double& v : img.data()) v = u(rng);
  return img;
}

inline Image Checkerboard(int h, int w) {
  Image img(h, w, 3);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < 3; ++c) img.at(y, x, c) = ((x + y) % 2) * 255.0;
  return img;
}

}  // namespace hitkit::testing

#endif  // HITKIT_TESTS_ORACLES_HPP_
