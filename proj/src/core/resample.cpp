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

#include "resample.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"

namespace hitkit {

namespace {

struct Tap {
  int lo;
  int hi;
  double frac;
};

std::vector<Tap> BilinearTaps(int in, int out) {
  std::vector<Tap> taps(out);
  const double scale = static_cast<double>(in) / out;
  for (int i = 0; i < out; ++i) {
    const double src = std::clamp((i + 0.5) * scale - 0.5, 0.0,
                                  static_cast<double>(in - 1));
    const int lo = static_cast<int>(std::floor(src));
    taps[i] = {lo, std::min(lo + 1, in - 1), src - lo};
  }
  return taps;
}

// a + t * (b - a) returns a exactly when a == b.
inline double Lerp(double a, double b, double t) { return a + t * (b - a); }

void RequireTarget(int out_height, int out_width) {
  if (out_height < 1 || out_width < 1) {
    ThrowInvalid("resize target must be positive, got " +
                 std::to_string(out_height) + "x" + std::to_string(out_width));
  }
}

}  // namespace

Image ResizeBilinear(const Image& img, int out_height, int out_width) {
  RequireTarget(out_height, out_width);
  if (img.empty()) ThrowInvalid("ResizeBilinear: empty image");
  if (out_height == img.height() && out_width == img.width()) return img;

  const auto ys = BilinearTaps(img.height(), out_height);
  const auto xs = BilinearTaps(img.width(), out_width);
  const int ch = img.channels();
  Image out(out_height, out_width, ch);
  for (int y = 0; y < out_height; ++y) {
    const Tap ty = ys[y];
    for (int x = 0; x < out_width; ++x) {
      const Tap tx = xs[x];
      for (int c = 0; c < ch; ++c) {
        const double top =
            Lerp(img.at(ty.lo, tx.lo, c), img.at(ty.lo, tx.hi, c), tx.frac);
        const double bottom =
            Lerp(img.at(ty.hi, tx.lo, c), img.at(ty.hi, tx.hi, c), tx.frac);
        out.at(y, x, c) = Lerp(top, bottom, ty.frac);
      }
    }
  }
  return out;
}

Image ResizeNearest(const Image& img, int out_height, int out_width) {
  RequireTarget(out_height, out_width);
  if (img.empty()) ThrowInvalid("ResizeNearest: empty image");
  auto nearest = [](int i, int in, int out) {
    const double src = (i + 0.5) * static_cast<double>(in) / out;
    return std::min(static_cast<int>(std::floor(src)), in - 1);
  };
  const int ch = img.channels();
  Image out(out_height, out_width, ch);
  for (int y = 0; y < out_height; ++y) {
    const int sy = nearest(y, img.height(), out_height);
    for (int x = 0; x < out_width; ++x) {
      const int sx = nearest(x, img.width(), out_width);
      for (int c = 0; c < ch; ++c) out.at(y, x, c) = img.at(sy, sx, c);
    }
  }
  return out;
}

Image Crop(const Image& img, int top, int left, int height, int width) {
  if (top < 0 || left < 0 || height < 1 || width < 1 ||
      top + height > img.height() || left + width > img.width()) {
    ThrowInvalid("crop window " + std::to_string(height) + "x" +
                 std::to_string(width) + "+" + std::to_string(top) + "+" +
                 std::to_string(left) + " lies outside a " +
                 std::to_string(img.height()) + "x" +
                 std::to_string(img.width()) + " image");
  }
  const int ch = img.channels();
  Image out(height, width, ch);
  for (int y = 0; y < height; ++y) {
    const double* src = &img.data()[img.index(top + y, left, 0)];
    std::copy(src, src + static_cast<std::size_t>(width) * ch,
              &out.data()[out.index(y, 0, 0)]);
  }
  return out;
}

}  // namespace hitkit
