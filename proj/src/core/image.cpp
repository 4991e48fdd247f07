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

#include "image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace hitkit {

Image::Image(int height, int width, int channels, double fill) {
  if (height < 1 || width < 1 || channels < 1) {
    ThrowInvalid("image dimensions must be positive, got " +
                 std::to_string(height) + "x" + std::to_string(width) + "x" +
                 std::to_string(channels));
  }
  height_ = height;
  width_ = width;
  channels_ = channels;
  data_.assign(static_cast<std::size_t>(height) * width * channels, fill);
}

namespace {

void RequireSameShape(const Image& a, const Image& b, const char* op) {
  if (!a.SameShape(b)) {
    ThrowInvalid(std::string(op) + ": shape mismatch");
  }
}

}  // namespace

Image Subtract(const Image& a, const Image& b) {
  RequireSameShape(a, b, "Subtract");
  Image out = a;
  auto o = out.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] -= bd[i];
  return out;
}

Image Add(const Image& a, const Image& b) {
  RequireSameShape(a, b, "Add");
  Image out = a;
  auto o = out.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] += bd[i];
  return out;
}

double MaxAbsDifference(const Image& a, const Image& b) {
  RequireSameShape(a, b, "MaxAbsDifference");
  double worst = 0.0;
  auto ad = a.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < ad.size(); ++i) {
    worst = std::max(worst, std::abs(ad[i] - bd[i]));
  }
  return worst;
}

bool InDisplayRange(const Image& img) noexcept {
  return std::all_of(img.data().begin(), img.data().end(),
                     [](double v) { return v >= 0.0 && v <= 255.0; });
}

Image ToImage(const Image8& raw) {
  Image out(raw.height, raw.width, raw.channels);
  if (raw.pixels.size() != out.size()) {
    ThrowInvalid("8-bit buffer does not match its declared shape");
  }
  std::copy(raw.pixels.begin(), raw.pixels.end(), out.data().begin());
  return out;
}

namespace {

// std::nearbyint honours the default FE_TONEAREST mode: ties go to even.
std::uint8_t RoundToByte(double v) {
  double r = std::nearbyint(std::clamp(v, 0.0, 255.0));
  return static_cast<std::uint8_t>(r);
}

}  // namespace

Image8 Quantize(const Image& img) {
  Image8 out{img.height(), img.width(), img.channels(), {}};
  out.pixels.resize(img.size());
  auto d = img.data();
  for (std::size_t i = 0; i < d.size(); ++i) out.pixels[i] = RoundToByte(d[i]);
  return out;
}

Image8 QuantizeWithinBall(const Image& img, const Image8& ref, double epsilon) {
  if (ref.height != img.height() || ref.width != img.width() ||
      ref.channels != img.channels()) {
    ThrowInvalid("QuantizeWithinBall: shape mismatch");
  }
  Image8 out = Quantize(img);
  for (std::size_t i = 0; i < out.pixels.size(); ++i) {
    const double x = ref.pixels[i];
    const double lo = std::max(0.0, std::ceil(x - epsilon));
    const double hi = std::min(255.0, std::floor(x + epsilon));
    const double q = std::clamp(static_cast<double>(out.pixels[i]), lo, hi);
    out.pixels[i] = static_cast<std::uint8_t>(q);
  }
  return out;
}

}  // namespace hitkit
