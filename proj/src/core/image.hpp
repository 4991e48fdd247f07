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

#ifndef HITKIT_CORE_IMAGE_HPP_
#define HITKIT_CORE_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hitkit {

// Dense row-major H x W x C grid of doubles. Displayable images hold values in
// [0, 255]; frequency residuals and noise grids share the type and may be
// signed.
class Image {
 public:
  Image() = default;
  Image(int height, int width, int channels = 3, double fill = 0.0);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  int channels() const noexcept { return channels_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  std::size_t index(int y, int x, int c) const noexcept {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }
  double& at(int y, int x, int c) noexcept { return data_[index(y, x, c)]; }
  double at(int y, int x, int c) const noexcept { return data_[index(y, x, c)]; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  bool SameShape(const Image& other) const noexcept {
    return height_ == other.height_ && width_ == other.width_ &&
           channels_ == other.channels_;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

// Raw 8-bit interleaved pixels, as decoded from or encoded to disk.
struct Image8 {
  int height = 0;
  int width = 0;
  int channels = 3;
  std::vector<std::uint8_t> pixels;
};

// Element-wise helpers. All require matching shapes.
Image Subtract(const Image& a, const Image& b);
Image Add(const Image& a, const Image& b);
double MaxAbsDifference(const Image& a, const Image& b);

// True when every value lies in [0, 255].
bool InDisplayRange(const Image& img) noexcept;

Image ToImage(const Image8& raw);

// Round-half-to-even quantization with clamping to [0, 255].
Image8 Quantize(const Image& img);

// Quantization that also keeps every sample inside [ref - eps, ref + eps],
// where ref is the 8-bit source the image was derived from.
Image8 QuantizeWithinBall(const Image& img, const Image8& ref, double epsilon);

}  // namespace hitkit

#endif  // HITKIT_CORE_IMAGE_HPP_
