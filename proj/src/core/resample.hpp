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

#ifndef HITKIT_CORE_RESAMPLE_HPP_
#define HITKIT_CORE_RESAMPLE_HPP_

#include "image.hpp"

namespace hitkit {

// Bilinear resampling with half-pixel centers and edge clamping:
// src = (dst + 0.5) * in / out - 0.5, clamped to [0, in - 1].
// Constant inputs map to exactly the same constant.
Image ResizeBilinear(const Image& img, int out_height, int out_width);

// Nearest-neighbour resampling with half-pixel centers.
Image ResizeNearest(const Image& img, int out_height, int out_width);

// Window [top, top + height) x [left, left + width). Must lie inside img.
Image Crop(const Image& img, int top, int left, int height, int width);

}  // namespace hitkit

#endif  // HITKIT_CORE_RESAMPLE_HPP_
