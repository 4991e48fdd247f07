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

#ifndef HITKIT_CORE_IMAGE_IO_HPP_
#define HITKIT_CORE_IMAGE_IO_HPP_

#include <filesystem>

#include "image.hpp"

namespace hitkit {

// Decodes a PNG or JPEG (detected by signature) into 8-bit RGB.
Image8 ReadImage8(const std::filesystem::path& path);
Image ReadImage(const std::filesystem::path& path);

// 8-bit PNG, RGB or grayscale by channel count. Output bytes depend only on
// the pixels.
void WritePng(const std::filesystem::path& path, const Image8& img);

// Baseline RGB JPEG.
void WriteJpeg(const std::filesystem::path& path, const Image8& img,
               int quality = 95);

// .png, .jpg or .jpeg, case-insensitive.
bool HasImageExtension(const std::filesystem::path& path);

}  // namespace hitkit

#endif  // HITKIT_CORE_IMAGE_IO_HPP_
