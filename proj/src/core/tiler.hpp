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

#ifndef HITKIT_CORE_TILER_HPP_
#define HITKIT_CORE_TILER_HPP_

#include "image.hpp"
#include "patterns.hpp"

namespace hitkit {

enum class CropAnchor { kCenter, kTopLeft, kCustom };

struct TileConfig {
  int tile_scheme = 6;     // the patch repeats tile_scheme x tile_scheme times
  int intermediate = 300;  // side of the cropped window and of the mosaic
  int target_h = 299;
  int target_w = 299;
  CropAnchor crop_anchor = CropAnchor::kCenter;
  int crop_x = 0;  // kCustom only: left column of the window
  int crop_y = 0;  // kCustom only: top row of the window

  static constexpr int kMaxTileScheme = 16;
  static constexpr int kMinTileSize = 8;

  void Validate() const;

  // floor(intermediate / tile_scheme).
  int TileSize() const noexcept { return intermediate / tile_scheme; }
};

// Intermediate products of the patch pipeline, kept for inspection.
struct PatchStages {
  Image window;  // intermediate x intermediate crop of the proto
  Image tile;    // TileSize() x TileSize()
  Image mosaic;  // intermediate x intermediate periodic tiling of `tile`
  Image patch;   // target_h x target_w
};

PatchStages MakePatchStages(const Image& proto, const TileConfig& cfg);

// crop -> bilinear resize to the tile size -> periodic tiling -> bilinear
// resize to the target shape.
Image MakePatch(const ProtoPattern& proto, const TileConfig& cfg);
Image MakePatch(const Image& proto, const TileConfig& cfg);

}  // namespace hitkit

#endif  // HITKIT_CORE_TILER_HPP_
