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

#include "tiler.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"
#include "resample.hpp"

namespace hitkit {

void TileConfig::Validate() const {
  if (tile_scheme < 1 || tile_scheme > kMaxTileScheme) {
    ThrowInvalid("tile scheme must be in [1, 16], got " +
                 std::to_string(tile_scheme));
  }
  if (intermediate < 1) {
    ThrowInvalid("intermediate size must be positive");
  }
  if (TileSize() < kMinTileSize) {
    ThrowInvalid("tile size " + std::to_string(TileSize()) +
                 " px is below the minimum of 8 (intermediate " +
                 std::to_string(intermediate) + ", scheme " +
                 std::to_string(tile_scheme) + ")");
  }
  if (target_h < 1 || target_w < 1) {
    ThrowInvalid("patch target shape must be positive");
  }
  if (crop_anchor == CropAnchor::kCustom && (crop_x < 0 || crop_y < 0)) {
    ThrowInvalid("custom crop anchor must be non-negative");
  }
}

PatchStages MakePatchStages(const Image& proto, const TileConfig& cfg) {
  cfg.Validate();
  const int side = cfg.intermediate;
  if (proto.height() < side || proto.width() < side) {
    ThrowInvalid("proto-pattern of " + std::to_string(proto.height()) + "x" +
                 std::to_string(proto.width()) +
                 " is smaller than the intermediate size " +
                 std::to_string(side));
  }

  int top = 0;
  int left = 0;
  switch (cfg.crop_anchor) {
    case CropAnchor::kCenter:
      top = (proto.height() - side) / 2;
      left = (proto.width() - side) / 2;
      break;
    case CropAnchor::kTopLeft:
      break;
    case CropAnchor::kCustom:
      top = cfg.crop_y;
      left = cfg.crop_x;
      break;
  }

  PatchStages st;
  st.window = Crop(proto, top, left, side, side);
  const int s = cfg.TileSize();
  st.tile = ResizeBilinear(st.window, s, s);

  // Tiling continues past n x n when n * s < intermediate, so the mosaic is
  // periodic over its whole extent.
  const int ch = proto.channels();
  st.mosaic = Image(side, side, ch);
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      for (int c = 0; c < ch; ++c) {
        st.mosaic.at(y, x, c) = st.tile.at(y % s, x % s, c);
      }
    }
  }
  st.patch = ResizeBilinear(st.mosaic, cfg.target_h, cfg.target_w);
  return st;
}

Image MakePatch(const Image& proto, const TileConfig& cfg) {
  return MakePatchStages(proto, cfg).patch;
}

Image MakePatch(const ProtoPattern& proto, const TileConfig& cfg) {
  return MakePatch(proto.image, cfg);
}

}  // namespace hitkit
