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

#ifndef HITKIT_CORE_ANALYSIS_HPP_
#define HITKIT_CORE_ANALYSIS_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "image.hpp"
#include "tensor_io.hpp"

namespace hitkit {

// How a multi-channel HFC is reduced to one magnitude per pixel before the
// threshold test. kMaxAbs marks a pixel when any channel exceeds tau.
enum class MaskReduction { kMaxAbs, kMeanAbs };

// Which grid is brought to the feature-map resolution.
enum class MaskRegistration {
  kResizeImage,    // bilinear-resize the image, then decompose and threshold
  kDownscaleMask,  // decompose at full resolution, nearest-resize the mask
};

struct DominanceMasks {
  int height = 0;
  int width = 0;
  double tau = 20.0;
  std::vector<std::uint8_t> high;  // 1 where |HFC| > tau
  std::vector<std::uint8_t> low;   // 1 - high

  std::size_t HighCount() const noexcept;
  std::size_t LowCount() const noexcept { return high.size() - HighCount(); }
};

struct DominanceStats {
  double a_high = 0.0;
  double a_low = 0.0;
  bool hfc_dominant = false;  // a_high > a_low
};

DominanceMasks BuildMasks(const Image& hfc, double tau,
                          MaskReduction reduction = MaskReduction::kMaxAbs);

DominanceMasks ResizeMasksNearest(const DominanceMasks& masks, int height,
                                  int width);

// Masked mean responses of one H x W feature map. Throws kDegenerateInput when
// either region is empty.
DominanceStats Dominance(std::span<const double> feature_map,
                         const DominanceMasks& masks);
DominanceStats Dominance(std::span<const float> feature_map,
                         const DominanceMasks& masks);

// Throws kInvalidParameter on length mismatch or empty input and
// kDegenerateInput when either vector has zero norm.
double CosineSimilarity(std::span<const double> a, std::span<const double> b);
double CosineSimilarity(std::span<const float> a, std::span<const float> b);

struct AnalysisOptions {
  int k = 4;
  double tau = 20.0;
  MaskReduction reduction = MaskReduction::kMaxAbs;
  MaskRegistration registration = MaskRegistration::kResizeImage;
};

struct DominanceRecord {
  std::size_t index = 0;
  DominanceStats stats;
};

struct AnalysisReport {
  AnalysisOptions options;
  int map_height = 0;
  int map_width = 0;
  double high_fraction = 0.0;
  std::vector<DominanceRecord> records;

  std::size_t HfcDominantCount() const noexcept;
  std::size_t LfcDominantCount() const noexcept {
    return records.size() - HfcDominantCount();
  }
};

// Runs the dominance analysis of `image` against every map in `features`.
// Accepted tensor layouts: [H, W], [C, H, W] and [1, C, H, W].
AnalysisReport AnalyzeDominance(const Image& image, const Tensor& features,
                                const AnalysisOptions& options);

// Tab-separated, one record per feature map, preceded by '#' comment lines.
void WriteReport(std::ostream& out, const AnalysisReport& report);

}  // namespace hitkit

#endif  // HITKIT_CORE_ANALYSIS_HPP_
