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

#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "error.hpp"
#include "frequency.hpp"
#include "resample.hpp"

namespace hitkit {

std::size_t DominanceMasks::HighCount() const noexcept {
  return static_cast<std::size_t>(std::count(high.begin(), high.end(), 1));
}

DominanceMasks BuildMasks(const Image& hfc, double tau, MaskReduction reduction) {
  if (!(tau >= 0.0)) ThrowInvalid("tau must be >= 0, got " + std::to_string(tau));
  if (hfc.empty()) ThrowInvalid("BuildMasks: empty HFC grid");
  DominanceMasks m;
  m.height = hfc.height();
  m.width = hfc.width();
  m.tau = tau;
  const std::size_t n = static_cast<std::size_t>(m.height) * m.width;
  m.high.resize(n);
  m.low.resize(n);
  const int ch = hfc.channels();
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      double mag = 0.0;
      for (int c = 0; c < ch; ++c) {
        const double v = std::abs(hfc.at(y, x, c));
        mag = reduction == MaskReduction::kMaxAbs ? std::max(mag, v) : mag + v;
      }
      if (reduction == MaskReduction::kMeanAbs) mag /= ch;
      const std::size_t i = static_cast<std::size_t>(y) * m.width + x;
      m.high[i] = mag > tau ? 1 : 0;
      m.low[i] = 1 - m.high[i];
    }
  }
  return m;
}

DominanceMasks ResizeMasksNearest(const DominanceMasks& masks, int height,
                                  int width) {
  Image grid(masks.height, masks.width, 1);
  std::copy(masks.high.begin(), masks.high.end(), grid.data().begin());
  const Image resized = ResizeNearest(grid, height, width);
  DominanceMasks out;
  out.height = height;
  out.width = width;
  out.tau = masks.tau;
  for (double v : resized.data()) {
    out.high.push_back(v > 0.5 ? 1 : 0);
    out.low.push_back(v > 0.5 ? 0 : 1);
  }
  return out;
}

namespace {

template <typename T>
DominanceStats DominanceImpl(std::span<const T> fmap, const DominanceMasks& m) {
  if (fmap.size() != m.high.size()) {
    ThrowInvalid("feature map has " + std::to_string(fmap.size()) +
                 " entries but the masks cover " +
                 std::to_string(m.high.size()));
  }
  double sum_high = 0.0;
  double sum_low = 0.0;
  std::size_t n_high = 0;
  for (std::size_t i = 0; i < fmap.size(); ++i) {
    if (m.high[i]) {
      sum_high += fmap[i];
      ++n_high;
    } else {
      sum_low += fmap[i];
    }
  }
  const std::size_t n_low = fmap.size() - n_high;
  if (n_high == 0) ThrowDegenerate("high-frequency mask is empty");
  if (n_low == 0) ThrowDegenerate("low-frequency mask is empty");
  DominanceStats s;
  s.a_high = sum_high / static_cast<double>(n_high);
  s.a_low = sum_low / static_cast<double>(n_low);
  s.hfc_dominant = s.a_high > s.a_low;
  return s;
}

template <typename T>
double CosineImpl(std::span<const T> a, std::span<const T> b) {
  if (a.empty()) ThrowInvalid("cosine similarity of empty vectors");
  if (a.size() != b.size()) {
    ThrowInvalid("cosine similarity needs equal lengths, got " +
                 std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a[i];
    const double y = b[i];
    dot += x * y;
    na += x * x;
    nb += y * y;
  }
  if (na == 0.0 || nb == 0.0) ThrowDegenerate("cosine similarity of a zero vector");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

}  // namespace

DominanceStats Dominance(std::span<const double> feature_map,
                         const DominanceMasks& masks) {
  return DominanceImpl(feature_map, masks);
}

DominanceStats Dominance(std::span<const float> feature_map,
                         const DominanceMasks& masks) {
  return DominanceImpl(feature_map, masks);
}

double CosineSimilarity(std::span<const double> a, std::span<const double> b) {
  return CosineImpl(a, b);
}

double CosineSimilarity(std::span<const float> a, std::span<const float> b) {
  return CosineImpl(a, b);
}

std::size_t AnalysisReport::HfcDominantCount() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(),
                    [](const DominanceRecord& r) { return r.stats.hfc_dominant; }));
}

AnalysisReport AnalyzeDominance(const Image& image, const Tensor& features,
                                const AnalysisOptions& options) {
  const auto& d = features.dims;
  std::size_t maps = 0;
  std::uint32_t fh = 0;
  std::uint32_t fw = 0;
  if (d.size() == 2) {
    maps = 1, fh = d[0], fw = d[1];
  } else if (d.size() == 3) {
    maps = d[0], fh = d[1], fw = d[2];
  } else if (d.size() == 4 && d[0] == 1) {
    maps = d[1], fh = d[2], fw = d[3];
  } else {
    ThrowInvalid("feature tensor must be [H,W], [C,H,W] or [1,C,H,W]");
  }
  if (maps == 0 || fh == 0 || fw == 0) ThrowInvalid("feature tensor is empty");
  if (features.values.size() != features.ElementCount()) {
    ThrowInvalid("feature tensor values do not match its dimensions");
  }

  const GaussianKernel kernel(options.k);
  const int h = static_cast<int>(fh);
  const int w = static_cast<int>(fw);
  DominanceMasks masks;
  if (options.registration == MaskRegistration::kResizeImage) {
    const Image resized = ResizeBilinear(image, h, w);
    masks = BuildMasks(HighPass(resized, kernel), options.tau, options.reduction);
  } else {
    masks = ResizeMasksNearest(
        BuildMasks(HighPass(image, kernel), options.tau, options.reduction), h, w);
  }

  AnalysisReport report;
  report.options = options;
  report.map_height = h;
  report.map_width = w;
  report.high_fraction =
      static_cast<double>(masks.HighCount()) / static_cast<double>(masks.high.size());
  const std::size_t plane = static_cast<std::size_t>(h) * w;
  std::span<const float> all(features.values);
  for (std::size_t i = 0; i < maps; ++i) {
    report.records.push_back({i, Dominance(all.subspan(i * plane, plane), masks)});
  }
  return report;
}

void WriteReport(std::ostream& out, const AnalysisReport& report) {
  const auto& o = report.options;
  out << "# hitkit dominance report\n";
  out << "# k=" << o.k << " tau=" << o.tau << " reduction="
      << (o.reduction == MaskReduction::kMaxAbs ? "max" : "mean")
      << " registration="
      << (o.registration == MaskRegistration::kResizeImage ? "resize-image"
                                                            : "downscale-mask")
      << " map=" << report.map_height << "x" << report.map_width
      << " high_fraction=" << report.high_fraction << "\n";
  out << "# hfc_dominant=" << report.HfcDominantCount()
      << " lfc_dominant=" << report.LfcDominantCount() << "\n";
  out << "index\ta_high\ta_low\tdominant\n";
  const auto old_precision = out.precision(10);
  for (const auto& r : report.records) {
    out << r.index << '\t' << r.stats.a_high << '\t' << r.stats.a_low << '\t'
        << (r.stats.hfc_dominant ? "hfc" : "lfc") << '\n';
  }
  out.precision(old_precision);
}

}  // namespace hitkit
