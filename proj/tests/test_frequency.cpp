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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "error.hpp"
#include "frequency.hpp"
#include "oracles.hpp"

namespace hitkit {
namespace {

using testing::Checkerboard;
using testing::OracleConvolve;
using testing::SyntheticNatural;
using testing::UniformRandomImage;

TEST(GaussianKernelTest, SizeIsFourKPlusOne) {
  EXPECT_EQ(BuildKernel(1).size(), 5);
  EXPECT_EQ(BuildKernel(4).size(), 17);
  EXPECT_EQ(BuildKernel(4).coefficients().size(), 17u * 17u);
  EXPECT_DOUBLE_EQ(BuildKernel(4).sigma(), 4.0);
}

TEST(GaussianKernelTest, RejectsNonPositiveK) {
  for (int k : {0, -1, -7}) {
    try {
      BuildKernel(k);
      FAIL() << "k=" << k << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidParameter);
    }
  }
}

TEST(GaussianKernelTest, KOneCenterMatchesDirectEvaluation) {
  // Frozen from an independent numpy evaluation of the 25 offsets divided by
  // their sum.
  constexpr double kCenter = 0.16210282163712664;
  constexpr double kCorner = 0.0029690167439504968;
  constexpr double kEdgeMid = 0.021938231279714639;
  const auto g = BuildKernel(1);
  EXPECT_NEAR(g.at(2, 2), kCenter, 1e-15);
  EXPECT_NEAR(g.at(0, 0), kCorner, 1e-15);
  EXPECT_NEAR(g.at(0, 2), kEdgeMid, 1e-15);
  const auto oracle = testing::OracleKernel(1);
  EXPECT_NEAR(oracle[12], kCenter, 1e-15);
}

TEST(GaussianKernelTest, PropertiesHoldForAllSupportedWidths) {
  for (int k = 1; k <= 16; ++k) {
    const auto g = BuildKernel(k);
    const int n = g.size();
    const auto c = g.coefficients();
    EXPECT_NEAR(std::accumulate(c.begin(), c.end(), 0.0), 1.0, 1e-12) << k;
    EXPECT_GT(*std::min_element(c.begin(), c.end()), 0.0) << k;
    const auto argmax = std::max_element(c.begin(), c.end()) - c.begin();
    EXPECT_EQ(argmax, (n / 2) * n + n / 2) << k;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        ASSERT_EQ(g.at(i, j), g.at(j, i));
        ASSERT_EQ(g.at(i, j), g.at(n - 1 - i, j));
        ASSERT_EQ(g.at(i, j), g.at(i, n - 1 - j));
      }
    }
    // The separable taps reproduce the 2-D grid.
    const auto t = g.taps();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ASSERT_NEAR(t[i] * t[j], g.at(i, j), 1e-15);
  }
}

TEST(ReflectIndexTest, HalfSampleSymmetric) {
  EXPECT_EQ(ReflectIndex(-1, 5), 0);
  EXPECT_EQ(ReflectIndex(-2, 5), 1);
  EXPECT_EQ(ReflectIndex(5, 5), 4);
  EXPECT_EQ(ReflectIndex(6, 5), 3);
  EXPECT_EQ(ReflectIndex(-5, 5), 4);
  EXPECT_EQ(ReflectIndex(3, 1), 0);
  for (int i = -20; i < 25; ++i) {
    const int r = ReflectIndex(i, 5);
    EXPECT_GE(r, 0);
    EXPECT_LT(r, 5);
  }
}

TEST(LowPassTest, ConstantImageIsPreserved) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 255.0);
  for (int k : {1, 2, 4, 8}) {
    const double c = u(rng);
    const Image img(40, 33, 3, c);
    const Image out = LowPass(img, BuildKernel(k));
    for (double v : out.data()) ASSERT_NEAR(v, c, 1e-9);
  }
  const Image grey(20, 20, 3, 128.0);
  {
    const Image result = LowPass(grey, BuildKernel(4));
    for (double v : result.data()) ASSERT_EQ(v, 128.0);
  }
}

TEST(LowPassTest, ImpulseResponseIsTheKernel) {
  Image img(21, 21, 3, 0.0);
  for (int c = 0; c < 3; ++c) img.at(10, 10, c) = 255.0;
  const auto g = BuildKernel(1);
  const Image out = LowPass(img, g);
  const Image oracle = OracleConvolve(img, 1);
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      for (int c = 0; c < 3; ++c) {
        EXPECT_NEAR(out.at(10 + i, 10 + j, c), 255.0 * g.at(i + 2, j + 2), 1e-12);
        EXPECT_NEAR(out.at(10 + i, 10 + j, c), oracle.at(10 + i, 10 + j, c), 1e-12);
      }
    }
  }
  // Outside the footprint nothing leaks.
  EXPECT_EQ(out.at(0, 0, 0), 0.0);
  EXPECT_EQ(out.at(10, 13, 1), 0.0);
}

TEST(LowPassTest, MatchesDirectConvolutionOracle) {
  for (int trial = 0; trial < 6; ++trial) {
    const int k = 1 + trial % 4;
    const int h = 4 * k + 3 + trial * 7;
    const int w = 4 * k + 11 + trial * 5;
    const Image img = UniformRandomImage(h, w, 100 + trial);
    const Image fast = LowPass(img, BuildKernel(k));
    const Image slow = OracleConvolve(img, k);
    EXPECT_LE(MaxAbsDifference(fast, slow), 1e-6) << "k=" << k;
  }
}

TEST(LowPassTest, KernelAtThePermittedLimit) {
  // 2k == min(H, W): a single reflection still covers every tap.
  const Image img = UniformRandomImage(8, 12, 5);
  const Image fast = LowPass(img, BuildKernel(4));
  EXPECT_LE(MaxAbsDifference(fast, OracleConvolve(img, 4)), 1e-6);
}

TEST(LowPassTest, RejectsOversizedKernel) {
  const Image img(7, 30, 3, 1.0);
  try {
    LowPass(img, BuildKernel(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidParameter);
  }
}

TEST(LowPassTest, BlurringTwiceSmoothsFurther) {
  const Image img = SyntheticNatural(64, 64, 3);
  const auto g = BuildKernel(4);
  const Image once = LowPass(img, g);
  const Image twice = LowPass(once, g);
  EXPECT_GT(MaxAbsDifference(once, twice), 0.0);
}

TEST(LowPassTest, IsLinear) {
  const auto g = BuildKernel(2);
  const Image a = UniformRandomImage(30, 25, 1);
  const Image b = UniformRandomImage(30, 25, 2);
  const double s = 0.3;
  const double t = -1.7;
  Image combo(30, 25, 3);
  for (std::size_t i = 0; i < combo.size(); ++i) {
    combo.data()[i] = s * a.data()[i] + t * b.data()[i];
  }
  const Image la = LowPass(a, g);
  const Image lb = LowPass(b, g);
  const Image lc = LowPass(combo, g);
  for (std::size_t i = 0; i < combo.size(); ++i) {
    ASSERT_NEAR(lc.data()[i], s * la.data()[i] + t * lb.data()[i], 1e-6);
  }
}

TEST(LowPassTest, ShiftEquivariantAwayFromBorders) {
  const int k = 2;
  const int r = 2 * k;
  const auto g = BuildKernel(k);
  const Image img = UniformRandomImage(50, 60, 11);
  const int dx = 3;
  const int dy = 5;
  Image shifted(50, 60, 3);
  for (int y = 0; y < 50; ++y)
    for (int x = 0; x < 60; ++x)
      for (int c = 0; c < 3; ++c)
        shifted.at(y, x, c) = img.at((y - dy + 50) % 50, (x - dx + 60) % 60, c);
  const Image a = LowPass(img, g);
  const Image b = LowPass(shifted, g);
  // Interior: far enough from every edge and from the wrap seam.
  for (int y = dy + r + 1; y < 50 - r - 1; ++y)
    for (int x = dx + r + 1; x < 60 - r - 1; ++x)
      for (int c = 0; c < 3; ++c)
        ASSERT_NEAR(b.at(y, x, c), a.at(y - dy, x - dx, c), 1e-9);
}

TEST(DecomposeTest, ConstantImageHasNoHfc) {
  const auto pair = Decompose(Image(30, 30, 3, 77.0), BuildKernel(4));
  for (double v : pair.hfc.data()) EXPECT_NEAR(v, 0.0, 1e-9);
}

TEST(DecomposeTest, ReconstructsTheSource) {
  for (int k : {1, 2, 4, 8}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Image img = SyntheticNatural(40 + 13 * static_cast<int>(seed), 70, seed);
      const auto pair = Decompose(img, BuildKernel(k));
      EXPECT_LE(MaxAbsDifference(Add(pair.lfc, pair.hfc), img), 1e-9);
    }
  }
  const Image big = SyntheticNatural(299, 299, 42);
  const auto pair = Decompose(big, BuildKernel(4));
  EXPECT_LE(MaxAbsDifference(Add(pair.lfc, pair.hfc), big), 1e-9);
}

TEST(DecomposeTest, CheckerboardEnergyIsHighFrequency) {
  // Frozen from scipy.ndimage.convolve(mode="reflect") with the normalized
  // k=4 kernel: sum|hfc| / sum|x - mean(x)|.
  struct Case {
    int n;
    double share;
  };
  for (const auto [n, share] : {Case{64, 0.999913564543}, Case{299, 0.999895262022}}) {
    const Image img = Checkerboard(n, n);
    const auto pair = Decompose(img, BuildKernel(4));
    double mean = 0.0;
    for (double v : img.data()) mean += v;
    mean /= static_cast<double>(img.size());
    double total = 0.0;
    double hfc = 0.0;
    for (std::size_t i = 0; i < img.size(); ++i) {
      total += std::abs(img.data()[i] - mean);
      hfc += std::abs(pair.hfc.data()[i]);
    }
    EXPECT_GE(hfc / total, 0.9);
    EXPECT_NEAR(hfc / total, share, 1e-9) << n;
  }
}

}  // namespace
}  // namespace hitkit
