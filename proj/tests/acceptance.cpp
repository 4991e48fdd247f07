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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits non-zero when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "attack.hpp"
#include "frequency.hpp"
#include "image_io.hpp"
#include "noise.hpp"
#include "oracles.hpp"
#include "patterns.hpp"
#include "tiler.hpp"

namespace hitkit {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(const char* format, auto... args) {
  std::array<char, 512> buf{};
  std::snprintf(buf.data(), buf.size(), format, args...);
  return buf.data();
}

Image RandomTestImage(std::mt19937_64& rng, int h, int w) {
  const std::uint64_t seed = rng();
  // Alternate photograph-like content, white noise and 8-bit values.
  switch (seed % 3) {
    case 0:
      return testing::SyntheticNatural(h, w, seed);
    case 1:
      return testing::UniformRandomImage(h, w, seed);
    default:
      return ToImage(Quantize(testing::SyntheticNatural(h, w, seed)));
  }
}

Outcome Reconstruction() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> side(64, 299);
  const int ks[] = {1, 2, 4, 8};
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Image x = RandomTestImage(rng, side(rng), side(rng));
    const FrequencyPair f = Decompose(x, GaussianKernel(ks[i % 4]));
    worst = std::max(worst, MaxAbsDifference(Add(f.lfc, f.hfc), x));
  }
  const double t = Seconds(start);
  return {worst <= 1e-9 && t < 30.0,
          Fmt("max|lfc+hfc-x|=%.3g (<=1e-9) runtime=%.2fs (<30s)", worst, t)};
}

Outcome EpsilonBallFuzz() {
  const auto start = Clock::now();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::map<std::pair<int, int>, ProtoPattern> protos;
  const int ks[] = {1, 2, 4, 8};
  std::size_t violations = 0;
  std::size_t quantized_violations = 0;
  double worst_excess = 0.0;
  for (int i = 0; i < 1000; ++i) {
    AttackConfig cfg;
    cfg.pattern.kind = static_cast<PatternKind>(rng() % 3);
    cfg.pattern.density = 1 + static_cast<int>(rng() % 12);
    cfg.tile.tile_scheme = 1 + static_cast<int>(rng() % 16);
    cfg.lambda = std::max(1e-3, u(rng) * AttackConfig::kMaxLambda);
    cfg.epsilon = (i % 5 == 0) ? std::floor(u(rng) * 33.0) : u(rng) * 64.0;
    cfg.k = ks[rng() % 4];
    cfg.variant = (rng() & 1) ? Variant::kWithLF : Variant::kWithoutLF;
    const int lo = 4 * cfg.k;
    const int h = lo + static_cast<int>(rng() % (300 - lo));
    const int w = lo + static_cast<int>(rng() % (300 - lo));
    cfg.tile.target_h = h;
    cfg.tile.target_w = w;

    auto key = std::make_pair(static_cast<int>(cfg.pattern.kind), cfg.pattern.density);
    auto it = protos.find(key);
    if (it == protos.end()) it = protos.emplace(key, RenderProto(cfg.pattern)).first;
    const Image patch = MakePatch(it->second, cfg.tile);

    const Image x = RandomTestImage(rng, h, w);
    const Image adv = Hit(x, patch, cfg);
    const double d = MaxAbsDifference(adv, x);
    if (d > cfg.epsilon || !InDisplayRange(adv)) {
      ++violations;
      worst_excess = std::max(worst_excess, d - cfg.epsilon);
    }
    // The 8-bit output written to disk, against the 8-bit source.
    const Image8 src = Quantize(x);
    const Image8 q = QuantizeWithinBall(Hit(ToImage(src), patch, cfg), src, cfg.epsilon);
    for (std::size_t j = 0; j < q.pixels.size(); ++j) {
      if (std::abs(static_cast<double>(q.pixels[j]) - src.pixels[j]) > cfg.epsilon) {
        ++quantized_violations;
        break;
      }
    }
  }
  const double t = Seconds(start);
  return {violations == 0 && quantized_violations == 0 && t < 120.0,
          Fmt("cases=1000 violations=%zu quantized_violations=%zu worst_excess=%.3g "
              "runtime=%.1fs (<120s)",
              violations, quantized_violations, worst_excess, t)};
}

Outcome KernelProperties() {
  int bad = 0;
  double worst_sum = 0.0;
  for (int k = 1; k <= 16; ++k) {
    const GaussianKernel g(k);
    const int r = g.radius();
    // Offsets from the center in [-r, r].
    const auto at = [&](int i, int j) { return g.at(i + r, j + r); };
    double sum = 0.0;
    bool ok = g.size() == 4 * k + 1;
    const double center = at(0, 0);
    for (int i = -r; i <= r; ++i) {
      for (int j = -r; j <= r; ++j) {
        const double v = at(i, j);
        sum += v;
        ok = ok && v > 0.0;
        ok = ok && v == at(-i, j) && v == at(i, -j) && v == at(-i, -j) &&
             v == at(j, i) && v == at(-j, i) && v == at(j, -i) && v == at(-j, -i);
        ok = ok && ((i == 0 && j == 0) || v < center);
      }
    }
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    ok = ok && std::abs(sum - 1.0) <= 1e-12;
    bad += ok ? 0 : 1;
  }
  const int size4 = GaussianKernel(4).size();
  return {bad == 0 && size4 == 17,
          Fmt("k=1..16 failing=%d max|sum-1|=%.3g k=4 size=%dx%d", bad, worst_sum, size4,
              size4)};
}

Outcome ConvolutionOracle() {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> side(64, 180);
  const int ks[] = {1, 2, 4, 8};
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int k = ks[i % 4];
    const Image x = RandomTestImage(rng, side(rng), side(rng));
    worst = std::max(worst, MaxAbsDifference(LowPass(x, GaussianKernel(k)),
                                             testing::OracleConvolve(x, k)));
  }
  return {worst <= 1e-6, Fmt("images=20 max|fast-oracle|=%.3g (<=1e-6)", worst)};
}

Outcome TilePeriodicity() {
  const ProtoPattern proto = RenderProto({});
  std::string sizes;
  bool ok = true;
  for (int n = 1; n <= 7; ++n) {
    TileConfig cfg;
    cfg.tile_scheme = n;
    const PatchStages st = MakePatchStages(proto.image, cfg);
    const int s = st.tile.height();
    ok = ok && s == 300 / n && st.mosaic.height() == 300 && st.mosaic.width() == 300;
    for (int y = 0; y < 300; ++y) {
      for (int x = 0; x < 300; ++x) {
        for (int c = 0; c < 3; ++c) {
          const double v = st.mosaic.at(y, x, c);
          if (y + s < 300 && st.mosaic.at(y + s, x, c) != v) ok = false;
          if (x + s < 300 && st.mosaic.at(y, x + s, c) != v) ok = false;
        }
      }
    }
    sizes += (n > 1 ? "," : "") + std::to_string(s);
  }
  TileConfig six;
  TileConfig seven;
  seven.tile_scheme = 7;
  ok = ok && six.TileSize() == 50 && seven.TileSize() == 42;
  return {ok, "periods(n=1..7)=" + sizes + " n=6->50 n=7->42"};
}

Image Rotate90(const Image& img) {
  Image out(img.width(), img.height(), img.channels());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      for (int c = 0; c < img.channels(); ++c)
        out.at(x, img.height() - 1 - y, c) = img.at(y, x, c);
  return out;
}

Outcome PatternSymmetry() {
  int bad = 0;
  for (PatternKind kind : {PatternKind::kCircle, PatternKind::kSquare,
                           PatternKind::kRhombus}) {
    for (int density = 1; density <= 12; ++density) {
      ProtoPatternSpec spec;
      spec.kind = kind;
      spec.density = density;
      const Image a = RenderProto(spec).image;
      const Image b = RenderProto(spec).image;
      const bool same = Quantize(a).pixels == Quantize(b).pixels && a == b;
      const bool rot = Rotate90(a) == a;
      bad += (same && rot && a.height() == 600) ? 0 : 1;
    }
  }
  return {bad == 0, Fmt("kinds=3 densities=1..12 canvas=600 failing=%d", bad)};
}

Outcome SemiRandomStructure() {
  std::mt19937_64 rng(5);
  int bad = 0;
  int cases = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const NoiseShape shape{1 + static_cast<int>(rng() % 300),
                           1 + static_cast<int>(rng() % 300), 3};
    NoiseSpec spec;
    spec.mode = NoiseMode::kSemiRandom;
    spec.axis = (trial & 1) ? NoiseAxis::kW : NoiseAxis::kH;
    spec.epsilon = 1.0 + static_cast<double>(rng() % 32);
    spec.seed = rng();
    const int extent = spec.axis == NoiseAxis::kH ? shape.height : shape.width;
    const std::size_t count = rng() % (extent + 1);
    spec.slices = SampleSliceIndices(extent, count, rng());
    std::vector<char> chosen(extent, 0);
    for (int s : spec.slices) chosen[s] = 1;
    const Image n = SemiRandomNoise(shape, spec);
    bool ok = true;
    for (int s = 0; s < extent; ++s) {
      const double first = spec.axis == NoiseAxis::kH ? n.at(s, 0, 0) : n.at(0, s, 0);
      if (chosen[s] && std::abs(first) != spec.epsilon) ok = false;
      const int other = spec.axis == NoiseAxis::kH ? shape.width : shape.height;
      for (int o = 0; o < other; ++o) {
        for (int c = 0; c < 3; ++c) {
          const double v = spec.axis == NoiseAxis::kH ? n.at(s, o, c) : n.at(o, s, c);
          if (v != (chosen[s] ? first : 0.0)) ok = false;
        }
      }
    }
    bad += ok ? 0 : 1;
    ++cases;
  }
  return {bad == 0, Fmt("cases=%d failing=%d", cases, bad)};
}

Outcome RealTime() {
  const AttackConfig cfg;
  const Image patch = BuildPatternPatch(cfg, 299, 299);
  const HybridTransform transform(patch, cfg);
  const Image8 src = Quantize(testing::SyntheticNatural(299, 299, 17));
  const Image x = ToImage(src);
  for (int i = 0; i < 3; ++i) (void)QuantizeWithinBall(transform.Apply(x), src, 16.0);
  std::vector<double> ms;
  for (int i = 0; i < 21; ++i) {
    const auto start = Clock::now();
    const Image8 out = QuantizeWithinBall(transform.Apply(x), src, cfg.epsilon);
    ms.push_back(Seconds(start) * 1000.0);
    if (out.pixels.empty()) return {false, "empty output"};
  }
  std::sort(ms.begin(), ms.end());
  const double median = ms[ms.size() / 2];
  return {median < 100.0,
          Fmt("299x299 single-threaded median=%.2fms max=%.2fms (<100ms)", median,
              ms.back())};
}

int RunCli(const std::string& args, std::string* output) {
  const std::string cmd = std::string(HITKIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return -1;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
    if (output != nullptr) *output += buf.data();
  }
  const int status = ::pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::map<std::string, std::string> ReadTree(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    files[e.path().filename().string()] =
        std::string(std::istreambuf_iterator<char>(in), {});
  }
  return files;
}

Outcome EndToEnd() {
  const fs::path root = fs::temp_directory_path() / "hitkit_acceptance_e2e";
  fs::remove_all(root);
  fs::create_directories(root / "in");
  for (int i = 0; i < 50; ++i) {
    const int h = 200 + (i * 37) % 140;
    const int w = 200 + (i * 53) % 140;
    const Image8 img = Quantize(testing::SyntheticNatural(h, w, 1000 + i));
    const fs::path p = root / "in" / Fmt("img%02d", i);
    if (i % 5 == 4) {
      WriteJpeg(p.string() + ".jpg", img, 90);
    } else {
      WritePng(p.string() + ".png", img);
    }
  }
  const std::string in = (root / "in").string();
  std::string log;
  const int a = RunCli("attack -i " + in + " -o " + (root / "a").string(), &log);
  const int b = RunCli("attack -i " + in + " -o " + (root / "b").string(), &log);
  std::string check;
  const int c = RunCli("check -q --original " + in + " --adversarial " +
                           (root / "a").string() + " --epsilon 16",
                       &check);
  bool identical = false;
  std::size_t files = 0;
  if (a == 0 && b == 0) {
    const auto ta = ReadTree(root / "a");
    identical = ta == ReadTree(root / "b");
    files = ta.size();
  }
  std::string total = check.substr(check.rfind("files="));
  while (!total.empty() && total.back() == '\n') total.pop_back();
  fs::remove_all(root);
  const bool clean = c == 0 && total.find("violations=0 ") != std::string::npos;
  return {identical && files == 50 && clean,
          Fmt("outputs=%zu byte_identical=%s check: %s", files,
              identical ? "yes" : "no", total.c_str())};
}

}  // namespace
}  // namespace hitkit

int main() {
  using hitkit::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"reconstruction_identity", hitkit::Reconstruction},
      {"epsilon_ball_fuzz", hitkit::EpsilonBallFuzz},
      {"kernel_properties", hitkit::KernelProperties},
      {"convolution_oracle", hitkit::ConvolutionOracle},
      {"tile_periodicity", hitkit::TilePeriodicity},
      {"pattern_determinism_symmetry", hitkit::PatternSymmetry},
      {"semi_random_structure", hitkit::SemiRandomStructure},
      {"real_time_generation", hitkit::RealTime},
      {"end_to_end_determinism", hitkit::EndToEnd},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
