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

#include "batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "config.hpp"
#include "error.hpp"
#include "image_io.hpp"
#include "resample.hpp"

namespace hitkit {

namespace fs = std::filesystem;

std::vector<fs::path> ListImages(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    ThrowInvalid("input directory " + dir.string() + " does not exist");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && HasImageExtension(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

namespace {

int ResolveThreads(int requested, std::size_t jobs) {
  int n = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(n, 1);
  return static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Runs fn(i) for i in [0, jobs) on a shared work queue.
void ParallelFor(std::size_t jobs, int threads,
                 const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs; i = next++) fn(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
}

double MaxDelta8(const Image8& a, const Image8& b) {
  int worst = 0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    worst = std::max(worst, std::abs(int{a.pixels[i]} - int{b.pixels[i]}));
  }
  return worst;
}

// Marks later inputs whose output name collides with an earlier one.
std::vector<std::string> AssignOutputNames(const std::vector<fs::path>& inputs,
                                           std::vector<ItemResult>& items) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    names.push_back(inputs[i].stem().string() + ".png");
    if (!seen.insert(names.back()).second) {
      items[i].error = "output name " + names.back() +
                       " collides with an earlier input";
      names.back().clear();
    }
  }
  return names;
}

void Summarize(BatchSummary& s) {
  double total = 0.0;
  for (const auto& it : s.items) {
    if (it.ok) {
      ++s.processed;
      s.max_delta_max = std::max(s.max_delta_max, it.max_delta);
      total += it.max_delta;
    } else {
      ++s.failed;
    }
  }
  if (s.processed > 0) s.max_delta_mean = total / static_cast<double>(s.processed);
}

using Clock = std::chrono::steady_clock;

// Drives `process(input, output_path, index)` over every input image.
BatchSummary RunGeneric(
    const fs::path& input_dir, const fs::path& output_dir, int threads,
    const std::function<double(const fs::path&, const fs::path&, std::size_t)>&
        process) {
  const auto start = Clock::now();
  const auto inputs = ListImages(input_dir);
  if (inputs.empty()) {
    ThrowInvalid("input directory " + input_dir.string() +
                 " contains no PNG or JPEG images");
  }
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec) ThrowIo("cannot create output directory " + output_dir.string());

  BatchSummary summary;
  summary.items.resize(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    summary.items[i].name = inputs[i].filename().string();
  }
  const auto names = AssignOutputNames(inputs, summary.items);

  ParallelFor(inputs.size(), ResolveThreads(threads, inputs.size()),
              [&](std::size_t i) {
                ItemResult& item = summary.items[i];
                if (names[i].empty()) return;
                try {
                  item.max_delta = process(inputs[i], output_dir / names[i], i);
                  item.ok = true;
                } catch (const std::exception& e) {
                  item.error = e.what();
                }
              });

  Summarize(summary);
  summary.wall_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return summary;
}

// One HybridTransform per input shape, built on first use.
class TransformCache {
 public:
  TransformCache(const AttackConfig& cfg, std::optional<Image> patch_source)
      : cfg_(cfg), patch_source_(std::move(patch_source)) {}

  std::shared_ptr<const HybridTransform> Get(int h, int w) {
    std::lock_guard lock(mu_);
    auto& slot = cache_[{h, w}];
    if (!slot) {
      const Image patch = patch_source_ ? ResizeBilinear(*patch_source_, h, w)
                                        : BuildPatternPatch(cfg_, h, w);
      slot = std::make_shared<const HybridTransform>(patch, cfg_);
      patches_[{h, w}] = patch;
    }
    return slot;
  }

  const std::map<std::pair<int, int>, Image>& patches() const { return patches_; }

 private:
  AttackConfig cfg_;
  std::optional<Image> patch_source_;
  std::mutex mu_;
  std::map<std::pair<int, int>, std::shared_ptr<const HybridTransform>> cache_;
  std::map<std::pair<int, int>, Image> patches_;
};

void WriteBatchReport(const fs::path& path, const AttackConfig& cfg,
                      const BatchSummary& s) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) ThrowIo("cannot write " + path.string());
  out << "# hitkit attack report\n";
  std::istringstream cfg_lines(FormatConfig(cfg));
  for (std::string line; std::getline(cfg_lines, line);) out << "# " << line << "\n";
  out << "# processed=" << s.processed << " failed=" << s.failed
      << " max_delta_max=" << s.max_delta_max << "\n";
  out << "file\tstatus\tmax_delta\n";
  for (const auto& it : s.items) {
    out << it.name << '\t' << (it.ok ? "ok" : "failed") << '\t';
    if (it.ok) {
      out << it.max_delta;
    } else {
      out << it.error;
    }
    out << '\n';
  }
}

}  // namespace

BatchSummary RunBatch(const RunManifest& m) {
  m.attack.Validate();
  std::optional<Image> patch_source;
  if (m.patch_file) patch_source = ReadImage(*m.patch_file);
  TransformCache cache(m.attack, std::move(patch_source));

  const double eps = m.attack.epsilon;
  auto summary = RunGeneric(
      m.input_dir, m.output_dir, m.threads,
      [&](const fs::path& in, const fs::path& out, std::size_t) {
        const Image8 raw = ReadImage8(in);
        const Image x = ToImage(raw);
        const auto transform = cache.Get(x.height(), x.width());
        const Image8 adv = QuantizeWithinBall(transform->Apply(x), raw, eps);
        WritePng(out, adv);
        return MaxDelta8(adv, raw);
      });

  if (m.emit_patch) {
    for (const auto& [shape, patch] : cache.patches()) {
      WritePng(m.output_dir / ("hitkit_patch_" + std::to_string(shape.first) +
                               "x" + std::to_string(shape.second) + ".png"),
               Quantize(patch));
    }
  }
  if (m.emit_report) {
    WriteBatchReport(m.output_dir / "hitkit_report.tsv", m.attack, summary);
  }
  return summary;
}

BatchSummary RunNoiseBatch(const NoiseManifest& m) {
  if (!(m.epsilon >= 0.0 && m.epsilon <= 255.0)) {
    ThrowInvalid("epsilon must be in [0, 255], got " + std::to_string(m.epsilon));
  }
  return RunGeneric(
      m.input_dir, m.output_dir, m.threads,
      [&](const fs::path& in, const fs::path& out, std::size_t index) {
        const Image8 raw = ReadImage8(in);
        const Image x = ToImage(raw);
        const NoiseShape shape{x.height(), x.width(), x.channels()};
        const std::uint64_t seed = DeriveSeed(m.seed, index);
        NoiseSpec spec;
        spec.mode = m.mode;
        spec.axis = m.axis;
        spec.epsilon = m.epsilon;
        spec.seed = seed;
        if (m.mode == NoiseMode::kRandom) {
          spec.pixels = SamplePixelLocations(shape, m.count, seed);
        } else {
          const int extent = m.axis == NoiseAxis::kH ? shape.height : shape.width;
          spec.slices = SampleSliceIndices(extent, m.count, seed);
        }
        const Image adv = ApplyNoise(x, MakeNoise(shape, spec), m.epsilon);
        const Image8 q = QuantizeWithinBall(adv, raw, m.epsilon);
        WritePng(out, q);
        return MaxDelta8(q, raw);
      });
}

std::string_view CheckStatusName(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::kOk:
      return "ok";
    case CheckStatus::kViolations:
      return "violations";
    case CheckStatus::kMissing:
      return "missing";
    case CheckStatus::kShapeMismatch:
      return "shape-mismatch";
    case CheckStatus::kUnreadable:
      return "unreadable";
  }
  return "unknown";
}

CheckReport CheckDirs(const fs::path& original_dir, const fs::path& adversarial_dir,
                      double epsilon) {
  if (!(epsilon >= 0.0)) ThrowInvalid("epsilon must be >= 0");
  std::error_code ec;
  if (!fs::is_directory(adversarial_dir, ec)) {
    ThrowInvalid("adversarial directory " + adversarial_dir.string() +
                 " does not exist");
  }
  CheckReport report;
  for (const auto& orig : ListImages(original_dir)) {
    FileCheck fc;
    fc.name = orig.filename().string();
    fs::path adv = adversarial_dir / orig.filename();
    if (!fs::exists(adv)) adv = adversarial_dir / (orig.stem().string() + ".png");
    if (!fs::exists(adv)) {
      fc.status = CheckStatus::kMissing;
      fc.detail = "no counterpart in " + adversarial_dir.string();
    } else {
      try {
        const Image8 a = ReadImage8(orig);
        const Image8 b = ReadImage8(adv);
        if (a.height != b.height || a.width != b.width || a.channels != b.channels) {
          fc.status = CheckStatus::kShapeMismatch;
          fc.detail = std::to_string(a.height) + "x" + std::to_string(a.width) +
                      " vs " + std::to_string(b.height) + "x" +
                      std::to_string(b.width);
        } else {
          const std::size_t ch = static_cast<std::size_t>(a.channels);
          for (std::size_t p = 0; p < a.pixels.size(); p += ch) {
            bool bad = false;
            for (std::size_t c = 0; c < ch; ++c) {
              const double d = std::abs(double(b.pixels[p + c]) - a.pixels[p + c]);
              fc.max_delta = std::max(fc.max_delta, d);
              bad = bad || d > epsilon;
            }
            fc.violations += bad ? 1 : 0;
          }
          if (fc.violations > 0) fc.status = CheckStatus::kViolations;
        }
      } catch (const Error& e) {
        fc.status = CheckStatus::kUnreadable;
        fc.detail = e.what();
      }
    }
    ++report.files;
    report.violations += fc.violations;
    if (fc.status != CheckStatus::kOk) ++report.problems;
    report.entries.push_back(std::move(fc));
  }
  return report;
}

}  // namespace hitkit
