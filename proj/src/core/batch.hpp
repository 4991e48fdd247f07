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

#ifndef HITKIT_CORE_BATCH_HPP_
#define HITKIT_CORE_BATCH_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "attack.hpp"
#include "noise.hpp"

namespace hitkit {

struct RunManifest {
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  AttackConfig attack;
  // When set, this image (resized to each input's shape) replaces the
  // rendered proto-pattern patch.
  std::optional<std::filesystem::path> patch_file;
  bool emit_patch = false;   // hitkit_patch_<H>x<W>.png per input shape
  bool emit_report = false;  // hitkit_report.tsv
  int threads = 0;           // 0 = hardware concurrency
};

struct NoiseManifest {
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  NoiseMode mode = NoiseMode::kSemiRandom;
  NoiseAxis axis = NoiseAxis::kH;
  // Number of perturbed entries (random) or slices (semi-random) per image.
  std::size_t count = 0;
  double epsilon = 16.0;
  std::uint64_t seed = 0;
  int threads = 0;
};

struct ItemResult {
  std::string name;  // input file name
  bool ok = false;
  std::string error;
  double max_delta = 0.0;  // max |out - in| over the written 8-bit image
};

struct BatchSummary {
  std::size_t processed = 0;
  std::size_t failed = 0;
  double wall_seconds = 0.0;
  double max_delta_max = 0.0;
  double max_delta_mean = 0.0;
  std::vector<ItemResult> items;  // in sorted input order
};

// Supported image files directly inside `dir`, sorted by file name.
std::vector<std::filesystem::path> ListImages(const std::filesystem::path& dir);

// Attacks every image in the input directory and writes <stem>.png outputs.
// Invalid configurations and empty inputs throw before anything is written;
// per-image failures are recorded in the summary.
BatchSummary RunBatch(const RunManifest& manifest);

// Applies a random or semi-random noise baseline to every input image. Image i
// (in sorted order) uses DeriveSeed(seed, i) for both location sampling and
// signs.
BatchSummary RunNoiseBatch(const NoiseManifest& manifest);

enum class CheckStatus { kOk, kViolations, kMissing, kShapeMismatch, kUnreadable };

struct FileCheck {
  std::string name;
  CheckStatus status = CheckStatus::kOk;
  std::size_t violations = 0;  // pixels with any channel outside the ball
  double max_delta = 0.0;
  std::string detail;
};

struct CheckReport {
  std::size_t files = 0;
  std::size_t violations = 0;  // total violating pixels
  std::size_t problems = 0;    // files that are not kOk
  std::vector<FileCheck> entries;

  bool Clean() const noexcept { return problems == 0; }
};

// Matches every image in `original_dir` with a counterpart in
// `adversarial_dir` (same file name, else same stem with .png) and verifies
// |adv - orig| <= epsilon with adv in [0, 255].
CheckReport CheckDirs(const std::filesystem::path& original_dir,
                      const std::filesystem::path& adversarial_dir,
                      double epsilon);

std::string_view CheckStatusName(CheckStatus s) noexcept;

}  // namespace hitkit

#endif  // HITKIT_CORE_BATCH_HPP_
