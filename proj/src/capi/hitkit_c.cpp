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

#include "hitkit/hitkit.h"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>
#include <utility>

#include "analysis.hpp"
#include "attack.hpp"
#include "batch.hpp"
#include "config.hpp"
#include "error.hpp"
#include "frequency.hpp"
#include "image_io.hpp"
#include "noise.hpp"
#include "patterns.hpp"
#include "resample.hpp"
#include "tensor_io.hpp"
#include "tiler.hpp"

struct hit_image {
  hitkit::Image img;
};
struct hit_kernel {
  hitkit::GaussianKernel kernel;
};
struct hit_transform {
  hitkit::HybridTransform transform;
};
struct hit_tensor {
  hitkit::Tensor tensor;
};
struct hit_report {
  hitkit::AnalysisReport report;
};

namespace {

thread_local std::string g_last_error;

hit_status Fail(hit_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

hit_status FromCode(hitkit::ErrorCode code) {
  switch (code) {
    case hitkit::ErrorCode::kInvalidParameter:
      return HIT_ERR_INVALID_PARAMETER;
    case hitkit::ErrorCode::kDegenerateInput:
      return HIT_ERR_DEGENERATE_INPUT;
    case hitkit::ErrorCode::kIo:
      return HIT_ERR_IO;
  }
  return HIT_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
hit_status Guard(Fn&& fn) noexcept {
  try {
    fn();
    return HIT_OK;
  } catch (const hitkit::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(HIT_ERR_INTERNAL, "out of memory");
  } catch (const std::filesystem::filesystem_error& e) {
    return Fail(HIT_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return Fail(HIT_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(HIT_ERR_INTERNAL, "unknown error");
  }
}

#define HIT_REQUIRE(ptr)                                             \
  do {                                                               \
    if ((ptr) == nullptr) {                                          \
      return Fail(HIT_ERR_NULL_ARGUMENT, #ptr " must not be NULL");  \
    }                                                                \
  } while (0)

hit_image* Wrap(hitkit::Image img) { return new hit_image{std::move(img)}; }

hitkit::ProtoPatternSpec ToCpp(const hit_pattern_spec& s) {
  hitkit::ProtoPatternSpec out;
  switch (s.kind) {
    case HIT_PATTERN_CIRCLE:
      out.kind = hitkit::PatternKind::kCircle;
      break;
    case HIT_PATTERN_SQUARE:
      out.kind = hitkit::PatternKind::kSquare;
      break;
    case HIT_PATTERN_RHOMBUS:
      out.kind = hitkit::PatternKind::kRhombus;
      break;
    default:
      hitkit::ThrowInvalid("unknown pattern kind " + std::to_string(s.kind));
  }
  out.density = s.density;
  out.canvas = s.canvas;
  out.stroke_width = s.stroke_width;
  if (s.palette_size < 1 || s.palette_size > HIT_MAX_PALETTE) {
    hitkit::ThrowInvalid("palette size must be in [1, 16]");
  }
  out.palette.clear();
  for (int i = 0; i < s.palette_size; ++i) {
    out.palette.push_back({s.palette[i][0], s.palette[i][1], s.palette[i][2]});
  }
  out.background = {s.background[0], s.background[1], s.background[2]};
  return out;
}

hit_pattern_spec FromCpp(const hitkit::ProtoPatternSpec& s) {
  hit_pattern_spec out{};
  out.kind = static_cast<hit_pattern_kind>(static_cast<int>(s.kind));
  out.density = s.density;
  out.canvas = s.canvas;
  out.stroke_width = s.stroke_width;
  const std::size_t n = std::min<std::size_t>(s.palette.size(), HIT_MAX_PALETTE);
  if (s.palette.size() > HIT_MAX_PALETTE) {
    hitkit::ThrowInvalid("palette holds more than 16 colors");
  }
  out.palette_size = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < 3; ++c) out.palette[i][c] = s.palette[i][c];
  }
  for (int c = 0; c < 3; ++c) out.background[c] = s.background[c];
  return out;
}

hitkit::TileConfig ToCpp(const hit_tile_config& t) {
  hitkit::TileConfig out;
  out.tile_scheme = t.tile_scheme;
  out.intermediate = t.intermediate;
  out.target_h = t.target_h;
  out.target_w = t.target_w;
  switch (t.crop_anchor) {
    case HIT_CROP_CENTER:
      out.crop_anchor = hitkit::CropAnchor::kCenter;
      break;
    case HIT_CROP_TOP_LEFT:
      out.crop_anchor = hitkit::CropAnchor::kTopLeft;
      break;
    case HIT_CROP_CUSTOM:
      out.crop_anchor = hitkit::CropAnchor::kCustom;
      break;
    default:
      hitkit::ThrowInvalid("unknown crop anchor");
  }
  out.crop_x = t.crop_x;
  out.crop_y = t.crop_y;
  return out;
}

hit_tile_config FromCpp(const hitkit::TileConfig& t) {
  hit_tile_config out{};
  out.tile_scheme = t.tile_scheme;
  out.intermediate = t.intermediate;
  out.target_h = t.target_h;
  out.target_w = t.target_w;
  out.crop_anchor = static_cast<hit_crop_anchor>(static_cast<int>(t.crop_anchor));
  out.crop_x = t.crop_x;
  out.crop_y = t.crop_y;
  return out;
}

hitkit::AttackConfig ToCpp(const hit_attack_config& c) {
  hitkit::AttackConfig out;
  out.epsilon = c.epsilon;
  out.lambda = c.lambda;
  out.k = c.k;
  if (c.variant == HIT_VARIANT_WITH_LF) {
    out.variant = hitkit::Variant::kWithLF;
  } else if (c.variant == HIT_VARIANT_WITHOUT_LF) {
    out.variant = hitkit::Variant::kWithoutLF;
  } else {
    hitkit::ThrowInvalid("unknown variant");
  }
  out.pattern = ToCpp(c.pattern);
  out.tile = ToCpp(c.tile);
  out.seed = c.seed;
  return out;
}

hit_attack_config FromCpp(const hitkit::AttackConfig& c) {
  hit_attack_config out{};
  out.epsilon = c.epsilon;
  out.lambda = c.lambda;
  out.k = c.k;
  out.variant = c.variant == hitkit::Variant::kWithLF ? HIT_VARIANT_WITH_LF
                                                       : HIT_VARIANT_WITHOUT_LF;
  out.pattern = FromCpp(c.pattern);
  out.tile = FromCpp(c.tile);
  out.seed = c.seed;
  return out;
}

hitkit::DominanceMasks MaskFromImage(const hitkit::Image& mask) {
  if (mask.channels() != 1) hitkit::ThrowInvalid("mask must have one channel");
  hitkit::DominanceMasks m;
  m.height = mask.height();
  m.width = mask.width();
  for (double v : mask.data()) {
    m.high.push_back(v != 0.0 ? 1 : 0);
    m.low.push_back(v != 0.0 ? 0 : 1);
  }
  return m;
}

hit_batch_summary ToC(const hitkit::BatchSummary& s) {
  return {s.processed, s.failed, s.wall_seconds, s.max_delta_max,
          s.max_delta_mean};
}

void ReportFailures(const hitkit::BatchSummary& s, hit_failure_cb cb, void* user) {
  if (cb == nullptr) return;
  for (const auto& item : s.items) {
    if (!item.ok) cb(item.name.c_str(), item.error.c_str(), user);
  }
}

}  // namespace

extern "C" {

const char* hit_version(void) { return "0.1.0"; }

const char* hit_status_string(hit_status status) {
  switch (status) {
    case HIT_OK:
      return "ok";
    case HIT_ERR_INVALID_PARAMETER:
      return "invalid parameter";
    case HIT_ERR_DEGENERATE_INPUT:
      return "degenerate input";
    case HIT_ERR_IO:
      return "i/o error";
    case HIT_ERR_NULL_ARGUMENT:
      return "null argument";
    case HIT_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* hit_last_error(void) { return g_last_error.c_str(); }

// images

hit_status hit_image_create(int height, int width, int channels, double fill,
                            hit_image** out) {
  HIT_REQUIRE(out);
  return Guard([&] { *out = Wrap(hitkit::Image(height, width, channels, fill)); });
}

hit_status hit_image_from_data(const double* data, int height, int width,
                               int channels, hit_image** out) {
  HIT_REQUIRE(data);
  HIT_REQUIRE(out);
  return Guard([&] {
    hitkit::Image img(height, width, channels);
    std::copy(data, data + img.size(), img.data().begin());
    *out = Wrap(std::move(img));
  });
}

hit_status hit_image_clone(const hit_image* img, hit_image** out) {
  HIT_REQUIRE(img);
  HIT_REQUIRE(out);
  return Guard([&] { *out = Wrap(img->img); });
}

void hit_image_destroy(hit_image* img) { delete img; }

int hit_image_height(const hit_image* img) { return img ? img->img.height() : 0; }
int hit_image_width(const hit_image* img) { return img ? img->img.width() : 0; }
int hit_image_channels(const hit_image* img) {
  return img ? img->img.channels() : 0;
}
size_t hit_image_size(const hit_image* img) { return img ? img->img.size() : 0; }
const double* hit_image_data(const hit_image* img) {
  return img ? img->img.data().data() : nullptr;
}
double* hit_image_data_mut(hit_image* img) {
  return img ? img->img.data().data() : nullptr;
}

hit_status hit_image_load(const char* path, hit_image** out) {
  HIT_REQUIRE(path);
  HIT_REQUIRE(out);
  return Guard([&] { *out = Wrap(hitkit::ReadImage(path)); });
}

hit_status hit_image_save_png(const hit_image* img, const char* path) {
  HIT_REQUIRE(img);
  HIT_REQUIRE(path);
  return Guard([&] { hitkit::WritePng(path, hitkit::Quantize(img->img)); });
}

hit_status hit_image_resize_bilinear(const hit_image* img, int height, int width,
                                     hit_image** out) {
  HIT_REQUIRE(img);
  HIT_REQUIRE(out);
  return Guard(
      [&] { *out = Wrap(hitkit::ResizeBilinear(img->img, height, width)); });
}

hit_status hit_image_max_abs_diff(const hit_image* a, const hit_image* b,
                                  double* out) {
  HIT_REQUIRE(a);
  HIT_REQUIRE(b);
  HIT_REQUIRE(out);
  return Guard([&] { *out = hitkit::MaxAbsDifference(a->img, b->img); });
}

// frequency

hit_status hit_kernel_create(int k, hit_kernel** out) {
  HIT_REQUIRE(out);
  return Guard([&] { *out = new hit_kernel{hitkit::GaussianKernel(k)}; });
}

void hit_kernel_destroy(hit_kernel* kernel) { delete kernel; }

int hit_kernel_size(const hit_kernel* kernel) {
  return kernel ? kernel->kernel.size() : 0;
}

const double* hit_kernel_coefficients(const hit_kernel* kernel) {
  return kernel ? kernel->kernel.coefficients().data() : nullptr;
}

hit_status hit_low_pass(const hit_image* img, const hit_kernel* kernel,
                        hit_image** lfc) {
  HIT_REQUIRE(img);
  HIT_REQUIRE(kernel);
  HIT_REQUIRE(lfc);
  return Guard([&] { *lfc = Wrap(hitkit::LowPass(img->img, kernel->kernel)); });
}

hit_status hit_decompose(const hit_image* img, const hit_kernel* kernel,
                         hit_image** lfc, hit_image** hfc) {
  HIT_REQUIRE(img);
  HIT_REQUIRE(kernel);
  HIT_REQUIRE(lfc);
  HIT_REQUIRE(hfc);
  return Guard([&] {
    auto pair = hitkit::Decompose(img->img, kernel->kernel);
    auto low = std::make_unique<hit_image>(hit_image{std::move(pair.lfc)});
    auto high = std::make_unique<hit_image>(hit_image{std::move(pair.hfc)});
    *lfc = low.release();
    *hfc = high.release();
  });
}

// patterns

void hit_pattern_spec_default(hit_pattern_spec* spec) {
  if (spec) *spec = FromCpp(hitkit::ProtoPatternSpec{});
}

hit_status hit_render_proto(const hit_pattern_spec* spec, hit_image** out) {
  HIT_REQUIRE(spec);
  HIT_REQUIRE(out);
  return Guard([&] { *out = Wrap(hitkit::RenderProto(ToCpp(*spec)).image); });
}

// tiler

void hit_tile_config_default(hit_tile_config* cfg) {
  if (cfg) *cfg = FromCpp(hitkit::TileConfig{});
}

hit_status hit_make_patch(const hit_image* proto, const hit_tile_config* cfg,
                          hit_image** out) {
  HIT_REQUIRE(proto);
  HIT_REQUIRE(cfg);
  HIT_REQUIRE(out);
  return Guard([&] { *out = Wrap(hitkit::MakePatch(proto->img, ToCpp(*cfg))); });
}

hit_status hit_make_mosaic(const hit_image* proto, const hit_tile_config* cfg,
                           hit_image** out) {
  HIT_REQUIRE(proto);
  HIT_REQUIRE(cfg);
  HIT_REQUIRE(out);
  return Guard([&] {
    *out = Wrap(hitkit::MakePatchStages(proto->img, ToCpp(*cfg)).mosaic);
  });
}

// attack

void hit_attack_config_default(hit_attack_config* cfg) {
  if (cfg) *cfg = FromCpp(hitkit::AttackConfig{});
}

hit_status hit_attack_config_set(hit_attack_config* cfg, const char* key,
                                 const char* value) {
  HIT_REQUIRE(cfg);
  HIT_REQUIRE(key);
  HIT_REQUIRE(value);
  return Guard([&] {
    auto c = ToCpp(*cfg);
    hitkit::SetConfigValue(c, key, value);
    *cfg = FromCpp(c);
  });
}

hit_status hit_attack_config_load(hit_attack_config* cfg, const char* path) {
  HIT_REQUIRE(cfg);
  HIT_REQUIRE(path);
  return Guard([&] {
    auto c = ToCpp(*cfg);
    hitkit::LoadConfigFile(c, path);
    *cfg = FromCpp(c);
  });
}

hit_status hit_attack_config_validate(const hit_attack_config* cfg) {
  HIT_REQUIRE(cfg);
  return Guard([&] { ToCpp(*cfg).Validate(); });
}

hit_status hit_build_patch(const hit_attack_config* cfg, int height, int width,
                           hit_image** out) {
  HIT_REQUIRE(cfg);
  HIT_REQUIRE(out);
  return Guard([&] {
    const auto c = ToCpp(*cfg);
    c.Validate();
    *out = Wrap(hitkit::BuildPatternPatch(c, height, width));
  });
}

hit_status hit_hybrid(const hit_image* x, const hit_image* patch,
                      const hit_attack_config* cfg, hit_image** out) {
  HIT_REQUIRE(x);
  HIT_REQUIRE(patch);
  HIT_REQUIRE(cfg);
  HIT_REQUIRE(out);
  return Guard([&] { *out = Wrap(hitkit::Hit(x->img, patch->img, ToCpp(*cfg))); });
}

hit_status hit_transform_create(const hit_image* patch,
                                const hit_attack_config* cfg,
                                hit_transform** out) {
  HIT_REQUIRE(patch);
  HIT_REQUIRE(cfg);
  HIT_REQUIRE(out);
  return Guard([&] {
    *out = new hit_transform{hitkit::HybridTransform(patch->img, ToCpp(*cfg))};
  });
}

void hit_transform_destroy(hit_transform* t) { delete t; }

hit_status hit_transform_apply(const hit_transform* t, const hit_image* x,
                               hit_image** out) {
  HIT_REQUIRE(t);
  HIT_REQUIRE(x);
  HIT_REQUIRE(out);
  return Guard([&] { *out = Wrap(t->transform.Apply(x->img)); });
}

hit_status hit_transform_raw(const hit_transform* t, const hit_image* x,
                             hit_image** out) {
  HIT_REQUIRE(t);
  HIT_REQUIRE(x);
  HIT_REQUIRE(out);
  return Guard([&] { *out = Wrap(t->transform.Raw(x->img)); });
}

// noise

hit_status hit_random_noise(int height, int width, int channels,
                            const int32_t* locations, size_t count,
                            double epsilon, uint64_t seed, hit_image** out) {
  HIT_REQUIRE(out);
  if (count > 0) HIT_REQUIRE(locations);
  return Guard([&] {
    hitkit::NoiseSpec spec;
    spec.mode = hitkit::NoiseMode::kRandom;
    spec.epsilon = epsilon;
    spec.seed = seed;
    for (size_t i = 0; i < count; ++i) {
      spec.pixels.push_back(
          {locations[3 * i], locations[3 * i + 1], locations[3 * i + 2]});
    }
    *out = Wrap(hitkit::RandomNoise({height, width, channels}, spec));
  });
}

hit_status hit_semi_random_noise(int height, int width, int channels,
                                 hit_noise_axis axis, const int32_t* indices,
                                 size_t count, double epsilon, uint64_t seed,
                                 hit_image** out) {
  HIT_REQUIRE(out);
  if (count > 0) HIT_REQUIRE(indices);
  return Guard([&] {
    if (axis != HIT_AXIS_H && axis != HIT_AXIS_W) {
      hitkit::ThrowInvalid("unknown noise axis");
    }
    hitkit::NoiseSpec spec;
    spec.mode = hitkit::NoiseMode::kSemiRandom;
    spec.axis = axis == HIT_AXIS_H ? hitkit::NoiseAxis::kH : hitkit::NoiseAxis::kW;
    spec.epsilon = epsilon;
    spec.seed = seed;
    spec.slices.assign(indices, indices + count);
    *out = Wrap(hitkit::SemiRandomNoise({height, width, channels}, spec));
  });
}

hit_status hit_apply_noise(const hit_image* x, const hit_image* noise,
                           double epsilon, hit_image** out) {
  HIT_REQUIRE(x);
  HIT_REQUIRE(noise);
  HIT_REQUIRE(out);
  return Guard(
      [&] { *out = Wrap(hitkit::ApplyNoise(x->img, noise->img, epsilon)); });
}

// analysis

hit_status hit_build_mask(const hit_image* hfc, double tau,
                          hit_mask_reduction reduction, hit_image** mask_high) {
  HIT_REQUIRE(hfc);
  HIT_REQUIRE(mask_high);
  return Guard([&] {
    const auto m = hitkit::BuildMasks(hfc->img, tau,
                                      reduction == HIT_MASK_MEAN_ABS
                                          ? hitkit::MaskReduction::kMeanAbs
                                          : hitkit::MaskReduction::kMaxAbs);
    hitkit::Image grid(m.height, m.width, 1);
    std::copy(m.high.begin(), m.high.end(), grid.data().begin());
    *mask_high = Wrap(std::move(grid));
  });
}

hit_status hit_dominance(const float* feature_map, const hit_image* mask_high,
                         hit_dominance_stats* out) {
  HIT_REQUIRE(feature_map);
  HIT_REQUIRE(mask_high);
  HIT_REQUIRE(out);
  return Guard([&] {
    const auto masks = MaskFromImage(mask_high->img);
    const auto s = hitkit::Dominance(
        std::span<const float>(feature_map, masks.high.size()), masks);
    *out = {s.a_high, s.a_low, s.hfc_dominant ? 1 : 0};
  });
}

hit_status hit_cosine_similarity(const float* a, const float* b, size_t n,
                                 double* out) {
  HIT_REQUIRE(a);
  HIT_REQUIRE(b);
  HIT_REQUIRE(out);
  return Guard([&] {
    *out = hitkit::CosineSimilarity(std::span<const float>(a, n),
                                    std::span<const float>(b, n));
  });
}

hit_status hit_tensor_create(const uint32_t* dims, uint32_t rank,
                             const float* values, hit_tensor** out) {
  HIT_REQUIRE(dims);
  HIT_REQUIRE(out);
  return Guard([&] {
    hitkit::Tensor t;
    t.dims.assign(dims, dims + rank);
    if (rank == 0 || rank > hitkit::Tensor::kMaxRank) {
      hitkit::ThrowInvalid("tensor rank must be in [1, 8]");
    }
    const std::size_t n = t.ElementCount();
    if (n > 0 && values == nullptr) hitkit::ThrowInvalid("values must not be NULL");
    t.values.assign(values, values + n);
    *out = new hit_tensor{std::move(t)};
  });
}

hit_status hit_tensor_load(const char* path, hit_tensor** out) {
  HIT_REQUIRE(path);
  HIT_REQUIRE(out);
  return Guard([&] { *out = new hit_tensor{hitkit::ReadTensor(path)}; });
}

hit_status hit_tensor_save(const hit_tensor* t, const char* path) {
  HIT_REQUIRE(t);
  HIT_REQUIRE(path);
  return Guard([&] { hitkit::WriteTensor(path, t->tensor); });
}

void hit_tensor_destroy(hit_tensor* t) { delete t; }

uint32_t hit_tensor_rank(const hit_tensor* t) {
  return t ? static_cast<uint32_t>(t->tensor.dims.size()) : 0;
}
const uint32_t* hit_tensor_dims(const hit_tensor* t) {
  return t ? t->tensor.dims.data() : nullptr;
}
size_t hit_tensor_size(const hit_tensor* t) {
  return t ? t->tensor.values.size() : 0;
}
const float* hit_tensor_data(const hit_tensor* t) {
  return t ? t->tensor.values.data() : nullptr;
}

void hit_analysis_options_default(hit_analysis_options* opts) {
  if (opts) *opts = {4, 20.0, HIT_MASK_MAX_ABS, HIT_REGISTER_RESIZE_IMAGE};
}

hit_status hit_analyze(const hit_image* img, const hit_tensor* features,
                       const hit_analysis_options* opts, hit_report** out) {
  HIT_REQUIRE(img);
  HIT_REQUIRE(features);
  HIT_REQUIRE(opts);
  HIT_REQUIRE(out);
  return Guard([&] {
    hitkit::AnalysisOptions o;
    o.k = opts->k;
    o.tau = opts->tau;
    o.reduction = opts->reduction == HIT_MASK_MEAN_ABS
                      ? hitkit::MaskReduction::kMeanAbs
                      : hitkit::MaskReduction::kMaxAbs;
    o.registration = opts->registration == HIT_REGISTER_DOWNSCALE_MASK
                         ? hitkit::MaskRegistration::kDownscaleMask
                         : hitkit::MaskRegistration::kResizeImage;
    *out = new hit_report{hitkit::AnalyzeDominance(img->img, features->tensor, o)};
  });
}

void hit_report_destroy(hit_report* report) { delete report; }

size_t hit_report_count(const hit_report* report) {
  return report ? report->report.records.size() : 0;
}

hit_status hit_report_record(const hit_report* report, size_t index,
                             hit_dominance_stats* out) {
  HIT_REQUIRE(report);
  HIT_REQUIRE(out);
  if (index >= report->report.records.size()) {
    return Fail(HIT_ERR_INVALID_PARAMETER, "report index out of range");
  }
  const auto& s = report->report.records[index].stats;
  *out = {s.a_high, s.a_low, s.hfc_dominant ? 1 : 0};
  return HIT_OK;
}

size_t hit_report_hfc_dominant(const hit_report* report) {
  return report ? report->report.HfcDominantCount() : 0;
}

double hit_report_high_fraction(const hit_report* report) {
  return report ? report->report.high_fraction : 0.0;
}

hit_status hit_report_write(const hit_report* report, const char* path) {
  HIT_REQUIRE(report);
  HIT_REQUIRE(path);
  return Guard([&] {
    if (std::string(path) == "-") {
      hitkit::WriteReport(std::cout, report->report);
      std::cout.flush();
      return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) hitkit::ThrowIo(std::string("cannot write ") + path);
    hitkit::WriteReport(out, report->report);
    if (!out) hitkit::ThrowIo(std::string("failed writing ") + path);
  });
}

// batch

hit_status hit_run_batch(const hit_run_manifest* manifest,
                         hit_batch_summary* summary, hit_failure_cb failure_cb,
                         void* user) {
  HIT_REQUIRE(manifest);
  HIT_REQUIRE(manifest->input_dir);
  HIT_REQUIRE(manifest->output_dir);
  HIT_REQUIRE(summary);
  return Guard([&] {
    hitkit::RunManifest m;
    m.input_dir = manifest->input_dir;
    m.output_dir = manifest->output_dir;
    m.attack = ToCpp(manifest->attack);
    if (manifest->patch_file) m.patch_file = manifest->patch_file;
    m.emit_patch = manifest->emit_patch != 0;
    m.emit_report = manifest->emit_report != 0;
    m.threads = manifest->threads;
    const auto s = hitkit::RunBatch(m);
    *summary = ToC(s);
    ReportFailures(s, failure_cb, user);
  });
}

hit_status hit_run_noise_batch(const hit_noise_manifest* manifest,
                               hit_batch_summary* summary,
                               hit_failure_cb failure_cb, void* user) {
  HIT_REQUIRE(manifest);
  HIT_REQUIRE(manifest->input_dir);
  HIT_REQUIRE(manifest->output_dir);
  HIT_REQUIRE(summary);
  return Guard([&] {
    hitkit::NoiseManifest m;
    m.input_dir = manifest->input_dir;
    m.output_dir = manifest->output_dir;
    m.mode = manifest->mode == HIT_NOISE_RANDOM ? hitkit::NoiseMode::kRandom
                                                : hitkit::NoiseMode::kSemiRandom;
    m.axis = manifest->axis == HIT_AXIS_W ? hitkit::NoiseAxis::kW
                                          : hitkit::NoiseAxis::kH;
    m.count = manifest->count;
    m.epsilon = manifest->epsilon;
    m.seed = manifest->seed;
    m.threads = manifest->threads;
    const auto s = hitkit::RunNoiseBatch(m);
    *summary = ToC(s);
    ReportFailures(s, failure_cb, user);
  });
}

hit_status hit_check_dirs(const char* original_dir, const char* adversarial_dir,
                          double epsilon, hit_check_summary* summary,
                          hit_check_cb cb, void* user) {
  HIT_REQUIRE(original_dir);
  HIT_REQUIRE(adversarial_dir);
  HIT_REQUIRE(summary);
  return Guard([&] {
    const auto r = hitkit::CheckDirs(original_dir, adversarial_dir, epsilon);
    *summary = {r.files, r.violations, r.problems};
    if (cb) {
      for (const auto& e : r.entries) {
        const std::string status(hitkit::CheckStatusName(e.status));
        cb(e.name.c_str(), status.c_str(), e.violations, e.max_delta,
           e.detail.c_str(), user);
      }
    }
  });
}

}  // extern "C"
