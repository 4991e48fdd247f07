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

/*
 * hitkit C API.
 *
 * L-infinity bounded image perturbations built from pattern high
 * frequencies: Gaussian frequency decomposition, procedural concentric
 * proto-patterns, tiled adversarial patches, epsilon-bounded hybrid synthesis,
 * noise baselines and feature-dominance analysis.
 *
 * Conventions:
 *  - Every fallible function returns hit_status; HIT_OK is zero.
 *  - On failure, hit_last_error() describes the problem. The message is
 *    thread-local and valid until the next failing call on the same thread.
 *  - Objects are opaque handles created by *_create / *_load style functions
 *    and released with the matching *_destroy. Destroy functions accept NULL.
 *  - Output handles are only written on success.
 *  - Images are row-major H x W x C arrays of doubles in 8-bit intensity
 *    units; frequency residuals and noise grids may be signed.
 */

#ifndef HITKIT_HITKIT_H_
#define HITKIT_HITKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HITKIT_BUILDING_LIBRARY)
#    define HIT_API __declspec(dllexport)
#  else
#    define HIT_API __declspec(dllimport)
#  endif
#else
#  define HIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hit_status {
  HIT_OK = 0,
  HIT_ERR_INVALID_PARAMETER = 1,
  HIT_ERR_DEGENERATE_INPUT = 2,
  HIT_ERR_IO = 3,
  HIT_ERR_NULL_ARGUMENT = 4,
  HIT_ERR_INTERNAL = 5
} hit_status;

HIT_API const char* hit_version(void);
HIT_API const char* hit_status_string(hit_status status);
HIT_API const char* hit_last_error(void);

/* ------------------------------------------------------------------ images */

typedef struct hit_image hit_image;

HIT_API hit_status hit_image_create(int height, int width, int channels,
                                    double fill, hit_image** out);
/* Copies height * width * channels doubles from `data`. */
HIT_API hit_status hit_image_from_data(const double* data, int height,
                                       int width, int channels,
                                       hit_image** out);
HIT_API hit_status hit_image_clone(const hit_image* img, hit_image** out);
HIT_API void hit_image_destroy(hit_image* img);

HIT_API int hit_image_height(const hit_image* img);
HIT_API int hit_image_width(const hit_image* img);
HIT_API int hit_image_channels(const hit_image* img);
HIT_API size_t hit_image_size(const hit_image* img);
HIT_API const double* hit_image_data(const hit_image* img);
HIT_API double* hit_image_data_mut(hit_image* img);

/* PNG or JPEG, decoded to 8-bit RGB. */
HIT_API hit_status hit_image_load(const char* path, hit_image** out);
/* Round-half-to-even 8-bit PNG; values are clamped to [0, 255]. */
HIT_API hit_status hit_image_save_png(const hit_image* img, const char* path);
HIT_API hit_status hit_image_resize_bilinear(const hit_image* img, int height,
                                             int width, hit_image** out);
HIT_API hit_status hit_image_max_abs_diff(const hit_image* a,
                                          const hit_image* b, double* out);

/* --------------------------------------------------------------- frequency */

typedef struct hit_kernel hit_kernel;

/* (4k+1) x (4k+1) Gaussian, sigma = k, normalized to unit sum. */
HIT_API hit_status hit_kernel_create(int k, hit_kernel** out);
HIT_API void hit_kernel_destroy(hit_kernel* kernel);
HIT_API int hit_kernel_size(const hit_kernel* kernel);
/* Row-major size x size coefficients. */
HIT_API const double* hit_kernel_coefficients(const hit_kernel* kernel);

HIT_API hit_status hit_low_pass(const hit_image* img, const hit_kernel* kernel,
                                hit_image** lfc);
HIT_API hit_status hit_decompose(const hit_image* img,
                                 const hit_kernel* kernel, hit_image** lfc,
                                 hit_image** hfc);

/* ---------------------------------------------------------------- patterns */

typedef enum hit_pattern_kind {
  HIT_PATTERN_CIRCLE = 0,
  HIT_PATTERN_SQUARE = 1,
  HIT_PATTERN_RHOMBUS = 2
} hit_pattern_kind;

#define HIT_MAX_PALETTE 16

typedef struct hit_pattern_spec {
  hit_pattern_kind kind;
  int density;      /* [1, 12] */
  int canvas;       /* pixels per side */
  int stroke_width; /* pixels */
  int palette_size; /* [1, HIT_MAX_PALETTE] */
  uint8_t palette[HIT_MAX_PALETTE][3];
  uint8_t background[3];
} hit_pattern_spec;

/* Density 12, canvas 600, stroke 4, six saturated hues on black. */
HIT_API void hit_pattern_spec_default(hit_pattern_spec* spec);
HIT_API hit_status hit_render_proto(const hit_pattern_spec* spec,
                                    hit_image** out);

/* ------------------------------------------------------------------- tiler */

typedef enum hit_crop_anchor {
  HIT_CROP_CENTER = 0,
  HIT_CROP_TOP_LEFT = 1,
  HIT_CROP_CUSTOM = 2
} hit_crop_anchor;

typedef struct hit_tile_config {
  int tile_scheme;  /* [1, 16] */
  int intermediate; /* default 300 */
  int target_h;
  int target_w;
  hit_crop_anchor crop_anchor;
  int crop_x; /* HIT_CROP_CUSTOM only */
  int crop_y;
} hit_tile_config;

/* 6x6 scheme, intermediate 300, 299x299 target, center crop. */
HIT_API void hit_tile_config_default(hit_tile_config* cfg);
HIT_API hit_status hit_make_patch(const hit_image* proto,
                                  const hit_tile_config* cfg, hit_image** out);
/* The periodic intermediate x intermediate mosaic before the final resize. */
HIT_API hit_status hit_make_mosaic(const hit_image* proto,
                                   const hit_tile_config* cfg,
                                   hit_image** out);

/* ------------------------------------------------------------------ attack */

typedef enum hit_variant {
  HIT_VARIANT_WITH_LF = 0,
  HIT_VARIANT_WITHOUT_LF = 1
} hit_variant;

typedef struct hit_attack_config {
  double epsilon; /* [0, 255] */
  double lambda;  /* (0, 10] */
  int k;          /* >= 1 */
  hit_variant variant;
  hit_pattern_spec pattern;
  hit_tile_config tile;
  uint64_t seed;
} hit_attack_config;

/* epsilon 16, lambda 1, k 4, with-LF, default pattern and tiling, seed 0. */
HIT_API void hit_attack_config_default(hit_attack_config* cfg);
/* Sets one field from text; keys mirror the field names ("tile_scheme",
 * "pattern", "crop_anchor", ...). */
HIT_API hit_status hit_attack_config_set(hit_attack_config* cfg,
                                         const char* key, const char* value);
/* Applies a flat "key = value" file on top of *cfg. */
HIT_API hit_status hit_attack_config_load(hit_attack_config* cfg,
                                          const char* path);
HIT_API hit_status hit_attack_config_validate(const hit_attack_config* cfg);

/* Proto-pattern -> tiled patch of the given shape, per cfg. */
HIT_API hit_status hit_build_patch(const hit_attack_config* cfg, int height,
                                   int width, hit_image** out);

/* Clipped hybrid image for one (image, patch) pair. */
HIT_API hit_status hit_hybrid(const hit_image* x, const hit_image* patch,
                              const hit_attack_config* cfg, hit_image** out);

/* Reusable transform: the patch HFC is computed once. */
typedef struct hit_transform hit_transform;
HIT_API hit_status hit_transform_create(const hit_image* patch,
                                        const hit_attack_config* cfg,
                                        hit_transform** out);
HIT_API void hit_transform_destroy(hit_transform* t);
HIT_API hit_status hit_transform_apply(const hit_transform* t,
                                       const hit_image* x, hit_image** out);
/* The hybrid image before clipping. */
HIT_API hit_status hit_transform_raw(const hit_transform* t,
                                     const hit_image* x, hit_image** out);

/* ------------------------------------------------------------------- noise */

typedef enum hit_noise_axis { HIT_AXIS_H = 0, HIT_AXIS_W = 1 } hit_noise_axis;

/* `locations` holds `count` (y, x, c) triples. Duplicates are ignored. */
HIT_API hit_status hit_random_noise(int height, int width, int channels,
                                    const int32_t* locations, size_t count,
                                    double epsilon, uint64_t seed,
                                    hit_image** out);
/* `indices` holds `count` row (HIT_AXIS_H) or column (HIT_AXIS_W) indices. */
HIT_API hit_status hit_semi_random_noise(int height, int width, int channels,
                                         hit_noise_axis axis,
                                         const int32_t* indices, size_t count,
                                         double epsilon, uint64_t seed,
                                         hit_image** out);
HIT_API hit_status hit_apply_noise(const hit_image* x, const hit_image* noise,
                                   double epsilon, hit_image** out);

/* ---------------------------------------------------------------- analysis */

typedef enum hit_mask_reduction {
  HIT_MASK_MAX_ABS = 0,
  HIT_MASK_MEAN_ABS = 1
} hit_mask_reduction;

typedef enum hit_mask_registration {
  HIT_REGISTER_RESIZE_IMAGE = 0,
  HIT_REGISTER_DOWNSCALE_MASK = 1
} hit_mask_registration;

/* Single-channel 0/1 grid marking pixels whose HFC magnitude exceeds tau. */
HIT_API hit_status hit_build_mask(const hit_image* hfc, double tau,
                                  hit_mask_reduction reduction,
                                  hit_image** mask_high);

typedef struct hit_dominance_stats {
  double a_high;
  double a_low;
  int hfc_dominant;
} hit_dominance_stats;

/* `feature_map` has the mask's height * width entries. */
HIT_API hit_status hit_dominance(const float* feature_map,
                                 const hit_image* mask_high,
                                 hit_dominance_stats* out);
HIT_API hit_status hit_cosine_similarity(const float* a, const float* b,
                                         size_t n, double* out);

typedef struct hit_tensor hit_tensor;

HIT_API hit_status hit_tensor_create(const uint32_t* dims, uint32_t rank,
                                     const float* values, hit_tensor** out);
HIT_API hit_status hit_tensor_load(const char* path, hit_tensor** out);
HIT_API hit_status hit_tensor_save(const hit_tensor* t, const char* path);
HIT_API void hit_tensor_destroy(hit_tensor* t);
HIT_API uint32_t hit_tensor_rank(const hit_tensor* t);
HIT_API const uint32_t* hit_tensor_dims(const hit_tensor* t);
HIT_API size_t hit_tensor_size(const hit_tensor* t);
HIT_API const float* hit_tensor_data(const hit_tensor* t);

typedef struct hit_analysis_options {
  int k;
  double tau;
  hit_mask_reduction reduction;
  hit_mask_registration registration;
} hit_analysis_options;

/* k 4, tau 20, max-abs reduction, resize-image registration. */
HIT_API void hit_analysis_options_default(hit_analysis_options* opts);

typedef struct hit_report hit_report;

HIT_API hit_status hit_analyze(const hit_image* img, const hit_tensor* features,
                               const hit_analysis_options* opts,
                               hit_report** out);
HIT_API void hit_report_destroy(hit_report* report);
HIT_API size_t hit_report_count(const hit_report* report);
HIT_API hit_status hit_report_record(const hit_report* report, size_t index,
                                     hit_dominance_stats* out);
HIT_API size_t hit_report_hfc_dominant(const hit_report* report);
HIT_API double hit_report_high_fraction(const hit_report* report);
/* Tab-separated records; path "-" writes to stdout. */
HIT_API hit_status hit_report_write(const hit_report* report, const char* path);

/* ------------------------------------------------------------------- batch */

typedef struct hit_batch_summary {
  size_t processed;
  size_t failed;
  double wall_seconds;
  double max_delta_max;
  double max_delta_mean;
} hit_batch_summary;

typedef struct hit_run_manifest {
  const char* input_dir;
  const char* output_dir;
  hit_attack_config attack;
  const char* patch_file; /* NULL: render the configured proto-pattern */
  int emit_patch;
  int emit_report;
  int threads; /* 0 = hardware concurrency */
} hit_run_manifest;

/* Per-item failures are reported through `failure_cb` (may be NULL) in
 * sorted input order. */
typedef void (*hit_failure_cb)(const char* name, const char* error,
                               void* user);

HIT_API hit_status hit_run_batch(const hit_run_manifest* manifest,
                                 hit_batch_summary* summary,
                                 hit_failure_cb failure_cb, void* user);

typedef enum hit_noise_mode {
  HIT_NOISE_RANDOM = 0,
  HIT_NOISE_SEMI_RANDOM = 1
} hit_noise_mode;

typedef struct hit_noise_manifest {
  const char* input_dir;
  const char* output_dir;
  hit_noise_mode mode;
  hit_noise_axis axis;
  size_t count; /* entries (random) or slices (semi-random) per image */
  double epsilon;
  uint64_t seed;
  int threads;
} hit_noise_manifest;

HIT_API hit_status hit_run_noise_batch(const hit_noise_manifest* manifest,
                                       hit_batch_summary* summary,
                                       hit_failure_cb failure_cb, void* user);

typedef struct hit_check_summary {
  size_t files;
  size_t violations; /* pixels outside the epsilon ball, all files */
  size_t problems;   /* files with violations, missing or unreadable */
} hit_check_summary;

/* Called once per checked file; status is "ok", "violations", "missing",
 * "shape-mismatch" or "unreadable". */
typedef void (*hit_check_cb)(const char* name, const char* status,
                             size_t violations, double max_delta,
                             const char* detail, void* user);

HIT_API hit_status hit_check_dirs(const char* original_dir,
                                  const char* adversarial_dir, double epsilon,
                                  hit_check_summary* summary,
                                  hit_check_cb cb, void* user);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* HITKIT_HITKIT_H_ */
