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

/* Exercises the C interface from a C translation unit. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hitkit/hitkit.h"

static int failures = 0;

#define CHECK(cond)                                               \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: CHECK(%s) failed: %s\n", __FILE__, \
              __LINE__, #cond, hit_last_error());                 \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_status(void) {
  CHECK(strlen(hit_version()) > 0);
  CHECK(strcmp(hit_status_string(HIT_OK), "ok") == 0);
  hit_image* img = NULL;
  CHECK(hit_image_create(0, 5, 3, 0.0, &img) == HIT_ERR_INVALID_PARAMETER);
  CHECK(img == NULL);
  CHECK(strlen(hit_last_error()) > 0);
  CHECK(hit_image_create(5, 5, 3, 0.0, NULL) == HIT_ERR_NULL_ARGUMENT);
  hit_image_destroy(NULL);
}

static void test_kernel(void) {
  hit_kernel* kernel = NULL;
  CHECK(hit_kernel_create(4, &kernel) == HIT_OK);
  CHECK(hit_kernel_size(kernel) == 17);
  double sum = 0.0;
  const double* c = hit_kernel_coefficients(kernel);
  for (int i = 0; i < 17 * 17; ++i) sum += c[i];
  CHECK(fabs(sum - 1.0) < 1e-12);

  hit_image* x = NULL;
  CHECK(hit_image_create(40, 40, 3, 0.0, &x) == HIT_OK);
  double* px = hit_image_data_mut(x);
  for (size_t i = 0; i < hit_image_size(x); ++i) px[i] = (double)((i * 37) % 256);
  hit_image* lfc = NULL;
  hit_image* hfc = NULL;
  CHECK(hit_decompose(x, kernel, &lfc, &hfc) == HIT_OK);
  const double* l = hit_image_data(lfc);
  const double* h = hit_image_data(hfc);
  double worst = 0.0;
  for (size_t i = 0; i < hit_image_size(x); ++i) {
    const double e = fabs(l[i] + h[i] - px[i]);
    if (e > worst) worst = e;
  }
  CHECK(worst <= 1e-9);
  hit_image_destroy(lfc);
  hit_image_destroy(hfc);
  hit_image_destroy(x);
  hit_kernel_destroy(kernel);
}

static void test_attack(void) {
  hit_attack_config cfg;
  hit_attack_config_default(&cfg);
  CHECK(cfg.epsilon == 16.0);
  CHECK(hit_attack_config_set(&cfg, "epsilon", "8") == HIT_OK);
  CHECK(hit_attack_config_set(&cfg, "pattern", "square") == HIT_OK);
  CHECK(cfg.pattern.kind == HIT_PATTERN_SQUARE);
  CHECK(hit_attack_config_set(&cfg, "nonsense", "1") == HIT_ERR_INVALID_PARAMETER);
  CHECK(hit_attack_config_validate(&cfg) == HIT_OK);

  hit_image* patch = NULL;
  CHECK(hit_build_patch(&cfg, 60, 70, &patch) == HIT_OK);
  CHECK(hit_image_height(patch) == 60 && hit_image_width(patch) == 70);

  hit_image* x = NULL;
  CHECK(hit_image_create(60, 70, 3, 100.0, &x) == HIT_OK);
  hit_image* out = NULL;
  CHECK(hit_hybrid(x, patch, &cfg, &out) == HIT_OK);
  double delta = -1.0;
  CHECK(hit_image_max_abs_diff(out, x, &delta) == HIT_OK);
  CHECK(delta > 0.0 && delta <= 8.0);

  hit_transform* t = NULL;
  CHECK(hit_transform_create(patch, &cfg, &t) == HIT_OK);
  hit_image* out2 = NULL;
  CHECK(hit_transform_apply(t, x, &out2) == HIT_OK);
  double same = -1.0;
  CHECK(hit_image_max_abs_diff(out, out2, &same) == HIT_OK);
  CHECK(same == 0.0);

  hit_image* wrong = NULL;
  hit_image* none = NULL;
  CHECK(hit_image_create(10, 10, 3, 0.0, &wrong) == HIT_OK);
  CHECK(hit_transform_apply(t, wrong, &none) == HIT_ERR_INVALID_PARAMETER);
  CHECK(none == NULL);

  hit_image_destroy(wrong);
  hit_image_destroy(out2);
  hit_transform_destroy(t);
  hit_image_destroy(out);
  hit_image_destroy(x);
  hit_image_destroy(patch);
}

static void test_noise_and_analysis(void) {
  const int32_t rows[2] = {0, 5};
  hit_image* noise = NULL;
  CHECK(hit_semi_random_noise(10, 8, 3, HIT_AXIS_H, rows, 2, 4.0, 1, &noise) == HIT_OK);
  size_t nonzero = 0;
  for (size_t i = 0; i < hit_image_size(noise); ++i) {
    nonzero += hit_image_data(noise)[i] != 0.0;
  }
  CHECK(nonzero == 2 * 8 * 3);
  hit_image_destroy(noise);

  const int32_t bad[3] = {10, 0, 0};
  CHECK(hit_random_noise(10, 8, 3, bad, 1, 4.0, 1, &noise) ==
        HIT_ERR_INVALID_PARAMETER);

  hit_image* hfc = NULL;
  CHECK(hit_image_create(2, 2, 1, 0.0, &hfc) == HIT_OK);
  hit_image_data_mut(hfc)[0] = 50.0;
  hit_image* mask = NULL;
  CHECK(hit_build_mask(hfc, 20.0, HIT_MASK_MAX_ABS, &mask) == HIT_OK);
  CHECK(hit_image_data(mask)[0] == 1.0 && hit_image_data(mask)[1] == 0.0);
  const float fmap[4] = {4.0f, 1.0f, 1.0f, 1.0f};
  hit_dominance_stats stats;
  CHECK(hit_dominance(fmap, mask, &stats) == HIT_OK);
  CHECK(stats.a_high == 4.0 && stats.a_low == 1.0 && stats.hfc_dominant);

  hit_image* empty = NULL;
  CHECK(hit_build_mask(hfc, 100.0, HIT_MASK_MAX_ABS, &empty) == HIT_OK);
  CHECK(hit_dominance(fmap, empty, &stats) == HIT_ERR_DEGENERATE_INPUT);

  double cos = 0.0;
  CHECK(hit_cosine_similarity(fmap, fmap, 4, &cos) == HIT_OK);
  CHECK(fabs(cos - 1.0) < 1e-12);

  const uint32_t dims[2] = {2, 2};
  hit_tensor* t = NULL;
  CHECK(hit_tensor_create(dims, 2, fmap, &t) == HIT_OK);
  CHECK(hit_tensor_rank(t) == 2 && hit_tensor_size(t) == 4);
  hit_tensor_destroy(t);

  hit_image_destroy(empty);
  hit_image_destroy(mask);
  hit_image_destroy(hfc);
}

int main(void) {
  test_status();
  test_kernel();
  test_attack();
  test_noise_and_analysis();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("capi smoke: all checks passed\n");
  return 0;
}
