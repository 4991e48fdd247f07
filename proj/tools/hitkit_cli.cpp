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

// hitkit command-line driver. Every operation goes through the C API.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hitkit/hitkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitError = 2;

int ReportError(hit_status status, const std::string& context) {
  std::fprintf(stderr, "hitkit: %s: %s (%s)\n", context.c_str(),
               hit_last_error(), hit_status_string(status));
  return kExitError;
}

// Attack flags are kept as text and routed through hit_attack_config_set, so
// the config file and the command line share one parser. Flags win.
struct AttackFlags {
  std::string config_file;
  std::map<std::string, std::string> values;

  void Register(CLI::App* app) {
    app->add_option("--config", config_file, "key = value configuration file");
    Add(app, "--epsilon", "epsilon", "l-inf budget in 8-bit units (default 16)");
    Add(app, "--lambda", "lambda", "weight of the patch HFC (default 1)");
    Add(app, "--k", "k", "Gaussian half-width; kernel is (4k+1)^2 (default 4)");
    Add(app, "--pattern", "pattern", "circle | square | rhombus")
        ->check(CLI::IsMember({"circle", "square", "rhombus"}));
    Add(app, "--density", "density", "concentric shapes, 1-12 (default 12)");
    Add(app, "--tile-scheme", "tile_scheme", "n for n x n tiling (default 6)");
    Add(app, "--variant", "variant", "with-lf | without-lf")
        ->check(CLI::IsMember({"with-lf", "without-lf"}));
    Add(app, "--seed", "seed", "seed for noise baselines");
    Add(app, "--stroke-width", "stroke_width", "stroke in canvas pixels");
    Add(app, "--canvas", "canvas", "proto-pattern canvas side");
    Add(app, "--intermediate", "intermediate", "crop / mosaic side (default 300)");
    Add(app, "--crop-anchor", "crop_anchor", "center | top-left | X,Y");
  }

  CLI::Option* Add(CLI::App* app, const std::string& flag, const std::string& key,
                   const std::string& help) {
    return app->add_option_function<std::string>(
        flag, [this, key](const std::string& v) { values[key] = v; }, help);
  }

  hit_status Build(hit_attack_config* cfg) const {
    hit_attack_config_default(cfg);
    if (!config_file.empty()) {
      if (auto st = hit_attack_config_load(cfg, config_file.c_str()); st != HIT_OK) {
        return st;
      }
    }
    for (const auto& [key, value] : values) {
      if (auto st = hit_attack_config_set(cfg, key.c_str(), value.c_str());
          st != HIT_OK) {
        return st;
      }
    }
    return hit_attack_config_validate(cfg);
  }
};

void PrintFailure(const char* name, const char* error, void*) {
  std::fprintf(stderr, "failed: %s: %s\n", name, error);
}

void PrintSummary(const hit_batch_summary& s) {
  std::printf("processed=%zu failed=%zu wall_seconds=%.3f max_delta_max=%g "
              "max_delta_mean=%g\n",
              s.processed, s.failed, s.wall_seconds, s.max_delta_max,
              s.max_delta_mean);
}

bool ParseSize(const std::string& text, int* h, int* w) {
  return std::sscanf(text.c_str(), "%dx%d", h, w) == 2 && *h > 0 && *w > 0;
}

struct ImageHandle {
  hit_image* ptr = nullptr;
  ~ImageHandle() { hit_image_destroy(ptr); }
};

struct TensorHandle {
  hit_tensor* ptr = nullptr;
  ~TensorHandle() { hit_tensor_destroy(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hitkit: epsilon-bounded high-frequency pattern perturbations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hit_version()));

  // attack
  AttackFlags attack_flags;
  std::string in_dir;
  std::string out_dir;
  std::string patch_file;
  bool emit_patch = false;
  bool emit_report = false;
  int threads = 0;
  auto* attack = app.add_subcommand("attack", "attack every image in a directory");
  attack_flags.Register(attack);
  attack->add_option("-i,--input", in_dir, "directory of PNG/JPEG inputs")->required();
  attack->add_option("-o,--output", out_dir, "output directory")->required();
  attack->add_option("--patch-file", patch_file,
                     "use this image as the patch instead of a proto-pattern");
  attack->add_flag("--emit-patch", emit_patch, "also write the patch PNG");
  attack->add_flag("--emit-report", emit_report, "also write hitkit_report.tsv");
  attack->add_option("--threads", threads, "worker threads, 0 = auto");

  // patch
  AttackFlags patch_flags;
  std::string patch_out;
  std::string proto_out;
  std::string mosaic_out;
  std::string patch_size = "299x299";
  auto* patch = app.add_subcommand("patch", "render a proto-pattern and its patch");
  patch_flags.Register(patch);
  patch->add_option("-o,--output", patch_out, "patch PNG");
  patch->add_option("--proto", proto_out, "proto-pattern PNG");
  patch->add_option("--mosaic", mosaic_out, "tiled mosaic PNG (before resize)");
  patch->add_option("--size", patch_size, "patch size HxW (default 299x299)");

  // noise
  std::string noise_in;
  std::string noise_out;
  std::string noise_mode = "semi-random";
  std::string noise_axis = "h";
  std::size_t noise_count = 0;
  double noise_eps = 16.0;
  std::uint64_t noise_seed = 0;
  int noise_threads = 0;
  auto* noise = app.add_subcommand("noise", "random / semi-random noise baselines");
  noise->add_option("-i,--input", noise_in, "directory of PNG/JPEG inputs")->required();
  noise->add_option("-o,--output", noise_out, "output directory")->required();
  noise->add_option("--mode", noise_mode, "random | semi-random")
      ->check(CLI::IsMember({"random", "semi-random"}));
  noise->add_option("--axis", noise_axis, "h | w (semi-random)")
      ->check(CLI::IsMember({"h", "w"}));
  noise->add_option("--count", noise_count,
                    "perturbed entries (random) or slices (semi-random)")
      ->required();
  noise->add_option("--epsilon", noise_eps, "noise magnitude");
  noise->add_option("--seed", noise_seed, "base seed");
  noise->add_option("--threads", noise_threads, "worker threads, 0 = auto");

  // check
  std::string check_orig;
  std::string check_adv;
  double check_eps = 16.0;
  bool check_quiet = false;
  auto* check = app.add_subcommand("check", "verify the epsilon ball over two directories");
  check->add_option("--original", check_orig, "clean images")->required();
  check->add_option("--adversarial", check_adv, "perturbed images")->required();
  check->add_option("--epsilon", check_eps, "l-inf budget");
  check->add_flag("-q,--quiet", check_quiet, "only print problems and the total");

  // analyze
  std::string an_image;
  std::string an_features;
  std::string an_compare;
  std::string an_out = "-";
  std::string an_reduction = "max";
  std::string an_registration = "resize-image";
  int an_k = 4;
  double an_tau = 20.0;
  auto* analyze = app.add_subcommand(
      "analyze", "HFC/LFC dominance of feature maps, or cosine similarity");
  analyze->add_option("--image", an_image, "image the features were taken from");
  analyze->add_option("--features", an_features, "feature tensor file")->required();
  analyze->add_option("--compare", an_compare,
                      "second tensor; print cosine similarity instead");
  analyze->add_option("-o,--output", an_out, "report path, '-' for stdout");
  analyze->add_option("--k", an_k, "Gaussian half-width (default 4)");
  analyze->add_option("--tau", an_tau, "HFC magnitude threshold (default 20)");
  analyze->add_option("--reduction", an_reduction, "max | mean over channels")
      ->check(CLI::IsMember({"max", "mean"}));
  analyze->add_option("--registration", an_registration,
                      "resize-image | downscale-mask")
      ->check(CLI::IsMember({"resize-image", "downscale-mask"}));

  CLI11_PARSE(app, argc, argv);

  if (attack->parsed()) {
    hit_run_manifest m{};
    if (auto st = attack_flags.Build(&m.attack); st != HIT_OK) {
      return ReportError(st, "configuration");
    }
    m.input_dir = in_dir.c_str();
    m.output_dir = out_dir.c_str();
    m.patch_file = patch_file.empty() ? nullptr : patch_file.c_str();
    m.emit_patch = emit_patch;
    m.emit_report = emit_report;
    m.threads = threads;
    hit_batch_summary s{};
    if (auto st = hit_run_batch(&m, &s, PrintFailure, nullptr); st != HIT_OK) {
      return ReportError(st, "attack");
    }
    PrintSummary(s);
    return s.failed == 0 ? kExitOk : kExitFailures;
  }

  if (patch->parsed()) {
    hit_attack_config cfg;
    if (auto st = patch_flags.Build(&cfg); st != HIT_OK) {
      return ReportError(st, "configuration");
    }
    int h = 0;
    int w = 0;
    if (!ParseSize(patch_size, &h, &w)) {
      std::fprintf(stderr, "hitkit: --size must look like 299x299\n");
      return kExitError;
    }
    if (patch_out.empty() && proto_out.empty() && mosaic_out.empty()) {
      std::fprintf(stderr, "hitkit: nothing to write; pass -o, --proto or --mosaic\n");
      return kExitError;
    }
    ImageHandle proto;
    if (auto st = hit_render_proto(&cfg.pattern, &proto.ptr); st != HIT_OK) {
      return ReportError(st, "render");
    }
    if (!proto_out.empty()) {
      if (auto st = hit_image_save_png(proto.ptr, proto_out.c_str()); st != HIT_OK) {
        return ReportError(st, "write proto");
      }
    }
    cfg.tile.target_h = h;
    cfg.tile.target_w = w;
    if (!mosaic_out.empty()) {
      ImageHandle mosaic;
      if (auto st = hit_make_mosaic(proto.ptr, &cfg.tile, &mosaic.ptr); st != HIT_OK) {
        return ReportError(st, "mosaic");
      }
      if (auto st = hit_image_save_png(mosaic.ptr, mosaic_out.c_str()); st != HIT_OK) {
        return ReportError(st, "write mosaic");
      }
    }
    if (!patch_out.empty()) {
      ImageHandle p;
      if (auto st = hit_make_patch(proto.ptr, &cfg.tile, &p.ptr); st != HIT_OK) {
        return ReportError(st, "patch");
      }
      if (auto st = hit_image_save_png(p.ptr, patch_out.c_str()); st != HIT_OK) {
        return ReportError(st, "write patch");
      }
    }
    return kExitOk;
  }

  if (noise->parsed()) {
    hit_noise_manifest m{};
    m.input_dir = noise_in.c_str();
    m.output_dir = noise_out.c_str();
    m.mode = noise_mode == "random" ? HIT_NOISE_RANDOM : HIT_NOISE_SEMI_RANDOM;
    m.axis = noise_axis == "w" ? HIT_AXIS_W : HIT_AXIS_H;
    m.count = noise_count;
    m.epsilon = noise_eps;
    m.seed = noise_seed;
    m.threads = noise_threads;
    hit_batch_summary s{};
    if (auto st = hit_run_noise_batch(&m, &s, PrintFailure, nullptr); st != HIT_OK) {
      return ReportError(st, "noise");
    }
    PrintSummary(s);
    return s.failed == 0 ? kExitOk : kExitFailures;
  }

  if (check->parsed()) {
    hit_check_summary s{};
    auto print = [](const char* name, const char* status, size_t violations,
                    double max_delta, const char* detail, void* user) {
      const bool quiet = *static_cast<bool*>(user);
      if (quiet && std::string(status) == "ok") return;
      std::printf("%s\t%s\t%zu\t%g\t%s\n", name, status, violations, max_delta,
                  detail);
    };
    if (auto st = hit_check_dirs(check_orig.c_str(), check_adv.c_str(), check_eps,
                                 &s, print, &check_quiet);
        st != HIT_OK) {
      return ReportError(st, "check");
    }
    std::printf("files=%zu violations=%zu problems=%zu\n", s.files, s.violations,
                s.problems);
    return s.problems == 0 ? kExitOk : kExitFailures;
  }

  if (analyze->parsed()) {
    TensorHandle features;
    if (auto st = hit_tensor_load(an_features.c_str(), &features.ptr); st != HIT_OK) {
      return ReportError(st, "features");
    }
    if (!an_compare.empty()) {
      TensorHandle other;
      if (auto st = hit_tensor_load(an_compare.c_str(), &other.ptr); st != HIT_OK) {
        return ReportError(st, "compare");
      }
      if (hit_tensor_size(features.ptr) != hit_tensor_size(other.ptr)) {
        std::fprintf(stderr, "hitkit: tensors differ in size (%zu vs %zu)\n",
                     hit_tensor_size(features.ptr), hit_tensor_size(other.ptr));
        return kExitError;
      }
      double cos = 0.0;
      if (auto st = hit_cosine_similarity(hit_tensor_data(features.ptr),
                                          hit_tensor_data(other.ptr),
                                          hit_tensor_size(features.ptr), &cos);
          st != HIT_OK) {
        return ReportError(st, "cosine similarity");
      }
      std::printf("cosine_similarity\t%.10f\n", cos);
      return kExitOk;
    }
    if (an_image.empty()) {
      std::fprintf(stderr, "hitkit: analyze needs --image (or --compare)\n");
      return kExitError;
    }
    ImageHandle img;
    if (auto st = hit_image_load(an_image.c_str(), &img.ptr); st != HIT_OK) {
      return ReportError(st, "image");
    }
    hit_analysis_options opts;
    hit_analysis_options_default(&opts);
    opts.k = an_k;
    opts.tau = an_tau;
    opts.reduction = an_reduction == "mean" ? HIT_MASK_MEAN_ABS : HIT_MASK_MAX_ABS;
    opts.registration = an_registration == "downscale-mask"
                            ? HIT_REGISTER_DOWNSCALE_MASK
                            : HIT_REGISTER_RESIZE_IMAGE;
    hit_report* report = nullptr;
    if (auto st = hit_analyze(img.ptr, features.ptr, &opts, &report); st != HIT_OK) {
      return ReportError(st, "analyze");
    }
    const hit_status st = hit_report_write(report, an_out.c_str());
    hit_report_destroy(report);
    if (st != HIT_OK) return ReportError(st, "report");
    return kExitOk;
  }
  return kExitError;
}
