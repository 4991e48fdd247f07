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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace hitkit {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string NormalizeKey(std::string_view key) {
  std::string k(Trim(key));
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

[[noreturn]] void BadValue(std::string_view key, std::string_view value) {
  ThrowInvalid("invalid value '" + std::string(value) + "' for " +
               std::string(key));
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  value = Trim(value);
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) BadValue(key, value);
  return out;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(Trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Rgb ParseRgb(std::string_view key, std::string_view text) {
  const auto parts = Split(text, ',');
  if (parts.size() != 3) BadValue(key, text);
  Rgb rgb{};
  for (int i = 0; i < 3; ++i) {
    const int v = ParseNumber<int>(key, parts[i]);
    if (v < 0 || v > 255) BadValue(key, text);
    rgb[i] = static_cast<std::uint8_t>(v);
  }
  return rgb;
}

std::string FormatRgb(const Rgb& c) {
  return std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
         std::to_string(c[2]);
}

}  // namespace

void SetConfigValue(AttackConfig& cfg, std::string_view raw_key,
                    std::string_view raw_value) {
  const std::string key = NormalizeKey(raw_key);
  const std::string_view value = Trim(raw_value);
  if (key == "epsilon") {
    cfg.epsilon = ParseNumber<double>(key, value);
  } else if (key == "lambda") {
    cfg.lambda = ParseNumber<double>(key, value);
  } else if (key == "k") {
    cfg.k = ParseNumber<int>(key, value);
  } else if (key == "variant") {
    auto v = ParseVariant(value);
    if (!v) BadValue(key, value);
    cfg.variant = *v;
  } else if (key == "pattern") {
    auto kind = ParsePatternKind(value);
    if (!kind) BadValue(key, value);
    cfg.pattern.kind = *kind;
  } else if (key == "density") {
    cfg.pattern.density = ParseNumber<int>(key, value);
  } else if (key == "canvas") {
    cfg.pattern.canvas = ParseNumber<int>(key, value);
  } else if (key == "stroke_width") {
    cfg.pattern.stroke_width = ParseNumber<int>(key, value);
  } else if (key == "palette") {
    std::vector<Rgb> palette;
    for (auto entry : Split(value, ';')) {
      if (!entry.empty()) palette.push_back(ParseRgb(key, entry));
    }
    if (palette.empty()) BadValue(key, value);
    cfg.pattern.palette = std::move(palette);
  } else if (key == "background") {
    cfg.pattern.background = ParseRgb(key, value);
  } else if (key == "tile_scheme") {
    cfg.tile.tile_scheme = ParseNumber<int>(key, value);
  } else if (key == "intermediate") {
    cfg.tile.intermediate = ParseNumber<int>(key, value);
  } else if (key == "crop_anchor") {
    if (value == "center") {
      cfg.tile.crop_anchor = CropAnchor::kCenter;
    } else if (value == "top-left" || value == "top_left") {
      cfg.tile.crop_anchor = CropAnchor::kTopLeft;
    } else {
      const auto parts = Split(value, ',');
      if (parts.size() != 2) BadValue(key, value);
      cfg.tile.crop_anchor = CropAnchor::kCustom;
      cfg.tile.crop_x = ParseNumber<int>(key, parts[0]);
      cfg.tile.crop_y = ParseNumber<int>(key, parts[1]);
    }
  } else if (key == "seed") {
    cfg.seed = ParseNumber<std::uint64_t>(key, value);
  } else {
    ThrowInvalid("unknown configuration key '" + std::string(raw_key) + "'");
  }
}

void ParseConfigText(AttackConfig& cfg, std::string_view text) {
  int line_no = 0;
  for (auto line : Split(text, '\n')) {
    ++line_no;
    line = Trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      ThrowInvalid("config line " + std::to_string(line_no) +
                   ": expected 'key = value'");
    }
    try {
      SetConfigValue(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      ThrowInvalid("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void LoadConfigFile(AttackConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) ThrowIo("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  ParseConfigText(cfg, buf.str());
}

std::string FormatConfig(const AttackConfig& cfg) {
  std::ostringstream out;
  out.precision(17);
  out << "epsilon = " << cfg.epsilon << "\n";
  out << "lambda = " << cfg.lambda << "\n";
  out << "k = " << cfg.k << "\n";
  out << "variant = " << VariantName(cfg.variant) << "\n";
  out << "pattern = " << PatternKindName(cfg.pattern.kind) << "\n";
  out << "density = " << cfg.pattern.density << "\n";
  out << "canvas = " << cfg.pattern.canvas << "\n";
  out << "stroke_width = " << cfg.pattern.stroke_width << "\n";
  out << "palette = ";
  for (std::size_t i = 0; i < cfg.pattern.palette.size(); ++i) {
    out << (i ? ";" : "") << FormatRgb(cfg.pattern.palette[i]);
  }
  out << "\n";
  out << "background = " << FormatRgb(cfg.pattern.background) << "\n";
  out << "tile_scheme = " << cfg.tile.tile_scheme << "\n";
  out << "intermediate = " << cfg.tile.intermediate << "\n";
  out << "crop_anchor = ";
  switch (cfg.tile.crop_anchor) {
    case CropAnchor::kCenter:
      out << "center";
      break;
    case CropAnchor::kTopLeft:
      out << "top-left";
      break;
    case CropAnchor::kCustom:
      out << cfg.tile.crop_x << "," << cfg.tile.crop_y;
      break;
  }
  out << "\n";
  out << "seed = " << cfg.seed << "\n";
  return out.str();
}

}  // namespace hitkit
