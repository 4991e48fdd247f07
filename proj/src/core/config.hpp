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

#ifndef HITKIT_CORE_CONFIG_HPP_
#define HITKIT_CORE_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "attack.hpp"

namespace hitkit {

// Assigns one AttackConfig field from its textual form. Keys mirror the field
// names (epsilon, lambda, k, variant, pattern, density, canvas, stroke_width,
// palette, background, tile_scheme, intermediate, crop_anchor, seed); '-' and
// '_' are interchangeable. Throws kInvalidParameter on unknown keys or
// malformed values. Range checks are left to AttackConfig::Validate.
void SetConfigValue(AttackConfig& cfg, std::string_view key,
                    std::string_view value);

// Flat "key = value" file; '#' starts a comment. Later keys override earlier
// ones.
void LoadConfigFile(AttackConfig& cfg, const std::filesystem::path& path);
void ParseConfigText(AttackConfig& cfg, std::string_view text);

// Round-trips through ParseConfigText.
std::string FormatConfig(const AttackConfig& cfg);

}  // namespace hitkit

#endif  // HITKIT_CORE_CONFIG_HPP_
