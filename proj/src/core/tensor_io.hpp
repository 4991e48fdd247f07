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

#ifndef HITKIT_CORE_TENSOR_IO_HPP_
#define HITKIT_CORE_TENSOR_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hitkit {

// Portable feature-map exchange container:
//   u32 rank | u32 dims[rank] | f32 values[prod(dims)]
// all little-endian, values row-major.
struct Tensor {
  std::vector<std::uint32_t> dims;
  std::vector<float> values;

  static constexpr std::uint32_t kMaxRank = 8;

  std::size_t ElementCount() const noexcept;
};

std::vector<std::uint8_t> EncodeTensor(const Tensor& t);
Tensor DecodeTensor(std::span<const std::uint8_t> bytes);

Tensor ReadTensor(const std::string& path);
void WriteTensor(const std::string& path, const Tensor& t);

}  // namespace hitkit

#endif  // HITKIT_CORE_TENSOR_IO_HPP_
