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

#include "tensor_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "error.hpp"

namespace hitkit {

std::size_t Tensor::ElementCount() const noexcept {
  if (dims.empty()) return 0;
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

namespace {

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t GetU32(std::span<const std::uint8_t> bytes, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[at + i]) << (8 * i);
  return v;
}

}  // namespace

std::vector<std::uint8_t> EncodeTensor(const Tensor& t) {
  if (t.dims.empty() || t.dims.size() > Tensor::kMaxRank) {
    ThrowInvalid("tensor rank must be in [1, 8]");
  }
  if (t.values.size() != t.ElementCount()) {
    ThrowInvalid("tensor holds " + std::to_string(t.values.size()) +
                 " values but its dimensions require " +
                 std::to_string(t.ElementCount()));
  }
  std::vector<std::uint8_t> out;
  out.reserve(4 * (1 + t.dims.size() + t.values.size()));
  PutU32(out, static_cast<std::uint32_t>(t.dims.size()));
  for (auto d : t.dims) PutU32(out, d);
  for (float f : t.values) PutU32(out, std::bit_cast<std::uint32_t>(f));
  return out;
}

Tensor DecodeTensor(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) ThrowIo("tensor file is truncated (no rank)");
  const std::uint32_t rank = GetU32(bytes, 0);
  if (rank == 0 || rank > Tensor::kMaxRank) {
    ThrowIo("tensor rank " + std::to_string(rank) + " is not in [1, 8]");
  }
  if (bytes.size() < 4ull * (1 + rank)) ThrowIo("tensor header is truncated");
  Tensor t;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < rank; ++i) {
    t.dims.push_back(GetU32(bytes, 4 * (1 + i)));
    count *= t.dims.back();
    if (count > (1ull << 34)) ThrowIo("tensor is implausibly large");
  }
  const std::size_t header = 4 * (1 + rank);
  if (bytes.size() != header + 4 * count) {
    ThrowIo("tensor payload is " + std::to_string(bytes.size() - header) +
            " bytes, expected " + std::to_string(4 * count));
  }
  t.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    t.values[i] = std::bit_cast<float>(GetU32(bytes, header + 4 * i));
  }
  return t;
}

Tensor ReadTensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowIo("cannot open tensor file " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return DecodeTensor(bytes);
  } catch (const Error& e) {
    ThrowIo(path + ": " + e.what());
  }
}

void WriteTensor(const std::string& path, const Tensor& t) {
  const auto bytes = EncodeTensor(t);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) ThrowIo("cannot create tensor file " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) ThrowIo("failed writing tensor file " + path);
}

}  // namespace hitkit
