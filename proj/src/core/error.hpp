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

#ifndef HITKIT_CORE_ERROR_HPP_
#define HITKIT_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hitkit {

enum class ErrorCode {
  kInvalidParameter = 1,
  kDegenerateInput = 2,
  kIo = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void ThrowInvalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidParameter, what);
}

[[noreturn]] inline void ThrowDegenerate(const std::string& what) {
  throw Error(ErrorCode::kDegenerateInput, what);
}

[[noreturn]] inline void ThrowIo(const std::string& what) {
  throw Error(ErrorCode::kIo, what);
}

}  // namespace hitkit

#endif  // HITKIT_CORE_ERROR_HPP_
