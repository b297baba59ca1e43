// Copyright 2026 The Sinkeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SINKEVAL_ERRORS_H_
#define SINKEVAL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sinkeval {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kNonFiniteEntry,
  kDuplicateLabel,
  kIndexOutOfRange,
  kNonSquare,
  kNonBinaryEntry,
  kNonBinaryResult,
  kInvalidConfig,
  kTooLarge,
  kFilterExhausted,
  kExplosionCap,
  kSingularSystem,
  kAsymmetryDetected,
  kInvalidStochasticGame,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every library failure is reported through this type; `code()` identifies
// the failure class and `what()` carries a human readable message.
class SinkevalError : public std::runtime_error {
 public:
  SinkevalError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  // The message without the code name prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace sinkeval

#endif  // SINKEVAL_ERRORS_H_
