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

#include "sinkeval/errors.h"

namespace sinkeval {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kNonBinaryEntry: return "NonBinaryEntry";
    case ErrorCode::kNonBinaryResult: return "NonBinaryResult";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kFilterExhausted: return "FilterExhausted";
    case ErrorCode::kExplosionCap: return "ExplosionCap";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kAsymmetryDetected: return "AsymmetryDetected";
    case ErrorCode::kInvalidStochasticGame: return "InvalidStochasticGame";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sinkeval
