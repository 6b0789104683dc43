// Copyright 2026 The wtlattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wtl/errors.h"

namespace wtl {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kShapeError:
      return "ShapeError";
    case ErrorCode::kRankDeficient:
      return "RankDeficient";
    case ErrorCode::kDimensionTooLarge:
      return "DimensionTooLarge";
    case ErrorCode::kTruncation:
      return "TruncationError";
    case ErrorCode::kDegenerateSpread:
      return "DegenerateSpread";
    case ErrorCode::kPreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::kSingularChannel:
      return "SingularChannel";
    case ErrorCode::kDeltaTooLarge:
      return "DeltaTooLarge";
    case ErrorCode::kUnsupportedShape:
      return "UnsupportedShape";
    case ErrorCode::kVerificationFailed:
      return "VerificationFailed";
    case ErrorCode::kConfig:
      return "ConfigError";
    case ErrorCode::kIo:
      return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

TruncationError::TruncationError(const std::string& message,
                                 double partial_sum, double tail_bound)
    : Error(ErrorCode::kTruncation, message),
      partial_sum_(partial_sum),
      tail_bound_(tail_bound) {}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace wtl
