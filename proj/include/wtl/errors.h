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

#ifndef WTL_ERRORS_H_
#define WTL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wtl {

enum class ErrorCode {
  kInvalidArgument,
  kShapeError,
  kRankDeficient,
  kDimensionTooLarge,
  kTruncation,
  kDegenerateSpread,
  kPreconditionViolated,
  kSingularChannel,
  kDeltaTooLarge,
  kUnsupportedShape,
  kVerificationFailed,
  kConfig,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base class for every error raised by the library. Callers switch on code()
// rather than on the dynamic type, except for TruncationError which carries
// the partial result.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a series could not be certified to the requested tolerance
// within the enumeration budget. The partial sum and its certified tail bound
// are still meaningful.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& message, double partial_sum,
                  double tail_bound);

  double partial_sum() const { return partial_sum_; }
  double tail_bound() const { return tail_bound_; }

 private:
  double partial_sum_;
  double tail_bound_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace wtl

#endif  // WTL_ERRORS_H_
