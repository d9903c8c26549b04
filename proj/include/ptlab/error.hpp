// Copyright 2026 The ptlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTLAB_ERROR_HPP_
#define PTLAB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptlab {

enum class ErrorCode {
  kNegativeProbability,
  kNotNormalized,
  kMissingInput,
  kNotNonsignalling,
  kWeightMismatch,
  kAlphabetMismatch,
  kUnknownGame,
  kUnknownStrategy,
  kPromiseViolated,
  kBadTargets,
  kTooManyQubits,
  kMalformed,
  kSpaceTooLarge,
  kBadProbability,
  kNotWinning,
  kNotDeterministicOnOne,
  kInternalInconsistency,
  kParse,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeProbability: return "NegativeProbability";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kMissingInput: return "MissingInput";
    case ErrorCode::kNotNonsignalling: return "NotNonsignalling";
    case ErrorCode::kWeightMismatch: return "WeightMismatch";
    case ErrorCode::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::kUnknownGame: return "UnknownGame";
    case ErrorCode::kUnknownStrategy: return "UnknownStrategy";
    case ErrorCode::kPromiseViolated: return "PromiseViolated";
    case ErrorCode::kBadTargets: return "BadTargets";
    case ErrorCode::kTooManyQubits: return "TooManyQubits";
    case ErrorCode::kMalformed: return "Malformed";
    case ErrorCode::kSpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::kBadProbability: return "BadProbability";
    case ErrorCode::kNotWinning: return "NotWinning";
    case ErrorCode::kNotDeterministicOnOne: return "NotDeterministicOnOne";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

// All library failures are reported with this exception type; `code()` is the
// stable, machine-checkable part and `what()` carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ptlab

#endif  // PTLAB_ERROR_HPP_
