// Copyright 2026 The mplus Authors
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

#ifndef MPLUS_ERROR_H_
#define MPLUS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mplus {

enum class ErrorCode {
  kDuplicateIdentifier,
  kEdgeEndpointMissing,
  kSelfLoop,
  kMatchingNotValid,
  kMatchingNotMaximal,
  kUnknownNode,
  kNotMatchedNode,
  kNotPartners,
  kRuleNotEnabled,
  kEmptyStep,
  kDuplicateNode,
  kInvalidArgument,
  kInvalidN,
  kNotMatchedEdge,
  kAmbiguousSingleNeighbor,
  kIndexOutOfRange,
  kPreconditionViolated,
  kAtMaximum,
  kVerificationFailed,
  kTooLarge,
  kNotAMatching,
  kNotStable,
  kAssertionFailed,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception; `code()` is the
// machine-readable category and `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mplus

#endif  // MPLUS_ERROR_H_
