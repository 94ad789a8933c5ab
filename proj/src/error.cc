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

#include "mplus/error.h"

namespace mplus {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorCode::kEdgeEndpointMissing: return "EdgeEndpointMissing";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kMatchingNotValid: return "MatchingNotValid";
    case ErrorCode::kMatchingNotMaximal: return "MatchingNotMaximal";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kNotMatchedNode: return "NotMatchedNode";
    case ErrorCode::kNotPartners: return "NotPartners";
    case ErrorCode::kRuleNotEnabled: return "RuleNotEnabled";
    case ErrorCode::kEmptyStep: return "EmptyStep";
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidN: return "InvalidN";
    case ErrorCode::kNotMatchedEdge: return "NotMatchedEdge";
    case ErrorCode::kAmbiguousSingleNeighbor: return "AmbiguousSingleNeighbor";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kAtMaximum: return "AtMaximum";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotAMatching: return "NotAMatching";
    case ErrorCode::kNotStable: return "NotStable";
    case ErrorCode::kAssertionFailed: return "AssertionFailed";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mplus
