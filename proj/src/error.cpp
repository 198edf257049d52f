// Copyright 2026 The evtail Authors.
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

#include "evtail/error.hpp"

namespace evtail {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams:
      return "invalid-params";
    case ErrorCode::kInvalidInput:
      return "invalid-input";
    case ErrorCode::kUnboundedQuantile:
      return "unbounded-quantile";
    case ErrorCode::kEmptyTail:
      return "empty-tail";
    case ErrorCode::kUndefinedCv:
      return "undefined-cv";
    case ErrorCode::kOutOfDomain:
      return "out-of-domain";
    case ErrorCode::kInsufficientTail:
      return "insufficient-tail";
    case ErrorCode::kDegenerateTail:
      return "degenerate-tail";
    case ErrorCode::kFitFailure:
      return "fit-failure";
    case ErrorCode::kInvalidGrid:
      return "invalid-grid";
    case ErrorCode::kParse:
      return "parse-error";
    case ErrorCode::kIo:
      return "io-error";
  }
  return "unknown";
}

}  // namespace evtail
