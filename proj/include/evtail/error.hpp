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

#ifndef EVTAIL_ERROR_HPP_
#define EVTAIL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace evtail {

enum class ErrorCode {
  kInvalidParams,
  kInvalidInput,
  kUnboundedQuantile,
  kEmptyTail,
  kUndefinedCv,
  kOutOfDomain,
  kInsufficientTail,
  kDegenerateTail,
  kFitFailure,
  kInvalidGrid,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code so front ends can map
// it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Parse and I/O failures are environmental; everything else is a violated
  // mathematical precondition.
  bool is_domain_error() const noexcept {
    return code_ != ErrorCode::kParse && code_ != ErrorCode::kIo;
  }

 private:
  ErrorCode code_;
};

}  // namespace evtail

#endif  // EVTAIL_ERROR_HPP_
