// Copyright 2026 The implkit Authors
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

#ifndef IMPLKIT_ERROR_HPP_
#define IMPLKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace implkit {

enum class Errc {
  kEmptySet,
  kEmptyPolytope,
  kNotInteriorLottery,
  kThetaSetTooLarge,
  kNotSubsetOfZstar,
  kMechanismTooLarge,
  kTruncationTooSmall,
  kInternalMismatch,
  kVerificationFailed,
  kExtremeOutcome,
  kParseError,
  kValidationError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::kEmptySet: return "EmptySet";
    case Errc::kEmptyPolytope: return "EmptyPolytope";
    case Errc::kNotInteriorLottery: return "NotInteriorLottery";
    case Errc::kThetaSetTooLarge: return "ThetaSetTooLarge";
    case Errc::kNotSubsetOfZstar: return "NotSubsetOfZstar";
    case Errc::kMechanismTooLarge: return "MechanismTooLarge";
    case Errc::kTruncationTooSmall: return "TruncationTooSmall";
    case Errc::kInternalMismatch: return "InternalMismatch";
    case Errc::kVerificationFailed: return "VerificationFailed";
    case Errc::kExtremeOutcome: return "ExtremeOutcome";
    case Errc::kParseError: return "ParseError";
    case Errc::kValidationError: return "ValidationError";
  }
  return "UnknownError";
}

}  // namespace implkit

#endif  // IMPLKIT_ERROR_HPP_
