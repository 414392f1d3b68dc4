//  Copyright 2026 The compat-frames Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef COMPAT_ERROR_HPP_
#define COMPAT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace compat {

enum class ErrorKind {
  NotAPoset,
  NotALattice,
  CapExceeded,
  NotCompossible,
  NotAntiInflationary,
  ZeroInV,
  KindPreconditionFailed,
  NotSeparating,
  DegenerateLattice,
  IsolatedVertex,
  SearchBudgetExceeded,
  InvalidInput,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotCompossible: return "NotCompossible";
    case ErrorKind::NotAntiInflationary: return "NotAntiInflationary";
    case ErrorKind::ZeroInV: return "ZeroInV";
    case ErrorKind::KindPreconditionFailed: return "KindPreconditionFailed";
    case ErrorKind::NotSeparating: return "NotSeparating";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace compat

#endif  // COMPAT_ERROR_HPP_
