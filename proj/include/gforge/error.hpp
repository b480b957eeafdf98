// Copyright 2026 The gforge Authors
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

#ifndef GFORGE_ERROR_HPP_
#define GFORGE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gforge {

// Every failure the library reports is an Error carrying one of these kinds.
// Callers dispatch on kind(); what() holds a human-readable message.
enum class ErrorKind {
  // grammar-core / pp-notation
  kParse,
  kUndefinedNonterminal,
  kEnumerationLimit,
  kUnprintableName,
  // notation-edd
  kMissingDefiningSymbol,
  kMissingTerminator,
  kDuplicateRole,
  kUnknownRoleName,
  kBadNotationLine,
  // extractor
  kUnterminatedFragment,
  kFatalSyntax,
  kUnprintable,
  // transformation operators
  kSourceMissing,
  kTargetNotFresh,
  kSameName,
  kAlreadyDefined,
  kNotDefined,
  kStillUsed,
  kMultipleProductions,
  kSelfReference,
  kNothingToFold,
  kNothingToUnfold,
  kNotEquivalent,
  kNothingMatched,
  kPatternMismatch,
  kShapeMismatch,
  kDuplicate,
  kNotFound,
  kLastAlternative,
  kNotWidening,
  kNoSuchProduction,
  kMarkedNotConcrete,
  kScriptParse,
  // analysis / pipeline
  kRootUndefined,
  kReversedRange,
  kConfig,
  kIo,
};

// Stable identifier for a kind, e.g. "TargetNotFresh".
std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gforge

#endif  // GFORGE_ERROR_HPP_
