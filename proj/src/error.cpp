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

#include "gforge/error.hpp"

namespace gforge {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kUndefinedNonterminal: return "UndefinedNonterminal";
    case ErrorKind::kEnumerationLimit: return "EnumerationLimit";
    case ErrorKind::kUnprintableName: return "UnprintableName";
    case ErrorKind::kMissingDefiningSymbol: return "MissingDefiningSymbol";
    case ErrorKind::kMissingTerminator: return "MissingTerminator";
    case ErrorKind::kDuplicateRole: return "DuplicateRole";
    case ErrorKind::kUnknownRoleName: return "UnknownRoleName";
    case ErrorKind::kBadNotationLine: return "BadNotationLine";
    case ErrorKind::kUnterminatedFragment: return "UnterminatedFragment";
    case ErrorKind::kFatalSyntax: return "FatalSyntax";
    case ErrorKind::kUnprintable: return "Unprintable";
    case ErrorKind::kSourceMissing: return "SourceMissing";
    case ErrorKind::kTargetNotFresh: return "TargetNotFresh";
    case ErrorKind::kSameName: return "SameName";
    case ErrorKind::kAlreadyDefined: return "AlreadyDefined";
    case ErrorKind::kNotDefined: return "NotDefined";
    case ErrorKind::kStillUsed: return "StillUsed";
    case ErrorKind::kMultipleProductions: return "MultipleProductions";
    case ErrorKind::kSelfReference: return "SelfReference";
    case ErrorKind::kNothingToFold: return "NothingToFold";
    case ErrorKind::kNothingToUnfold: return "NothingToUnfold";
    case ErrorKind::kNotEquivalent: return "NotEquivalent";
    case ErrorKind::kNothingMatched: return "NothingMatched";
    case ErrorKind::kPatternMismatch: return "PatternMismatch";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kDuplicate: return "Duplicate";
    case ErrorKind::kNotFound: return "NotFound";
    case ErrorKind::kLastAlternative: return "LastAlternative";
    case ErrorKind::kNotWidening: return "NotWidening";
    case ErrorKind::kNoSuchProduction: return "NoSuchProduction";
    case ErrorKind::kMarkedNotConcrete: return "MarkedNotConcrete";
    case ErrorKind::kScriptParse: return "ScriptParse";
    case ErrorKind::kRootUndefined: return "RootUndefined";
    case ErrorKind::kReversedRange: return "ReversedRange";
    case ErrorKind::kConfig: return "Config";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace gforge
