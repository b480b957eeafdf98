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

// Precondition-violating calls, one per operator, shared by xbgf_test and the
// acceptance binary.

#ifndef GFORGE_TESTS_XBGF_CASES_HPP_
#define GFORGE_TESTS_XBGF_CASES_HPP_

#include <functional>
#include <vector>

#include "gforge/xbgf.hpp"
#include "test_util.hpp"

namespace gforge::cases {

struct Case {
  const char* op;
  std::function<Grammar()> call;
  ErrorKind kind;
};

inline const Grammar& atomicity_grammar() {
  static const Grammar g = testing::G(
      "a: b b c\n"
      "b: \"x\" | \"y\"\n"
      "b2: \"z\"\n"
      "r: \"r\" r\n"
      "c: \"w\"\n");
  return g;
}

inline std::vector<Case> atomicity_cases() {
  using testing::E;
  auto P = [](const std::string& lhs, const std::string& rhs) { return Production{lhs, E(rhs)}; };
  const Grammar& g = atomicity_grammar();
  return {
      {"renameN", [&g, P] { return xbgf::rename_n(g, "b", "c"); }, ErrorKind::kTargetNotFresh},
      {"renameT", [&g, P] { return xbgf::rename_t(g, "q", "p"); }, ErrorKind::kSourceMissing},
      {"unite", [&g, P] { return xbgf::unite(g, "b", "b"); }, ErrorKind::kSameName},
      {"define", [&g, P] { return xbgf::define(g, {P("b", "\"q\"")}); }, ErrorKind::kAlreadyDefined},
      {"redefine", [&g, P] { return xbgf::redefine(g, {P("zz", "\"q\"")}); }, ErrorKind::kNotDefined},
      {"eliminate", [&g, P] { return xbgf::eliminate(g, "b"); }, ErrorKind::kStillUsed},
      {"inline", [&g, P] { return xbgf::inline_nonterminal(g, "r"); }, ErrorKind::kSelfReference},
      {"fold", [&g, P] { return xbgf::fold(g, "b2"); }, ErrorKind::kNothingToFold},
      {"unfold", [&g, P] { return xbgf::unfold(g, "b2"); }, ErrorKind::kNothingToUnfold},
      {"massage", [&g, P] { return xbgf::massage(g, E("b"), E("b?")); }, ErrorKind::kNotEquivalent},
      {"deyaccify", [&g, P] { return xbgf::deyaccify(g, "c"); }, ErrorKind::kPatternMismatch},
      {"vertical", [&g, P] { return xbgf::vertical(g, "c"); }, ErrorKind::kShapeMismatch},
      {"horizontal", [&g, P] { return xbgf::horizontal(g, "b"); }, ErrorKind::kShapeMismatch},
      {"distribute", [&g, P] { return xbgf::distribute(g, "zz"); }, ErrorKind::kNotDefined},
      {"addV", [&g, P] { return xbgf::add_v(g, P("c", "\"w\"")); }, ErrorKind::kDuplicate},
      {"removeV", [&g, P] { return xbgf::remove_v(g, P("c", "\"w\"")); }, ErrorKind::kLastAlternative},
      {"replace", [&g, P] { return xbgf::replace(g, E("\"nope\""), E("c")); }, ErrorKind::kNothingMatched},
      {"widen", [&g, P] { return xbgf::widen(g, E("b?"), E("b")); }, ErrorKind::kNotWidening},
      {"project", [&g, P] { return xbgf::project(g, P("c", "\"v\" <\"w\">")); }, ErrorKind::kNoSuchProduction},
      {"abstractize", [&g, P] { return xbgf::abstractize(g, P("a", "b <b> c")); },
       ErrorKind::kMarkedNotConcrete},
  };
}

}  // namespace gforge::cases

#endif  // GFORGE_TESTS_XBGF_CASES_HPP_
