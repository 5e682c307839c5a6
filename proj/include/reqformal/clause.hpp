// Copyright 2026 The reqformal Authors
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

// A Clause is a decomposed piece of one sentence expressing a single
// primitive action. Clauses from the dependency route carry their own
// local dependency tree; clauses from the role-labeling route carry the
// frame they were built from.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reqformal/annotations.hpp"
#include "reqformal/core.hpp"

namespace reqformal {

struct ClauseToken {
  std::string text;
  std::string lemma;
  std::string pos;
  std::string dep;  // relation in the source sentence
  std::string feats = "_";
  std::string xpos = "_";
  int head = 0;     // 1-based position inside the clause; 0 marks the clause root
  int source = 0;   // index in the sentence annotation; 0 for inserted words
  bool injected = false;  // copied or inserted by decomposition

  bool operator==(const ClauseToken&) const = default;
};

/// Frame data attached to clauses built from semantic roles.
struct FrameClause {
  SrlFrame frame;                         // retained arguments only
  std::vector<SrlArgument> excluded;      // full-clause modifiers left out
  std::optional<std::string> time_constraint;
  std::vector<std::string> sentence_tokens;

  bool operator==(const FrameClause&) const = default;
};

struct Clause {
  std::vector<ClauseToken> tokens;
  Keyword keyword = Keyword::none;
  Connective connective = Connective::none;  // conjunction towards the previous clause
  std::size_t sentence = 0;
  std::optional<FrameClause> frame;

  std::string text() const;
  /// Tokens as words, in clause order.
  std::vector<std::string> words() const;

  // Local tree queries; positions are 1-based.
  const ClauseToken& at(int position) const;
  int root() const;
  std::vector<int> children(int position) const;
  std::vector<int> subtree(int position) const;
  int size() const noexcept { return static_cast<int>(tokens.size()); }

  bool operator==(const Clause&) const = default;
};

/// Token under construction. `key` identifies the token, `head_key` its
/// governor; keys are positions in whatever structure the token came from,
/// and negative keys mark newly created tokens.
struct DraftToken {
  ClauseToken token;
  int key = 0;
  int head_key = 0;
};

/// Turns drafts (already in output order) into a clause with a single-rooted
/// local tree. Tokens whose governor is missing attach to the token with the
/// largest subtree among them; that token becomes the clause root.
Clause assemble_clause(std::vector<DraftToken> drafts, Keyword keyword, Connective connective,
                       std::size_t sentence);

/// Drafts for the given sentence token indices (ascending), dropping
/// punctuation.
std::vector<DraftToken> drafts_from_sentence(const DepAnnotation& sentence,
                                             const std::vector<int>& indices);

/// Drafts for the given clause positions, keyed by position.
std::vector<DraftToken> drafts_from_clause(const Clause& clause, const std::vector<int>& positions);

bool is_verbal(const ClauseToken& token);
bool is_punctuation(std::string_view pos, std::string_view text);

}  // namespace reqformal
