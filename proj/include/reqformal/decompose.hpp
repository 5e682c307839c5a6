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

// Clause decomposition. The dependency route runs
//
//   rewrite_between -> split_on_markers -> split_root_conjunctions
//                   -> expand_np_conjunctions
//
// on each sentence (pronoun resolution follows over the whole requirement).
// The role-labeling route turns each surviving frame into one clause.
//
// Subordinating keywords stay at the head of the clause text and are also
// recorded in Clause::keyword. Clauses split off a verbal conjunction
// inherit the keyword of the clause they came from without repeating the
// keyword word in their text.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reqformal/annotations.hpp"
#include "reqformal/clause.hpp"
#include "reqformal/core.hpp"
#include "reqformal/lexicon.hpp"

namespace reqformal {

struct RewrittenText {
  std::string text;
  Diagnostics diagnostics;
};

/// "between A and B" -> "greater than A and less than B". Each rewrite adds
/// a warning about the A < B assumption; a "between" without a following
/// "and" is left alone with a warning.
RewrittenText rewrite_between(std::string_view text);

struct RewrittenSentence {
  DepAnnotation sentence;
  Diagnostics diagnostics;
};

/// Same rewrite on a dependency tree. "greater" and "less" become
/// coordinated adjectives, each governing "than" and its operand, so the
/// result decomposes like any other non-verbal coordination.
RewrittenSentence rewrite_between(const DepAnnotation& sentence);

/// Splits at subordinating markers (if/when/while/until), at else-words, and
/// at verbal conjuncts of the sentence root. Clauses come back in textual
/// order; punctuation is dropped and the coordinating conjunction at a split
/// becomes the clause connective.
std::vector<Clause> split_on_markers(const DepAnnotation& sentence, const Lexicon& lexicon,
                                     std::size_t sentence_number = 0);

/// One clause per verbal conjunct of the clause root.
std::vector<Clause> split_root_conjunctions(const Clause& clause, const Lexicon& lexicon);

/// Splits a coordination of non-verbal heads outside the subject. The second
/// conjunct gets a copy of everything before the first conjunct.
std::vector<Clause> expand_np_conjunctions(const Clause& clause);

/// Full dependency route for one sentence.
std::vector<Clause> decompose_sentence(const DepAnnotation& sentence, const Lexicon& lexicon,
                                       std::size_t sentence_number, Diagnostics& diagnostics);

/// One clause per frame with at least two arguments, leaving out modal-verb
/// frames that carry modifiers only.
/// Modifier arguments spanning another frame's verb are excluded from the
/// clause; a single-word conditional modifier or an unassigned keyword just
/// before the frame sets the clause keyword.
std::vector<Clause> frames_to_clauses(const SrlSentence& sentence, const Lexicon& lexicon,
                                      std::size_t sentence_number = 0,
                                      Diagnostics* diagnostics = nullptr);

/// Splits on '.', '!' or '?' followed by whitespace or the end of text.
std::vector<std::string> split_sentences(std::string_view text);

}  // namespace reqformal
