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

// Relation extraction from semantic-role frames through the srl rows of
// the rule file. Argument labels are the slot names; the verb is slot "V".
#pragma once

#include <optional>
#include <span>
#include <string>

#include "reqformal/annotations.hpp"
#include "reqformal/clause.hpp"
#include "reqformal/lexicon.hpp"
#include "reqformal/mapping_rules.hpp"
#include "reqformal/model.hpp"
#include "reqformal/preprocess.hpp"

namespace reqformal {

struct FrameRelationDraft {
  std::string construct;  // rule row name, e.g. "V_ARG1(ARG2)"
  bool condition = false;
  bool negated = false;
  std::optional<std::string> time_constraint;
  Relation relation;
  Diagnostics diagnostics;
};

/// Slots for a frame. Modal and negation arguments, and temporal modifiers
/// that are time constraints or bare keywords, do not become slots.
SlotMap frame_slots(const SrlFrame& frame, std::span<const std::string> sentence_tokens,
                    const Lexicon& lexicon);

/// `condition` says whether the frame's clause carries a conditional cue.
/// Throws ExtractionError when no row fits.
FrameRelationDraft frame_to_relation(const SrlFrame& frame,
                                     std::span<const std::string> sentence_tokens,
                                     bool condition, const EventTable& events,
                                     const Lexicon& lexicon, const RuleSet& rules,
                                     BooleanVocabulary& vocabulary);

/// Same for a clause built by frames_to_clauses.
FrameRelationDraft clause_to_relation(const Clause& clause, const EventTable& events,
                                      const Lexicon& lexicon, const RuleSet& rules,
                                      BooleanVocabulary& vocabulary);

}  // namespace reqformal
