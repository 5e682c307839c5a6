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

// Editable rows that turn named slots (syntactic entities or semantic roles)
// into relations. Both extractors share this engine; they differ only in how
// they fill the slots. Rows are tried in file order, except that rows marked
// as conditions go first for clauses with a conditional cue and are skipped
// for all other clauses.
//
// Row fields (see data/rules.json):
//   name           construct name reported in diagnostics
//   kind           "assignment" or "comparison"
//   context        "condition" or "any"
//   requires       slots that must be present; "ARG1|ARG0" takes the first
//                  present alternative
//   forbids        slots that must be absent
//   signal         slots whose signal words form the signal name
//   operator_from  slot whose words give the comparison operator, or
//   operator       a fixed operator symbol
//   parameter      slot for the parameter, or "boolean:SLOT" for the truth
//                  value of a boolean qualifier
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqformal/core.hpp"
#include "reqformal/lexicon.hpp"
#include "reqformal/model.hpp"
#include "reqformal/preprocess.hpp"

namespace reqformal {

enum class RowContext { any, condition };

struct MappingRow {
  std::string name;
  RelationKind kind = RelationKind::assignment;
  RowContext context = RowContext::any;
  std::vector<std::string> requires_slots;
  std::vector<std::string> forbids;
  std::vector<std::string> signal;
  std::optional<std::string> operator_from;
  std::optional<Operator> fixed_operator;
  std::optional<std::string> parameter;
  bool boolean_parameter = false;
};

struct CompanionRule {
  std::string dep;
  std::vector<std::string> pos;  // empty: any tag
};

/// Which dependency relations fill the syntactic entities of a clause.
struct EntityRules {
  std::vector<std::string> subject{"nsubj", "nsubjpass"};
  /// Object relations in order of preference.
  std::vector<std::string> object{"dobj", "attr", "pobj"};
  /// Relations of the words a pobj may hang under.
  std::vector<std::string> preposition{"prep", "agent"};
  /// Dependents of the root that join it in the predicate.
  std::vector<CompanionRule> predicate{
      {"auxpass", {}}, {"prt", {}}, {"compound", {"NOUN"}}, {"advmod", {"ADV"}}};
  std::vector<std::string> adjective{"acomp"};
  std::vector<std::string> negation{"neg"};
};

struct RuleSet {
  EntityRules entities;
  std::vector<MappingRow> dep_pos;
  std::vector<MappingRow> srl;
};

RuleSet parse_rules(std::string_view json_text);
RuleSet load_rules(const std::filesystem::path& path);

/// One filled slot.
struct Slot {
  std::vector<int> positions;             // ascending; source-specific numbering
  std::vector<std::string> words;         // surface words
  std::vector<std::string> lemmas;        // same length as words, may be empty strings
  std::vector<std::string> signal_words;  // words contributed when used in a signal
  /// The word right after the slot, tried together with the slot when the
  /// slot alone gives no operator.
  std::optional<std::string> next_word;
  std::optional<std::string> next_lemma;
  int next_position = 0;
};

using SlotMap = std::map<std::string, Slot, std::less<>>;

struct RuleContext {
  const Lexicon* lexicon = nullptr;
  const EventTable* events = nullptr;
  BooleanVocabulary* vocabulary = nullptr;
  bool condition = false;  // the clause carries a conditional cue
  bool negated = false;
};

struct RuleMatch {
  const MappingRow* row = nullptr;
  Relation relation;
  Diagnostics diagnostics;
};

/// First row that applies to `slots`. Throws ExtractionError naming the
/// present slots when none does. In a condition, a condition row that fits
/// structurally but finds no operator ends the search with an error whose
/// message starts with "missing operator"; the general rows are not tried.
RuleMatch apply_rows(std::span<const MappingRow> rows, const SlotMap& slots,
                     const RuleContext& context);

/// True when all slots a row requires are present and none it forbids are.
bool row_fits(const MappingRow& row, const SlotMap& slots);

/// Slot bound by a reference like "ARG1|ARG0" (first present alternative).
const Slot* resolve_slot(const SlotMap& slots, std::string_view reference);

/// Parameter text for a slot: abbreviated events expanded, leading
/// connector words ("to", "than") and words consumed by the operator dropped,
/// then normalized.
std::string parameter_identifier(const Slot& slot, const Lexicon& lexicon,
                                 const EventTable* events,
                                 std::span<const int> consumed_positions = {});

}  // namespace reqformal
