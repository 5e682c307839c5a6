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

// Relation extraction from the dependency tree of a clause, in two steps:
// dependency relations to syntactic entities, then entities to a relation
// through the dep_pos rows of the rule file.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reqformal/clause.hpp"
#include "reqformal/lexicon.hpp"
#include "reqformal/mapping_rules.hpp"
#include "reqformal/model.hpp"
#include "reqformal/preprocess.hpp"

namespace reqformal {

/// Clause positions plus their words.
struct EntitySpan {
  std::vector<int> positions;
  std::vector<std::string> words;
  std::vector<std::string> lemmas;

  std::string text() const { return join(words, " "); }
};

struct SyntacticEntities {
  std::optional<EntitySpan> subject;
  std::optional<EntitySpan> object;
  EntitySpan predicate;  // root plus its companions, in clause order
  std::optional<EntitySpan> adjective;
  bool negated = false;
  Keyword marker = Keyword::none;
  /// Verb form used in signal names: the root lemma, or the copula signal.
  std::string verb;
};

/// Throws ExtractionError (with the clause text) when the clause has no root
/// or neither a subject nor an object.
SyntacticEntities extract_syntactic_entities(const Clause& clause, const Lexicon& lexicon,
                                             const EntityRules& rules = {});

/// Slots named subject, object, predicate and adjective for the rule engine.
SlotMap entity_slots(const SyntacticEntities& entities, const Clause& clause);

struct MappedRelation {
  Relation relation;
  std::string row;  // name of the rule row that produced it
  Diagnostics diagnostics;
};

/// Applies the dep_pos rows. Clauses whose keyword is conditional try the
/// condition rows first.
MappedRelation entities_to_relation(const SyntacticEntities& entities, const Clause& clause,
                                    const Lexicon& lexicon, const RuleSet& rules,
                                    BooleanVocabulary& vocabulary, const EventTable& events);

}  // namespace reqformal
