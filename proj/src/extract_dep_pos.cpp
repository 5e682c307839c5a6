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

#include "reqformal/extract_dep_pos.hpp"

#include <algorithm>

namespace reqformal {

namespace {

bool listed(const std::vector<std::string>& list, std::string_view value) {
  return std::find(list.begin(), list.end(), value) != list.end();
}

std::string base_relation(const std::string& dep) { return dep.substr(0, dep.find(':')); }

EntitySpan span_of(const Clause& clause, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  EntitySpan span;
  span.positions = std::move(positions);
  for (int p : span.positions) {
    span.words.push_back(clause.at(p).text);
    span.lemmas.push_back(clause.at(p).lemma);
  }
  return span;
}

// Object candidates in preference order. A pobj counts when it hangs under
// a preposition attached to the root or to the root's adjective.
std::optional<int> find_object(const Clause& clause, int root, std::optional<int> adjective,
                               const std::vector<int>& subject, const EntityRules& rules) {
  std::vector<int> anchors{root};
  if (adjective) anchors.push_back(*adjective);
  auto excluded = [&](int p) {
    return std::find(subject.begin(), subject.end(), p) != subject.end();
  };
  for (const auto& relation : rules.object) {
    for (int anchor : anchors) {
      for (int child : clause.children(anchor)) {
        if (excluded(child)) continue;
        if (base_relation(clause.at(child).dep) == relation) return child;
        if (!listed(rules.preposition, base_relation(clause.at(child).dep))) continue;
        for (int grandchild : clause.children(child)) {
          if (!excluded(grandchild) && base_relation(clause.at(grandchild).dep) == relation) {
            return grandchild;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SyntacticEntities extract_syntactic_entities(const Clause& clause, const Lexicon& lexicon,
                                             const EntityRules& rules) {
  const int root = clause.root();
  if (root == 0) throw ExtractionError("clause '" + clause.text() + "' has no root");

  SyntacticEntities entities;
  entities.marker = clause.keyword;

  std::vector<int> subject;
  std::vector<int> predicate{root};
  std::optional<int> adjective;
  bool passive = false;
  for (int child : clause.children(root)) {
    const ClauseToken& token = clause.at(child);
    const std::string dep = base_relation(token.dep);
    if (subject.empty() && listed(rules.subject, dep)) {
      subject = clause.subtree(child);
      continue;
    }
    if (listed(rules.negation, dep) ||
        (lexicon.is_negation(token.text) && (dep == "advmod" || token.pos == "PART"))) {
      entities.negated = true;
      continue;
    }
    if (!adjective && listed(rules.adjective, dep) && token.pos == "ADJ") {
      adjective = child;
      continue;
    }
    if (lexicon.keyword_of(token.text)) continue;
    for (const auto& companion : rules.predicate) {
      if (dep != companion.dep) continue;
      if (!companion.pos.empty() && !listed(companion.pos, token.pos)) continue;
      predicate.push_back(child);
      if (dep == "auxpass") passive = true;
      break;
    }
  }

  if (!subject.empty()) entities.subject = span_of(clause, subject);
  if (adjective) entities.adjective = span_of(clause, {*adjective});
  if (auto object = find_object(clause, root, adjective, subject, rules)) {
    entities.object = span_of(clause, clause.subtree(*object));
  }
  entities.predicate = span_of(clause, predicate);

  const ClauseToken& head = clause.at(root);
  const std::string lemma = to_lower(head.lemma.empty() ? head.text : head.lemma);
  entities.verb = (!passive && lexicon.is_copula(lemma)) ? lexicon.copula_signal : lemma;

  if (!entities.subject && !entities.object) {
    throw ExtractionError("clause '" + clause.text() + "' has neither a subject nor an object");
  }
  return entities;
}

SlotMap entity_slots(const SyntacticEntities& entities, const Clause& clause) {
  SlotMap slots;
  auto fill = [&](const EntitySpan& span) {
    Slot slot;
    slot.positions = span.positions;
    slot.words = span.words;
    slot.lemmas = span.lemmas;
    slot.signal_words = span.words;
    const int last = span.positions.empty() ? 0 : span.positions.back();
    if (last > 0 && last < clause.size()) {
      slot.next_word = clause.at(last + 1).text;
      slot.next_lemma = clause.at(last + 1).lemma;
      slot.next_position = last + 1;
    }
    return slot;
  };
  if (entities.subject) slots["subject"] = fill(*entities.subject);
  if (entities.object) slots["object"] = fill(*entities.object);
  if (entities.adjective) slots["adjective"] = fill(*entities.adjective);

  Slot predicate = fill(entities.predicate);
  // The signal uses the verb form for the root and keeps companions as
  // written ("switch off" -> switch_off). Passive auxiliaries drop out.
  predicate.signal_words.clear();
  const int root = clause.root();
  for (std::size_t i = 0; i < entities.predicate.positions.size(); ++i) {
    const int p = entities.predicate.positions[i];
    if (p == root) {
      predicate.signal_words.push_back(entities.verb);
    } else if (clause.at(p).dep != "auxpass") {
      predicate.signal_words.push_back(entities.predicate.words[i]);
    }
  }
  // Words after the root are tried with it ("falls below").
  if (root < clause.size()) {
    predicate.next_word = clause.at(root + 1).text;
    predicate.next_lemma = clause.at(root + 1).lemma;
    predicate.next_position = root + 1;
  }
  slots["predicate"] = std::move(predicate);
  return slots;
}

MappedRelation entities_to_relation(const SyntacticEntities& entities, const Clause& clause,
                                    const Lexicon& lexicon, const RuleSet& rules,
                                    BooleanVocabulary& vocabulary, const EventTable& events) {
  RuleContext context;
  context.lexicon = &lexicon;
  context.events = &events;
  context.vocabulary = &vocabulary;
  context.condition = is_conditional(entities.marker);
  context.negated = entities.negated;
  try {
    RuleMatch match = apply_rows(rules.dep_pos, entity_slots(entities, clause), context);
    return MappedRelation{std::move(match.relation), match.row->name,
                          std::move(match.diagnostics)};
  } catch (const ExtractionError& e) {
    throw ExtractionError("clause '" + clause.text() + "': " + e.what());
  }
}

}  // namespace reqformal
