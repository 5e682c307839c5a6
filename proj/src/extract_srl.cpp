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

#include "reqformal/extract_srl.hpp"

namespace reqformal {

namespace {

std::vector<std::string> span_words(std::span<const std::string> tokens, const TokenSpan& span) {
  std::vector<std::string> out;
  for (int k = span.start; k <= span.end; ++k) {
    if (k >= 1 && static_cast<std::size_t>(k) <= tokens.size()) {
      out.push_back(tokens[static_cast<std::size_t>(k - 1)]);
    }
  }
  return out;
}

bool skipped_modifier(const SrlArgument& argument, std::span<const std::string> tokens,
                      const Lexicon& lexicon) {
  if (argument.label == "ARGM-MOD" || argument.label == "ARGM-NEG") return true;
  const auto words = span_words(tokens, argument.span);
  if (argument.label == "ARGM-TMP" && lexicon.is_time_expression(words)) return true;
  return is_modifier_label(argument.label) && words.size() == 1 &&
         lexicon.keyword_of(words.front()).has_value();
}

}  // namespace

SlotMap frame_slots(const SrlFrame& frame, std::span<const std::string> sentence_tokens,
                    const Lexicon& lexicon) {
  SlotMap slots;
  for (const auto& argument : frame.arguments) {
    if (skipped_modifier(argument, sentence_tokens, lexicon)) continue;
    if (slots.count(argument.label) != 0) continue;
    Slot slot;
    for (int k = argument.span.start; k <= argument.span.end; ++k) slot.positions.push_back(k);
    slot.words = span_words(sentence_tokens, argument.span);
    slot.lemmas.assign(slot.words.size(), "");
    slot.signal_words = slot.words;
    slots[argument.label] = std::move(slot);
  }

  Slot verb;
  verb.positions = {frame.verb.index};
  verb.words = {frame.verb.text};
  const std::string lemma = to_lower(frame.verb.lemma.empty() ? frame.verb.text : frame.verb.lemma);
  verb.lemmas = {lemma};
  verb.signal_words = {lexicon.is_copula(lemma) ? lexicon.copula_signal : lemma};
  if (frame.verb.index >= 1 && static_cast<std::size_t>(frame.verb.index) < sentence_tokens.size()) {
    verb.next_word = sentence_tokens[static_cast<std::size_t>(frame.verb.index)];
    verb.next_position = frame.verb.index + 1;
  }
  slots["V"] = std::move(verb);
  return slots;
}

FrameRelationDraft frame_to_relation(const SrlFrame& frame,
                                     std::span<const std::string> sentence_tokens,
                                     bool condition, const EventTable& events,
                                     const Lexicon& lexicon, const RuleSet& rules,
                                     BooleanVocabulary& vocabulary) {
  FrameRelationDraft draft;
  draft.condition = condition;
  for (const auto& argument : frame.arguments) {
    if (argument.label == "ARGM-NEG") draft.negated = true;
    if (argument.label == "ARGM-TMP" &&
        lexicon.is_time_expression(span_words(sentence_tokens, argument.span))) {
      draft.time_constraint = join(span_words(sentence_tokens, argument.span), " ");
    }
  }

  RuleContext context;
  context.lexicon = &lexicon;
  context.events = &events;
  context.vocabulary = &vocabulary;
  context.condition = condition;
  context.negated = draft.negated;

  const SlotMap slots = frame_slots(frame, sentence_tokens, lexicon);
  RuleMatch match;
  try {
    match = apply_rows(rules.srl, slots, context);
  } catch (const ExtractionError& e) {
    throw ExtractionError("frame '" + frame.verb.text + "': " + e.what());
  }
  draft.construct = match.row->name;
  draft.relation = std::move(match.relation);
  draft.diagnostics = std::move(match.diagnostics);

  if (slots.count("ARG2") != 0 && slots.count("ARGM-PRD") != 0) {
    draft.diagnostics.push_back({Severity::warning, "ambiguous-frame",
                                 "frame '" + frame.verb.text + "' has both ARG2 and ARGM-PRD; " +
                                     "row " + draft.construct + " was used"});
  }
  for (const auto& [label, slot] : slots) {
    if (label == "V") continue;
    bool used = false;
    for (const auto& reference : match.row->requires_slots) {
      if (resolve_slot(slots, reference) == &slot) used = true;
    }
    if (!used) {
      draft.diagnostics.push_back({Severity::info, "argument-ignored",
                                   "frame '" + frame.verb.text + "': " + label + " '" +
                                       join(slot.words, " ") + "' is not part of row " +
                                       draft.construct});
    }
  }
  return draft;
}

FrameRelationDraft clause_to_relation(const Clause& clause, const EventTable& events,
                                      const Lexicon& lexicon, const RuleSet& rules,
                                      BooleanVocabulary& vocabulary) {
  if (!clause.frame) {
    throw ExtractionError("clause '" + clause.text() + "' was not built from a frame");
  }
  return frame_to_relation(clause.frame->frame, clause.frame->sentence_tokens,
                           is_conditional(clause.keyword), events, lexicon, rules, vocabulary);
}

}  // namespace reqformal
