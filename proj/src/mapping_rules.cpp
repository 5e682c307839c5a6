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

#include "reqformal/mapping_rules.hpp"

#include <algorithm>

#include "json.hpp"

namespace reqformal {

using nlohmann::json;

namespace {

std::vector<std::string> strings_at(const json& node, const char* key) {
  if (!node.contains(key)) return {};
  return node.at(key).get<std::vector<std::string>>();
}

MappingRow parse_row(const json& node) {
  MappingRow row;
  row.name = node.at("name").get<std::string>();
  const std::string kind = node.value("kind", "assignment");
  if (kind == "comparison") {
    row.kind = RelationKind::comparison;
  } else if (kind != "assignment") {
    throw ResourceError("rule '" + row.name + "': unknown kind '" + kind + "'");
  }
  const std::string context = node.value("context", "any");
  if (context == "condition") {
    row.context = RowContext::condition;
  } else if (context != "any") {
    throw ResourceError("rule '" + row.name + "': unknown context '" + context + "'");
  }
  row.requires_slots = strings_at(node, "requires");
  row.forbids = strings_at(node, "forbids");
  row.signal = strings_at(node, "signal");
  if (node.contains("operator_from")) row.operator_from = node.at("operator_from").get<std::string>();
  if (node.contains("operator")) {
    const std::string text = node.at("operator").get<std::string>();
    row.fixed_operator = operator_from_symbol(text);
    if (!row.fixed_operator) {
      throw ResourceError("rule '" + row.name + "': unknown operator '" + text + "'");
    }
  }
  if (node.contains("parameter")) {
    std::string parameter = node.at("parameter").get<std::string>();
    constexpr std::string_view kBoolean = "boolean:";
    if (parameter.starts_with(kBoolean)) {
      row.boolean_parameter = true;
      parameter.erase(0, kBoolean.size());
    }
    row.parameter = parameter;
  }

  if (row.requires_slots.empty()) throw ResourceError("rule '" + row.name + "' requires nothing");
  if (row.signal.empty()) throw ResourceError("rule '" + row.name + "' has no signal slots");
  if (row.kind == RelationKind::comparison) {
    if (row.operator_from.has_value() == row.fixed_operator.has_value()) {
      throw ResourceError("comparison rule '" + row.name +
                          "' needs exactly one of operator_from and operator");
    }
    if (!row.parameter) throw ResourceError("comparison rule '" + row.name + "' has no parameter");
  } else if (row.operator_from || row.fixed_operator || row.boolean_parameter) {
    throw ResourceError("assignment rule '" + row.name + "' cannot carry an operator");
  }
  auto required = [&](const std::string& reference) {
    return std::find(row.requires_slots.begin(), row.requires_slots.end(), reference) !=
           row.requires_slots.end();
  };
  for (const auto& reference : row.signal) {
    if (!required(reference)) {
      throw ResourceError("rule '" + row.name + "': signal slot '" + reference +
                          "' is not required");
    }
  }
  if (row.operator_from && !required(*row.operator_from)) {
    throw ResourceError("rule '" + row.name + "': operator slot is not required");
  }
  if (row.parameter && !required(*row.parameter)) {
    throw ResourceError("rule '" + row.name + "': parameter slot is not required");
  }
  return row;
}

std::vector<MappingRow> parse_rows(const json& section) {
  std::vector<MappingRow> rows;
  for (const auto& node : section.at("rows")) rows.push_back(parse_row(node));
  return rows;
}

EntityRules parse_entities(const json& node) {
  EntityRules rules;
  if (node.contains("subject")) rules.subject = strings_at(node, "subject");
  if (node.contains("object")) rules.object = strings_at(node, "object");
  if (node.contains("preposition")) rules.preposition = strings_at(node, "preposition");
  if (node.contains("adjective")) rules.adjective = strings_at(node, "adjective");
  if (node.contains("negation")) rules.negation = strings_at(node, "negation");
  if (node.contains("predicate")) {
    rules.predicate.clear();
    for (const auto& item : node.at("predicate")) {
      rules.predicate.push_back(
          CompanionRule{item.at("dep").get<std::string>(), strings_at(item, "pos")});
    }
  }
  return rules;
}

struct OperatorHit {
  Operator op;
  std::vector<int> consumed;
};

std::optional<OperatorHit> find_operator(const Slot& slot, const Lexicon& lexicon) {
  if (auto m = lexicon.operators.match(slot.words, slot.lemmas)) {
    OperatorHit hit{m->op, {}};
    for (std::size_t k = m->begin; k < m->begin + m->length && k < slot.positions.size(); ++k) {
      hit.consumed.push_back(slot.positions[k]);
    }
    return hit;
  }
  if (!slot.next_word) return std::nullopt;
  std::vector<std::string> words = slot.words;
  std::vector<std::string> lemmas = slot.lemmas;
  lemmas.resize(words.size());
  words.push_back(*slot.next_word);
  lemmas.push_back(slot.next_lemma.value_or(""));
  auto m = lexicon.operators.match(words, lemmas);
  if (!m) return std::nullopt;
  OperatorHit hit{m->op, {}};
  for (std::size_t k = m->begin; k < m->begin + m->length; ++k) {
    hit.consumed.push_back(k < slot.positions.size() ? slot.positions[k] : slot.next_position);
  }
  return hit;
}

std::string describe(const SlotMap& slots) {
  std::vector<std::string> parts;
  for (const auto& [name, slot] : slots) parts.push_back(name + "='" + join(slot.words, " ") + "'");
  return "{" + join(parts, ", ") + "}";
}

}  // namespace

RuleSet parse_rules(std::string_view json_text) {
  json document;
  try {
    document = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ResourceError(std::string("rule file is not valid JSON: ") + e.what());
  }
  RuleSet rules;
  try {
    const auto& dep_pos = document.at("dep_pos");
    if (dep_pos.contains("entities")) rules.entities = parse_entities(dep_pos.at("entities"));
    rules.dep_pos = parse_rows(dep_pos);
    rules.srl = parse_rows(document.at("srl"));
  } catch (const json::exception& e) {
    throw ResourceError(std::string("malformed rule file: ") + e.what());
  }
  return rules;
}

RuleSet load_rules(const std::filesystem::path& path) { return parse_rules(read_file(path)); }

const Slot* resolve_slot(const SlotMap& slots, std::string_view reference) {
  std::size_t start = 0;
  while (start <= reference.size()) {
    const std::size_t bar = reference.find('|', start);
    const std::string_view name =
        reference.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    if (auto it = slots.find(name); it != slots.end()) return &it->second;
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return nullptr;
}

bool row_fits(const MappingRow& row, const SlotMap& slots) {
  for (const auto& reference : row.requires_slots) {
    if (resolve_slot(slots, reference) == nullptr) return false;
  }
  for (const auto& reference : row.forbids) {
    if (resolve_slot(slots, reference) != nullptr) return false;
  }
  return true;
}

std::string parameter_identifier(const Slot& slot, const Lexicon& lexicon,
                                 const EventTable* events, std::span<const int> consumed) {
  std::size_t first = 0;
  while (first < slot.words.size()) {
    const bool used = first < slot.positions.size() &&
                      std::find(consumed.begin(), consumed.end(), slot.positions[first]) !=
                          consumed.end();
    const std::string lower = to_lower(slot.words[first]);
    const bool connector =
        std::find(lexicon.parameter_leading_drop.begin(), lexicon.parameter_leading_drop.end(),
                  lower) != lexicon.parameter_leading_drop.end();
    if (!used && !connector) break;
    ++first;
  }
  std::vector<std::string> words(slot.words.begin() + static_cast<std::ptrdiff_t>(first),
                                 slot.words.end());
  if (events != nullptr) words = expand_events(words, *events);
  if (words.empty()) {
    throw ExtractionError("parameter '" + join(slot.words, " ") + "' is empty once its leading "
                          "connector words are removed");
  }
  return normalize_identifier(words, lexicon);
}

RuleMatch apply_rows(std::span<const MappingRow> rows, const SlotMap& slots,
                     const RuleContext& context) {
  const Lexicon& lexicon = *context.lexicon;
  std::vector<const MappingRow*> order;
  if (context.condition) {
    for (const auto& row : rows) {
      if (row.context == RowContext::condition) order.push_back(&row);
    }
  }
  const std::size_t condition_rows = order.size();
  for (const auto& row : rows) {
    if (row.context == RowContext::any) order.push_back(&row);
  }

  std::string operator_row;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const MappingRow* row = order[i];
    if (i == condition_rows && !operator_row.empty()) break;
    if (!row_fits(*row, slots)) continue;
    RuleMatch match;
    match.row = row;

    std::vector<int> consumed;
    Operator op = Operator::equal;
    if (row->kind == RelationKind::comparison) {
      if (row->fixed_operator) {
        op = *row->fixed_operator;
      } else {
        const Slot* source = resolve_slot(slots, *row->operator_from);
        auto hit = find_operator(*source, lexicon);
        if (!hit) {
          if (operator_row.empty()) {
            operator_row = row->name + " (no operator for '" + join(source->words, " ") + "')";
          }
          continue;
        }
        op = hit->op;
        consumed = std::move(hit->consumed);
      }
    }

    std::string parameter;
    std::vector<std::string> parameters;
    if (row->parameter) {
      const Slot* slot = resolve_slot(slots, *row->parameter);
      if (row->boolean_parameter) {
        // A comparison word is not a boolean qualifier.
        if (lexicon.operators.match(slot->words, slot->lemmas)) continue;
        BooleanVocabulary scratch(lexicon.antonyms);
        BooleanVocabulary& vocabulary = context.vocabulary ? *context.vocabulary : scratch;
        const std::string word = to_lower(slot->words.back());
        const BooleanClass value = vocabulary.classify(word);
        if (!value.known) {
          match.diagnostics.push_back(
              {Severity::warning, "unknown-boolean",
               "'" + word + "' has no registered antonym; taken as true on first use"});
        }
        parameter = value.value ? "true" : "false";
      } else {
        parameter = parameter_identifier(*slot, lexicon, context.events, consumed);
      }
      if (row->kind == RelationKind::assignment) parameters.push_back(parameter);
    }

    std::vector<std::string> signal_words;
    for (const auto& reference : row->signal) {
      const Slot* slot = resolve_slot(slots, reference);
      signal_words.insert(signal_words.end(), slot->signal_words.begin(), slot->signal_words.end());
    }
    if (context.events != nullptr) signal_words = expand_events(signal_words, *context.events);
    const std::string signal = normalize_identifier(signal_words, lexicon);

    match.relation = row->kind == RelationKind::comparison
                         ? Relation::comparison(signal, op, parameter, context.negated)
                         : Relation::assignment(signal, parameters, context.negated);
    return match;
  }

  if (!operator_row.empty()) {
    throw ExtractionError("missing operator: row " + operator_row + " fits " + describe(slots));
  }
  throw ExtractionError("no mapping row fits " + describe(slots));
}

}  // namespace reqformal
