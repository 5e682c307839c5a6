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

#include "reqformal/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace reqformal {

namespace {

using nlohmann::json;

bool contains_word(const std::vector<std::string>& list, std::string_view word) {
  const std::string lower = to_lower(word);
  return std::find(list.begin(), list.end(), lower) != list.end();
}

std::vector<std::string> lowered(std::vector<std::string> words) {
  for (auto& w : words) w = to_lower(w);
  return words;
}

std::vector<std::string> string_list(const json& node, const char* key,
                                     std::vector<std::string> fallback, bool lowercase = true) {
  if (!node.contains(key)) return fallback;
  try {
    auto values = node.at(key).get<std::vector<std::string>>();
    return lowercase ? lowered(std::move(values)) : values;
  } catch (const json::exception&) {
    throw ResourceError(std::string("lexicon: '") + key + "' must be a list of strings");
  }
}

}  // namespace

std::string_view symbol(Operator op) {
  switch (op) {
    case Operator::less: return "<";
    case Operator::greater: return ">";
    case Operator::equal: return "==";
    case Operator::less_equal: return "<=";
    case Operator::greater_equal: return ">=";
    case Operator::not_equal: return "!=";
  }
  return "?";
}

std::optional<Operator> operator_from_symbol(std::string_view text) {
  if (text == "<") return Operator::less;
  if (text == ">") return Operator::greater;
  if (text == "==") return Operator::equal;
  if (text == "<=") return Operator::less_equal;
  if (text == ">=") return Operator::greater_equal;
  if (text == "!=") return Operator::not_equal;
  return std::nullopt;
}

void OperatorLexicon::add(OperatorEntry entry) {
  entry.words = lowered(std::move(entry.words));
  entries_.push_back(std::move(entry));
}

std::optional<OperatorMatch> OperatorLexicon::match(std::span<const std::string> words,
                                                    std::span<const std::string> lemmas) const {
  auto word_matches = [&](std::size_t i, const std::string& entry_word) {
    if (to_lower(words[i]) == entry_word) return true;
    return i < lemmas.size() && to_lower(lemmas[i]) == entry_word;
  };
  std::optional<OperatorMatch> best;
  for (const auto& entry : entries_) {
    const std::size_t length = entry.words.size();
    if (length == 0 || length > words.size()) continue;
    for (std::size_t begin = 0; begin + length <= words.size(); ++begin) {
      bool ok = true;
      for (std::size_t k = 0; k < length && ok; ++k) ok = word_matches(begin + k, entry.words[k]);
      if (!ok) continue;
      const bool better = !best || length > best->length ||
                          (length == best->length && begin < best->begin);
      if (better) best = OperatorMatch{entry.op, begin, length, entry.quality};
      break;
    }
  }
  return best;
}

std::optional<Operator> OperatorLexicon::lookup(std::span<const std::string> words,
                                                std::span<const std::string> lemmas) const {
  if (auto m = match(words, lemmas)) return m->op;
  return std::nullopt;
}

void AntonymTable::add(const std::string& a, const std::string& b) {
  const std::string la = to_lower(a);
  const std::string lb = to_lower(b);
  pairs_.emplace(la, lb);
  pairs_.emplace(lb, la);
}

std::vector<std::string> AntonymTable::antonyms_of(std::string_view word) const {
  std::vector<std::string> out;
  const std::string lower = to_lower(word);
  auto [first, last] = pairs_.equal_range(lower);
  for (auto it = first; it != last; ++it) out.push_back(it->second);
  return out;
}

bool AntonymTable::has(std::string_view word) const {
  return pairs_.find(to_lower(word)) != pairs_.end();
}

BooleanVocabulary::BooleanVocabulary(AntonymTable antonyms) : antonyms_(std::move(antonyms)) {}

BooleanClass BooleanVocabulary::classify(std::string_view word) {
  const std::string lower = to_lower(word);
  if (auto it = values_.find(lower); it != values_.end()) return {it->second, true};
  for (const auto& antonym : antonyms_.antonyms_of(lower)) {
    if (auto it = values_.find(antonym); it != values_.end()) {
      values_[lower] = !it->second;
      return {!it->second, true};
    }
  }
  values_[lower] = true;
  return {true, antonyms_.has(lower)};
}

std::optional<bool> BooleanVocabulary::value(std::string_view word) const {
  if (auto it = values_.find(to_lower(word)); it != values_.end()) return it->second;
  return std::nullopt;
}

bool Lexicon::is_stopword(std::string_view word) const {
  return stopwords.find(to_lower(word)) != stopwords.end();
}

bool Lexicon::is_pronoun(std::string_view word) const {
  return contains_word(singular_pronouns, word) || contains_word(plural_pronouns, word);
}

bool Lexicon::is_plural_pronoun(std::string_view word) const {
  return contains_word(plural_pronouns, word);
}

bool Lexicon::is_copula(std::string_view lemma) const { return contains_word(copulas, lemma); }

bool Lexicon::is_modal(std::string_view lemma) const { return contains_word(modal_verbs, lemma); }

bool Lexicon::is_coordinator(std::string_view word) const {
  return contains_word(keywords.coordinators, word);
}

bool Lexicon::is_negation(std::string_view word) const { return contains_word(negations, word); }

std::optional<Keyword> Lexicon::keyword_of(std::string_view word) const {
  if (contains_word(keywords.until, word)) return Keyword::until;
  if (contains_word(keywords.else_words, word)) return Keyword::else_;
  if (contains_word(keywords.conditional, word)) {
    // Extra conditional words ("whenever") behave like "if".
    return keyword_from_word(word, {}).value_or(Keyword::if_);
  }
  return std::nullopt;
}

bool Lexicon::is_time_expression(std::span<const std::string> words) const {
  bool number = false;
  bool unit = false;
  bool marker = false;
  for (const auto& word : words) {
    const std::string lower = to_lower(word);
    if (contains_word(time_markers, lower)) marker = true;
    if (contains_word(time_units, lower)) unit = true;
    std::size_t digits = 0;
    while (digits < lower.size() && std::isdigit(static_cast<unsigned char>(lower[digits]))) {
      ++digits;
    }
    if (digits > 0) {
      number = true;
      // "3s", "100ms": number glued to a unit.
      if (digits < lower.size() && contains_word(time_units, lower.substr(digits))) unit = true;
    }
  }
  return (number && unit) || marker;
}

std::optional<Operator> lookup_operator(const Lexicon& lexicon,
                                        std::span<const std::string> words,
                                        std::span<const std::string> lemmas) {
  return lexicon.operators.lookup(words, lemmas);
}

Lexicon parse_lexicon(std::string_view json_text) {
  json document;
  try {
    document = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ResourceError(std::string("lexicon: invalid JSON: ") + e.what());
  }
  if (!document.is_object()) throw ResourceError("lexicon: top level must be an object");

  Lexicon lexicon;
  if (!document.contains("operators") || !document.at("operators").is_array()) {
    throw ResourceError("lexicon: 'operators' list is required");
  }
  for (const auto& row : document.at("operators")) {
    if (!row.contains("operator") || !row.contains("phrases")) {
      throw ResourceError("lexicon: operator rows need 'operator' and 'phrases'");
    }
    const auto op = operator_from_symbol(row.at("operator").get<std::string>());
    if (!op) {
      throw ResourceError("lexicon: unknown operator symbol " +
                          row.at("operator").get<std::string>());
    }
    const std::string quality = row.value("quality", std::string{});
    for (const auto& phrase : row.at("phrases")) {
      auto words = split_words(phrase.get<std::string>());
      if (words.empty()) throw ResourceError("lexicon: empty operator phrase");
      lexicon.operators.add(OperatorEntry{std::move(words), quality, *op});
    }
  }

  for (const auto& word : string_list(document, "stopwords", {})) lexicon.stopwords.insert(word);
  if (document.contains("antonyms")) {
    for (const auto& pair : document.at("antonyms")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ResourceError("lexicon: antonym entries must be pairs");
      }
      lexicon.antonyms.add(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  if (document.contains("pronouns")) {
    const auto& pronouns = document.at("pronouns");
    lexicon.singular_pronouns = string_list(pronouns, "singular", lexicon.singular_pronouns);
    lexicon.plural_pronouns = string_list(pronouns, "plural", lexicon.plural_pronouns);
  }
  // Units are case-sensitive ("A" versus "a").
  lexicon.units = string_list(document, "units", {}, false);
  std::sort(lexicon.units.begin(), lexicon.units.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  if (document.contains("keywords")) {
    const auto& k = document.at("keywords");
    lexicon.keywords.conditional = string_list(k, "conditional", lexicon.keywords.conditional);
    lexicon.keywords.until = string_list(k, "until", lexicon.keywords.until);
    lexicon.keywords.else_words = string_list(k, "else", lexicon.keywords.else_words);
    lexicon.keywords.coordinators = string_list(k, "coordinators", lexicon.keywords.coordinators);
  }
  lexicon.modal_verbs = string_list(document, "modal_verbs", {});
  lexicon.copulas = string_list(document, "copulas", lexicon.copulas);
  lexicon.copula_signal = document.value("copula_signal", lexicon.copula_signal);
  lexicon.parameter_leading_drop = string_list(document, "parameter_leading_drop", {});
  lexicon.time_units = string_list(document, "time_units", {});
  lexicon.time_markers = string_list(document, "time_markers", {});
  lexicon.negations = string_list(document, "negations", lexicon.negations);
  return lexicon;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  try {
    return parse_lexicon(read_file(path));
  } catch (const ResourceError& e) {
    throw ResourceError(path.string() + ": " + e.what());
  }
}

}  // namespace reqformal
