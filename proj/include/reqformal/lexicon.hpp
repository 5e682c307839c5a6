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

// Word-level resources: the comparison-operator thesaurus, stopwords,
// boolean qualifiers and their antonyms, and the keyword lists used by
// decomposition. Everything except BooleanVocabulary is read-only after
// loading and may be shared between threads.
//
// The on-disk format is documented in docs/lexicon.md.
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqformal/core.hpp"

namespace reqformal {

enum class Operator { less, greater, equal, less_equal, greater_equal, not_equal };

std::string_view symbol(Operator op);
std::optional<Operator> operator_from_symbol(std::string_view text);

struct OperatorEntry {
  std::vector<std::string> words;  // lowercase
  std::string quality;             // e.g. "Superiority"
  Operator op = Operator::equal;
};

/// Where a lexicon entry matched inside a word sequence.
struct OperatorMatch {
  Operator op;
  std::size_t begin = 0;   // first matched word
  std::size_t length = 0;  // number of matched words
  std::string quality;
};

class OperatorLexicon {
 public:
  void add(OperatorEntry entry);
  const std::vector<OperatorEntry>& entries() const noexcept { return entries_; }

  /// Longest entry occurring as a contiguous run inside `words`; ties go to
  /// the leftmost run. A word matches an entry word when either its surface
  /// form or its lemma (when `lemmas` is non-empty) equals it,
  /// case-insensitively.
  std::optional<OperatorMatch> match(std::span<const std::string> words,
                                     std::span<const std::string> lemmas = {}) const;

  std::optional<Operator> lookup(std::span<const std::string> words,
                                 std::span<const std::string> lemmas = {}) const;

 private:
  std::vector<OperatorEntry> entries_;
};

/// Symmetric antonym relation.
class AntonymTable {
 public:
  void add(const std::string& a, const std::string& b);
  /// Registered antonyms of `word` (lowercase).
  std::vector<std::string> antonyms_of(std::string_view word) const;
  bool has(std::string_view word) const;
  bool empty() const noexcept { return pairs_.empty(); }

 private:
  std::multimap<std::string, std::string, std::less<>> pairs_;
};

struct BooleanClass {
  bool value = true;
  /// False when the word was new and has no antonym entry at all.
  bool known = true;
};

/// Corpus-scoped truth assignment for boolean qualifiers. The first
/// qualifier seen is true; a word whose antonym is already registered gets
/// the opposite value. Registration must follow document order.
class BooleanVocabulary {
 public:
  explicit BooleanVocabulary(AntonymTable antonyms = {});

  BooleanClass classify(std::string_view word);
  std::optional<bool> value(std::string_view word) const;
  const std::map<std::string, bool>& assignments() const noexcept { return values_; }

 private:
  AntonymTable antonyms_;
  std::map<std::string, bool> values_;
};

struct KeywordLists {
  std::vector<std::string> conditional{"if", "when", "while"};
  std::vector<std::string> until{"until"};
  std::vector<std::string> else_words{"else", "otherwise"};
  std::vector<std::string> coordinators{"and", "or"};
};

struct Lexicon {
  OperatorLexicon operators;
  std::set<std::string, std::less<>> stopwords;
  AntonymTable antonyms;
  std::vector<std::string> singular_pronouns{"it"};
  std::vector<std::string> plural_pronouns{"they"};
  std::vector<std::string> units;
  KeywordLists keywords;
  /// Verb lemmas whose frames are dropped even with two arguments.
  std::vector<std::string> modal_verbs;
  /// Verb lemmas treated as a copula; they map to `copula_signal`.
  std::vector<std::string> copulas{"be"};
  std::string copula_signal = "set";
  /// Words dropped from the front of a parameter ("to G_Max" -> G_Max).
  std::vector<std::string> parameter_leading_drop;
  std::vector<std::string> time_units;
  std::vector<std::string> time_markers;
  /// Negation words; these attach to a predicate with relation neg.
  std::vector<std::string> negations{"not", "never", "n't"};

  bool is_stopword(std::string_view word) const;
  bool is_pronoun(std::string_view word) const;
  bool is_plural_pronoun(std::string_view word) const;
  bool is_copula(std::string_view lemma) const;
  bool is_modal(std::string_view lemma) const;
  bool is_coordinator(std::string_view word) const;
  bool is_negation(std::string_view word) const;
  /// Keyword for a marker word, restricted to the configured lists.
  std::optional<Keyword> keyword_of(std::string_view word) const;
  /// True when `words` read like a duration ("within 3s", "after 10 ms").
  bool is_time_expression(std::span<const std::string> words) const;
};

/// Word-sequence entry point; same rules as OperatorLexicon::lookup.
std::optional<Operator> lookup_operator(const Lexicon& lexicon,
                                        std::span<const std::string> words,
                                        std::span<const std::string> lemmas = {});

Lexicon parse_lexicon(std::string_view json_text);
Lexicon load_lexicon(const std::filesystem::path& path);

/// Reads a whole file; throws ResourceError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace reqformal
