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

#include "reqformal/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace reqformal {

namespace {

constexpr std::string_view kLeftDouble = "\xE2\x80\x9C";
constexpr std::string_view kRightDouble = "\xE2\x80\x9D";
constexpr std::string_view kLeftSingle = "\xE2\x80\x98";
constexpr std::string_view kRightSingle = "\xE2\x80\x99";

bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) != 0 || c == '_' || u >= 0x80;
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::set<std::string> words_in(std::string_view text) {
  std::set<std::string> out;
  std::string current;
  for (char c : text) {
    if (is_word_char(c)) {
      current.push_back(c);
    } else if (!current.empty()) {
      out.insert(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.insert(std::move(current));
  return out;
}

struct QuotedSpan {
  std::size_t begin;          // offset of the opening quote
  std::size_t content_begin;
  std::size_t content_end;
  std::size_t end;            // one past the closing quote
  std::string open;
  std::string close;
};

// Finds the quoted span opening at `pos`, if the character there opens one.
// Sets `unbalanced` when an opening quote has no partner.
std::optional<QuotedSpan> quoted_at(std::string_view text, std::size_t pos, bool& unbalanced) {
  unbalanced = false;
  auto closing = [&](std::string_view open, std::string_view close,
                     bool need_boundary) -> std::optional<QuotedSpan> {
    std::size_t search = pos + open.size();
    while (true) {
      const std::size_t found = text.find(close, search);
      if (found == std::string_view::npos) {
        unbalanced = true;
        return std::nullopt;
      }
      const std::size_t after = found + close.size();
      if (!need_boundary || after >= text.size() || !is_word_char(text[after])) {
        if (found == pos + open.size()) return std::nullopt;  // empty quotes
        return QuotedSpan{pos, pos + open.size(), found, after, std::string(open),
                          std::string(close)};
      }
      search = after;
    }
  };

  const std::string_view rest = text.substr(pos);
  if (rest.starts_with('"')) return closing("\"", "\"", false);
  if (rest.starts_with(kLeftDouble)) return closing(kLeftDouble, kRightDouble, false);
  if (rest.starts_with(kLeftSingle)) return closing(kLeftSingle, kRightSingle, false);
  if (rest.starts_with('\'')) {
    // An apostrophe inside a word ("system's") never opens a quote.
    const bool opens = pos == 0 || is_blank(text[pos - 1]) || text[pos - 1] == '(' ||
                       text[pos - 1] == '[';
    if (!opens) return std::nullopt;
    return closing("'", "'", true);
  }
  return std::nullopt;
}

bool is_subject(const ClauseToken& token) {
  const std::string_view base = std::string_view(token.dep).substr(0, token.dep.find(':'));
  return base == "nsubj" || base == "nsubjpass";
}

enum class Number { unknown, singular, plural };

Number number_of(const ClauseToken& token) {
  if (token.feats.find("Number=Plur") != std::string::npos) return Number::plural;
  if (token.feats.find("Number=Sing") != std::string::npos) return Number::singular;
  if (token.xpos == "NNS" || token.xpos == "NNPS") return Number::plural;
  if (token.xpos == "NN" || token.xpos == "NNP") return Number::singular;
  return Number::unknown;
}

struct Antecedent {
  std::size_t clause = 0;
  std::vector<int> positions;  // subtree of the subject head, ascending
  int head = 0;
};

std::optional<Antecedent> find_antecedent(const std::vector<Clause>& clauses, std::size_t current,
                                          bool plural, const Lexicon& lexicon,
                                          const PronounOptions& options) {
  auto search = [&](bool same_keyword) -> std::optional<Antecedent> {
    for (std::size_t j = 0; j < current; ++j) {
      const Clause& clause = clauses[j];
      if (same_keyword && clause.keyword != clauses[current].keyword) continue;
      for (int p = 1; p <= clause.size(); ++p) {
        const ClauseToken& token = clause.at(p);
        if (!is_subject(token) || lexicon.is_pronoun(token.text)) continue;
        if (options.number_check) {
          const Number n = number_of(token);
          if ((plural && n == Number::singular) || (!plural && n == Number::plural)) continue;
        }
        return Antecedent{j, clause.subtree(p), p};
      }
    }
    return std::nullopt;
  };
  if (auto found = search(true)) return found;
  return search(false);
}

Clause substitute(const Clause& clause, int pronoun, const Clause& source,
                  const Antecedent& antecedent) {
  std::vector<DraftToken> drafts;
  const ClauseToken& replaced = clause.at(pronoun);
  auto copy_key = [](int source_position) { return -source_position; };
  for (int p = 1; p <= clause.size(); ++p) {
    if (p != pronoun) {
      DraftToken draft{clause.at(p), p, clause.at(p).head};
      if (draft.head_key == pronoun) draft.head_key = copy_key(antecedent.head);
      drafts.push_back(std::move(draft));
      continue;
    }
    for (int q : antecedent.positions) {
      DraftToken draft{source.at(q), copy_key(q), copy_key(source.at(q).head)};
      draft.token.injected = true;
      if (q == antecedent.head) {
        draft.head_key = replaced.head;
        draft.token.dep = replaced.dep;
      }
      drafts.push_back(std::move(draft));
    }
  }
  return assemble_clause(std::move(drafts), clause.keyword, clause.connective, clause.sentence);
}

}  // namespace

const EventEntry* EventTable::find(std::string_view abbreviation) const {
  for (const auto& entry : entries_) {
    if (entry.abbreviation == abbreviation) return &entry;
  }
  return nullptr;
}

const EventEntry* EventTable::find_by_name(std::string_view name) const {
  for (const auto& entry : entries_) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

AbbreviatedText abbreviate_events(std::string_view text) {
  AbbreviatedText result;
  const std::set<std::string> taken = words_in(text);
  int next_number = 1;

  std::size_t pos = 0;
  while (pos < text.size()) {
    bool unbalanced = false;
    const auto span = quoted_at(text, pos, unbalanced);
    if (unbalanced) {
      result.diagnostics.push_back(
          {Severity::warning, "unbalanced-quote",
           "quote at offset " + std::to_string(pos) + " has no closing partner; left as is"});
    }
    if (!span) {
      result.text.push_back(text[pos]);
      ++pos;
      continue;
    }
    const std::string name =
        trim(text.substr(span->content_begin, span->content_end - span->content_begin));
    const EventEntry* entry = result.events.find_by_name(name);
    if (entry == nullptr) {
      std::string abbreviation;
      do {
        abbreviation = "E" + std::to_string(next_number++);
      } while (taken.count(abbreviation) != 0);
      result.events.add(EventEntry{abbreviation, name, span->open, span->close});
      entry = &result.events.entries().back();
    }
    result.text += entry->abbreviation;
    pos = span->end;
  }
  return result;
}

std::string strip_markup(std::string_view text, std::span<const std::string> units) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '[') {
      out.push_back(text[pos++]);
      continue;
    }
    const std::size_t close = text.find(']', pos + 1);
    const std::size_t nested = text.find('[', pos + 1);
    if (close == std::string_view::npos || (nested != std::string_view::npos && nested < close) ||
        close == pos + 1) {
      out.push_back(text[pos++]);
      continue;
    }
    out.append(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;

    std::size_t after = pos;
    while (after < text.size() && (text[after] == ' ' || text[after] == '\t')) ++after;
    for (const auto& unit : units) {
      if (unit.empty() || text.substr(after).substr(0, unit.size()) != unit) continue;
      const std::size_t end = after + unit.size();
      if (end < text.size() && is_word_char(text[end])) continue;
      pos = end;
      break;
    }
  }
  return out;
}

std::string restore_events(std::string_view text, const EventTable& events) {
  std::string out;
  std::string word;
  auto flush_word = [&] {
    if (word.empty()) return;
    if (const EventEntry* entry = events.find(word)) {
      out += entry->open_quote + entry->name + entry->close_quote;
    } else {
      out += word;
    }
    word.clear();
  };
  for (char c : text) {
    if (is_word_char(c)) {
      word.push_back(c);
    } else {
      flush_word();
      out.push_back(c);
    }
  }
  flush_word();
  return out;
}

std::vector<std::string> expand_events(std::span<const std::string> words,
                                       const EventTable& events) {
  std::vector<std::string> out;
  for (const auto& word : words) {
    if (const EventEntry* entry = events.find(word)) {
      for (auto& part : split_words(entry->name)) out.push_back(std::move(part));
    } else {
      out.push_back(word);
    }
  }
  return out;
}

Diagnostics resolve_pronouns(std::vector<Clause>& clauses, const Lexicon& lexicon,
                             const PronounOptions& options) {
  Diagnostics diagnostics;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    std::set<int> skipped;  // source indices of pronouns left unresolved
    bool changed = true;
    while (changed) {
      changed = false;
      for (int p = 1; p <= clauses[i].size(); ++p) {
        const ClauseToken& token = clauses[i].at(p);
        if (token.injected || !lexicon.is_pronoun(token.text)) continue;
        if (!token.pos.empty() && token.pos != "PRON") continue;
        if (token.dep == "expl" || skipped.count(token.source) != 0) continue;

        const bool plural = lexicon.is_plural_pronoun(token.text);
        const auto antecedent = find_antecedent(clauses, i, plural, lexicon, options);
        if (!antecedent) {
          skipped.insert(token.source);
          diagnostics.push_back({Severity::warning, "unresolved-pronoun",
                                 "clause " + std::to_string(i + 1) + ": no antecedent for '" +
                                     token.text + "'"});
          continue;
        }
        const Clause& source = clauses[antecedent->clause];
        std::vector<std::string> phrase;
        for (int q : antecedent->positions) phrase.push_back(source.at(q).text);
        diagnostics.push_back({Severity::info, "pronoun-resolved",
                               "clause " + std::to_string(i + 1) + ": '" + token.text +
                                   "' -> '" + join(phrase, " ") + "'"});
        clauses[i] = substitute(clauses[i], p, source, *antecedent);
        changed = true;
        break;
      }
    }
  }
  return diagnostics;
}

}  // namespace reqformal
