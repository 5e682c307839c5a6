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

// Requirement cleaning ahead of decomposition: quoted event names become
// short abbreviations, bracketed variables lose their brackets and units,
// and third-person pronouns are replaced by their antecedent subject.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqformal/clause.hpp"
#include "reqformal/core.hpp"
#include "reqformal/lexicon.hpp"

namespace reqformal {

struct EventEntry {
  std::string abbreviation;  // "E1"
  std::string name;          // text between the quotes
  std::string open_quote;
  std::string close_quote;

  bool operator==(const EventEntry&) const = default;
};

/// Abbreviation -> quoted event name, in order of first occurrence.
class EventTable {
 public:
  void add(EventEntry entry) { entries_.push_back(std::move(entry)); }
  const EventEntry* find(std::string_view abbreviation) const;
  const EventEntry* find_by_name(std::string_view name) const;
  const std::vector<EventEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  bool operator==(const EventTable&) const = default;

 private:
  std::vector<EventEntry> entries_;
};

struct AbbreviatedText {
  std::string text;
  EventTable events;
  Diagnostics diagnostics;
};

/// Replaces every quoted span with E1, E2, ... in order of appearance. A
/// repeated name reuses its abbreviation; numbers already used as words in
/// the text are skipped. Unbalanced quotes are left alone with a warning.
AbbreviatedText abbreviate_events(std::string_view text);

/// Removes square brackets around variables and a unit written right after
/// the closing bracket ("[T_Hi] ºC" -> "T_Hi"). Units are matched
/// case-sensitively, longest first.
std::string strip_markup(std::string_view text, std::span<const std::string> units);

/// Puts quoted event names back in place of their abbreviations.
std::string restore_events(std::string_view text, const EventTable& events);

/// Expands abbreviation words into the words of the event name.
std::vector<std::string> expand_events(std::span<const std::string> words,
                                       const EventTable& events);

struct PronounOptions {
  /// Singular pronouns bind only singular antecedents, plural only plural.
  bool number_check = false;
};

/// Replaces third-person pronouns in `clauses` (one requirement, in order)
/// with the farthest subject: the leftmost nsubj/nsubjpass phrase among
/// earlier clauses with the same keyword, or among all earlier clauses when
/// none of those has a subject. Expletive pronouns are skipped; pronouns
/// without an antecedent stay and are reported.
Diagnostics resolve_pronouns(std::vector<Clause>& clauses, const Lexicon& lexicon,
                             const PronounOptions& options = {});

}  // namespace reqformal
