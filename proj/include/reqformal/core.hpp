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

// Shared vocabulary types: error hierarchy, diagnostics, clause keywords and
// connectives.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reqformal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A clause or frame that no mapping row can turn into a relation.
class ExtractionError : public Error {
 public:
  using Error::Error;
};

/// Relations that cannot be arranged into a valid block structure.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Lexicon or rule file problems. Always fatal for a run.
class ResourceError : public Error {
 public:
  using Error::Error;
};

enum class Severity { info, warning, error };

std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::info;
  std::string code;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline void append(Diagnostics& into, const Diagnostics& from) {
  into.insert(into.end(), from.begin(), from.end());
}

bool has_errors(const Diagnostics& diagnostics);
bool has_warnings(const Diagnostics& diagnostics);

/// Marker that introduced a clause.
enum class Keyword { none, if_, when, while_, until, else_ };

std::string_view to_string(Keyword keyword);
/// Maps a marker word ("if", "When", "otherwise", ...) to its keyword.
/// `else_words` lists the words treated as else markers.
std::optional<Keyword> keyword_from_word(std::string_view word,
                                         const std::vector<std::string>& else_words);
bool is_conditional(Keyword keyword);

enum class Connective { none, and_, or_ };

std::string_view to_string(Connective connective);
std::optional<Connective> connective_from_word(std::string_view word);

// Small text helpers used across modules.
std::string to_lower(std::string_view text);
std::vector<std::string> split_words(std::string_view text);
std::string join(const std::vector<std::string>& words, std::string_view separator);
/// Removes all whitespace; used to compare token sequences with raw text.
std::string strip_whitespace(std::string_view text);
std::string trim(std::string_view text);

}  // namespace reqformal
