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

#include "reqformal/core.hpp"

#include <algorithm>
#include <cctype>

namespace reqformal {

namespace {

std::string with_line(const std::string& message, std::size_t line) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line)
    : Error(with_line(message, line)), line_(line) {}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::info: return "info";
    case Severity::warning: return "warning";
    case Severity::error: return "error";
  }
  return "?";
}

bool has_errors(const Diagnostics& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

bool has_warnings(const Diagnostics& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::warning; });
}

std::string_view to_string(Keyword keyword) {
  switch (keyword) {
    case Keyword::none: return "none";
    case Keyword::if_: return "if";
    case Keyword::when: return "when";
    case Keyword::while_: return "while";
    case Keyword::until: return "until";
    case Keyword::else_: return "else";
  }
  return "?";
}

std::optional<Keyword> keyword_from_word(std::string_view word,
                                         const std::vector<std::string>& else_words) {
  const std::string lower = to_lower(word);
  if (lower == "if") return Keyword::if_;
  if (lower == "when") return Keyword::when;
  if (lower == "while") return Keyword::while_;
  if (lower == "until") return Keyword::until;
  if (std::find(else_words.begin(), else_words.end(), lower) != else_words.end()) {
    return Keyword::else_;
  }
  return std::nullopt;
}

bool is_conditional(Keyword keyword) {
  return keyword == Keyword::if_ || keyword == Keyword::when || keyword == Keyword::while_ ||
         keyword == Keyword::until;
}

std::string_view to_string(Connective connective) {
  switch (connective) {
    case Connective::none: return "none";
    case Connective::and_: return "and";
    case Connective::or_: return "or";
  }
  return "?";
}

std::optional<Connective> connective_from_word(std::string_view word) {
  const std::string lower = to_lower(word);
  if (lower == "and") return Connective::and_;
  if (lower == "or") return Connective::or_;
  return std::nullopt;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  // ASCII only; multi-byte sequences pass through untouched.
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (is_space(c)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::string join(const std::vector<std::string>& words, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += separator;
    out += words[i];
  }
  return out;
}

std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!is_space(c)) out.push_back(c);
  }
  return out;
}

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

}  // namespace reqformal
