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

// Canonical annotation formats consumed by the rule engine:
//
//   * dependency/POS trees as CoNLL-U (`*.conllu`)
//   * semantic role frames as JSON (`*.srl.json`)
//
// Both parsers validate on the way in, so every DepAnnotation or SrlFrame
// handed to the later stages is a well-formed tree or frame.
#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reqformal {

/// One CoNLL-U token line. Columns the engine does not interpret
/// (XPOS, FEATS, DEPS, MISC) are kept verbatim.
struct Token {
  int index = 0;  // 1-based
  std::string text;
  std::string lemma;
  std::string pos;  // UPOS
  std::string dep;  // lowercased; the root relation is "root"
  int head = 0;     // 0 for the root
  std::string xpos = "_";
  std::string feats = "_";
  std::string deps = "_";
  std::string misc = "_";

  bool operator==(const Token&) const = default;
};

/// Dependency tree of one sentence.
class DepAnnotation {
 public:
  DepAnnotation() = default;
  DepAnnotation(std::vector<Token> tokens, std::string text = {},
                std::vector<std::string> comments = {});

  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  const Token& at(int index) const;

  /// Sentence text from `# text =`, or the tokens joined by spaces.
  const std::string& text() const noexcept { return text_; }
  /// Comment lines other than `# text =`, without the leading '#'.
  const std::vector<std::string>& comments() const noexcept { return comments_; }

  int root() const;
  std::vector<int> children(int index) const;
  /// Indices of `index` and all its descendants, ascending.
  std::vector<int> subtree(int index) const;

  /// Throws ValidationError unless the tokens form a single-rooted tree
  /// with consistent indices and known tags.
  void validate() const;

  bool operator==(const DepAnnotation&) const = default;

 private:
  std::vector<Token> tokens_;
  std::string text_;
  std::vector<std::string> comments_;
};

bool is_known_pos(std::string_view pos);
/// Universal dependency relations plus the English ClearNLP labels the
/// rule tables use (pobj, dobj, nsubjpass, auxpass, ...). Subtypes such as
/// `nsubj:pass` are checked by their base relation.
bool is_known_dep(std::string_view dep);

std::vector<DepAnnotation> parse_conllu(std::string_view content);
std::string render_conllu(std::span<const DepAnnotation> sentences);

// ---------------------------------------------------------------------------
// Semantic role frames

/// The 24 labels: five numbered arguments and nineteen modifiers.
inline constexpr std::array<std::string_view, 24> kSrlLabels = {
    "ARG0",     "ARG1",     "ARG2",     "ARG3",     "ARG4",     "ARGM-ADJ",
    "ARGM-ADV", "ARGM-CAU", "ARGM-COM", "ARGM-DIR", "ARGM-DIS", "ARGM-DSP",
    "ARGM-EXT", "ARGM-GOL", "ARGM-LOC", "ARGM-LVB", "ARGM-MNR", "ARGM-MOD",
    "ARGM-NEG", "ARGM-PNC", "ARGM-PRD", "ARGM-PRP", "ARGM-REC", "ARGM-TMP",
};

bool is_srl_label(std::string_view label);
inline bool is_modifier_label(std::string_view label) { return label.starts_with("ARGM-"); }

/// Inclusive 1-based token range.
struct TokenSpan {
  int start = 0;
  int end = 0;

  int size() const noexcept { return end - start + 1; }
  bool contains(int index) const noexcept { return index >= start && index <= end; }
  bool overlaps(const TokenSpan& other) const noexcept {
    return start <= other.end && other.start <= end;
  }
  bool operator==(const TokenSpan&) const = default;
};

struct SrlArgument {
  std::string label;
  TokenSpan span;
  std::string text;

  bool operator==(const SrlArgument&) const = default;
};

struct SrlVerb {
  int index = 0;
  std::string text;
  std::string lemma;

  bool operator==(const SrlVerb&) const = default;
};

struct SrlFrame {
  SrlVerb verb;
  std::vector<SrlArgument> arguments;

  /// First argument with `label`, or nullptr.
  const SrlArgument* find(std::string_view label) const;
  bool operator==(const SrlFrame&) const = default;
};

struct SrlSentence {
  std::string text;
  std::vector<std::string> tokens;
  std::vector<SrlFrame> frames;

  bool operator==(const SrlSentence&) const = default;
};

/// Throws ValidationError on unknown labels, spans outside the sentence,
/// overlapping spans, or argument text that disagrees with the tokens.
void validate_frame(const SrlFrame& frame, std::span<const std::string> tokens);

std::vector<SrlSentence> parse_srl_json(std::string_view content);
std::string render_srl_json(std::span<const SrlSentence> sentences);

}  // namespace reqformal
