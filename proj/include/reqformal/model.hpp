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

// Requirement models and the pseudocode DSL.
//
//   model    := block+
//   block    := kind "(" expr ")"
//   kind     := "if" | "then" | "else" | "until" | "statement"
//   expr     := term (("and" | "or") term)*
//   term     := ["not"] relation
//   relation := ident "(" args? ")" [op literal]
//   args     := literal ("," literal)*
//   op       := "<" | ">" | "==" | "<=" | ">=" | "!="
//
// docs/dsl.md describes the grammar and the canonical layout in detail.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "reqformal/core.hpp"
#include "reqformal/lexicon.hpp"

namespace reqformal {

enum class RelationKind { assignment, comparison };

std::string_view to_string(RelationKind kind);

/// `signal(parameters...)` or `signal() op parameter`, optionally negated.
struct Relation {
  RelationKind kind = RelationKind::assignment;
  std::string signal;
  std::vector<std::string> parameters;  // assignments only
  Operator op = Operator::equal;        // comparisons only
  std::string parameter;                // comparisons only
  bool negated = false;

  static Relation assignment(std::string signal, std::vector<std::string> parameters = {},
                             bool negated = false);
  static Relation comparison(std::string signal, Operator op, std::string parameter,
                             bool negated = false);

  bool operator==(const Relation&) const = default;
};

/// Canonical text of one relation, e.g. `not give_charging_approval()`.
std::string render_relation(const Relation& relation);

/// Relations chained by and/or. Chains associate to the left, so
/// `a and b or c` reads as `(a and b) or c`.
struct BoolExpr {
  std::vector<Relation> terms;
  std::vector<Connective> connectives;  // terms.size() - 1 entries, never none

  void add(Relation relation, Connective connective = Connective::and_);
  bool empty() const noexcept { return terms.empty(); }

  bool operator==(const BoolExpr&) const = default;
};

enum class BlockKind { if_, then, else_, until, statement };

std::string_view to_string(BlockKind kind);
std::optional<BlockKind> block_kind_from_string(std::string_view text);

struct Block {
  BlockKind kind = BlockKind::statement;
  BoolExpr expr;

  bool operator==(const Block&) const = default;
};

/// Blocks appear in the order if, then, else, statement, until; each kind
/// at most once.
struct RequirementModel {
  std::vector<Block> blocks;

  const Block* find(BlockKind kind) const;
  std::size_t relation_count() const;

  bool operator==(const RequirementModel&) const = default;
};

/// One relation together with the keyword and connective of its clause.
struct ClauseRelation {
  Keyword keyword = Keyword::none;
  Connective connective = Connective::none;
  Relation relation;
};

/// Groups relations into blocks: if/when/while into `if`, until into
/// `until`, else-words into `else`, and keyword-free relations into `then`
/// when an `if` block exists or `statement` otherwise. Within a block,
/// relations keep their clause order and are joined by their connectives
/// (and when none was recorded). Throws StructureError for an else without
/// an if, a condition without assignments, or an empty input.
RequirementModel assemble_model(std::span<const ClauseRelation> relations);

/// Canonical layout: one block per line, then-blocks indented by four
/// spaces, and every further term of an expression on its own line led by
/// its connective, one level deeper than the block.
std::string render_pseudocode(const RequirementModel& model);

/// Parses DSL text; throws ParseError with the offending line.
RequirementModel parse_pseudocode(std::string_view text);

/// Lexical tokens of DSL text, whitespace dropped.
std::vector<std::string> dsl_tokens(std::string_view text);

/// True when both texts parse and have identical token sequences.
/// Throws ParseError when either text is not valid DSL.
bool canonical_equal(std::string_view a, std::string_view b);

/// Identifier for a word sequence: stopwords and punctuation dropped, words
/// lowercased unless they are literals (an underscore, or an uppercase letter
/// after the first character), joined by underscores. Throws
/// ExtractionError when nothing is left.
std::string normalize_identifier(std::span<const std::string> words, const Lexicon& lexicon);

/// True for words kept verbatim by normalize_identifier ("E_BROKEN", "G_Max").
bool is_literal(std::string_view word);

nlohmann::json model_to_json(const RequirementModel& model);
RequirementModel model_from_json(const nlohmann::json& document);

}  // namespace reqformal
