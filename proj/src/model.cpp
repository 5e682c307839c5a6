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

#include "reqformal/model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "reqformal/clause.hpp"

namespace reqformal {

using nlohmann::json;

namespace {

constexpr std::array kBlockOrder{BlockKind::if_, BlockKind::then, BlockKind::else_,
                                 BlockKind::statement, BlockKind::until};

std::string indent(int level) { return std::string(static_cast<std::size_t>(level) * 4, ' '); }

struct DslToken {
  std::string text;
  std::size_t line = 1;
};

bool is_word_start(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_word_char(char c) { return is_word_start(c) || c == '.'; }

std::vector<DslToken> tokenize(std::string_view text) {
  std::vector<DslToken> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (c == '(' || c == ')' || c == ',') {
      out.push_back({std::string(1, c), line});
      ++i;
      continue;
    }
    if (c == '<' || c == '>' || c == '=' || c == '!') {
      if (i + 1 < text.size() && text[i + 1] == '=') {
        out.push_back({std::string(text.substr(i, 2)), line});
        i += 2;
      } else if (c == '<' || c == '>') {
        out.push_back({std::string(1, c), line});
        ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line);
      }
      continue;
    }
    const bool negative_number = c == '-' && i + 1 < text.size() &&
                                 std::isdigit(static_cast<unsigned char>(text[i + 1])) != 0;
    if (is_word_start(c) || negative_number) {
      std::size_t end = i + 1;
      while (end < text.size() && is_word_char(text[end])) ++end;
      out.push_back({std::string(text.substr(i, end - i)), line});
      i = end;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line);
  }
  return out;
}

bool is_reserved(std::string_view word) {
  return word == "and" || word == "or" || word == "not" || block_kind_from_string(word).has_value();
}

class Parser {
 public:
  explicit Parser(std::vector<DslToken> tokens) : tokens_(std::move(tokens)) {}

  RequirementModel model() {
    RequirementModel result;
    if (tokens_.empty()) throw ParseError("empty model", 1);
    while (pos_ < tokens_.size()) result.blocks.push_back(block());
    return result;
  }

 private:
  const DslToken& peek() const {
    if (pos_ >= tokens_.size()) {
      throw ParseError("unexpected end of model", tokens_.empty() ? 1 : tokens_.back().line);
    }
    return tokens_[pos_];
  }

  const DslToken& next() {
    const DslToken& token = peek();
    ++pos_;
    return token;
  }

  void expect(std::string_view text) {
    const DslToken& token = next();
    if (token.text != text) {
      throw ParseError("expected '" + std::string(text) + "' but found '" + token.text + "'",
                       token.line);
    }
  }

  bool accept(std::string_view text) {
    if (pos_ < tokens_.size() && tokens_[pos_].text == text) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string word(std::string_view what) {
    const DslToken& token = next();
    if (token.text.empty() || !(is_word_start(token.text.front()) || token.text.front() == '-') ||
        is_reserved(token.text)) {
      throw ParseError("expected " + std::string(what) + " but found '" + token.text + "'",
                       token.line);
    }
    return token.text;
  }

  Block block() {
    const DslToken& token = next();
    const auto kind = block_kind_from_string(token.text);
    if (!kind) throw ParseError("unknown block '" + token.text + "'", token.line);
    expect("(");
    Block result{*kind, expr()};
    expect(")");
    return result;
  }

  BoolExpr expr() {
    BoolExpr result;
    result.terms.push_back(term());
    while (pos_ < tokens_.size()) {
      const auto connective = connective_from_word(peek().text);
      if (!connective || peek().text != to_lower(peek().text)) break;
      ++pos_;
      result.add(term(), *connective);
    }
    return result;
  }

  Relation term() {
    const bool negated = accept("not");
    Relation relation;
    relation.negated = negated;
    relation.signal = word("a signal name");
    expect("(");
    if (!accept(")")) {
      relation.parameters.push_back(word("a parameter"));
      while (accept(",")) relation.parameters.push_back(word("a parameter"));
      expect(")");
    }
    if (pos_ < tokens_.size()) {
      if (const auto op = operator_from_symbol(peek().text)) {
        const std::size_t line = peek().line;
        ++pos_;
        if (!relation.parameters.empty()) {
          throw ParseError("a comparison takes no arguments inside the parentheses", line);
        }
        relation.kind = RelationKind::comparison;
        relation.op = *op;
        relation.parameter = word("a comparison parameter");
      }
    }
    return relation;
  }

  std::vector<DslToken> tokens_;
  std::size_t pos_ = 0;
};

json relation_to_json(const Relation& relation) {
  json out{{"kind", to_string(relation.kind)},
           {"signal", relation.signal},
           {"negated", relation.negated}};
  if (relation.kind == RelationKind::comparison) {
    out["operator"] = symbol(relation.op);
    out["parameter"] = relation.parameter;
  } else {
    out["parameters"] = relation.parameters;
  }
  return out;
}

Relation relation_from_json(const json& node) {
  Relation relation;
  const std::string kind = node.at("kind").get<std::string>();
  relation.signal = node.at("signal").get<std::string>();
  relation.negated = node.value("negated", false);
  if (kind == "comparison") {
    relation.kind = RelationKind::comparison;
    const auto op = operator_from_symbol(node.at("operator").get<std::string>());
    if (!op) throw ParseError("unknown operator in model JSON");
    relation.op = *op;
    relation.parameter = node.at("parameter").get<std::string>();
  } else if (kind == "assignment") {
    relation.parameters = node.value("parameters", std::vector<std::string>{});
  } else {
    throw ParseError("unknown relation kind '" + kind + "' in model JSON");
  }
  return relation;
}

}  // namespace

std::string_view to_string(RelationKind kind) {
  return kind == RelationKind::assignment ? "assignment" : "comparison";
}

Relation Relation::assignment(std::string signal, std::vector<std::string> parameters,
                              bool negated) {
  Relation r;
  r.kind = RelationKind::assignment;
  r.signal = std::move(signal);
  r.parameters = std::move(parameters);
  r.negated = negated;
  return r;
}

Relation Relation::comparison(std::string signal, Operator op, std::string parameter,
                              bool negated) {
  Relation r;
  r.kind = RelationKind::comparison;
  r.signal = std::move(signal);
  r.op = op;
  r.parameter = std::move(parameter);
  r.negated = negated;
  return r;
}

std::string render_relation(const Relation& relation) {
  std::string out = relation.negated ? "not " : "";
  out += relation.signal;
  if (relation.kind == RelationKind::comparison) {
    out += "() ";
    out += symbol(relation.op);
    out += " " + relation.parameter;
  } else {
    out += "(" + join(relation.parameters, ", ") + ")";
  }
  return out;
}

void BoolExpr::add(Relation relation, Connective connective) {
  if (!terms.empty()) connectives.push_back(connective == Connective::none ? Connective::and_
                                                                           : connective);
  terms.push_back(std::move(relation));
}

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::if_: return "if";
    case BlockKind::then: return "then";
    case BlockKind::else_: return "else";
    case BlockKind::until: return "until";
    case BlockKind::statement: return "statement";
  }
  return "statement";
}

std::optional<BlockKind> block_kind_from_string(std::string_view text) {
  for (BlockKind kind : kBlockOrder) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

const Block* RequirementModel::find(BlockKind kind) const {
  for (const auto& block : blocks) {
    if (block.kind == kind) return &block;
  }
  return nullptr;
}

std::size_t RequirementModel::relation_count() const {
  std::size_t count = 0;
  for (const auto& block : blocks) count += block.expr.terms.size();
  return count;
}

RequirementModel assemble_model(std::span<const ClauseRelation> relations) {
  if (relations.empty()) throw StructureError("no relations to assemble");

  const bool has_condition = std::any_of(relations.begin(), relations.end(), [](const auto& r) {
    return r.keyword == Keyword::if_ || r.keyword == Keyword::when || r.keyword == Keyword::while_;
  });

  std::map<BlockKind, BoolExpr> grouped;
  for (const auto& item : relations) {
    BlockKind kind = BlockKind::statement;
    switch (item.keyword) {
      case Keyword::if_:
      case Keyword::when:
      case Keyword::while_: kind = BlockKind::if_; break;
      case Keyword::until: kind = BlockKind::until; break;
      case Keyword::else_: kind = BlockKind::else_; break;
      case Keyword::none: kind = has_condition ? BlockKind::then : BlockKind::statement; break;
    }
    grouped[kind].add(item.relation, item.connective);
  }

  if (grouped.count(BlockKind::else_) != 0 && grouped.count(BlockKind::if_) == 0) {
    throw StructureError("else block without a condition");
  }
  if (grouped.count(BlockKind::if_) != 0 && grouped.count(BlockKind::then) == 0) {
    throw StructureError("condition without any assignment to govern");
  }
  if (grouped.count(BlockKind::until) != 0 && grouped.size() == 1) {
    throw StructureError("until block without any assignment to govern");
  }

  RequirementModel model;
  for (BlockKind kind : kBlockOrder) {
    auto it = grouped.find(kind);
    if (it != grouped.end()) model.blocks.push_back(Block{kind, std::move(it->second)});
  }
  return model;
}

std::string render_pseudocode(const RequirementModel& model) {
  std::string out;
  for (const auto& block : model.blocks) {
    const int level = block.kind == BlockKind::then ? 1 : 0;
    out += indent(level);
    out += to_string(block.kind);
    out += "( ";
    for (std::size_t i = 0; i < block.expr.terms.size(); ++i) {
      if (i > 0) {
        out += "\n" + indent(level + 1);
        out += to_string(block.expr.connectives[i - 1]);
        out += " ";
      }
      out += render_relation(block.expr.terms[i]);
    }
    out += " )\n";
  }
  return out;
}

RequirementModel parse_pseudocode(std::string_view text) {
  return Parser(tokenize(text)).model();
}

std::vector<std::string> dsl_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (auto& token : tokenize(text)) out.push_back(std::move(token.text));
  return out;
}

bool canonical_equal(std::string_view a, std::string_view b) {
  parse_pseudocode(a);
  parse_pseudocode(b);
  return dsl_tokens(a) == dsl_tokens(b);
}

bool is_literal(std::string_view word) {
  if (word.find('_') != std::string_view::npos) return true;
  return std::any_of(word.begin() + (word.empty() ? 0 : 1), word.end(),
                     [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; });
}

std::string normalize_identifier(std::span<const std::string> words, const Lexicon& lexicon) {
  std::vector<std::string> parts;
  for (const auto& word : words) {
    if (lexicon.is_stopword(word) || is_punctuation("", word)) continue;
    if (is_literal(word)) {
      parts.push_back(word);
      continue;
    }
    std::string part;
    for (char c : to_lower(word)) {
      part.push_back(std::isalnum(static_cast<unsigned char>(c)) != 0 ? c : '_');
    }
    parts.push_back(std::move(part));
  }
  if (parts.empty()) {
    std::vector<std::string> all(words.begin(), words.end());
    throw ExtractionError("'" + join(all, " ") + "' has no words left after removing stopwords");
  }
  return join(parts, "_");
}

json model_to_json(const RequirementModel& model) {
  json blocks = json::array();
  for (const auto& block : model.blocks) {
    json terms = json::array();
    for (const auto& term : block.expr.terms) terms.push_back(relation_to_json(term));
    json connectives = json::array();
    for (Connective c : block.expr.connectives) connectives.push_back(to_string(c));
    blocks.push_back({{"kind", to_string(block.kind)},
                      {"terms", std::move(terms)},
                      {"connectives", std::move(connectives)}});
  }
  return json{{"blocks", std::move(blocks)}};
}

RequirementModel model_from_json(const json& document) {
  RequirementModel model;
  try {
    for (const auto& node : document.at("blocks")) {
      const auto kind = block_kind_from_string(node.at("kind").get<std::string>());
      if (!kind) throw ParseError("unknown block kind in model JSON");
      Block block{*kind, {}};
      const auto& terms = node.at("terms");
      const auto connectives = node.value("connectives", std::vector<std::string>{});
      if (terms.empty() || connectives.size() + 1 != terms.size()) {
        throw ParseError("block needs one connective between each pair of terms");
      }
      for (std::size_t i = 0; i < terms.size(); ++i) {
        Connective connective = Connective::and_;
        if (i > 0) {
          const auto parsed = connective_from_word(connectives[i - 1]);
          if (!parsed) throw ParseError("unknown connective '" + connectives[i - 1] + "'");
          connective = *parsed;
        }
        block.expr.add(relation_from_json(terms[i]), connective);
      }
      model.blocks.push_back(std::move(block));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed model JSON: ") + e.what());
  }
  return model;
}

}  // namespace reqformal
