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

#include "reqformal/annotations.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "reqformal/core.hpp"

namespace reqformal {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 17> kUniversalPos = {
    "ADJ", "ADP",  "ADV",   "AUX",   "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
};

constexpr std::array<std::string_view, 37> kUniversalDeps = {
    "acl",   "advcl",    "advmod",     "amod",     "appos",  "aux",   "case",    "cc",
    "ccomp", "clf",      "compound",   "conj",     "cop",    "csubj", "dep",     "det",
    "discourse", "dislocated", "expl", "fixed",  "flat",   "goeswith", "iobj",  "list",
    "mark",  "nmod",     "nsubj",      "nummod",   "obj",    "obl",   "orphan",  "parataxis",
    "punct", "reparandum", "root",     "vocative", "xcomp",
};

// English ClearNLP labels emitted by common parsers.
constexpr std::array<std::string_view, 23> kClearNlpDeps = {
    "acomp", "agent", "attr",  "auxpass", "csubjpass", "dative", "dobj", "intj",
    "meta",  "neg",   "nn",    "npadvmod", "nsubjpass", "oprd", "pcomp", "pobj",
    "poss",  "preconj", "predet", "prep",  "prt",       "quantmod", "relcl",
};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& values, std::string_view value) {
  return std::find(values.begin(), values.end(), value) != values.end();
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> columns;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      columns.push_back(line.substr(start));
      break;
    }
    columns.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return columns;
}

std::optional<int> to_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

struct PendingSentence {
  std::vector<Token> tokens;
  std::string text;
  std::vector<std::string> comments;
  std::size_t first_line = 0;

  bool empty() const { return tokens.empty() && text.empty() && comments.empty(); }
};

void flush(PendingSentence& pending, std::vector<DepAnnotation>& out) {
  if (pending.tokens.empty()) {
    if (!pending.empty()) {
      throw ParseError("sentence without token lines", pending.first_line);
    }
    return;
  }
  DepAnnotation sentence(std::move(pending.tokens), std::move(pending.text),
                         std::move(pending.comments));
  try {
    sentence.validate();
  } catch (const ValidationError& e) {
    throw ValidationError("sentence " + std::to_string(out.size() + 1) + " (line " +
                          std::to_string(pending.first_line) + "): " + e.what());
  }
  out.push_back(std::move(sentence));
  pending = PendingSentence{};
}

std::string column(std::string_view value) { return value.empty() ? "_" : std::string(value); }

}  // namespace

DepAnnotation::DepAnnotation(std::vector<Token> tokens, std::string text,
                             std::vector<std::string> comments)
    : tokens_(std::move(tokens)), text_(std::move(text)), comments_(std::move(comments)) {
  if (text_.empty()) {
    std::vector<std::string> words;
    for (const auto& token : tokens_) words.push_back(token.text);
    text_ = join(words, " ");
  }
}

const Token& DepAnnotation::at(int index) const {
  if (index < 1 || static_cast<std::size_t>(index) > tokens_.size()) {
    throw std::out_of_range("token index " + std::to_string(index) + " out of range");
  }
  return tokens_[static_cast<std::size_t>(index - 1)];
}

int DepAnnotation::root() const {
  for (const auto& token : tokens_) {
    if (token.head == 0) return token.index;
  }
  return 0;
}

std::vector<int> DepAnnotation::children(int index) const {
  std::vector<int> out;
  for (const auto& token : tokens_) {
    if (token.head == index && token.index != index) out.push_back(token.index);
  }
  return out;
}

std::vector<int> DepAnnotation::subtree(int index) const {
  std::vector<int> out{index};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int child : children(out[i])) out.push_back(child);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void DepAnnotation::validate() const {
  const int n = static_cast<int>(tokens_.size());
  if (n == 0) throw ValidationError("empty sentence");
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& token = tokens_[static_cast<std::size_t>(i)];
    const std::string where = "token " + std::to_string(token.index) + " '" + token.text + "'";
    if (token.index != i + 1) throw ValidationError(where + ": index out of sequence");
    if (token.head < 0 || token.head > n) throw ValidationError(where + ": head out of range");
    if (token.head == token.index) throw ValidationError(where + ": token is its own head");
    if (!is_known_pos(token.pos)) throw ValidationError(where + ": unknown POS tag " + token.pos);
    if (!is_known_dep(token.dep)) {
      throw ValidationError(where + ": unknown dependency relation " + token.dep);
    }
    if (token.head == 0) {
      ++roots;
      if (token.dep != "root") throw ValidationError(where + ": head 0 requires relation root");
    } else if (token.dep == "root") {
      throw ValidationError(where + ": relation root requires head 0");
    }
  }
  if (roots != 1) {
    throw ValidationError("expected exactly one root, found " + std::to_string(roots));
  }
  // Every token must reach the root without revisiting a node.
  for (const auto& token : tokens_) {
    int current = token.index;
    for (int steps = 0; current != 0; ++steps) {
      if (steps > n) {
        throw ValidationError("cycle through token " + std::to_string(token.index));
      }
      current = at(current).head;
    }
  }
}

bool is_known_pos(std::string_view pos) { return contains(kUniversalPos, pos); }

bool is_known_dep(std::string_view dep) {
  const std::string_view base = dep.substr(0, dep.find(':'));
  return contains(kUniversalDeps, base) || contains(kClearNlpDeps, base);
}

std::vector<DepAnnotation> parse_conllu(std::string_view content) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < content.size();) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    lines.push_back(content.substr(start, end - start));
    start = end + 1;
  }

  std::vector<DepAnnotation> out;
  PendingSentence pending;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_number = i + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (trim(line).empty()) {
      flush(pending, out);
      continue;
    }
    if (pending.empty()) pending.first_line = line_number;
    if (line.front() == '#') {
      const std::string_view body = line.substr(1);
      const std::string stripped = trim(body);
      if (stripped.starts_with("text =") || stripped.starts_with("text=")) {
        pending.text = trim(std::string_view(stripped).substr(stripped.find('=') + 1));
      } else {
        pending.comments.emplace_back(body);
      }
      continue;
    }

    const auto columns = split_tabs(line);
    if (columns.size() < 8) {
      throw ParseError("expected at least 8 tab-separated columns, found " +
                           std::to_string(columns.size()),
                       line_number);
    }
    // Multiword ranges and empty nodes carry no tree structure.
    if (columns[0].find_first_of("-.") != std::string_view::npos) continue;

    const auto id = to_int(columns[0]);
    if (!id) throw ParseError("invalid token id '" + std::string(columns[0]) + "'", line_number);
    if (*id != static_cast<int>(pending.tokens.size()) + 1) {
      throw ParseError("token id " + std::to_string(*id) + " out of sequence", line_number);
    }
    const auto head = to_int(columns[6]);
    if (!head) throw ParseError("invalid head '" + std::string(columns[6]) + "'", line_number);

    Token token;
    token.index = *id;
    token.text = std::string(columns[1]);
    token.lemma = std::string(columns[2]);
    token.pos = std::string(columns[3]);
    token.xpos = column(columns[4]);
    token.feats = column(columns[5]);
    token.head = *head;
    token.dep = to_lower(columns[7]);
    if (columns.size() > 8) token.deps = column(columns[8]);
    if (columns.size() > 9) token.misc = column(columns[9]);
    pending.tokens.push_back(std::move(token));
  }
  flush(pending, out);
  return out;
}

std::string render_conllu(std::span<const DepAnnotation> sentences) {
  std::ostringstream os;
  for (const auto& sentence : sentences) {
    for (const auto& comment : sentence.comments()) os << '#' << comment << '\n';
    os << "# text = " << sentence.text() << '\n';
    for (const auto& t : sentence.tokens()) {
      os << t.index << '\t' << t.text << '\t' << column(t.lemma) << '\t' << t.pos << '\t'
         << column(t.xpos) << '\t' << column(t.feats) << '\t' << t.head << '\t' << t.dep << '\t'
         << column(t.deps) << '\t' << column(t.misc) << '\n';
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

bool is_srl_label(std::string_view label) { return contains(kSrlLabels, label); }

const SrlArgument* SrlFrame::find(std::string_view label) const {
  for (const auto& argument : arguments) {
    if (argument.label == label) return &argument;
  }
  return nullptr;
}

void validate_frame(const SrlFrame& frame, std::span<const std::string> tokens) {
  const int n = static_cast<int>(tokens.size());
  const std::string where = "frame '" + frame.verb.text + "'";
  if (frame.verb.index < 1 || frame.verb.index > n) {
    throw ValidationError(where + ": verb index out of range");
  }
  if (tokens[static_cast<std::size_t>(frame.verb.index - 1)] != frame.verb.text) {
    throw ValidationError(where + ": verb text does not match token " +
                          std::to_string(frame.verb.index));
  }
  const TokenSpan verb_span{frame.verb.index, frame.verb.index};
  for (std::size_t i = 0; i < frame.arguments.size(); ++i) {
    const auto& argument = frame.arguments[i];
    if (!is_srl_label(argument.label)) {
      throw ValidationError(where + ": unknown label " + argument.label);
    }
    const auto& span = argument.span;
    if (span.start < 1 || span.end < span.start || span.end > n) {
      throw ValidationError(where + ": " + argument.label + " span out of range");
    }
    if (span.overlaps(verb_span)) {
      throw ValidationError(where + ": " + argument.label + " overlaps the verb");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (span.overlaps(frame.arguments[j].span)) {
        throw ValidationError(where + ": " + argument.label + " overlaps " +
                              frame.arguments[j].label);
      }
    }
    std::string covered;
    for (int k = span.start; k <= span.end; ++k) covered += tokens[static_cast<std::size_t>(k - 1)];
    if (strip_whitespace(argument.text) != covered) {
      throw ValidationError(where + ": " + argument.label + " text '" + argument.text +
                            "' does not match its tokens");
    }
  }
}

namespace {

template <typename T>
T required(const json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": field '" + key + "' has the wrong type");
  }
}

SrlSentence sentence_from_json(const json& node, std::size_t number) {
  const std::string where = "sentence " + std::to_string(number);
  SrlSentence sentence;
  sentence.text = required<std::string>(node, "text", where);
  if (node.contains("tokens")) {
    sentence.tokens = required<std::vector<std::string>>(node, "tokens", where);
  } else {
    sentence.tokens = split_words(sentence.text);
  }
  if (strip_whitespace(sentence.text) != strip_whitespace(join(sentence.tokens, ""))) {
    throw ValidationError(where + ": tokens do not match the sentence text");
  }
  const json frames = node.contains("frames") ? node.at("frames") : json::array();
  if (!frames.is_array()) throw ParseError(where + ": 'frames' must be an array");
  for (const auto& f : frames) {
    SrlFrame frame;
    const json verb = required<json>(f, "verb", where);
    frame.verb.index = required<int>(verb, "index", where + " verb");
    frame.verb.text = required<std::string>(verb, "text", where + " verb");
    frame.verb.lemma = verb.contains("lemma") ? verb.at("lemma").get<std::string>()
                                              : to_lower(frame.verb.text);
    const json arguments = f.contains("arguments") ? f.at("arguments") : json::array();
    for (const auto& a : arguments) {
      SrlArgument argument;
      argument.label = required<std::string>(a, "label", where + " argument");
      argument.span.start = required<int>(a, "start", where + " argument");
      argument.span.end = required<int>(a, "end", where + " argument");
      argument.text = required<std::string>(a, "text", where + " argument");
      frame.arguments.push_back(std::move(argument));
    }
    try {
      validate_frame(frame, sentence.tokens);
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
    sentence.frames.push_back(std::move(frame));
  }
  return sentence;
}

}  // namespace

std::vector<SrlSentence> parse_srl_json(std::string_view content) {
  json document;
  try {
    document = json::parse(content);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  json sentences;
  if (document.is_array()) {
    sentences = document;
  } else if (document.is_object() && document.contains("sentences") &&
             document.at("sentences").is_array()) {
    sentences = document.at("sentences");
  } else {
    throw ParseError("expected an object with a 'sentences' array");
  }
  std::vector<SrlSentence> out;
  for (const auto& node : sentences) out.push_back(sentence_from_json(node, out.size() + 1));
  return out;
}

std::string render_srl_json(std::span<const SrlSentence> sentences) {
  json array = json::array();
  for (const auto& sentence : sentences) {
    json frames = json::array();
    for (const auto& frame : sentence.frames) {
      json arguments = json::array();
      for (const auto& argument : frame.arguments) {
        arguments.push_back({{"label", argument.label},
                             {"start", argument.span.start},
                             {"end", argument.span.end},
                             {"text", argument.text}});
      }
      frames.push_back({{"verb",
                         {{"index", frame.verb.index},
                          {"text", frame.verb.text},
                          {"lemma", frame.verb.lemma}}},
                        {"arguments", arguments}});
    }
    array.push_back(
        {{"text", sentence.text}, {"tokens", sentence.tokens}, {"frames", frames}});
  }
  json document = {{"sentences", array}};
  return document.dump(2) + "\n";
}

}  // namespace reqformal
