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

#include "reqformal/decompose.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

namespace reqformal {

namespace {

// ---------------------------------------------------------------------------
// "between A and B"

struct KeyedToken {
  Token token;
  int key = 0;
  int head_key = 0;
};

DepAnnotation renumber(const std::vector<KeyedToken>& keyed, std::string text,
                       std::vector<std::string> comments) {
  std::map<int, int> index_of;
  for (std::size_t i = 0; i < keyed.size(); ++i) index_of[keyed[i].key] = static_cast<int>(i) + 1;
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    Token token = keyed[i].token;
    token.index = static_cast<int>(i) + 1;
    token.head = keyed[i].head_key == 0 ? 0 : index_of.at(keyed[i].head_key);
    tokens.push_back(std::move(token));
  }
  return DepAnnotation(std::move(tokens), std::move(text), std::move(comments));
}

Token synthetic(std::string text, std::string lemma, std::string pos, std::string dep) {
  Token token;
  token.text = std::move(text);
  token.lemma = std::move(lemma);
  token.pos = std::move(pos);
  token.dep = std::move(dep);
  return token;
}

struct BetweenSite {
  int between = 0;
  int first = 0;   // operand A
  int second = 0;  // operand B, conjunct of A
  int cc = 0;      // "and"
};

std::optional<BetweenSite> find_between(const DepAnnotation& sentence) {
  for (const auto& token : sentence.tokens()) {
    if (to_lower(token.text) != "between") continue;
    for (int a : sentence.children(token.index)) {
      const std::string& dep = sentence.at(a).dep;
      if (dep != "pobj" && dep != "obj" && dep != "nmod") continue;
      for (int b : sentence.children(a)) {
        if (sentence.at(b).dep != "conj") continue;
        std::vector<int> candidates = sentence.children(a);
        const auto more = sentence.children(b);
        candidates.insert(candidates.end(), more.begin(), more.end());
        for (int c : candidates) {
          if (sentence.at(c).dep == "cc" && to_lower(sentence.at(c).text) == "and" && c < b) {
            return BetweenSite{token.index, a, b, c};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Marker detection

std::optional<std::pair<Keyword, int>> marker_child(const DepAnnotation& sentence, int head,
                                                    const Lexicon& lexicon) {
  for (int child : sentence.children(head)) {
    const Token& t = sentence.at(child);
    if (t.dep != "mark" && t.dep != "advmod" && t.pos != "SCONJ") continue;
    if (auto keyword = lexicon.keyword_of(t.text)) return std::make_pair(*keyword, child);
  }
  return std::nullopt;
}

std::optional<std::pair<Keyword, int>> marker_child(const Clause& clause, int head,
                                                    const Lexicon& lexicon) {
  for (int child : clause.children(head)) {
    const ClauseToken& t = clause.at(child);
    if (t.dep != "mark" && t.dep != "advmod" && t.pos != "SCONJ") continue;
    if (auto keyword = lexicon.keyword_of(t.text)) return std::make_pair(*keyword, child);
  }
  return std::nullopt;
}

std::vector<int> without(std::vector<int> positions, const std::vector<int>& removed) {
  positions.erase(std::remove_if(positions.begin(), positions.end(),
                                 [&](int p) {
                                   return std::find(removed.begin(), removed.end(), p) !=
                                          removed.end();
                                 }),
                  positions.end());
  return positions;
}

std::vector<int> all_positions(const Clause& clause) {
  std::vector<int> out;
  for (int p = 1; p <= clause.size(); ++p) out.push_back(p);
  return out;
}

bool in_subject(const Clause& clause, int position) {
  for (int current = position; current != 0; current = clause.at(current).head) {
    const std::string& dep = clause.at(current).dep;
    if (dep.starts_with("nsubj") || dep.starts_with("csubj")) return true;
  }
  return false;
}

Connective connective_of(const std::string& word) {
  return connective_from_word(word).value_or(Connective::and_);
}

}  // namespace

RewrittenText rewrite_between(std::string_view text) {
  static const std::regex pattern(R"(\b([Bb]etween)\s+([^,.;:!?]+?)\s+and\s+)");
  RewrittenText result;
  std::string input(text);
  std::smatch match;
  std::string::const_iterator from = input.cbegin();
  while (std::regex_search(from, input.cend(), match, pattern)) {
    result.text.append(from, match[0].first);
    const std::string first = match[2].str();
    result.text += "greater than " + first + " and less than ";
    result.diagnostics.push_back(
        {Severity::warning, "between-assumption",
         "rewrote 'between " + first + " and ...' assuming the first bound is the smaller one"});
    from = match[0].second;
  }
  result.text.append(from, input.cend());

  // A "between" that survived has no partner.
  static const std::regex leftover(R"(\b[Bb]etween\b)");
  if (std::regex_search(result.text, leftover)) {
    result.diagnostics.push_back(
        {Severity::warning, "between-unpaired", "'between' without a paired 'and' left as is"});
  }
  return result;
}

RewrittenSentence rewrite_between(const DepAnnotation& sentence) {
  RewrittenSentence result{sentence, {}};
  int next_key = -1;
  while (auto site = find_between(result.sentence)) {
    const DepAnnotation& current = result.sentence;
    const int greater = next_key--;
    const int first_than = next_key--;
    const int less = next_key--;
    const int second_than = next_key--;

    std::vector<KeyedToken> keyed;
    for (const Token& token : current.tokens()) {
      KeyedToken kt{token, token.index, token.head};
      if (kt.head_key == site->between) kt.head_key = greater;
      if (token.index == site->between) {
        keyed.push_back({synthetic("greater", "great", "ADJ", "acomp"), greater, token.head});
        keyed.push_back({synthetic("than", "than", "ADP", "prep"), first_than, greater});
        continue;
      }
      if (token.index == site->first) {
        kt.head_key = first_than;
        kt.token.dep = "pobj";
      } else if (token.index == site->cc) {
        kt.head_key = greater;
      } else if (token.index == site->second) {
        keyed.push_back({synthetic("less", "little", "ADJ", "conj"), less, greater});
        keyed.push_back({synthetic("than", "than", "ADP", "prep"), second_than, less});
        kt.head_key = second_than;
        kt.token.dep = "pobj";
      }
      keyed.push_back(std::move(kt));
    }
    const std::string operand = current.at(site->first).text;
    auto text = rewrite_between(current.text());
    result.sentence = renumber(keyed, text.text, current.comments());
    result.diagnostics.push_back(
        {Severity::warning, "between-assumption",
         "rewrote 'between " + operand + " and ...' assuming the first bound is the smaller one"});
  }
  for (const auto& token : result.sentence.tokens()) {
    if (to_lower(token.text) == "between") {
      result.diagnostics.push_back({Severity::warning, "between-unpaired",
                                    "'between' without a paired 'and' left as is"});
    }
  }
  result.sentence.validate();
  return result;
}

std::vector<Clause> split_on_markers(const DepAnnotation& sentence, const Lexicon& lexicon,
                                     std::size_t sentence_number) {
  const int root = sentence.root();
  struct Head {
    Keyword keyword = Keyword::none;
    Connective connective = Connective::none;
  };
  std::map<int, Head> heads;
  heads[root] = Head{};
  if (auto marker = marker_child(sentence, root, lexicon)) heads[root].keyword = marker->first;

  std::set<int> removed;  // coordinating conjunctions consumed at a split
  for (const Token& token : sentence.tokens()) {
    if (token.index == root) continue;
    if (auto marker = marker_child(sentence, token.index, lexicon)) {
      heads[token.index].keyword = marker->first;
    }
  }
  for (int child : sentence.children(root)) {
    const Token& t = sentence.at(child);
    if (t.dep != "conj" || (t.pos != "VERB" && t.pos != "AUX")) continue;
    Head& head = heads[child];
    int cc = 0;
    std::vector<int> candidates = sentence.children(root);
    const auto own = sentence.children(child);
    candidates.insert(candidates.end(), own.begin(), own.end());
    for (int c : candidates) {
      if (sentence.at(c).dep == "cc" && c < child && c > cc) cc = c;
    }
    if (cc != 0) {
      head.connective = connective_of(sentence.at(cc).text);
      removed.insert(cc);
    }
  }

  std::map<int, std::vector<int>> members;
  for (const Token& token : sentence.tokens()) {
    if (removed.count(token.index) != 0) continue;
    int current = token.index;
    while (heads.find(current) == heads.end()) current = sentence.at(current).head;
    members[current].push_back(token.index);
  }

  std::vector<std::pair<int, int>> order;  // (first index, head)
  for (const auto& [head, indices] : members) order.emplace_back(indices.front(), head);
  std::sort(order.begin(), order.end());

  std::vector<Clause> clauses;
  for (const auto& [first, head] : order) {
    auto drafts = drafts_from_sentence(sentence, members[head]);
    if (drafts.empty()) continue;
    clauses.push_back(assemble_clause(std::move(drafts), heads[head].keyword,
                                      heads[head].connective, sentence_number));
  }
  return clauses;
}

std::vector<Clause> split_root_conjunctions(const Clause& clause, const Lexicon& lexicon) {
  const int root = clause.root();
  int conjunct = 0;
  for (int child : clause.children(root)) {
    if (clause.at(child).dep == "conj" && is_verbal(clause.at(child))) conjunct = child;
  }
  if (conjunct == 0) return {clause};

  const std::vector<int> second = clause.subtree(conjunct);
  int cc = 0;
  std::vector<int> candidates = clause.children(root);
  const auto own = clause.children(conjunct);
  candidates.insert(candidates.end(), own.begin(), own.end());
  for (int c : candidates) {
    if (clause.at(c).dep == "cc" && c < conjunct && c > cc) cc = c;
  }
  std::vector<int> removed = second;
  if (cc != 0) removed.push_back(cc);
  const std::vector<int> first = without(all_positions(clause), removed);

  Clause head_part =
      assemble_clause(drafts_from_clause(clause, first), clause.keyword, clause.connective,
                      clause.sentence);

  Keyword keyword = clause.keyword;
  if (auto own_marker = marker_child(clause, conjunct, lexicon)) keyword = own_marker->first;
  std::vector<DraftToken> drafts;
  for (auto& draft : drafts_from_clause(clause, without(second, {cc}))) {
    drafts.push_back(std::move(draft));
  }
  const Connective connective =
      cc != 0 ? connective_of(clause.at(cc).text) : Connective::and_;
  Clause tail_part = assemble_clause(std::move(drafts), keyword, connective, clause.sentence);

  std::vector<Clause> out = split_root_conjunctions(head_part, lexicon);
  for (auto& c : split_root_conjunctions(tail_part, lexicon)) out.push_back(std::move(c));
  return out;
}

std::vector<Clause> expand_np_conjunctions(const Clause& clause) {
  int conjunct = 0;
  for (int p = 1; p <= clause.size(); ++p) {
    const ClauseToken& t = clause.at(p);
    if (t.dep != "conj" || is_verbal(t) || t.head == 0) continue;
    if (is_verbal(clause.at(t.head)) || in_subject(clause, t.head)) continue;
    conjunct = p;
  }
  if (conjunct == 0) return {clause};

  const int first_head = clause.at(conjunct).head;
  const std::vector<int> second = clause.subtree(conjunct);
  int cc = 0;
  std::vector<int> candidates = clause.children(first_head);
  const auto own = clause.children(conjunct);
  candidates.insert(candidates.end(), own.begin(), own.end());
  for (int c : candidates) {
    if (clause.at(c).dep == "cc" && c < conjunct && c > cc) cc = c;
  }
  std::vector<int> removed = second;
  if (cc != 0) removed.push_back(cc);

  const std::vector<int> first_span = without(clause.subtree(first_head), removed);
  const int first_start = first_span.front();

  Clause head_part = assemble_clause(drafts_from_clause(clause, without(all_positions(clause),
                                                                        removed)),
                                     clause.keyword, clause.connective, clause.sentence);

  std::vector<DraftToken> drafts;
  for (int p = 1; p < first_start; ++p) {
    if (std::find(removed.begin(), removed.end(), p) != removed.end()) continue;
    DraftToken draft{clause.at(p), p, clause.at(p).head};
    draft.token.injected = true;
    drafts.push_back(std::move(draft));
  }
  for (int p : without(second, {cc})) {
    DraftToken draft{clause.at(p), p, clause.at(p).head};
    if (p == conjunct) {
      draft.head_key = clause.at(first_head).head;
      draft.token.dep = clause.at(first_head).dep;
    }
    drafts.push_back(std::move(draft));
  }
  const Connective connective =
      cc != 0 ? connective_of(clause.at(cc).text) : Connective::and_;
  Clause tail_part = assemble_clause(std::move(drafts), clause.keyword, connective,
                                     clause.sentence);

  std::vector<Clause> out = expand_np_conjunctions(head_part);
  for (auto& c : expand_np_conjunctions(tail_part)) out.push_back(std::move(c));
  return out;
}

std::vector<Clause> decompose_sentence(const DepAnnotation& sentence, const Lexicon& lexicon,
                                       std::size_t sentence_number, Diagnostics& diagnostics) {
  auto rewritten = rewrite_between(sentence);
  append(diagnostics, rewritten.diagnostics);

  std::vector<Clause> out;
  for (const Clause& marked : split_on_markers(rewritten.sentence, lexicon, sentence_number)) {
    for (const Clause& verbal : split_root_conjunctions(marked, lexicon)) {
      for (Clause& clause : expand_np_conjunctions(verbal)) {
        for (const auto& token : clause.tokens) {
          if (token.dep == "cc" && !token.injected && lexicon.is_coordinator(token.text)) {
            diagnostics.push_back({Severity::warning, "unsplit-coordination",
                                   "'" + token.text + "' in '" + clause.text() +
                                       "' joins neither verbs nor operands; clause kept whole"});
          }
        }
        out.push_back(std::move(clause));
      }
    }
  }
  return out;
}

std::vector<Clause> frames_to_clauses(const SrlSentence& sentence, const Lexicon& lexicon,
                                      std::size_t sentence_number, Diagnostics* diagnostics) {
  auto report = [&](Severity severity, std::string code, std::string message) {
    if (diagnostics) diagnostics->push_back({severity, std::move(code), std::move(message)});
  };
  const auto& tokens = sentence.tokens;
  auto word_at = [&](int index) -> const std::string& {
    return tokens[static_cast<std::size_t>(index - 1)];
  };

  std::vector<const SrlFrame*> frames;
  for (const auto& frame : sentence.frames) frames.push_back(&frame);
  std::stable_sort(frames.begin(), frames.end(), [](const SrlFrame* a, const SrlFrame* b) {
    return a->verb.index < b->verb.index;
  });

  std::vector<Clause> clauses;
  int previous_verb = 0;
  for (const SrlFrame* frame : frames) {
    if (frame->arguments.size() <= 1) {
      report(Severity::info, "frame-dropped",
             "frame '" + frame->verb.text + "' has fewer than two arguments");
      continue;
    }
    const bool has_core = std::any_of(frame->arguments.begin(), frame->arguments.end(),
                                      [](const SrlArgument& a) { return !is_modifier_label(a.label); });
    if (lexicon.is_modal(frame->verb.lemma) && !has_core) {
      report(Severity::info, "frame-dropped",
             "frame '" + frame->verb.text + "' is a modal verb with modifiers only");
      continue;
    }

    FrameClause info;
    info.frame.verb = frame->verb;
    info.sentence_tokens = tokens;
    for (const auto& argument : frame->arguments) {
      bool spans_clause = false;
      if (is_modifier_label(argument.label)) {
        for (const auto& other : sentence.frames) {
          if (&other != frame && argument.span.contains(other.verb.index)) spans_clause = true;
        }
      }
      if (spans_clause) {
        info.excluded.push_back(argument);
      } else {
        info.frame.arguments.push_back(argument);
      }
    }

    Keyword keyword = Keyword::none;
    for (const auto& argument : info.frame.arguments) {
      if (!is_modifier_label(argument.label)) continue;
      std::vector<std::string> words;
      for (int k = argument.span.start; k <= argument.span.end; ++k) words.push_back(word_at(k));
      if (argument.label == "ARGM-TMP" && lexicon.is_time_expression(words)) {
        info.time_constraint = join(words, " ");
        report(Severity::warning, "time-constraint-dropped",
               "'" + *info.time_constraint + "' on '" + frame->verb.text +
                   "' is kept as a note, not in the model");
        continue;
      }
      if (argument.span.size() != 1 || argument.label == "ARGM-NEG" ||
          argument.label == "ARGM-MOD") {
        continue;
      }
      if (auto k = lexicon.keyword_of(words.front())) keyword = *k;
    }

    std::vector<int> indices{frame->verb.index};
    for (const auto& argument : info.frame.arguments) {
      for (int k = argument.span.start; k <= argument.span.end; ++k) indices.push_back(k);
    }
    std::sort(indices.begin(), indices.end());

    int cue = 0;
    if (keyword == Keyword::none) {
      int before = indices.front() - 1;
      while (before >= 1 && is_punctuation("", word_at(before))) --before;
      if (before >= 1) {
        if (auto k = lexicon.keyword_of(word_at(before))) {
          keyword = *k;
          cue = before;
        }
      }
    }

    Connective connective = Connective::none;
    if (previous_verb != 0) {
      for (int k = frame->verb.index - 1; k > previous_verb; --k) {
        if (std::binary_search(indices.begin(), indices.end(), k)) continue;
        if (lexicon.is_coordinator(word_at(k))) {
          connective = connective_of(word_at(k));
          break;
        }
      }
    }

    Clause clause;
    clause.keyword = keyword;
    clause.connective = connective;
    clause.sentence = sentence_number;
    if (cue != 0) {
      ClauseToken token;
      token.text = to_lower(word_at(cue));
      token.lemma = token.text;
      token.source = cue;
      clause.tokens.push_back(std::move(token));
    }
    for (int index : indices) {
      if (is_punctuation("", word_at(index))) continue;
      ClauseToken token;
      token.text = word_at(index);
      token.source = index;
      if (index == frame->verb.index) token.lemma = frame->verb.lemma;
      clause.tokens.push_back(std::move(token));
    }
    clause.frame = std::move(info);
    clauses.push_back(std::move(clause));
    previous_verb = frame->verb.index;
  }
  return clauses;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    current.push_back(text[i]);
    const char c = text[i];
    const bool terminal = c == '.' || c == '!' || c == '?';
    const bool boundary = i + 1 == text.size() || text[i + 1] == ' ' || text[i + 1] == '\n' ||
                          text[i + 1] == '\t' || text[i + 1] == '\r';
    if (terminal && boundary) {
      if (auto s = trim(current); !s.empty()) out.push_back(std::move(s));
      current.clear();
    }
  }
  if (auto s = trim(current); !s.empty()) out.push_back(std::move(s));
  return out;
}

}  // namespace reqformal
