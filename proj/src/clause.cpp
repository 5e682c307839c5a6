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

#include "reqformal/clause.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace reqformal {

std::string Clause::text() const { return join(words(), " "); }

std::vector<std::string> Clause::words() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) out.push_back(token.text);
  return out;
}

const ClauseToken& Clause::at(int position) const {
  if (position < 1 || position > size()) {
    throw std::out_of_range("clause position " + std::to_string(position) + " out of range");
  }
  return tokens[static_cast<std::size_t>(position - 1)];
}

int Clause::root() const {
  for (int p = 1; p <= size(); ++p) {
    if (at(p).head == 0) return p;
  }
  return 0;
}

std::vector<int> Clause::children(int position) const {
  std::vector<int> out;
  for (int p = 1; p <= size(); ++p) {
    if (p != position && at(p).head == position) out.push_back(p);
  }
  return out;
}

std::vector<int> Clause::subtree(int position) const {
  std::vector<int> out{position};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int child : children(out[i])) out.push_back(child);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Clause assemble_clause(std::vector<DraftToken> drafts, Keyword keyword, Connective connective,
                       std::size_t sentence) {
  Clause clause;
  clause.keyword = keyword;
  clause.connective = connective;
  clause.sentence = sentence;

  std::map<int, int> position_of;
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    position_of[drafts[i].key] = static_cast<int>(i) + 1;
  }
  std::vector<int> heads(drafts.size(), 0);
  std::vector<int> orphans;
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    auto it = position_of.find(drafts[i].head_key);
    if (drafts[i].head_key != 0 && it != position_of.end()) {
      heads[i] = it->second;
    } else {
      orphans.push_back(static_cast<int>(i) + 1);
    }
  }

  if (orphans.size() > 1) {
    // Keep the orphan that governs the most tokens as the root.
    auto descendants = [&](int position) {
      int count = 0;
      for (std::size_t i = 0; i < heads.size(); ++i) {
        int current = static_cast<int>(i) + 1;
        for (std::size_t steps = 0; steps <= heads.size() && current != 0; ++steps) {
          if (current == position) {
            ++count;
            break;
          }
          current = heads[static_cast<std::size_t>(current - 1)];
        }
      }
      return count;
    };
    int root = orphans.front();
    int best = descendants(root);
    for (int candidate : orphans) {
      const int score = descendants(candidate);
      if (score > best) {
        root = candidate;
        best = score;
      }
    }
    for (int orphan : orphans) {
      if (orphan != root) heads[static_cast<std::size_t>(orphan - 1)] = root;
    }
  }

  for (std::size_t i = 0; i < drafts.size(); ++i) {
    ClauseToken token = std::move(drafts[i].token);
    token.head = heads[i];
    clause.tokens.push_back(std::move(token));
  }
  return clause;
}

bool is_punctuation(std::string_view pos, std::string_view text) {
  if (pos == "PUNCT") return true;
  if (!pos.empty() || text.empty()) return false;
  return std::all_of(text.begin(), text.end(),
                     [](char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; });
}

std::vector<DraftToken> drafts_from_sentence(const DepAnnotation& sentence,
                                             const std::vector<int>& indices) {
  std::vector<DraftToken> drafts;
  for (int index : indices) {
    const Token& t = sentence.at(index);
    if (is_punctuation(t.pos, t.text)) continue;
    ClauseToken token{t.text, t.lemma, t.pos, t.dep, t.feats, t.xpos, 0, t.index, false};
    drafts.push_back(DraftToken{std::move(token), t.index, t.head});
  }
  return drafts;
}

std::vector<DraftToken> drafts_from_clause(const Clause& clause, const std::vector<int>& positions) {
  std::vector<DraftToken> drafts;
  for (int p : positions) {
    const ClauseToken& t = clause.at(p);
    drafts.push_back(DraftToken{t, p, t.head});
  }
  return drafts;
}

bool is_verbal(const ClauseToken& token) { return token.pos == "VERB" || token.pos == "AUX"; }

}  // namespace reqformal
