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

// Shared helpers for the test binaries.
#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "reqformal/annotations.hpp"
#include "reqformal/lexicon.hpp"
#include "reqformal/mapping_rules.hpp"
#include "reqformal/pipeline.hpp"

namespace testing {

inline std::filesystem::path data_dir() { return REQFORMAL_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return REQFORMAL_FIXTURE_DIR; }
inline std::filesystem::path golden_dir() { return fixture_dir() / "golden"; }

inline const reqformal::Lexicon& lexicon() {
  static const reqformal::Lexicon shipped = reqformal::load_lexicon(data_dir() / "lexicon.json");
  return shipped;
}

inline const reqformal::RuleSet& rules() {
  static const reqformal::RuleSet shipped = reqformal::load_rules(data_dir() / "rules.json");
  return shipped;
}

/// Builds a validated tree from rows of "form lemma UPOS dep head [XPOS]",
/// one row per token. The sentence text is the forms joined by spaces, with no
/// space before punctuation.
inline reqformal::DepAnnotation tree(const std::vector<std::string>& rows) {
  std::vector<reqformal::Token> tokens;
  std::string text;
  for (const auto& row : rows) {
    std::istringstream in(row);
    reqformal::Token token;
    in >> token.text >> token.lemma >> token.pos >> token.dep >> token.head;
    if (std::string xpos; in >> xpos) token.xpos = xpos;
    token.index = static_cast<int>(tokens.size()) + 1;
    if (!text.empty() && token.pos != "PUNCT") text += ' ';
    text += token.text;
    tokens.push_back(std::move(token));
  }
  reqformal::DepAnnotation annotation(std::move(tokens), text);
  annotation.validate();
  return annotation;
}

/// The committed annotations of one golden requirement.
inline reqformal::AnnotatedRequirement golden_requirement(const std::string& id,
                                                         reqformal::Approach approach) {
  const auto corpus_name = approach == reqformal::Approach::dep_pos ? "dep_pos.corpus" : "srl.corpus";
  for (const auto& entry : reqformal::load_corpus(golden_dir() / corpus_name)) {
    if (entry.id == id) {
      return reqformal::load_annotated(entry, lexicon(), golden_dir() / "annotations", approach);
    }
  }
  throw std::runtime_error("no golden requirement " + id);
}

inline std::string expected_model(const std::string& id) {
  return reqformal::read_file(golden_dir() / "expected" / (id + ".model.txt"));
}

/// Formalizes golden requirements in the given order with one vocabulary.
inline std::vector<reqformal::RequirementResult> run_golden(const std::vector<std::string>& ids,
                                                           reqformal::Approach approach) {
  std::vector<reqformal::AnnotatedRequirement> requirements;
  for (const auto& id : ids) requirements.push_back(golden_requirement(id, approach));
  reqformal::PipelineOptions options;
  options.approach = approach;
  const reqformal::Pipeline pipeline(lexicon(), rules(), options);
  return pipeline.run(requirements);
}

}  // namespace testing
