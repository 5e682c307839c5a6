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

// End-to-end formalization of a requirement corpus:
//
//   preprocess -> decompose -> extract -> assemble -> render
//
// Boolean qualifiers are registered in corpus order, so run() processes
// requirements sequentially with one vocabulary per run.
#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqformal/annotations.hpp"
#include "reqformal/clause.hpp"
#include "reqformal/core.hpp"
#include "reqformal/lexicon.hpp"
#include "reqformal/mapping_rules.hpp"
#include "reqformal/model.hpp"
#include "reqformal/preprocess.hpp"

namespace reqformal {

enum class Approach { dep_pos, srl };

std::string_view to_string(Approach approach);
std::optional<Approach> approach_from_string(std::string_view text);

/// One requirement of a corpus file.
struct CorpusEntry {
  std::string id;
  std::string text;
  std::size_t line = 0;  // line of the `# <id>` header
};

/// Blocks separated by blank lines, each starting with `# <id>`. The lines
/// after the header are joined with single spaces. Throws ParseError for a
/// block without header or a repeated id.
std::vector<CorpusEntry> parse_corpus(std::string_view content);
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

struct PreprocessedText {
  std::string text;
  EventTable events;
  Diagnostics diagnostics;
};

/// Markup stripping followed by event abbreviation.
PreprocessedText preprocess_text(std::string_view raw, const Lexicon& lexicon);

struct SentenceAnnotation {
  std::string text;
  std::optional<DepAnnotation> dep;
  std::optional<SrlSentence> srl;
};

struct AnnotatedRequirement {
  std::string id;
  std::string raw_text;
  std::string preprocessed_text;
  EventTable events;
  std::vector<SentenceAnnotation> sentences;
  Diagnostics diagnostics;
};

/// Pairs a requirement with its annotations (either list may be empty).
/// Both lists, when given, must describe the same number of sentences.
AnnotatedRequirement annotate_requirement(const CorpusEntry& entry, const Lexicon& lexicon,
                                          std::vector<DepAnnotation> dep,
                                          std::vector<SrlSentence> srl);

/// Reads `<dir>/<id>.conllu` and/or `<dir>/<id>.srl.json` as the approach
/// needs. Throws ValidationError when a needed file is missing.
AnnotatedRequirement load_annotated(const CorpusEntry& entry, const Lexicon& lexicon,
                                    const std::filesystem::path& dir, Approach approach);

struct PipelineOptions {
  Approach approach = Approach::dep_pos;
  PronounOptions pronouns;
};

struct ClauseResult {
  Clause clause;
  std::string display;  // clause text as reported
  std::optional<Relation> relation;
  std::string construct;  // rule row used
};

struct RequirementResult {
  std::string id;
  std::vector<ClauseResult> clauses;
  std::optional<RequirementModel> model;
  std::string pseudocode;
  Diagnostics diagnostics;

  bool ok() const { return model.has_value() && !has_errors(diagnostics); }
};

class Pipeline {
 public:
  Pipeline(Lexicon lexicon, RuleSet rules, PipelineOptions options = {});

  const Lexicon& lexicon() const noexcept { return lexicon_; }
  const RuleSet& rules() const noexcept { return rules_; }
  const PipelineOptions& options() const noexcept { return options_; }

  /// Clause list of one requirement, pronouns resolved.
  std::vector<Clause> decompose(const AnnotatedRequirement& requirement,
                                Diagnostics& diagnostics) const;

  /// Clause texts as reported: events restored for the dependency route,
  /// abbreviated for the role-labeling route.
  std::string display(const Clause& clause, const AnnotatedRequirement& requirement) const;

  RequirementResult formalize(const AnnotatedRequirement& requirement,
                              BooleanVocabulary& vocabulary) const;

  /// All requirements in order, sharing one fresh vocabulary.
  std::vector<RequirementResult> run(std::span<const AnnotatedRequirement> requirements) const;

 private:
  Lexicon lexicon_;
  RuleSet rules_;
  PipelineOptions options_;
};

/// Human-readable run report: per requirement, the clauses with their
/// relations and rule rows, then every diagnostic.
std::string render_report(std::span<const RequirementResult> results);

}  // namespace reqformal
