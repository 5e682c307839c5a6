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

#include "reqformal/pipeline.hpp"

#include <set>

#include "reqformal/decompose.hpp"
#include "reqformal/extract_dep_pos.hpp"
#include "reqformal/extract_srl.hpp"

namespace reqformal {

namespace {

std::vector<std::string> split_lines(std::string_view content) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string line(content.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == content.size()) break;
    start = end + 1;
  }
  return lines;
}

std::string tokens_text(const std::vector<std::string>& tokens) { return join(tokens, ""); }

std::string dep_tokens_text(const DepAnnotation& sentence) {
  std::string out;
  for (const auto& token : sentence.tokens()) out += token.text;
  return out;
}

}  // namespace

std::string_view to_string(Approach approach) {
  return approach == Approach::dep_pos ? "dep-pos" : "srl";
}

std::optional<Approach> approach_from_string(std::string_view text) {
  if (text == "dep-pos") return Approach::dep_pos;
  if (text == "srl") return Approach::srl;
  return std::nullopt;
}

std::vector<CorpusEntry> parse_corpus(std::string_view content) {
  std::vector<CorpusEntry> entries;
  std::set<std::string> seen;
  const auto lines = split_lines(content);
  std::optional<CorpusEntry> current;
  std::vector<std::string> body;
  auto flush = [&] {
    if (!current) return;
    current->text = join(body, " ");
    if (current->text.empty()) {
      throw ParseError("requirement '" + current->id + "' has no text", current->line);
    }
    entries.push_back(std::move(*current));
    current.reset();
    body.clear();
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) {
      flush();
      continue;
    }
    if (!current) {
      if (!line.starts_with("#")) throw ParseError("requirement block must start with '# <id>'", i + 1);
      const std::string id = trim(std::string_view(line).substr(1));
      if (id.empty() || id.find_first_of(" \t/\\") != std::string::npos) {
        throw ParseError("invalid requirement id '" + id + "'", i + 1);
      }
      if (!seen.insert(id).second) throw ParseError("duplicate requirement id '" + id + "'", i + 1);
      current = CorpusEntry{id, {}, i + 1};
      continue;
    }
    body.push_back(line);
  }
  flush();
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path));
}

PreprocessedText preprocess_text(std::string_view raw, const Lexicon& lexicon) {
  const std::string stripped = strip_markup(raw, lexicon.units);
  AbbreviatedText abbreviated = abbreviate_events(stripped);
  return PreprocessedText{std::move(abbreviated.text), std::move(abbreviated.events),
                          std::move(abbreviated.diagnostics)};
}

AnnotatedRequirement annotate_requirement(const CorpusEntry& entry, const Lexicon& lexicon,
                                          std::vector<DepAnnotation> dep,
                                          std::vector<SrlSentence> srl) {
  AnnotatedRequirement requirement;
  requirement.id = entry.id;
  requirement.raw_text = entry.text;
  PreprocessedText pre = preprocess_text(entry.text, lexicon);
  requirement.preprocessed_text = std::move(pre.text);
  requirement.events = std::move(pre.events);
  requirement.diagnostics = std::move(pre.diagnostics);

  if (!dep.empty() && !srl.empty() && dep.size() != srl.size()) {
    throw ValidationError(entry.id + ": " + std::to_string(dep.size()) +
                          " dependency sentences but " + std::to_string(srl.size()) +
                          " role-labeling sentences");
  }
  const std::size_t count = std::max(dep.size(), srl.size());
  std::string annotated;
  for (std::size_t i = 0; i < count; ++i) {
    SentenceAnnotation sentence;
    if (i < dep.size()) {
      sentence.text = dep[i].text();
      annotated += dep_tokens_text(dep[i]);
      sentence.dep = std::move(dep[i]);
    }
    if (i < srl.size()) {
      if (sentence.text.empty()) {
        sentence.text = srl[i].text;
        annotated += tokens_text(srl[i].tokens);
      } else if (strip_whitespace(tokens_text(srl[i].tokens)) !=
                 strip_whitespace(dep_tokens_text(*sentence.dep))) {
        throw ValidationError(entry.id + ": sentence " + std::to_string(i + 1) +
                              " is tokenized differently in the two annotations");
      }
      sentence.srl = std::move(srl[i]);
    }
    requirement.sentences.push_back(std::move(sentence));
  }
  if (count > 0 && strip_whitespace(annotated) != strip_whitespace(requirement.preprocessed_text)) {
    requirement.diagnostics.push_back(
        {Severity::warning, "annotation-mismatch",
         "annotated tokens do not spell the preprocessed text '" + requirement.preprocessed_text +
             "'"});
  }
  return requirement;
}

AnnotatedRequirement load_annotated(const CorpusEntry& entry, const Lexicon& lexicon,
                                    const std::filesystem::path& dir, Approach approach) {
  std::vector<DepAnnotation> dep;
  std::vector<SrlSentence> srl;
  if (approach == Approach::dep_pos) {
    const auto path = dir / (entry.id + ".conllu");
    if (!std::filesystem::exists(path)) {
      throw ValidationError("missing annotation " + path.string());
    }
    try {
      dep = parse_conllu(read_file(path));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(e.line()) + ": " + e.what(), e.line());
    } catch (const ValidationError& e) {
      throw ValidationError(path.string() + ": " + e.what());
    }
  } else {
    const auto path = dir / (entry.id + ".srl.json");
    if (!std::filesystem::exists(path)) {
      throw ValidationError("missing annotation " + path.string());
    }
    try {
      srl = parse_srl_json(read_file(path));
    } catch (const Error& e) {
      throw ValidationError(path.string() + ": " + e.what());
    }
  }
  return annotate_requirement(entry, lexicon, std::move(dep), std::move(srl));
}

Pipeline::Pipeline(Lexicon lexicon, RuleSet rules, PipelineOptions options)
    : lexicon_(std::move(lexicon)), rules_(std::move(rules)), options_(options) {}

std::vector<Clause> Pipeline::decompose(const AnnotatedRequirement& requirement,
                                        Diagnostics& diagnostics) const {
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < requirement.sentences.size(); ++i) {
    const SentenceAnnotation& sentence = requirement.sentences[i];
    std::vector<Clause> part;
    if (options_.approach == Approach::dep_pos) {
      if (!sentence.dep) {
        throw ValidationError(requirement.id + ": sentence " + std::to_string(i + 1) +
                              " has no dependency annotation");
      }
      part = decompose_sentence(*sentence.dep, lexicon_, i + 1, diagnostics);
    } else {
      if (!sentence.srl) {
        throw ValidationError(requirement.id + ": sentence " + std::to_string(i + 1) +
                              " has no role-labeling annotation");
      }
      part = frames_to_clauses(*sentence.srl, lexicon_, i + 1, &diagnostics);
    }
    for (auto& clause : part) clauses.push_back(std::move(clause));
  }
  if (options_.approach == Approach::dep_pos) {
    append(diagnostics, resolve_pronouns(clauses, lexicon_, options_.pronouns));
  }
  return clauses;
}

std::string Pipeline::display(const Clause& clause, const AnnotatedRequirement& requirement) const {
  if (options_.approach == Approach::dep_pos) return restore_events(clause.text(), requirement.events);
  return clause.text();
}

RequirementResult Pipeline::formalize(const AnnotatedRequirement& requirement,
                                      BooleanVocabulary& vocabulary) const {
  RequirementResult result;
  result.id = requirement.id;
  result.diagnostics = requirement.diagnostics;

  std::vector<Clause> clauses;
  try {
    clauses = decompose(requirement, result.diagnostics);
  } catch (const Error& e) {
    result.diagnostics.push_back({Severity::error, "decomposition-failed", e.what()});
    return result;
  }
  if (clauses.empty()) {
    result.diagnostics.push_back({Severity::error, "no-clauses", "no clause survived decomposition"});
    return result;
  }

  std::vector<ClauseRelation> relations;
  for (Clause& clause : clauses) {
    ClauseResult item;
    item.display = display(clause, requirement);
    try {
      if (options_.approach == Approach::dep_pos) {
        const auto entities = extract_syntactic_entities(clause, lexicon_, rules_.entities);
        auto mapped = entities_to_relation(entities, clause, lexicon_, rules_, vocabulary,
                                           requirement.events);
        item.relation = std::move(mapped.relation);
        item.construct = std::move(mapped.row);
        append(result.diagnostics, mapped.diagnostics);
      } else {
        auto draft = clause_to_relation(clause, requirement.events, lexicon_, rules_, vocabulary);
        item.relation = std::move(draft.relation);
        item.construct = std::move(draft.construct);
        append(result.diagnostics, draft.diagnostics);
      }
      relations.push_back(ClauseRelation{clause.keyword, clause.connective, *item.relation});
    } catch (const ExtractionError& e) {
      const std::string message = e.what();
      const bool missing_operator = message.find("missing operator") != std::string::npos;
      const char* unmapped =
          options_.approach == Approach::srl ? "unmapped-frame" : "unmapped-clause";
      result.diagnostics.push_back(
          {Severity::error, missing_operator ? "missing-operator" : unmapped, message});
    }
    item.clause = std::move(clause);
    result.clauses.push_back(std::move(item));
  }
  if (has_errors(result.diagnostics)) return result;

  try {
    result.model = assemble_model(relations);
    result.pseudocode = render_pseudocode(*result.model);
  } catch (const StructureError& e) {
    result.diagnostics.push_back({Severity::error, "invalid-structure", e.what()});
  }
  return result;
}

std::vector<RequirementResult> Pipeline::run(
    std::span<const AnnotatedRequirement> requirements) const {
  BooleanVocabulary vocabulary(lexicon_.antonyms);
  std::vector<RequirementResult> results;
  results.reserve(requirements.size());
  for (const auto& requirement : requirements) results.push_back(formalize(requirement, vocabulary));
  return results;
}

std::string render_report(std::span<const RequirementResult> results) {
  std::string out;
  for (const auto& result : results) {
    out += "# " + result.id + "\n";
    for (std::size_t i = 0; i < result.clauses.size(); ++i) {
      const ClauseResult& item = result.clauses[i];
      out += "clause " + std::to_string(i + 1) + " [" + std::string(to_string(item.clause.keyword)) +
             "] " + item.display + "\n";
      if (item.relation) {
        out += "    -> " + render_relation(*item.relation) + "  (" + item.construct + ")\n";
      }
    }
    for (const auto& d : result.diagnostics) {
      out += std::string(to_string(d.severity)) + " " + d.code + ": " + d.message + "\n";
    }
    out += result.ok() ? "status: ok\n\n" : "status: failed\n\n";
  }
  return out;
}

}  // namespace reqformal
