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

// reqformal command line: formalize a corpus, check it against expected
// models, or run the external annotator.
//
// Exit codes: 0 success, 1 requirement errors or check failures, 2 fatal.

#include <spawn.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reqformal/annotations.hpp"
#include "reqformal/lexicon.hpp"
#include "reqformal/mapping_rules.hpp"
#include "reqformal/model.hpp"
#include "reqformal/pipeline.hpp"

extern char** environ;

namespace fs = std::filesystem;
using namespace reqformal;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kFatal = 2;
constexpr const char* kAnnotatorVariable = "REQFORMAL_ANNOTATOR";

struct RunOptions {
  std::string approach = "dep-pos";
  std::string corpus;
  std::string annotations;
  std::string lexicon = std::string(REQFORMAL_DATA_DIR) + "/lexicon.json";
  std::string rules = std::string(REQFORMAL_DATA_DIR) + "/rules.json";
  std::string out;
  std::string expected;
  bool strict = false;
  bool number_check = false;
};

struct AnnotateOptions {
  std::string mode = "both";
  std::string input;
  std::string out;
};

void add_run_options(CLI::App& command, RunOptions& options) {
  command.add_option("--approach", options.approach, "Extraction approach")
      ->check(CLI::IsMember({"dep-pos", "srl"}))
      ->capture_default_str();
  command.add_option("--corpus", options.corpus, "Requirement corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  command.add_option("--annotations", options.annotations,
                     "Directory with <id>.conllu / <id>.srl.json (default: <corpus dir>/annotations)");
  command.add_option("--lexicon", options.lexicon, "Lexicon JSON")->capture_default_str();
  command.add_option("--rules", options.rules, "Mapping rule JSON")->capture_default_str();
  command.add_flag("--strict", options.strict, "Treat warnings as failures");
  command.add_flag("--number-check", options.number_check,
                   "Bind singular pronouns to singular antecedents only, plural to plural");
}

bool write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return static_cast<bool>(out);
}

// Everything a formalize or check run produces.
struct RunOutcome {
  std::vector<RequirementResult> results;
};

RunOutcome run_corpus(const RunOptions& options) {
  const Lexicon lexicon = load_lexicon(options.lexicon);
  RuleSet rules = load_rules(options.rules);
  const auto corpus = load_corpus(options.corpus);
  const Approach approach = *approach_from_string(options.approach);
  const fs::path annotation_dir = options.annotations.empty()
                                      ? fs::path(options.corpus).parent_path() / "annotations"
                                      : fs::path(options.annotations);

  PipelineOptions pipeline_options;
  pipeline_options.approach = approach;
  pipeline_options.pronouns.number_check = options.number_check;
  const Pipeline pipeline(lexicon, std::move(rules), pipeline_options);

  // Annotation problems stay with their requirement; the rest of the corpus
  // still runs in document order with one boolean vocabulary.
  BooleanVocabulary vocabulary(lexicon.antonyms);
  RunOutcome outcome;
  for (const auto& entry : corpus) {
    try {
      const auto requirement = load_annotated(entry, lexicon, annotation_dir, approach);
      outcome.results.push_back(pipeline.formalize(requirement, vocabulary));
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      RequirementResult failed;
      failed.id = entry.id;
      failed.diagnostics.push_back({Severity::error, "annotation", e.what()});
      outcome.results.push_back(std::move(failed));
    }
  }
  return outcome;
}

bool passes(const RequirementResult& result, bool strict) {
  return result.ok() && !(strict && has_warnings(result.diagnostics));
}

int write_outputs(const RunOutcome& outcome, const fs::path& out) {
  fs::create_directories(out);
  for (const auto& result : outcome.results) {
    if (!result.model) continue;
    if (!write_file(out / (result.id + ".model.txt"), result.pseudocode) ||
        !write_file(out / (result.id + ".model.json"), model_to_json(*result.model).dump(2) + "\n")) {
      std::cerr << "error: cannot write models for " << result.id << " in " << out << "\n";
      return kFatal;
    }
  }
  if (!write_file(out / "diagnostics.txt", render_report(outcome.results))) {
    std::cerr << "error: cannot write " << (out / "diagnostics.txt") << "\n";
    return kFatal;
  }
  return kOk;
}

int formalize_command(const RunOptions& options) {
  const RunOutcome outcome = run_corpus(options);
  if (const int status = write_outputs(outcome, options.out); status != kOk) return status;

  std::size_t passed = 0;
  for (const auto& result : outcome.results) {
    const bool ok = passes(result, options.strict);
    passed += ok ? 1 : 0;
    std::cout << (ok ? "ok     " : "failed ") << result.id << "\n";
  }
  std::cout << "formalized " << passed << "/" << outcome.results.size() << " requirements; see "
            << (fs::path(options.out) / "diagnostics.txt").string() << "\n";
  return passed == outcome.results.size() ? kOk : kFailed;
}

std::string first_error(const RequirementResult& result) {
  for (const auto& d : result.diagnostics) {
    if (d.severity == Severity::error) return d.code + ": " + d.message;
  }
  for (const auto& d : result.diagnostics) {
    if (d.severity == Severity::warning) return "strict mode: " + d.code + ": " + d.message;
  }
  return "no model";
}

int check_command(const RunOptions& options) {
  const RunOutcome outcome = run_corpus(options);
  if (!options.out.empty()) {
    if (const int status = write_outputs(outcome, options.out); status != kOk) return status;
  }

  std::size_t passed = 0;
  for (const auto& result : outcome.results) {
    const fs::path expected_path = fs::path(options.expected) / (result.id + ".model.txt");
    std::string reason;
    if (!fs::exists(expected_path)) {
      reason = "no expected model " + expected_path.string();
    } else if (!passes(result, options.strict)) {
      reason = first_error(result);
    } else {
      try {
        if (!canonical_equal(read_file(expected_path), result.pseudocode)) {
          reason = "model differs\n  expected:\n" + read_file(expected_path) + "  actual:\n" +
                   result.pseudocode;
        }
      } catch (const ParseError& e) {
        reason = "expected model does not parse (line " + std::to_string(e.line()) +
                 "): " + e.what();
      }
    }
    if (reason.empty()) {
      ++passed;
      std::cout << "PASS " << result.id << "\n";
    } else {
      std::cout << "FAIL " << result.id << ": " << reason << "\n";
    }
  }
  std::cout << "summary: " << passed << "/" << outcome.results.size() << " passed\n";
  return passed == outcome.results.size() ? kOk : kFailed;
}

std::vector<std::string> split_command(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t') {
      if (!current.empty()) parts.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) parts.push_back(std::move(current));
  return parts;
}

int spawn_and_wait(const std::vector<std::string>& command) {
  std::vector<char*> argv;
  for (const auto& part : command) argv.push_back(const_cast<char*>(part.c_str()));
  argv.push_back(nullptr);
  pid_t pid = 0;
  if (posix_spawnp(&pid, argv[0], nullptr, nullptr, argv.data(), environ) != 0) return -1;
  int status = 0;
  if (waitpid(pid, &status, 0) < 0) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int annotate_command(const AnnotateOptions& options) {
  const char* annotator = std::getenv(kAnnotatorVariable);
  if (annotator == nullptr || std::string(annotator).empty()) {
    std::cerr << "no annotator configured. Set " << kAnnotatorVariable
              << " to the adapter command, or place <id>.conllu and <id>.srl.json files in "
              << options.out << " yourself.\n";
    return kFatal;
  }
  std::vector<std::string> command = split_command(annotator);
  for (const char* part : {"--mode", options.mode.c_str(), "--in", options.input.c_str(), "--out",
                           options.out.c_str()}) {
    command.emplace_back(part);
  }
  const int status = spawn_and_wait(command);
  if (status != 0) {
    std::cerr << "annotator '" << annotator << "' failed with status " << status << "\n";
    return kFatal;
  }

  // The adapter's files must pass the same validators as hand-made ones.
  const auto corpus = load_corpus(options.input);
  std::size_t invalid = 0;
  auto validate = [&](const fs::path& path, bool conllu) {
    try {
      const std::string content = read_file(path);
      if (conllu) {
        parse_conllu(content);
      } else {
        parse_srl_json(content);
      }
      std::cout << "valid   " << path.string() << "\n";
    } catch (const Error& e) {
      ++invalid;
      std::cout << "invalid " << path.string() << ": " << e.what() << "\n";
    }
  };
  for (const auto& entry : corpus) {
    if (options.mode != "srl") validate(fs::path(options.out) / (entry.id + ".conllu"), true);
    if (options.mode != "dep-pos") validate(fs::path(options.out) / (entry.id + ".srl.json"), false);
  }
  return invalid == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formalize natural-language requirements into pseudocode models"};
  app.require_subcommand(1);

  RunOptions formalize_options;
  auto* formalize = app.add_subcommand("formalize", "Write <id>.model.txt/.json for a corpus");
  add_run_options(*formalize, formalize_options);
  formalize->add_option("--out", formalize_options.out, "Output directory")->required();

  RunOptions check_options;
  auto* check = app.add_subcommand("check", "Compare emitted models with expected ones");
  add_run_options(*check, check_options);
  check->add_option("--expected", check_options.expected, "Directory of <id>.model.txt")
      ->required()
      ->check(CLI::ExistingDirectory);
  check->add_option("--out", check_options.out, "Also write outputs here");

  AnnotateOptions annotate_options;
  auto* annotate = app.add_subcommand(
      "annotate", std::string("Run the external annotator named by ") + kAnnotatorVariable);
  annotate->add_option("--mode", annotate_options.mode, "Annotations to produce")
      ->check(CLI::IsMember({"dep-pos", "srl", "both"}))
      ->capture_default_str();
  annotate->add_option("--in", annotate_options.input, "Requirement corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  annotate->add_option("--out", annotate_options.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kFatal;
  }

  try {
    if (formalize->parsed()) return formalize_command(formalize_options);
    if (check->parsed()) return check_command(check_options);
    return annotate_command(annotate_options);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFatal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFatal;
  }
}
