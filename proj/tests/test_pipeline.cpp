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

#include <string>
#include <vector>

#include "doctest.h"
#include "reqformal/model.hpp"
#include "support.hpp"

using namespace reqformal;

namespace {

const std::vector<std::string> kDepIds{"req01", "req02", "req03", "req04",
                                       "req05", "req06", "req10"};
const std::vector<std::string> kSrlIds{"req01", "req05", "req06", "req07",
                                       "req08", "req09", "req10"};

bool has_code(const Diagnostics& diagnostics, const std::string& code) {
  for (const auto& d : diagnostics) {
    if (d.code == code) return true;
  }
  return false;
}

std::vector<std::string> displays(const RequirementResult& result) {
  std::vector<std::string> out;
  for (const auto& clause : result.clauses) out.push_back(clause.display);
  return out;
}

RequirementResult formalize_tree(const std::string& text, const DepAnnotation& tree) {
  const auto requirement = annotate_requirement({"x1", text, 1}, testing::lexicon(), {tree}, {});
  const Pipeline pipeline(testing::lexicon(), testing::rules());
  BooleanVocabulary vocabulary(testing::lexicon().antonyms);
  return pipeline.formalize(requirement, vocabulary);
}

}  // namespace

TEST_SUITE("pipeline: corpus files") {
  TEST_CASE("blocks are separated by blank lines and may wrap") {
    const auto corpus = parse_corpus("\n# a1\nThe valve shall\nclose.\n\n\n# b-2\nThe pump shall stop.\n");
    REQUIRE(corpus.size() == 2);
    CHECK(corpus[0].id == "a1");
    CHECK(corpus[0].text == "The valve shall close.");
    CHECK(corpus[0].line == 2);
    CHECK(corpus[1].id == "b-2");
    CHECK(corpus[1].line == 7);
  }

  TEST_CASE("an empty corpus has no entries") {
    CHECK(parse_corpus("").empty());
    CHECK(parse_corpus("\n\n").empty());
  }

  TEST_CASE("malformed corpora report the line") {
    auto line_of = [](const char* text) -> std::size_t {
      try {
        parse_corpus(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("The valve shall close.\n") == 1);
    CHECK(line_of("# a\nx.\n\n# a\ny.\n") == 4);
    CHECK(line_of("# a b\nx.\n") == 1);
    CHECK(line_of("#\nx.\n") == 1);
    CHECK(line_of("# a\n\n# b\nx.\n") == 1);
  }

  TEST_CASE("approach names") {
    CHECK(approach_from_string("dep-pos") == Approach::dep_pos);
    CHECK(approach_from_string("srl") == Approach::srl);
    CHECK_FALSE(approach_from_string("DEP").has_value());
    CHECK(to_string(Approach::dep_pos) == "dep-pos");
  }
}

TEST_SUITE("pipeline: annotations") {
  TEST_CASE("missing files are validation errors naming the path") {
    const CorpusEntry entry{"nothere", "The valve shall close.", 1};
    try {
      load_annotated(entry, testing::lexicon(), testing::golden_dir() / "annotations", Approach::srl);
      FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("nothere.srl.json") != std::string::npos);
    }
    CHECK_THROWS_AS(load_annotated(entry, testing::lexicon(),
                                   testing::golden_dir() / "annotations", Approach::dep_pos),
                    ValidationError);
  }

  TEST_CASE("tokens that do not spell the preprocessed text give a warning") {
    const auto tree = testing::tree({"close close VERB root 0", "the the DET det 3",
                                     "valve valve NOUN dobj 1"});
    const auto matching =
        annotate_requirement({"x1", "close the valve", 1}, testing::lexicon(), {tree}, {});
    CHECK_FALSE(has_code(matching.diagnostics, "annotation-mismatch"));
    const auto other =
        annotate_requirement({"x1", "open the door", 1}, testing::lexicon(), {tree}, {});
    CHECK(has_code(other.diagnostics, "annotation-mismatch"));
  }

  TEST_CASE("dependency and frame files must agree on sentences and tokens") {
    const auto tree = testing::tree({"close close VERB root 0", "the the DET det 3",
                                     "valve valve NOUN dobj 1"});
    SrlSentence same{"close the valve", {"close", "the", "valve"}, {}};
    SrlSentence different{"open the valve", {"open", "the", "valve"}, {}};
    CHECK_NOTHROW(annotate_requirement({"x1", "close the valve", 1}, testing::lexicon(), {tree},
                                       {same}));
    CHECK_THROWS_AS(annotate_requirement({"x1", "close the valve", 1}, testing::lexicon(), {tree},
                                         {different}),
                    ValidationError);
    CHECK_THROWS_AS(annotate_requirement({"x1", "close the valve", 1}, testing::lexicon(), {tree},
                                         {same, same}),
                    ValidationError);
  }

  TEST_CASE("preprocessing abbreviates events and strips markup") {
    const auto requirement = testing::golden_requirement("req10", Approach::dep_pos);
    CHECK(requirement.preprocessed_text.find("[") == std::string::npos);
    CHECK(requirement.preprocessed_text.find("E1") != std::string::npos);
    REQUIRE(requirement.events.size() == 1);
    CHECK(requirement.events.entries()[0].name == "Maximum power exceeded");
  }
}

TEST_SUITE("pipeline: golden requirements") {
  TEST_CASE("dependency approach reproduces every expected model") {
    const auto results = testing::run_golden(kDepIds, Approach::dep_pos);
    REQUIRE(results.size() == kDepIds.size());
    for (const auto& result : results) {
      CAPTURE(result.id);
      CHECK(result.ok());
      CHECK(canonical_equal(result.pseudocode, testing::expected_model(result.id)));
    }
  }

  TEST_CASE("role-labeling approach reproduces every expected model") {
    const auto results = testing::run_golden(kSrlIds, Approach::srl);
    REQUIRE(results.size() == kSrlIds.size());
    for (const auto& result : results) {
      CAPTURE(result.id);
      CHECK(result.ok());
      CHECK(canonical_equal(result.pseudocode, testing::expected_model(result.id)));
    }
  }

  TEST_CASE("emitted listings are already in canonical layout") {
    for (const auto& result : testing::run_golden({"req01", "req10"}, Approach::dep_pos)) {
      CHECK(result.pseudocode == testing::expected_model(result.id));
    }
    for (const auto& result : testing::run_golden({"req07", "req08"}, Approach::srl)) {
      CHECK(result.pseudocode == testing::expected_model(result.id));
    }
  }

  TEST_CASE("dependency clause displays restore event names") {
    const auto results = testing::run_golden({"req01", "req02", "req10"}, Approach::dep_pos);
    CHECK(displays(results[0]) ==
          std::vector<std::string>{"The error state is 'E_BROKEN'",
                                   "if the temperature of the battery is larger than t_batt_max"});
    CHECK(displays(results[1])[2] == "the temperature of the battery is smaller than t_max");
    CHECK(has_code(results[1].diagnostics, "pronoun-resolved"));
    CHECK(displays(results[2]) ==
          std::vector<std::string>{"The maximum power shall be limited to G_Max",
                                   "when the device temperature exceeds T_Hi",
                                   "otherwise indicate the error \"Maximum power exceeded\"",
                                   "until the device temperature falls below T_Norm"});
  }

  TEST_CASE("role-labeling clause displays and constructs") {
    const auto results = testing::run_golden({"req07"}, Approach::srl);
    const auto& result = results[0];
    REQUIRE(result.clauses.size() == 3);
    CHECK(result.clauses[0].construct == "V_ARG1(ARG2)");
    CHECK(result.clauses[1].construct == "V_ARG1()");
    CHECK(result.clauses[2].construct == "ARG0_op(V)_ARG1");
    CHECK(result.clauses[2].display == "when the device temperature exceeds T_Hi");
  }

  TEST_CASE("a condition without an operator fails the requirement") {
    const auto result = formalize_tree(
        "close the valve if driver presses button.",
        testing::tree({"close close VERB root 0", "the the DET det 3", "valve valve NOUN dobj 1",
                       "if if SCONJ mark 6", "driver driver NOUN nsubj 6",
                       "presses press VERB advcl 1", "button button NOUN dobj 6",
                       ". . PUNCT punct 1"}));
    CHECK_FALSE(result.ok());
    CHECK(has_code(result.diagnostics, "missing-operator"));
    CHECK_FALSE(result.model.has_value());
  }

  TEST_CASE("a frame that fits no construct fails as unmapped") {
    SrlFrame frame;
    frame.verb = {4, "wait", "wait"};
    frame.arguments = {{"ARG0", {1, 2}, "the system"}, {"ARGM-MOD", {3, 3}, "shall"}};
    SrlSentence sentence{"the system shall wait", {"the", "system", "shall", "wait"}, {frame}};
    const auto requirement = annotate_requirement({"x2", "the system shall wait", 1},
                                                  testing::lexicon(), {}, {sentence});
    PipelineOptions options;
    options.approach = Approach::srl;
    const Pipeline pipeline(testing::lexicon(), testing::rules(), options);
    BooleanVocabulary vocabulary(testing::lexicon().antonyms);
    const auto result = pipeline.formalize(requirement, vocabulary);
    CHECK_FALSE(result.ok());
    CHECK(has_code(result.diagnostics, "unmapped-frame"));
  }

  TEST_CASE("a statement without a condition") {
    const auto result = formalize_tree(
        "close the valve.", testing::tree({"close close VERB root 0", "the the DET det 3",
                                           "valve valve NOUN dobj 1", ". . PUNCT punct 1"}));
    CHECK(result.ok());
    CHECK(result.pseudocode == "statement( close_valve() )\n");
  }
}

TEST_SUITE("pipeline: report") {
  TEST_CASE("the report lists clauses, relations, diagnostics and status") {
    const auto results = testing::run_golden({"req04"}, Approach::dep_pos);
    const std::string report = render_report(results);
    CHECK(report.starts_with("# req04\nclause 1 [none] The error state is 'E_BROKEN'\n"
                             "    -> set_error_state(E_BROKEN)  (predicate_subject(object))\n"));
    CHECK(report.find("clause 3 [if] if the temperature of the battery is less than t_max\n") !=
          std::string::npos);
    CHECK(report.find("warning between-assumption: ") != std::string::npos);
    CHECK(report.ends_with("status: ok\n\n"));
  }

  TEST_CASE("failed requirements are marked") {
    RequirementResult failed;
    failed.id = "x9";
    failed.diagnostics.push_back({Severity::error, "no-clauses", "no clause survived decomposition"});
    CHECK(render_report(std::vector<RequirementResult>{failed}) ==
          "# x9\nerror no-clauses: no clause survived decomposition\nstatus: failed\n\n");
  }
}
