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

// Runs the reqformal executable end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "reqformal/lexicon.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string output;  // stdout and stderr together
};

fs::path work_dir(const std::string& name) {
  const fs::path dir = fs::path(REQFORMAL_TEST_WORK_DIR) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string quote(const fs::path& path) { return "'" + path.string() + "'"; }

Run run(const std::string& arguments, const std::string& environment = "") {
  const fs::path log = fs::path(REQFORMAL_TEST_WORK_DIR) / "last_run.log";
  fs::create_directories(log.parent_path());
  const std::string command = environment + " " + quote(REQFORMAL_CLI) + " " + arguments + " > " +
                              quote(log) + " 2>&1";
  const int raw = std::system(command.c_str());
  Run result;
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.output = reqformal::read_file(log);
  return result;
}

void write(const fs::path& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
}

std::string golden(const char* name) { return quote(testing::golden_dir() / name); }

std::string check_args(const char* approach, const char* corpus) {
  return std::string("check --approach ") + approach + " --corpus " + golden(corpus) +
         " --expected " + golden("expected");
}

bool contains(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli: formalize and check") {
  TEST_CASE("check passes on both golden corpora") {
    const auto dep = run(check_args("dep-pos", "dep_pos.corpus"));
    CAPTURE(dep.output);
    CHECK(dep.status == 0);
    CHECK(contains(dep.output, "PASS req04"));
    CHECK(contains(dep.output, "summary: 7/7 passed"));

    const auto srl = run(check_args("srl", "srl.corpus"));
    CAPTURE(srl.output);
    CHECK(srl.status == 0);
    CHECK(contains(srl.output, "PASS req07"));
    CHECK(contains(srl.output, "summary: 7/7 passed"));
  }

  TEST_CASE("formalize writes models and the diagnostics report") {
    const fs::path out = work_dir("formalize") / "out";
    const auto result =
        run("formalize --approach srl --corpus " + golden("srl.corpus") + " --out " + quote(out));
    CAPTURE(result.output);
    CHECK(result.status == 0);
    CHECK(reqformal::read_file(out / "req07.model.txt") == testing::expected_model("req07"));
    CHECK(fs::exists(out / "req07.model.json"));
    CHECK(contains(reqformal::read_file(out / "diagnostics.txt"), "# req09"));
    CHECK(contains(result.output, "formalized 7/7"));
  }

  TEST_CASE("a flipped operator fails the named requirement") {
    const fs::path dir = work_dir("flipped");
    fs::copy(testing::golden_dir() / "expected", dir / "expected");
    write(dir / "expected" / "req01.model.txt",
          "if( temperature_of_battery() < t_batt_max )\n    then( set_error_state(E_BROKEN) )\n");
    const auto result = run("check --approach dep-pos --corpus " + golden("dep_pos.corpus") +
                            " --expected " + quote(dir / "expected"));
    CAPTURE(result.output);
    CHECK(result.status == 1);
    CHECK(contains(result.output, "FAIL req01: model differs"));
    CHECK(contains(result.output, "PASS req02"));
    CHECK(contains(result.output, "summary: 6/7 passed"));
  }

  TEST_CASE("a missing expected model is a failure") {
    const fs::path dir = work_dir("missing_expected");
    fs::create_directories(dir / "expected");
    fs::copy_file(testing::golden_dir() / "expected" / "req01.model.txt",
                  dir / "expected" / "req01.model.txt");
    write(dir / "one.corpus", "# req01\n" + testing::golden_requirement("req01", reqformal::Approach::srl).raw_text +
                                  "\n\n# req05\n" +
                                  testing::golden_requirement("req05", reqformal::Approach::srl).raw_text + "\n");
    const auto result = run("check --approach srl --corpus " + quote(dir / "one.corpus") +
                            " --annotations " + golden("annotations") + " --expected " +
                            quote(dir / "expected"));
    CAPTURE(result.output);
    CHECK(result.status == 1);
    CHECK(contains(result.output, "PASS req01"));
    CHECK(contains(result.output, "FAIL req05: no expected model"));
  }

  TEST_CASE("an empty corpus checks trivially") {
    const fs::path dir = work_dir("empty");
    fs::create_directories(dir / "expected");
    write(dir / "empty.corpus", "");
    const auto result = run("check --corpus " + quote(dir / "empty.corpus") + " --expected " +
                            quote(dir / "expected"));
    CAPTURE(result.output);
    CHECK(result.status == 0);
    CHECK(contains(result.output, "summary: 0/0 passed"));
  }

  TEST_CASE("a missing annotation fails only its requirement") {
    const fs::path dir = work_dir("missing_annotation");
    write(dir / "two.corpus", "# req01\n" +
                                  testing::golden_requirement("req01", reqformal::Approach::srl).raw_text +
                                  "\n\n# ghost\nThe ghost shall vanish.\n");
    const auto result = run("formalize --approach srl --corpus " + quote(dir / "two.corpus") +
                            " --annotations " + golden("annotations") + " --out " + quote(dir / "out"));
    CAPTURE(result.output);
    CHECK(result.status == 1);
    CHECK(contains(result.output, "ok     req01"));
    CHECK(contains(result.output, "failed ghost"));
    CHECK(fs::exists(dir / "out" / "req01.model.txt"));
    CHECK(contains(reqformal::read_file(dir / "out" / "diagnostics.txt"),
                   "error annotation: missing annotation"));
  }

  TEST_CASE("strict mode turns warnings into failures") {
    const auto relaxed = run(check_args("dep-pos", "dep_pos.corpus"));
    const auto strict = run(check_args("dep-pos", "dep_pos.corpus") + " --strict");
    CAPTURE(strict.output);
    CHECK(relaxed.status == 0);
    CHECK(strict.status == 1);
    CHECK(contains(strict.output, "FAIL req04: strict mode: between-assumption"));
  }
}

TEST_SUITE("cli: fatal errors") {
  TEST_CASE("a broken lexicon is fatal") {
    const fs::path dir = work_dir("bad_lexicon");
    write(dir / "lexicon.json", "{ not json");
    const auto result = run(check_args("dep-pos", "dep_pos.corpus") + " --lexicon " +
                            quote(dir / "lexicon.json"));
    CAPTURE(result.output);
    CHECK(result.status == 2);
    CHECK(contains(result.output, "error:"));
  }

  TEST_CASE("usage errors are fatal") {
    CHECK(run("").status == 2);
    CHECK(run("check --corpus " + golden("dep_pos.corpus")).status == 2);
    CHECK(run("formalize --approach tree --corpus " + golden("dep_pos.corpus") + " --out x").status == 2);
    CHECK(run("explode").status == 2);
    CHECK(run("--help").status == 0);
  }

  TEST_CASE("a malformed corpus is fatal") {
    const fs::path dir = work_dir("bad_corpus");
    write(dir / "bad.corpus", "no header here\n");
    const auto result = run("formalize --corpus " + quote(dir / "bad.corpus") + " --out " +
                            quote(dir / "out"));
    CHECK(result.status == 2);
  }
}

TEST_SUITE("cli: annotate") {
  const std::string kFake = (testing::fixture_dir() / "fake_annotator.sh").string();

  std::string two_requirements(const fs::path& dir) {
    const fs::path corpus = dir / "in.corpus";
    write(corpus, "# req01\n" + testing::golden_requirement("req01", reqformal::Approach::srl).raw_text +
                      "\n\n# req05\n" +
                      testing::golden_requirement("req05", reqformal::Approach::srl).raw_text + "\n");
    return quote(corpus);
  }

  TEST_CASE("without an annotator the command explains the alternatives") {
    const fs::path dir = work_dir("annotate_none");
    const auto result = run("annotate --in " + two_requirements(dir) + " --out " + quote(dir / "a"),
                            "env -u REQFORMAL_ANNOTATOR");
    CAPTURE(result.output);
    CHECK(result.status == 2);
    CHECK(contains(result.output, "REQFORMAL_ANNOTATOR"));
  }

  TEST_CASE("adapter output is validated") {
    const fs::path dir = work_dir("annotate_ok");
    const auto result = run("annotate --mode both --in " + two_requirements(dir) + " --out " +
                                quote(dir / "a"),
                            "REQFORMAL_ANNOTATOR='" + kFake + "'");
    CAPTURE(result.output);
    CHECK(result.status == 0);
    CHECK(contains(result.output, "valid   "));
    CHECK_FALSE(contains(result.output, "invalid"));
    CHECK(fs::exists(dir / "a" / "req05.srl.json"));
    CHECK(fs::exists(dir / "a" / "req01.conllu"));
  }

  TEST_CASE("invalid adapter output fails the command") {
    const fs::path dir = work_dir("annotate_bad");
    const auto result = run("annotate --mode dep-pos --in " + two_requirements(dir) + " --out " +
                                quote(dir / "a"),
                            "REQFORMAL_ANNOTATOR='" + kFake + " --broken'");
    CAPTURE(result.output);
    CHECK(result.status == 1);
    CHECK(contains(result.output, "invalid "));
    CHECK_FALSE(fs::exists(dir / "a" / "req01.srl.json"));
  }

  TEST_CASE("a crashing adapter is fatal") {
    const fs::path dir = work_dir("annotate_crash");
    const auto result = run("annotate --in " + two_requirements(dir) + " --out " + quote(dir / "a"),
                            "REQFORMAL_ANNOTATOR=false");
    CHECK(result.status == 2);
  }
}
