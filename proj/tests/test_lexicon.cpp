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

#include "reqformal/lexicon.hpp"

#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "support.hpp"

using namespace reqformal;

namespace {

std::optional<Operator> lookup(const std::string& phrase) {
  const auto words = split_words(phrase);
  return lookup_operator(testing::lexicon(), words);
}

struct TableRow {
  const char* quality;
  std::vector<const char*> words;
  Operator op;
};

// The five quality rows of the comparison table, word for word.
const std::vector<TableRow> kComparisonTable = {
    {"Superiority", {"exceed", "pass", "larger", "greater", "over", "above"}, Operator::greater},
    {"Greatness", {"excessive", "high", "extensive", "big", "enlarge"}, Operator::greater},
    {"Inferiority", {"smaller", "less", "not pass", "minor", "be inferior"}, Operator::less},
    {"Smallness", {"below", "decrease", "limited", "at most", "no more than"}, Operator::less},
    {"Sameness", {"equal", "match", "reach", "come to", "amount to"}, Operator::equal},
};

}  // namespace

TEST_SUITE("lexicon") {
  TEST_CASE("every comparison table word maps to its operator") {
    for (const auto& row : kComparisonTable) {
      for (const char* phrase : row.words) {
        CAPTURE(row.quality);
        CAPTURE(phrase);
        const auto words = split_words(phrase);
        const auto match = testing::lexicon().operators.match(words);
        REQUIRE(match.has_value());
        CHECK(match->op == row.op);
        CHECK(match->quality == row.quality);
        CHECK(match->length == words.size());
      }
    }
  }

  TEST_CASE("every shipped entry round-trips through lookup") {
    for (const auto& entry : testing::lexicon().operators.entries()) {
      CAPTURE(join(entry.words, " "));
      CHECK(lookup_operator(testing::lexicon(), entry.words) == entry.op);
    }
  }

  TEST_CASE("worked lookups") {
    CHECK(lookup("larger") == Operator::greater);
    CHECK(lookup("amount to") == Operator::equal);
    const std::vector<std::string> words{"falls", "below"};
    const std::vector<std::string> lemmas{"fall", "below"};
    CHECK(lookup_operator(testing::lexicon(), words, lemmas) == Operator::less);
  }

  TEST_CASE("lemmas match when the surface form does not") {
    const std::vector<std::string> words{"exceeds"};
    const std::vector<std::string> lemmas{"exceed"};
    CHECK_FALSE(lookup_operator(testing::lexicon(), words).has_value());
    CHECK(lookup_operator(testing::lexicon(), words, lemmas) == Operator::greater);
  }

  TEST_CASE("the longest entry wins") {
    CHECK(lookup("no more than") == Operator::less);
    CHECK(lookup("more than") == Operator::greater);
    CHECK(lookup("not less than") == Operator::greater_equal);
    CHECK(lookup("less than") == Operator::less);
    CHECK(lookup("not pass") == Operator::less);
    CHECK(lookup("pass") == Operator::greater);
    const auto words = split_words("is no more than");
    const auto match = testing::lexicon().operators.match(words);
    REQUIRE(match);
    CHECK(match->begin == 1);
    CHECK(match->length == 3);
  }

  TEST_CASE("matching is case-insensitive and finds entries inside longer spans") {
    CHECK(lookup("Larger") == Operator::greater);
    CHECK(lookup("is larger than") == Operator::greater);
  }

  TEST_CASE("non-comparison words give no operator") {
    CHECK_FALSE(lookup("active").has_value());
    CHECK_FALSE(lookup("is").has_value());
    CHECK_FALSE(lookup("").has_value());
  }

  TEST_CASE("operator symbols") {
    for (Operator op : {Operator::less, Operator::greater, Operator::equal, Operator::less_equal,
                        Operator::greater_equal, Operator::not_equal}) {
      CHECK(operator_from_symbol(symbol(op)) == op);
    }
    CHECK(symbol(Operator::greater) == ">");
    CHECK(symbol(Operator::equal) == "==");
    CHECK_FALSE(operator_from_symbol("=>").has_value());
  }

  TEST_CASE("first boolean qualifier is true and its antonym false") {
    BooleanVocabulary vocabulary(testing::lexicon().antonyms);
    CHECK(vocabulary.classify("active").value);
    CHECK_FALSE(vocabulary.classify("inactive").value);
    CHECK(vocabulary.classify("active").value);
    CHECK(vocabulary.assignments().size() == 2);
  }

  TEST_CASE("the order of first occurrence decides") {
    BooleanVocabulary vocabulary(testing::lexicon().antonyms);
    CHECK(vocabulary.classify("inactive").value);
    CHECK_FALSE(vocabulary.classify("active").value);
  }

  TEST_CASE("re-querying a word leaves the vocabulary unchanged") {
    BooleanVocabulary vocabulary(testing::lexicon().antonyms);
    vocabulary.classify("active");
    const auto before = vocabulary.assignments();
    CHECK(vocabulary.classify("Active").value);
    CHECK(vocabulary.assignments() == before);
    CHECK(vocabulary.value("active") == true);
    CHECK_FALSE(vocabulary.value("open").has_value());
  }

  TEST_CASE("a word without antonym entry is true and flagged unknown") {
    BooleanVocabulary vocabulary(testing::lexicon().antonyms);
    const auto result = vocabulary.classify("fluffy");
    CHECK(result.value);
    CHECK_FALSE(result.known);
    CHECK(vocabulary.classify("open").known);
  }

  TEST_CASE("antonyms are symmetric") {
    const auto& antonyms = testing::lexicon().antonyms;
    CHECK(antonyms.antonyms_of("active") == std::vector<std::string>{"inactive"});
    CHECK(antonyms.antonyms_of("inactive") == std::vector<std::string>{"active"});
    CHECK(antonyms.has("closed"));
    CHECK_FALSE(antonyms.has("fluffy"));
  }

  TEST_CASE("stopwords cover determiners, auxiliaries and modals but not prepositions") {
    const auto& lexicon = testing::lexicon();
    for (const char* word : {"the", "a", "an", "shall", "be", "is", "will", "The"}) {
      CAPTURE(word);
      CHECK(lexicon.is_stopword(word));
    }
    for (const char* word : {"of", "with", "temperature"}) {
      CAPTURE(word);
      CHECK_FALSE(lexicon.is_stopword(word));
    }
  }

  TEST_CASE("keyword words") {
    const auto& lexicon = testing::lexicon();
    CHECK(lexicon.keyword_of("if") == Keyword::if_);
    CHECK(lexicon.keyword_of("When") == Keyword::when);
    CHECK(lexicon.keyword_of("while") == Keyword::while_);
    CHECK(lexicon.keyword_of("whenever") == Keyword::if_);
    CHECK(lexicon.keyword_of("until") == Keyword::until);
    CHECK(lexicon.keyword_of("otherwise") == Keyword::else_);
    CHECK(lexicon.keyword_of("else") == Keyword::else_);
    CHECK_FALSE(lexicon.keyword_of("and").has_value());
    CHECK(lexicon.is_coordinator("and"));
    CHECK(lexicon.is_coordinator("or"));
    CHECK(is_conditional(Keyword::until));
    CHECK_FALSE(is_conditional(Keyword::else_));
  }

  TEST_CASE("pronouns, copulas, modals and negations") {
    const auto& lexicon = testing::lexicon();
    CHECK(lexicon.is_pronoun("it"));
    CHECK(lexicon.is_pronoun("They"));
    CHECK(lexicon.is_plural_pronoun("they"));
    CHECK_FALSE(lexicon.is_plural_pronoun("it"));
    CHECK_FALSE(lexicon.is_pronoun("we"));
    CHECK(lexicon.is_copula("be"));
    CHECK(lexicon.copula_signal == "set");
    CHECK(lexicon.is_modal("shall"));
    CHECK(lexicon.is_modal("be"));
    CHECK_FALSE(lexicon.is_modal("close"));
    CHECK(lexicon.is_negation("not"));
    CHECK(lexicon.is_negation("never"));
  }

  TEST_CASE("time expressions") {
    const auto& lexicon = testing::lexicon();
    auto timed = [&](const char* text) {
      const auto words = split_words(text);
      return lexicon.is_time_expression(words);
    };
    CHECK(timed("within 3s"));
    CHECK(timed("after 10 ms"));
    CHECK(timed("for 2 minutes"));
    CHECK_FALSE(timed("when"));
    CHECK_FALSE(timed("when the device temperature exceeds T_Hi"));
  }

  TEST_CASE("bad lexicon files are resource errors") {
    CHECK_THROWS_AS(parse_lexicon("{"), ResourceError);
    CHECK_THROWS_AS(parse_lexicon("[]"), ResourceError);
    CHECK_THROWS_AS(parse_lexicon("{}"), ResourceError);
    CHECK_THROWS_AS(parse_lexicon(R"({"operators": [{"operator": "~", "phrases": ["x"]}]})"),
                    ResourceError);
    CHECK_THROWS_AS(parse_lexicon(R"({"operators": [{"phrases": ["x"]}]})"), ResourceError);
    CHECK_THROWS_AS(parse_lexicon(R"({"operators": [], "antonyms": [["a"]]})"), ResourceError);
    CHECK_THROWS_AS(parse_lexicon(R"({"operators": [], "stopwords": [1]})"), ResourceError);
    CHECK_THROWS_AS(load_lexicon("/nonexistent/lexicon.json"), ResourceError);
  }

  TEST_CASE("a minimal lexicon uses the built-in keyword defaults") {
    const Lexicon lexicon =
        parse_lexicon(R"({"operators": [{"quality": "Q", "operator": ">=", "phrases": ["tops"]}]})");
    const std::vector<std::string> words{"tops"};
    CHECK(lookup_operator(lexicon, words) == Operator::greater_equal);
    CHECK(lexicon.keyword_of("if") == Keyword::if_);
    CHECK(lexicon.keyword_of("otherwise") == Keyword::else_);
    CHECK(lexicon.stopwords.empty());
  }
}
