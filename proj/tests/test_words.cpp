// Copyright 2026 The shiftcover Authors
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

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "shiftcover/words.hpp"

namespace sc = shiftcover;
using testing_support::str;
using testing_support::strings;

namespace {

sc::WordList list(std::initializer_list<const char*> words) {
  sc::WordList out;
  for (const char* w : words) out.push_back(sc::Word::parse(w));
  sc::normalize(out);
  return out;
}

TEST(Word, ParseAndPrintRoundTrip) {
  sc::Word w = sc::Word::parse("01a9");
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w[2].id, 10);
  EXPECT_EQ(w.str(), "01a9");
  EXPECT_THROW(sc::Word::parse("0-1"), sc::ConfigError);
}

TEST(Word, SlicesAndAffixes) {
  sc::Word w = sc::Word::parse("010011");
  EXPECT_EQ(w.prefix(2).str(), "01");
  EXPECT_EQ(w.suffix(3).str(), "011");
  EXPECT_EQ(w.slice(1, 4).str(), "100");
  EXPECT_EQ(w.drop(4).str(), "11");
  EXPECT_TRUE(w.starts_with(sc::Word::parse("010")));
  EXPECT_TRUE(w.ends_with(sc::Word::parse("11")));
  EXPECT_FALSE(w.ends_with(sc::Word::parse("10")));
  EXPECT_THROW(w.prefix(7), sc::HorizonError);
}

TEST(Alphabet, RejectsBadSizes) {
  EXPECT_THROW(sc::Alphabet(0), sc::ConfigError);
  EXPECT_THROW(sc::Alphabet(37), sc::ConfigError);
  EXPECT_EQ(sc::Alphabet(36).size(), 36u);
}

TEST(Factors, SlidingWindow) {
  sc::Word w = sc::Word::parse("01001010");
  EXPECT_EQ(strings(sc::factors(w, 3)),
            (oracle::StringSet{"010", "100", "001", "101"}));
  EXPECT_EQ(strings(sc::factors(w, 3)), oracle::factors("01001010", 3));
}

TEST(Factors, EmptyAndConstant) {
  EXPECT_EQ(strings(sc::factors(sc::Word::parse("0110"), 0)),
            oracle::StringSet{""});
  EXPECT_EQ(strings(sc::factors(sc::Word::parse("0000"), 2)),
            oracle::StringSet{"00"});
  EXPECT_TRUE(sc::factors(sc::Word::parse("01"), 3).empty());
}

TEST(Factors, MatchesOracleOnLongText) {
  const std::string text = testing_support::thue_morse_text(700);
  sc::Word w = sc::Word::parse(text);
  for (std::size_t n = 0; n <= 12; ++n)
    EXPECT_EQ(strings(sc::factors(w, n)), oracle::factors(text, n)) << n;
}

sc::LanguageTable table_from_text(const std::string& text, std::size_t N) {
  std::vector<sc::WordList> by(N + 1);
  sc::Word w = sc::Word::parse(text);
  for (std::size_t n = 0; n <= N; ++n) by[n] = sc::factors(w, n);
  return sc::LanguageTable(sc::Alphabet(2), N, by);
}

TEST(ValidateTable, FibonacciFactorsAreClean) {
  sc::LanguageTable t =
      table_from_text(testing_support::fibonacci_text(4000), 16);
  EXPECT_TRUE(sc::validate_table(t).ok());
}

TEST(ValidateTable, ForbiddenBlockBreaksFactoriality) {
  // Golden-mean words up to length 3, with 110 smuggled in.
  std::vector<sc::WordList> by(4);
  by[1] = list({"0", "1"});
  by[2] = list({"00", "01", "10"});
  by[3] = list({"000", "001", "010", "100", "101", "110"});
  sc::LanguageTable t(sc::Alphabet(2), 3, by);
  sc::ValidationReport r = sc::validate_table(t);
  EXPECT_FALSE(r.ok());
  EXPECT_GE(r.count(sc::Violation::Kind::kFactoriality), 1u);
  bool found = false;
  for (const auto& v : r.violations) found = found || v.word.str() == "110";
  EXPECT_TRUE(found);
}

TEST(ValidateTable, EmptyLevelBreaksExtension) {
  std::vector<sc::WordList> by(3);
  by[1] = list({"0", "1"});
  sc::LanguageTable t(sc::Alphabet(2), 2, by);
  sc::ValidationReport r = sc::validate_table(t);
  EXPECT_EQ(r.count(sc::Violation::Kind::kRightExtension), 2u);
  EXPECT_EQ(r.count(sc::Violation::Kind::kLeftExtension), 2u);
}

TEST(ValidateTable, ForeignSymbol) {
  std::vector<sc::WordList> by(2);
  by[1] = list({"0", "2"});
  sc::LanguageTable t(sc::Alphabet(2), 1, by);
  EXPECT_EQ(sc::validate_table(t).count(sc::Violation::Kind::kAlphabet), 1u);
}

TEST(LanguageTable, MembershipAndHorizon) {
  sc::LanguageTable t =
      table_from_text(testing_support::fibonacci_text(4000), 10);
  EXPECT_TRUE(t.contains(sc::Word::parse("0100")));
  EXPECT_FALSE(t.contains(sc::Word::parse("11")));
  EXPECT_TRUE(t.contains(sc::Word{}));
  EXPECT_THROW(t.contains(sc::Word::parse("01001010010")), sc::HorizonError);
  EXPECT_THROW(t.words(11), sc::HorizonError);
  EXPECT_EQ(t.count(0), 1u);
}

TEST(Extensions, FullShiftAdmitsEverything) {
  sc::LanguageTable t = table_from_text("0000100110101111000", 4);  // de Bruijn
  ASSERT_EQ(t.count(3), 8u);
  for (const sc::Word& w : t.words(2)) {
    EXPECT_EQ(str(sc::left_extensions(t, w)), "01");
    EXPECT_EQ(str(sc::right_extensions(t, w)), "01");
  }
}

TEST(Extensions, Fibonacci) {
  sc::LanguageTable t =
      table_from_text(testing_support::fibonacci_text(4000), 12);
  EXPECT_EQ(str(sc::left_extensions(t, sc::Word::parse("0100101"))), "01");
  EXPECT_EQ(str(sc::left_extensions(t, sc::Word::parse("00"))), "1");
  EXPECT_EQ(str(sc::right_extensions(t, sc::Word::parse("1"))), "0");
  EXPECT_THROW(sc::left_extensions(t, sc::Word::parse("010010100100")),
               sc::HorizonError);
}

TEST(Period, SmallestPeriod) {
  EXPECT_EQ(sc::smallest_period(sc::Word::parse("010010")), 3u);
  EXPECT_EQ(sc::smallest_period(sc::Word::parse("0000")), 1u);
  EXPECT_EQ(sc::smallest_period(sc::Word::parse("0110")), 3u);
  EXPECT_EQ(sc::smallest_period(sc::Word{}), 0u);
  EXPECT_TRUE(sc::looks_periodic(sc::Word::parse("010101")));
  EXPECT_FALSE(sc::looks_periodic(sc::Word::parse("01001010")));
}

}  // namespace
