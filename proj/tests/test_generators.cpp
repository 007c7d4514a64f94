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
#include "shiftcover/generators.hpp"

namespace sc = shiftcover;
using namespace testing_support;

namespace {

TEST(Substitution, FibonacciPrefix) {
  auto fib = sc::SubstitutionSystem::from_strings({"01", "0"});
  EXPECT_EQ(sc::substitution_prefix(fib, 8).str(), "01001010");
  EXPECT_EQ(sc::substitution_prefix(fib, 3000).str(), fibonacci_text(3000));
}

TEST(Substitution, ThueMorsePrefix) {
  auto tm = sc::SubstitutionSystem::from_strings({"01", "10"});
  EXPECT_EQ(sc::substitution_prefix(tm, 8).str(), "01101001");
  EXPECT_EQ(sc::substitution_prefix(tm, 4096).str(), thue_morse_text(4096));
}

TEST(Substitution, ConstantRuleIsTaggedPeriodic) {
  auto c = sc::SubstitutionSystem::from_strings({"0"});
  EXPECT_EQ(sc::substitution_prefix(c, 5).str(), "00000");
  sc::GeneratorTags tags = sc::classify(c);
  EXPECT_TRUE(tags.periodic);
  EXPECT_FALSE(tags.theorem_ready());
  EXPECT_FALSE(tags.notes.empty());
}

TEST(Substitution, Rejections) {
  EXPECT_THROW(sc::validate(sc::SubstitutionSystem::from_strings({"10", "0"})),
               sc::ConstructionError);
  EXPECT_THROW(sc::validate(sc::SubstitutionSystem::from_strings({"02", "0"})),
               sc::ConfigError);
  EXPECT_THROW(sc::validate(sc::SubstitutionSystem::from_strings({"01", ""})),
               sc::ConfigError);
}

TEST(Substitution, PrimitivityTag) {
  EXPECT_TRUE(sc::classify(fibonacci()).primitive);
  // 1 -> 1 never reaches 0.
  auto np = sc::SubstitutionSystem::from_strings({"01", "1"});
  EXPECT_FALSE(sc::classify(np).primitive);
}

TEST(Sturmian, StandardWordRecursion) {
  EXPECT_EQ(sc::standard_sturmian_prefix(golden_sturmian(), 8).str(),
            "01001010");
  EXPECT_EQ(sc::standard_sturmian_prefix(golden_sturmian(), 2000).str(),
            fibonacci_text(2000));
  sc::SturmianSpec two;
  two.cf_digits = {2};
  two.cf_period = {1};
  EXPECT_EQ(sc::standard_sturmian_prefix(two, 3).str(), "001");
  EXPECT_TRUE(sc::standard_sturmian_prefix(golden_sturmian(), 0).empty());
}

TEST(Sturmian, RationalSlopeIsPeriodic) {
  sc::SturmianSpec rational;
  rational.cf_digits = {1, 2};
  EXPECT_TRUE(sc::classify(rational).periodic);
  EXPECT_THROW(sc::standard_sturmian_prefix(rational, 500), sc::HorizonError);
}

TEST(Mechanical, InterceptAlphaGivesStandardWord) {
  sc::SturmianSpec s = golden_sturmian(sc::Intercept{{0, 1}, {1, 1}});
  EXPECT_EQ(sc::mechanical_word(s, 8).str(),
            sc::standard_sturmian_prefix(golden_sturmian(), 8).str());
  EXPECT_EQ(sc::mechanical_word(s, 400).str(),
            sc::standard_sturmian_prefix(golden_sturmian(), 400).str());
}

TEST(Mechanical, MatchesFloatingOracleAtSmallLengths) {
  const long double a = golden_alpha();
  sc::SturmianSpec zero = golden_sturmian(sc::Intercept{{0, 1}, {0, 1}});
  EXPECT_EQ(sc::mechanical_word(zero, 2).str(), "00");
  EXPECT_EQ(sc::mechanical_word(zero, 40).str(),
            oracle::mechanical(a, 0.0L, 40));
  sc::SturmianSpec half = golden_sturmian(sc::Intercept{{1, 2}, {0, 1}});
  EXPECT_EQ(sc::mechanical_word(half, 40).str(),
            oracle::mechanical(a, 0.5L, 40));
}

TEST(Mechanical, OffOrbitRayStaysInTheLanguage) {
  sc::SturmianSpec half = golden_sturmian(sc::Intercept{{1, 2}, {0, 1}});
  const std::string z = sc::mechanical_word(half, 20).str();
  const std::string fib = fibonacci_text(4000);
  for (std::size_t n = 1; n <= 10; ++n)
    for (const std::string& f : oracle::factors(z, n))
      EXPECT_TRUE(oracle::factors(fib, n).count(f)) << f;
}

TEST(Toeplitz, FilledLimit) {
  auto p = sc::ToeplitzSpec::parse("01?");
  EXPECT_EQ(p.hole_count(), 1u);
  EXPECT_EQ(p.str(), "01?");
  EXPECT_EQ(sc::toeplitz_word(p, 6).str(), oracle::toeplitz("01?", 6));
  EXPECT_EQ(sc::toeplitz_word(p, 6).str(), "010011");
  EXPECT_EQ(sc::toeplitz_word(p, 729).str(), oracle::toeplitz("01?", 729));
}

TEST(Toeplitz, PeriodDoubling) {
  auto pd = sc::ToeplitzSpec::parse("010?");
  EXPECT_EQ(sc::toeplitz_word(pd, 256).str(), oracle::toeplitz("010?", 256));
  EXPECT_FALSE(sc::classify(pd).periodic);
}

TEST(Toeplitz, SingleFixedLetterFillsWithItself) {
  auto p = sc::ToeplitzSpec::parse("0?");
  EXPECT_EQ(sc::toeplitz_word(p, 8).str(), oracle::toeplitz("0?", 8));
  EXPECT_EQ(sc::toeplitz_word(p, 8).str(), "00000000");
  EXPECT_TRUE(sc::classify(p).periodic);
}

TEST(Toeplitz, Rejections) {
  EXPECT_THROW(sc::validate(sc::ToeplitzSpec::parse("01")),
               sc::ConstructionError);
  EXPECT_THROW(sc::validate(sc::ToeplitzSpec::parse("?0")),
               sc::ConstructionError);
  EXPECT_THROW(sc::validate(sc::ToeplitzSpec::parse("??")),
               sc::ConstructionError);
}

TEST(Matrix, Rejections) {
  EXPECT_THROW(sc::validate(sc::MatrixSFT{{{1, 1}, {0, 0}}}), sc::ConfigError);
  EXPECT_THROW(sc::validate(sc::MatrixSFT{{{1, 2}, {1, 1}}}), sc::ConfigError);
  EXPECT_THROW(sc::validate(sc::MatrixSFT{{{1, 1}}}), sc::ConfigError);
  EXPECT_FALSE(sc::classify(golden_mean()).minimal_source);
}

TEST(Matrix, CanonicalPathIsAWalk) {
  sc::Word w = sc::sft_canonical_path(std::get<sc::MatrixSFT>(golden_mean()),
                                      500);
  ASSERT_EQ(w.size(), 500u);
  EXPECT_EQ(w.str().find("11"), std::string::npos);
  EXPECT_FALSE(sc::looks_periodic(w));
}

TEST(Language, FibonacciComplexity) {
  sc::LanguageTable t = sc::language_from_generator(fibonacci(), 8);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(t.count(n), n + 1);
  const std::string text = fibonacci_text(5000);
  for (std::size_t n = 0; n <= 8; ++n)
    EXPECT_EQ(strings(t.words(n)), oracle::factors(text, n));
}

TEST(Language, MatrixShifts) {
  sc::LanguageTable full = sc::language_from_generator(full_shift(), 3);
  EXPECT_EQ(strings(full.words(3)), oracle::all_words(2, 3));
  sc::LanguageTable gm = sc::language_from_generator(golden_mean(), 10);
  EXPECT_EQ(gm.count(3), 5u);
  for (std::size_t n = 0; n <= 10; ++n)
    EXPECT_EQ(strings(gm.words(n)), oracle::sft_words({{1, 1}, {1, 0}}, n));
}

TEST(Language, ToeplitzAndSturmianTablesAreValid) {
  for (const sc::GeneratorSpec& g :
       {sc::GeneratorSpec(sc::ToeplitzSpec::parse("01?")),
        sc::GeneratorSpec(golden_sturmian()), thue_morse()}) {
    sc::LanguageTable t = sc::language_from_generator(g, 40);
    EXPECT_TRUE(sc::validate_table(t).ok()) << sc::describe(g);
    EXPECT_FALSE(t.certificate().source.empty());
  }
}

TEST(Language, SturmianTableEqualsFibonacciTable) {
  sc::LanguageTable a = sc::language_from_generator(golden_sturmian(), 60);
  sc::LanguageTable b = sc::language_from_generator(fibonacci(), 60);
  for (std::size_t n = 0; n <= 60; ++n)
    EXPECT_EQ(strings(a.words(n)), strings(b.words(n)));
}

TEST(Ray, ShiftAndPrepend) {
  sc::Ray w(fibonacci());
  const std::string text = fibonacci_text(100);
  EXPECT_EQ(w.prefix(20).str(), text.substr(0, 20));
  EXPECT_EQ(w.shifted(3).prefix(10).str(), text.substr(3, 10));
  EXPECT_EQ(w.prepended(sc::Word::parse("0")).prefix(5).str(),
            "0" + text.substr(0, 4));
  EXPECT_EQ(w.shifted(2).shift(), 2u);
  sc::Ray c = sc::Ray::chain(sc::Word::parse("0101"));
  EXPECT_TRUE(c.is_chain());
  EXPECT_EQ(c.available(), 4u);
  EXPECT_THROW(c.prefix(5), sc::HorizonError);
}

TEST(Ray, CanonicalRays) {
  EXPECT_EQ(sc::canonical_rays(fibonacci()).size(), 1u);
  EXPECT_EQ(sc::canonical_rays(thue_morse()).size(), 2u);
  EXPECT_TRUE(sc::canonical_rays(full_shift()).empty());
}

TEST(Fraction, Parse) {
  EXPECT_EQ(sc::Fraction::parse("-1/2"), (sc::Fraction{-1, 2}));
  EXPECT_EQ(sc::Fraction::parse("3"), (sc::Fraction{3, 1}));
  EXPECT_THROW(sc::Fraction::parse("1/0"), sc::ConfigError);
  EXPECT_THROW(sc::Fraction::parse("x"), sc::ConfigError);
}

}  // namespace
