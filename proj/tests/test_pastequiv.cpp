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

#include <map>

#include "helpers.hpp"
#include "shiftcover/analysis.hpp"
#include "shiftcover/pastequiv.hpp"

namespace sc = shiftcover;
using namespace testing_support;

namespace {

const sc::LanguageTable& fib_table() {
  static const sc::LanguageTable t =
      sc::language_from_generator(fibonacci(), 300);
  return t;
}

sc::Ray omega() { return sc::Ray(fibonacci()); }
sc::Ray zero_omega() { return omega().prepended(sc::Word::parse("0")); }

// Partition of words of length n by brute-force l-past.
std::map<oracle::StringSet, oracle::StringSet> oracle_partition(
    const oracle::Language& lang, std::size_t alphabet, std::size_t n,
    std::size_t l) {
  std::map<oracle::StringSet, oracle::StringSet> out;
  for (const std::string& w : lang.words(n))
    out[oracle::past(lang, alphabet, w, l)].insert(w);
  return out;
}

void expect_partition(const sc::LanguageTable& t, const oracle::Language& lang,
                      std::size_t n, std::size_t l) {
  auto classes = sc::past_classes(t, n, l);
  auto want = oracle_partition(lang, t.alphabet().size(), n, l);
  ASSERT_EQ(classes.size(), want.size()) << n << "," << l;
  for (const sc::PastClass& c : classes) {
    auto it = want.find(strings(c.past.members));
    ASSERT_NE(it, want.end());
    EXPECT_EQ(strings(c.members), it->second);
    EXPECT_EQ(c.representative, c.members.front());
  }
}

TEST(PastSet, FullShift) {
  auto t = sc::language_from_generator(full_shift(), 8);
  EXPECT_EQ(sc::past_set(t, sc::Word::parse("0110"), 2).size(), 4u);
}

TEST(PastSet, Fibonacci) {
  EXPECT_EQ(strings(sc::past_set(fib_table(), sc::Word::parse("01001"), 2)
                        .members),
            (oracle::StringSet{"01", "10"}));
  EXPECT_EQ(strings(sc::past_set(fib_table(), sc::Word::parse("00100"), 1)
                        .members),
            oracle::StringSet{"1"});
  oracle::Language lang(fibonacci_text(1 << 12), 14);
  for (const std::string& w : lang.words(7))
    for (std::size_t l = 1; l <= 6; ++l)
      EXPECT_EQ(strings(sc::past_set(fib_table(), sc::Word::parse(w), l)
                            .members),
                oracle::past(lang, 2, w, l));
}

TEST(StabilizedPast, OmegaAndZeroOmega) {
  auto w = sc::stabilized_past_set(omega(), 2, fib_table());
  ASSERT_TRUE(w.has_value()) << w.diagnostic();
  EXPECT_EQ(strings(w->past.members), (oracle::StringSet{"01", "10"}));
  EXPECT_LE(w->cert.stable_from, 8u);
  auto z = sc::stabilized_past_set(zero_omega(), 3, fib_table());
  ASSERT_TRUE(z.has_value()) << z.diagnostic();
  EXPECT_TRUE(z->past.singleton());
}

TEST(StabilizedPast, FullShiftTriviallyStable) {
  auto t = sc::language_from_generator(full_shift(), 14);
  auto s = sc::stabilized_past_set(
      sc::Ray::chain(sc::Word::parse("0110100110010110")), 2, t);
  ASSERT_TRUE(s.has_value()) << s.diagnostic();
  EXPECT_EQ(s->past.size(), 4u);
  EXPECT_EQ(s->cert.stable_from, 0u);
}

TEST(PastClasses, FullShiftOneClass) {
  auto t = sc::language_from_generator(full_shift(), 6);
  auto c = sc::past_classes(t, 2, 1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].members.size(), 4u);
}

TEST(PastClasses, MatchOracle) {
  oracle::Language fib(fibonacci_text(1 << 12), 12);
  expect_partition(fib_table(), fib, 4, 2);
  expect_partition(fib_table(), fib, 6, 3);
  auto gm = sc::language_from_generator(golden_mean(), 10);
  std::vector<oracle::StringSet> sets;
  for (std::size_t n = 0; n <= 10; ++n)
    sets.push_back(oracle::sft_words({{1, 1}, {1, 0}}, n));
  oracle::Language gl(sets);
  expect_partition(gm, gl, 2, 1);
  expect_partition(gm, gl, 4, 3);
}

TEST(Isolation, ShiftedOmegaIsolatedAtNextDepth) {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto v = sc::is_isolated_in_past_equiv(omega().shifted(n), n + 1,
                                           fib_table());
    ASSERT_TRUE(v.has_value()) << v.diagnostic();
    EXPECT_TRUE(v->isolated) << n;
    EXPECT_EQ(v->class_size, 1u);
  }
}

TEST(Isolation, ShiftedOmegaNotIsolatedAtDepthOne) {
  // Its one-letter past is shared with other words.
  for (std::size_t n = 1; n <= 4; ++n) {
    auto v = sc::is_isolated_in_past_equiv(omega().shifted(n), 1, fib_table());
    ASSERT_TRUE(v.has_value()) << v.diagnostic();
    EXPECT_FALSE(v->isolated) << n;
    EXPECT_GE(v->class_size, 2u);
  }
}

TEST(Isolation, FullShiftNeverIsolated) {
  auto t = sc::language_from_generator(full_shift(), 16);
  for (std::size_t l = 1; l <= 3; ++l) {
    auto v = sc::is_isolated_in_past_equiv(
        sc::Ray::chain(sc::Word::parse("0110100110010110")), l, t);
    if (v) EXPECT_FALSE(v->isolated) << l;
  }
}

TEST(UniquePastHorizon, ZeroOmega) {
  auto one = sc::unique_past_horizon(zero_omega(), 1, fib_table());
  ASSERT_TRUE(one.has_value()) << one.diagnostic();
  EXPECT_LE(one->n, 4u);
  // Brute force: every admitted word with that prefix has one 1-letter past.
  oracle::Language lang(fibonacci_text(1 << 12), 16);
  const std::string head = zero_omega().prefix(one->n + 1).str();
  for (std::size_t len = head.size(); len <= 14; ++len)
    for (const std::string& w : lang.words(len))
      if (w.compare(0, head.size(), head) == 0)
        EXPECT_EQ(oracle::past(lang, 2, w, 1).size(), 1u) << w;
  auto four = sc::unique_past_horizon(zero_omega(), 4, fib_table());
  ASSERT_TRUE(four.has_value()) << four.diagnostic();
  EXPECT_GE(four->n, one->n);
}

TEST(UniquePastHorizon, Monotone) {
  std::size_t last = 0;
  for (std::size_t l = 1; l <= 6; ++l) {
    auto h = sc::unique_past_horizon(zero_omega(), l, fib_table());
    ASSERT_TRUE(h.has_value()) << h.diagnostic();
    EXPECT_GE(h->n, last);
    last = h->n;
  }
}

TEST(UniquePastHorizon, NoneForLeftSpecialRay) {
  EXPECT_FALSE(sc::unique_past_horizon(omega(), 2, fib_table()).has_value());
  auto t = sc::language_from_generator(full_shift(), 16);
  EXPECT_FALSE(sc::unique_past_horizon(
                   sc::Ray::chain(sc::Word::parse("0110100110010110")), 1, t)
                   .has_value());
}

sc::StarStarReport gate_for(const sc::LanguageTable& t,
                            const sc::GeneratorSpec& g,
                            const sc::RaySearch& rs) {
  sc::StarStarConfig cfg;
  cfg.tags = sc::classify(g);
  return sc::property_star_star_check(t, rs, cfg);
}

TEST(IsolationHorizon, Fibonacci) {
  sc::RaySearch rs = sc::left_special_rays(fib_table(), fibonacci(), 100);
  sc::StarStarReport gate = gate_for(fib_table(), fibonacci(), rs);
  ASSERT_TRUE(gate.pass);
  sc::SpecialRay w{omega()};
  auto h = sc::isolation_horizon(w, fib_table(), gate);
  ASSERT_TRUE(h.has_value()) << h.diagnostic();
  EXPECT_EQ(h->n, 0u);
  EXPECT_GT(h->pairs_tested, 0u);
}

TEST(IsolationHorizon, ThueMorseMaximalRays) {
  auto t = sc::language_from_generator(thue_morse(), 320);
  sc::RaySearch rs = sc::left_special_rays(t, thue_morse(), 159);
  sc::StarStarReport gate = gate_for(t, thue_morse(), rs);
  ASSERT_TRUE(gate.pass);
  for (const sc::Ray& r : sc::canonical_rays(thue_morse())) {
    auto h = sc::isolation_horizon(sc::SpecialRay{r}, t, gate);
    ASSERT_TRUE(h.has_value()) << h.diagnostic();
    EXPECT_LE(h->n, h->grid.n_max);
  }
}

TEST(IsolationHorizon, RefusedWithoutGate) {
  auto t = sc::language_from_generator(full_shift(), 12);
  sc::RaySearch rs = sc::left_special_rays(t, full_shift(), 5);
  sc::StarStarReport gate = gate_for(t, full_shift(), rs);
  ASSERT_FALSE(gate.pass);
  auto h = sc::isolation_horizon(
      sc::SpecialRay{sc::Ray::chain(sc::Word::parse("011010011001"))}, t, gate);
  EXPECT_FALSE(h.has_value());
}

}  // namespace
