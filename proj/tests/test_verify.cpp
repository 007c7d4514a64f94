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

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "shiftcover/verify.hpp"

namespace sc = shiftcover;
namespace fs = std::filesystem;
using namespace testing_support;

namespace {

std::string config_path(const std::string& name) {
  return std::string(SHIFTCOVER_CONFIG_DIR) + "/" + name + ".config";
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("shiftcover_test_" + name);
  fs::remove_all(p);
  return p;
}

const sc::SuiteResult* find_suite(const sc::VerificationReport& r,
                                  const std::string& name) {
  for (const auto& s : r.suites)
    if (s.name == name) return &s;
  return nullptr;
}

std::set<oracle::Key> keys(const sc::QuotientLevel& q) {
  std::set<oracle::Key> out;
  for (const sc::CoverClass& c : q.classes)
    out.insert({c.prefix.str(), strings(c.past.members)});
  return out;
}

TEST(Config, BundledConfigsLoad) {
  for (const char* name :
       {"fibonacci", "thue_morse", "toeplitz", "golden_mean", "full_shift"}) {
    sc::SystemConfig cfg = sc::load_config(config_path(name));
    EXPECT_EQ(cfg.name, name);
    EXPECT_NO_THROW(sc::check_config(cfg)) << name;
  }
  sc::SystemConfig fib = sc::load_config(config_path("fibonacci"));
  EXPECT_EQ(fib.horizons.max_len, 300u);
  ASSERT_EQ(fib.probes.size(), 1u);
  EXPECT_EQ(fib.probes[0].name, "golden_half");
  EXPECT_EQ(fib.suites.size(), 8u);
}

TEST(Config, InvalidMaxLen) {
  EXPECT_THROW(sc::load_config(config_path("invalid_maxlen")),
               sc::ConfigError);
}

TEST(Config, StrictFields) {
  EXPECT_THROW(sc::parse_config_text(R"({"name":"x","system":{"type":"sft",
    "matrix":[[1,1],[1,1]]},"horizons":{"maxLen":8},"colour":1})"),
               sc::ConfigError);
  EXPECT_THROW(sc::parse_config_text(R"({"name":"x","system":{"type":"sft",
    "matrix":[[1,1],[1,1]]},"horizons":{"maxLen":8,"depth":3}})"),
               sc::ConfigError);
  EXPECT_THROW(sc::parse_config_text(R"({"name":"x","system":{"type":"wave"},
    "horizons":{"maxLen":8}})"),
               sc::ConfigError);
  EXPECT_THROW(sc::parse_config_text("{not json"), sc::ConfigError);
  EXPECT_THROW(sc::parse_config_text(R"({"name":"x","system":{"type":"sft",
    "matrix":[[1,1],[1,1]]},"horizons":{"maxLen":8},"suites":["bogus"]})"),
               sc::ConfigError);
}

TEST(Config, SystemVariants) {
  sc::SystemConfig a = sc::parse_config_text(R"({"name":"tm",
    "system":{"type":"substitution","rules":["01","10"]},
    "horizons":{"maxLen":20}})");
  EXPECT_EQ(sc::describe(a.system), sc::describe(thue_morse()));
  sc::SystemConfig b = sc::parse_config_text(R"({"name":"st",
    "system":{"type":"sturmian","cfDigits":[2],"cfPeriod":[1]},
    "horizons":{"maxLen":20}})");
  EXPECT_EQ(std::get<sc::SturmianSpec>(b.system).cf_digits,
            std::vector<unsigned>{2});
  sc::SystemConfig c = sc::parse_config_text(R"({"name":"tz",
    "system":{"type":"toeplitz","pattern":"010?"},
    "horizons":{"maxLen":20,"levels":[[2,4]],
      "fiberChain":{"defect":3,"kMax":5}}})");
  EXPECT_EQ(std::get<sc::ToeplitzSpec>(c.system).str(), "010?");
  EXPECT_EQ(c.horizons.levels, (std::vector<sc::LevelIndex>{{2, 4}}));
  EXPECT_EQ(c.horizons.fiber_chain.defect, 3u);
  EXPECT_EQ(c.horizons.fiber_chain.k_max, 5u);
}

TEST(Config, FiberSuiteNeedsBinaryAlphabet) {
  sc::SystemConfig cfg = sc::parse_config_text(R"({"name":"t3",
    "system":{"type":"substitution","rules":["01","2","0"]},
    "horizons":{"maxLen":20},"suites":["complexity"]})");
  EXPECT_NO_THROW(sc::check_config(cfg));
  cfg.suites = {"fibers"};
  EXPECT_THROW(sc::check_config(cfg), sc::ConfigError);
}

TEST(Config, ProbeAlphabetMustMatch) {
  EXPECT_THROW(sc::parse_config_text(R"({"name":"p",
    "system":{"type":"substitution","rules":["01","0"]},
    "horizons":{"maxLen":20},
    "probes":[{"name":"z","system":{"type":"sft",
      "matrix":[[1,1,1],[1,1,1],[1,1,1]]}}]})"),
               sc::ConfigError);
}

TEST(NaiveOracle, FullShift) {
  auto t = sc::language_from_generator(full_shift(), 10);
  EXPECT_EQ(sc::naive_oracle_quotient(t, {2, 2}, 6).size(), 4u);
}

TEST(NaiveOracle, AgreesWithQuotientLevel) {
  auto fib = sc::language_from_generator(fibonacci(), 24);
  auto a = sc::naive_oracle_quotient(fib, {3, 4}, 12);
  EXPECT_TRUE(a.same_classes(sc::quotient_level(fib, {3, 4}, 12)));
  oracle::Language lang(fibonacci_text(1 << 12), 20);
  EXPECT_EQ(keys(a), oracle::quotient(lang, 2, 3, 4, 12));

  auto gm = sc::language_from_generator(golden_mean(), 16);
  auto b = sc::naive_oracle_quotient(gm, {2, 3}, 10);
  EXPECT_TRUE(b.same_classes(sc::quotient_level(gm, {2, 3}, 10)));
  std::vector<oracle::StringSet> sets;
  for (std::size_t n = 0; n <= 16; ++n)
    sets.push_back(oracle::sft_words({{1, 1}, {1, 0}}, n));
  EXPECT_EQ(keys(b), oracle::quotient(oracle::Language(sets), 2, 2, 3, 10));
}

TEST(NaiveOracle, Caps) {
  auto t = sc::language_from_generator(fibonacci(), 30);
  EXPECT_THROW(sc::naive_oracle_quotient(t, {9, 9}, 12), sc::ConfigError);
  EXPECT_THROW(sc::naive_oracle_quotient(t, {3, 4}, 15), sc::ConfigError);
}

TEST(Report, FibonacciConfig) {
  sc::SystemConfig cfg = sc::load_config(config_path("fibonacci"));
  sc::VerificationReport r = sc::run_config(cfg);
  for (const auto& s : r.suites)
    EXPECT_EQ(s.verdict, sc::Verdict::kPass) << s.name;
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.summary["nX"], 1);
  EXPECT_EQ(r.summary["fiberTriple"], sc::Json::parse("[3,2,1]"));
  EXPECT_EQ(r.summary["compactSummands"], 1);
  EXPECT_FALSE(r.body().contains("timing"));
  EXPECT_EQ(r.body().dump(), sc::run_config(cfg).body().dump());
}

TEST(Report, FullShiftFibersNeedStarStar) {
  sc::VerificationReport r =
      sc::run_config(sc::load_config(config_path("full_shift")));
  EXPECT_EQ(r.exit_code(), 1);
  const sc::SuiteResult* star = find_suite(r, "star");
  ASSERT_NE(star, nullptr);
  EXPECT_EQ(star->verdict, sc::Verdict::kPass);
  const sc::SuiteResult* fibers = find_suite(r, "fibers");
  ASSERT_NE(fibers, nullptr);
  EXPECT_EQ(fibers->verdict, sc::Verdict::kFail);
  bool mentions = false;
  for (const std::string& d : fibers->diagnostics)
    mentions = mentions || d.find("(**) required") != std::string::npos;
  EXPECT_TRUE(mentions);
}

TEST(Report, RefusedSuitesOnFullShift) {
  sc::SystemConfig cfg = sc::load_config(config_path("full_shift"));
  cfg.suites = {"isolated", "two_sided"};
  sc::VerificationReport r = sc::run_config(cfg);
  for (const auto& s : r.suites) EXPECT_EQ(s.verdict, sc::Verdict::kFail);
}

TEST(Report, InconclusiveIsNotPass) {
  sc::SuiteResult s;
  s.verdict = sc::Verdict::kInconclusive;
  sc::VerificationReport r;
  r.suites.push_back(s);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(sc::to_string(sc::Verdict::kInconclusive), "inconclusive");
}

TEST(Report, WrittenOnFailureAndExitCodes) {
  fs::path dir = scratch_dir("fail");
  EXPECT_EQ(sc::verify_and_write(sc::load_config(config_path("full_shift")),
                                 dir.string()),
            1);
  EXPECT_TRUE(fs::exists(dir / "report.json"));
  EXPECT_TRUE(fs::exists(dir / "timing.json"));
  sc::Json body = sc::Json::parse(read_file(dir / "report.json"));
  EXPECT_EQ(body["system"], "full_shift");

  EXPECT_EQ(sc::run_config_file(config_path("invalid_maxlen"),
                                scratch_dir("bad").string()),
            2);
  EXPECT_EQ(sc::run_config_file("/nonexistent/file.config",
                                scratch_dir("none").string()),
            2);
}

TEST(Dot, EmptyGraphIsHeaderOnly) {
  EXPECT_EQ(sc::export_dot({}), "digraph shiftcover {\n}\n");
}

TEST(Dot, FullShiftTwoToOne) {
  auto t = sc::language_from_generator(full_shift(), 10);
  sc::QuotientLevel hi = sc::quotient_level(t, {2, 2}, 5);
  sc::QuotientLevel lo = sc::quotient_level(t, {1, 1}, 5);
  sc::DotInput g;
  g.levels = {lo, hi};
  g.maps = {*sc::connecting_map(hi, lo)};
  const std::string dot = sc::export_dot(g);
  std::regex node(R"re("(\d+),(\d+):(\d+)" \[label)re");
  std::regex edge(R"re("2,2:\d+" -> "1,1:(\d+)";)re");
  std::size_t nodes = 0;
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), node);
       it != std::sregex_iterator(); ++it)
    ++nodes;
  std::map<std::string, int> in;
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge);
       it != std::sregex_iterator(); ++it)
    ++in[(*it)[1]];
  EXPECT_EQ(nodes, 6u);
  ASSERT_EQ(in.size(), 2u);
  for (const auto& [target, count] : in) EXPECT_EQ(count, 2) << target;
  EXPECT_EQ(dot.rfind("digraph shiftcover {\n", 0), 0u);
  EXPECT_NE(dot.find("label=\"00|4\""), std::string::npos);
}

TEST(Dot, FibonacciChainIsLayered) {
  auto t = sc::language_from_generator(fibonacci(), 300);
  std::vector<sc::LevelIndex> levels;
  for (std::size_t k = 1; k <= 6; ++k) levels.push_back({k, k + 4});
  sc::DotInput g = sc::chain_graph(t, levels, 120, sc::Horizons{});
  ASSERT_EQ(g.levels.size(), 6u);
  ASSERT_EQ(g.maps.size(), 5u);
  for (std::size_t i = 0; i < g.maps.size(); ++i) {
    EXPECT_EQ(g.maps[i].from, levels[i + 1]);
    EXPECT_EQ(g.maps[i].to, levels[i]);
    EXPECT_TRUE(g.maps[i].surjective(g.levels[i].size()));
  }
  EXPECT_EQ(g.isolated.size(), 6u);
  const std::string dot = sc::export_dot(g);
  EXPECT_NE(dot.find("peripheries=2"), std::string::npos);
  EXPECT_EQ(dot, sc::export_dot(sc::chain_graph(t, levels, 120, {})));
}

TEST(Csv, ComplexityTable) {
  auto t = sc::language_from_generator(fibonacci(), 12);
  const std::string csv = sc::complexity_csv(sc::complexity(t), 5);
  EXPECT_EQ(csv,
            "n,p,first_difference,left_special\n"
            "1,2,1,1\n2,3,1,1\n3,4,1,1\n4,5,1,1\n5,6,1,1\n");
}

TEST(Json, LevelAndQuotient) {
  EXPECT_EQ(sc::to_json(sc::LevelIndex{3, 7}), sc::Json::parse("[3,7]"));
  auto t = sc::language_from_generator(full_shift(), 8);
  sc::Json j = sc::to_json(sc::quotient_level(t, {1, 1}, 4));
  EXPECT_EQ(j["classes"].size(), 2u);
}

TEST(WriteText, FailureThrows) {
  EXPECT_THROW(sc::write_text("/proc/shiftcover/nope/file.txt", "x"),
               sc::Error);
}

}  // namespace
