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

// Configuration ingestion, the brute-force quotient oracle, verification
// suites, report assembly and graph/table export.

#ifndef SHIFTCOVER_VERIFY_HPP_
#define SHIFTCOVER_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "shiftcover/analysis.hpp"
#include "shiftcover/cover.hpp"
#include "shiftcover/generators.hpp"
#include "shiftcover/words.hpp"

namespace shiftcover {

using Json = nlohmann::ordered_json;

// Largest table any config may request.
inline constexpr std::size_t kMaxConfigLength = 2048;

struct Horizons {
  std::size_t max_len = 0;
  std::size_t H = 0;  // quotient horizon; 0 derives one per suite
  std::size_t defect = 4;
  std::size_t window = kDefaultWindow;
  std::size_t complexity_up_to = 30;
  std::size_t star_max_n = 4;
  std::size_t oracle_max_l = 8;
  std::size_t oracle_max_h = 14;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  std::size_t isolation_depth = 4;
  std::size_t isolation_stride = 4;
  std::vector<LevelIndex> levels{{3, 7}, {4, 8}, {5, 9}};
  ChainSpec fiber_chain;
  ChainSpec orbit_chain{4, 1, 10, 1, 32, 0, kDefaultWindow};
  std::size_t orbit_shifts = 5;
};

// Optional predictions the suites compare against.
struct Expectations {
  std::optional<std::pair<std::int64_t, std::int64_t>> affine_complexity;
  std::optional<std::size_t> growth_bound;
  std::optional<std::size_t> left_special_per_length;
  std::optional<std::size_t> special_rays;
  std::optional<std::size_t> n_x;
  std::optional<bool> star;
};

struct ProbeSpec {
  std::string name;
  GeneratorSpec system;
  std::size_t shift = 0;
  Word prepend;

  Ray ray() const;
};

struct SystemConfig {
  std::string name;
  GeneratorSpec system;
  Horizons horizons;
  Expectations expect;
  std::vector<ProbeSpec> probes;
  std::vector<std::string> suites;  // run in dependency order
  std::string out;
};

// Suites in the order they run.
const std::vector<std::string>& known_suites();

// Throw ConfigError on malformed input or unsatisfiable prerequisites.
GeneratorSpec parse_system(const Json& j);
SystemConfig parse_config(const Json& j);
SystemConfig parse_config_text(std::string_view text);
SystemConfig load_config(const std::string& path);
void check_config(const SystemConfig& cfg);

// Table, analysis and gate shared by every suite of one system.
class SystemContext {
 public:
  explicit SystemContext(SystemConfig cfg);

  const SystemConfig& config() const noexcept { return cfg_; }
  const LanguageTable& table() const noexcept { return table_; }
  const GeneratorTags& tags() const noexcept { return tags_; }
  const ComplexityProfile& profile() const noexcept { return profile_; }
  const RaySearch& rays() const noexcept { return rays_; }
  const TailClassPartition& partition() const noexcept { return partition_; }
  const StarStarReport& gate() const noexcept { return gate_; }
  // One entry per tail class.
  const std::vector<Checked<SpecialRay>>& maximal() const noexcept {
    return maximal_;
  }

 private:
  SystemConfig cfg_;
  LanguageTable table_;
  GeneratorTags tags_;
  ComplexityProfile profile_;
  RaySearch rays_;
  TailClassPartition partition_;
  StarStarReport gate_;
  std::vector<Checked<SpecialRay>> maximal_;
};

// Direct enumeration over A^H and A^l with sorted-list membership only;
// k <= l <= 8 and H <= 14.
QuotientLevel naive_oracle_quotient(const LanguageTable& table,
                                    LevelIndex level, std::size_t H);

enum class Verdict { kPass, kFail, kInconclusive };
std::string to_string(Verdict v);

struct SuiteResult {
  std::string name;
  Verdict verdict = Verdict::kInconclusive;
  std::vector<std::string> diagnostics;
  Json details = Json::object();
  double seconds = 0;
};

SuiteResult verify_complexity(const SystemContext& ctx);
SuiteResult verify_special(const SystemContext& ctx);
SuiteResult verify_star(const SystemContext& ctx);
SuiteResult verify_oracle(const SystemContext& ctx);
SuiteResult verify_categorical(const SystemContext& ctx);
SuiteResult verify_isolated_orbits(const SystemContext& ctx);
SuiteResult verify_fiber_counts(const SystemContext& ctx);
SuiteResult verify_two_sided_shadow(const SystemContext& ctx);
SuiteResult run_suite(const std::string& name, const SystemContext& ctx);

struct VerificationReport {
  std::string system;
  std::string description;
  std::vector<SuiteResult> suites;
  Json summary = Json::object();
  std::map<std::string, double> timing;

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
  // Everything except timing; identical configs give identical bodies.
  Json body() const;
  Json timing_json() const;
};

VerificationReport run_config(const SystemConfig& cfg);

// Write report.json and timing.json under out_dir (cfg.out when empty)
// and return the process exit code: 0 pass, 1 suite failure, 2 config
// error.
int verify_and_write(const SystemConfig& cfg, const std::string& out_dir = {});
int run_config_file(const std::string& path, const std::string& out_dir = {},
                    const std::vector<std::string>& suites = {});

struct DotInput {
  std::vector<QuotientLevel> levels;
  std::vector<ClassMap> maps;  // connecting maps and level shifts
  std::map<LevelIndex, std::vector<std::size_t>> isolated;
};

std::string export_dot(const DotInput& graph);
// Levels at horizon H with the connecting maps between neighbours; isolated
// classes are marked when the refinements fit in the table.
DotInput chain_graph(const LanguageTable& table,
                     const std::vector<LevelIndex>& levels, std::size_t H,
                     const Horizons& horizons);
std::string complexity_csv(const ComplexityProfile& profile,
                           std::size_t up_to = 0);
// Throws Error when the file cannot be written.
void write_text(const std::string& path, const std::string& text);

Json to_json(const LevelIndex& level);
Json to_json(const QuotientLevel& level);
Json to_json(const FiberReport& report);

}  // namespace shiftcover

#endif  // SHIFTCOVER_VERIFY_HPP_
