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

// Complexity, left special words and rays, tail classes and the finite
// checkers for the unique-past properties.

#ifndef SHIFTCOVER_ANALYSIS_HPP_
#define SHIFTCOVER_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftcover/error.hpp"
#include "shiftcover/generators.hpp"
#include "shiftcover/pastequiv.hpp"
#include "shiftcover/words.hpp"

namespace shiftcover {

struct ComplexityProfile {
  std::vector<std::size_t> values;                // values[n - 1] = p(n)
  std::vector<std::int64_t> first_differences;    // [n - 1] = p(n+1) - p(n)
  std::vector<std::size_t> left_special_counts;   // [n], n < maxLen

  std::size_t p(std::size_t n) const { return values.at(n - 1); }
};

ComplexityProfile complexity(const LanguageTable& table);

WordList left_special_words(const LanguageTable& table, std::size_t n);

struct GrowthReport {
  bool pass = true;
  std::size_t bound = 0;
  std::optional<std::size_t> first_failure;  // n with p(n+1) - p(n) > K
  std::int64_t max_difference = 0;
  std::size_t max_left_special = 0;
  bool left_special_within_bound = true;
};

GrowthReport bounded_growth_check(const ComplexityProfile& profile,
                                  std::size_t bound);

struct DValue {
  std::size_t value = 0;
  std::size_t m = 0;  // first depth of the constant run
  std::size_t window = kDefaultWindow;
  std::size_t prefix_length = 0;
};

struct SpecialRay {
  Ray ray;
  std::size_t certified_depth = 0;
  int tail_class_id = -1;
  bool is_maximal = false;
  std::optional<DValue> d_value;
  bool is_adjusted = false;
  bool matched = false;  // false: known only as a word chain
};

struct RaySearch {
  std::vector<SpecialRay> rays;
  std::size_t horizon = 0;
  std::size_t confirm_depth = 0;
  std::size_t shift_bound = 0;
  std::vector<std::size_t> branch_counts;  // left special words per length
  std::optional<std::string> diagnostic;

  bool finite() const noexcept { return !diagnostic.has_value(); }
};

// Left special branches alive at `horizon` that still branch at the deepest
// testable length, matched to shifts sigma^m (m <= shift_bound) of the
// generator's canonical words.  shift_bound 0 selects the confirm depth.
RaySearch left_special_rays(const LanguageTable& table,
                            const GeneratorSpec& gen, std::size_t horizon,
                            std::size_t shift_bound = 0);

struct TailClassPartition {
  std::vector<std::vector<std::size_t>> classes;  // indices into the ray list
  std::vector<int> class_of;
  std::size_t n_x = 0;
  std::size_t shift_bound = 0;
  std::size_t match_horizon = 0;
};

TailClassPartition tail_classes(const std::vector<SpecialRay>& rays,
                                std::size_t shift_bound,
                                std::size_t match_horizon);

Checked<SpecialRay> j_maximal(const std::vector<SpecialRay>& members,
                              const LanguageTable& table,
                              std::size_t test_depth);

struct AdjustedSet {
  std::vector<SpecialRay> rays;
  std::size_t back_depth = 0;
};

AdjustedSet adjusted_set(const std::vector<SpecialRay>& members,
                         const LanguageTable& table, std::size_t back_depth);

Checked<DValue> path_count(const Ray& ray, const LanguageTable& table,
                           std::size_t window = kDefaultWindow);

struct StarReport {
  std::size_t n = 0;
  std::size_t search_horizon = 0;
  bool pass = false;
  WordList unwitnessed;
  std::size_t witnessed = 0;
};

StarReport property_star_check(const LanguageTable& table, std::size_t n,
                               std::size_t search_horizon);

struct StarStarConfig {
  std::size_t max_n = 4;
  std::size_t search_horizon = 0;  // 0: maxLen - n
  GeneratorTags tags;
};

struct StarStarReport {
  bool pass = false;
  std::vector<StarReport> star;
  bool rays_finite = false;
  bool periodic_ray = false;
  std::vector<std::string> reasons;
};

StarStarReport property_star_star_check(const LanguageTable& table,
                                        const RaySearch& rays,
                                        const StarStarConfig& config);

}  // namespace shiftcover

#endif  // SHIFTCOVER_ANALYSIS_HPP_
