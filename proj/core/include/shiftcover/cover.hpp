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

// Finite levels of the past-equivalence cover: the index poset, quotient
// levels, connecting maps, the level shift and fibers over rays.

#ifndef SHIFTCOVER_COVER_HPP_
#define SHIFTCOVER_COVER_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shiftcover/error.hpp"
#include "shiftcover/generators.hpp"
#include "shiftcover/pastequiv.hpp"
#include "shiftcover/words.hpp"

namespace shiftcover {

struct LevelIndex {
  std::size_t k = 1;
  std::size_t l = 1;

  // Throws ConfigError unless 1 <= k <= l.
  static LevelIndex make(std::size_t k, std::size_t l);
  std::size_t defect() const noexcept { return l - k; }
  std::string str() const;
  friend auto operator<=>(const LevelIndex&, const LevelIndex&) = default;
};

bool poset_leq(const LevelIndex& a, const LevelIndex& b);

struct ChainExtraction {
  std::vector<LevelIndex> chain;        // greedy minimum-defect chain
  std::optional<std::size_t> longest;   // exact, only when |F| <= 20
};

ChainExtraction extract_chain(std::vector<LevelIndex> family);

struct CoverClass {
  LevelIndex level;
  Word prefix;
  PastSet past;
  Word witness;
};

struct QuotientLevel {
  LevelIndex level;
  std::vector<CoverClass> classes;  // sorted by (prefix, past)
  std::size_t horizon = 0;
  bool stabilized = false;
  std::size_t compared_horizon = 0;  // horizon the flag compared against

  std::size_t size() const noexcept { return classes.size(); }
  std::optional<std::size_t> find(WordView prefix, const PastSet& past) const;
  bool same_classes(const QuotientLevel& other) const;
};

// Classes (w[0,k), past_l(w[k,H))) over admitted w of length H.  The flag
// compares against horizon min(2H, maxLen - l) when that is larger.
QuotientLevel quotient_level(const LanguageTable& table, LevelIndex level,
                             std::size_t H);
// Doubles H from h0 until the flag is set or the table runs out.
QuotientLevel stabilized_level(const LanguageTable& table, LevelIndex level,
                               std::size_t h0);

struct ClassMap {
  LevelIndex from;
  LevelIndex to;
  std::vector<std::size_t> image;  // image[i] = target index of class i

  bool surjective(std::size_t target_size) const;
  std::vector<std::size_t> preimage_counts(std::size_t target_size) const;
};

// Image of (p, P) at (k2, l2) in (k1, l1): (p[0,k1), mu[0,l1) for the
// length l1+k2-k1 suffixes mu of P that end with p[k1,k2)).
CoverClass project_class(const CoverClass& c, LevelIndex to);

Checked<ClassMap> connecting_map(const QuotientLevel& hi,
                                 const QuotientLevel& lo);
Checked<ClassMap> shift_on_level(const QuotientLevel& from,
                                 const QuotientLevel& to);

Checked<CoverClass> iota_level(const Ray& ray, LevelIndex level,
                               const LanguageTable& table);

// Levels (k, k + defect + growth * (k - 1)) for k = k_min..k_max; threads
// must survive up to the lookahead level k_top (0: 4 * k_max).
struct ChainSpec {
  std::size_t defect = 4;
  std::size_t k_min = 1;
  std::size_t k_max = 10;
  std::size_t growth = 0;
  std::size_t lookahead = 0;
  std::size_t horizon = 0;  // 0: maxLen - l(k_top)
  std::size_t window = kDefaultWindow;

  LevelIndex at(std::size_t k) const;
  std::size_t top() const noexcept { return lookahead ? lookahead : 4 * k_max; }
  std::vector<LevelIndex> levels() const;  // k_min..k_max
};

struct FiberReport {
  Ray target;
  std::vector<LevelIndex> chain;
  std::vector<std::size_t> per_level_counts;
  std::vector<std::size_t> thread_counts;
  std::size_t thread_count = 0;
  std::size_t stable_from_k = 0;
  bool stabilized = false;
  std::size_t horizon = 0;
  LevelIndex top;
};

Checked<FiberReport> pi_fiber(const Ray& ray, const ChainSpec& spec,
                              const LanguageTable& table);

// (k + stride*j, l + stride*j) for j = 1..depth.
std::vector<LevelIndex> refinement_levels(LevelIndex level,
                                          std::size_t depth = 4,
                                          std::size_t stride = 4);

// Indices of classes with a single preimage under every refinement map.
Checked<std::vector<std::size_t>> isolated_classes(
    const QuotientLevel& level, const std::vector<QuotientLevel>& refinements);

}  // namespace shiftcover

#endif  // SHIFTCOVER_COVER_HPP_
