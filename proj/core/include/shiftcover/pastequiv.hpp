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

// Past sets of words and rays, l-past equivalence classes and the horizon
// searches built on them.

#ifndef SHIFTCOVER_PASTEQUIV_HPP_
#define SHIFTCOVER_PASTEQUIV_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "shiftcover/error.hpp"
#include "shiftcover/generators.hpp"
#include "shiftcover/words.hpp"

namespace shiftcover {

// Consecutive parameter increments over which a quantity must not change.
inline constexpr std::size_t kDefaultWindow = 4;

struct PastSet {
  std::size_t l = 0;
  WordList members;  // sorted

  std::size_t size() const noexcept { return members.size(); }
  bool singleton() const noexcept { return members.size() == 1; }
  std::string str() const { return "{" + join(members) + "}"; }
  friend bool operator==(const PastSet&, const PastSet&) = default;
  friend auto operator<=>(const PastSet&, const PastSet&) = default;
};

// {mu in L_l : mu w admitted}.
PastSet past_set(const LanguageTable& table, WordView w, std::size_t l);

struct PastCertificate {
  std::size_t stable_from = 0;  // least prefix length with the final set
  std::size_t checked_to = 0;   // longest prefix length evaluated
  std::size_t window = kDefaultWindow;
};

struct StabilizedPast {
  PastSet past;
  PastCertificate cert;
};

Checked<StabilizedPast> stabilized_past_set(const Ray& ray, std::size_t l,
                                            const LanguageTable& table,
                                            std::size_t window = kDefaultWindow);

struct PastClass {
  std::size_t l = 0;
  Word representative;
  WordList members;
  PastSet past;
};

// Partition of the length-n words by their l-past, ordered by
// representative.
std::vector<PastClass> past_classes(const LanguageTable& table, std::size_t n,
                                    std::size_t l);

struct IsolationVerdict {
  bool isolated = false;
  std::size_t word_length = 0;
  std::size_t class_size = 0;
  PastCertificate cert;
};

Checked<IsolationVerdict> is_isolated_in_past_equiv(
    const Ray& ray, std::size_t l, const LanguageTable& table,
    std::size_t window = kDefaultWindow);

struct UniquePastHorizon {
  std::size_t n = 0;
  std::size_t scanned_to = 0;  // longest word length verified
};

Checked<UniquePastHorizon> unique_past_horizon(const Ray& ray, std::size_t l,
                                               const LanguageTable& table);

struct SpecialRay;
struct StarStarReport;

struct IsolationGrid {
  std::size_t n_max = 8;
  std::size_t l_max = 12;
};

struct IsolationHorizon {
  std::size_t n = 0;
  IsolationGrid grid;
  std::size_t pairs_tested = 0;
  std::vector<std::pair<std::size_t, std::size_t>> non_isolated;  // (n, l)
};

// Refused unless gate.pass.
Checked<IsolationHorizon> isolation_horizon(const SpecialRay& ray,
                                            const LanguageTable& table,
                                            const StarStarReport& gate,
                                            IsolationGrid grid = {});

}  // namespace shiftcover

#endif  // SHIFTCOVER_PASTEQUIV_HPP_
