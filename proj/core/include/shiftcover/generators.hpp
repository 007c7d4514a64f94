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

// Sources of infinite words: substitution fixed points, Sturmian words,
// Toeplitz words and vertex shifts of 0-1 matrices.

#ifndef SHIFTCOVER_GENERATORS_HPP_
#define SHIFTCOVER_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shiftcover/words.hpp"

namespace shiftcover {

// Longest prefix any generator or ray will produce.
inline constexpr std::size_t kSafetyBound = std::size_t{1} << 22;

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // "3", "-1/2".
  static Fraction parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// rho = rational + alpha_coeff * alpha.
struct Intercept {
  Fraction rational;
  Fraction alpha_coeff;
  friend bool operator==(const Intercept&, const Intercept&) = default;
};

struct SubstitutionSystem {
  std::vector<Word> rules;  // rules[a] is the image of symbol a
  Symbol seed;

  std::size_t alphabet_size() const noexcept { return rules.size(); }
  // {"01", "0"} -> 0->01, 1->0.
  static SubstitutionSystem from_strings(const std::vector<std::string>& r,
                                         char seed = '0');
};

// Digits are the exponents of the standard-word recursion; the slope is
// alpha = [0; d1 + 1, d2, d3, ...].  An empty period means a rational slope.
struct SturmianSpec {
  std::vector<unsigned> cf_digits;
  std::vector<unsigned> cf_period;
  std::optional<Intercept> intercept;

  bool quadratic() const noexcept { return !cf_period.empty(); }
  unsigned digit(std::size_t i) const;  // 1-based; 0 when exhausted
  std::size_t digit_count() const;      // SIZE_MAX when periodic
};

struct ToeplitzSpec {
  std::vector<std::optional<Symbol>> pattern;  // nullopt marks a hole

  // "01?" -> 0, 1, hole.
  static ToeplitzSpec parse(std::string_view text);
  std::size_t hole_count() const;
  std::string str() const;
};

struct MatrixSFT {
  std::vector<std::vector<std::uint8_t>> transition;
};

using GeneratorSpec =
    std::variant<SubstitutionSystem, SturmianSpec, ToeplitzSpec, MatrixSFT>;

std::size_t alphabet_size(const GeneratorSpec& gen);
std::string describe(const GeneratorSpec& gen);
// Throws ConstructionError or ConfigError when the spec violates its
// invariants.
void validate(const GeneratorSpec& gen);

struct GeneratorTags {
  bool primitive = true;
  bool periodic = false;
  bool minimal_source = true;  // false for matrix shifts
  std::vector<std::string> notes;

  // Minimal-shift theorem suites only accept untagged inputs.
  bool theorem_ready() const noexcept {
    return primitive && !periodic && minimal_source;
  }
};

GeneratorTags classify(const GeneratorSpec& gen);

Word substitution_prefix(const SubstitutionSystem& sys, std::size_t n);
Word standard_sturmian_prefix(const SturmianSpec& spec, std::size_t n);
Word mechanical_word(const SturmianSpec& spec, std::size_t n);
Word toeplitz_word(const ToeplitzSpec& spec, std::size_t n);
// A deterministic aperiodic walk through the matrix graph.
Word sft_canonical_path(const MatrixSFT& sft, std::size_t n);
Word canonical_prefix(const GeneratorSpec& gen, std::size_t n);

// budget 0 selects the default prefix budget.
LanguageTable language_from_generator(const GeneratorSpec& gen,
                                      std::size_t max_len,
                                      std::size_t budget = 0);

// sigma^shift of a generator's canonical word, optionally with a finite word
// glued in front.  A ray built from a word chain answers prefix queries only
// up to the chain length.
class Ray {
 public:
  explicit Ray(GeneratorSpec source, std::size_t shift = 0, Word prepend = {});
  static Ray chain(Word word);

  Word prefix(std::size_t n) const;
  Symbol at(std::size_t i) const;
  std::size_t available() const noexcept;

  Ray shifted(std::size_t s) const;
  Ray prepended(WordView w) const;

  bool is_chain() const noexcept;
  const GeneratorSpec* source() const noexcept;
  std::size_t shift() const noexcept { return shift_; }
  const Word& prepend_word() const noexcept { return prepend_; }
  std::string describe() const;

 private:
  struct Base;
  Ray(std::shared_ptr<Base> base, std::size_t shift, Word prepend);
  std::shared_ptr<Base> base_;
  std::size_t shift_ = 0;
  Word prepend_;
};

// Fixed points for every admissible seed of a substitution, otherwise the
// single canonical word.  Matrix shifts have no canonical rays.
std::vector<Ray> canonical_rays(const GeneratorSpec& gen);

}  // namespace shiftcover

#endif  // SHIFTCOVER_GENERATORS_HPP_
