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

#ifndef SHIFTCOVER_TESTS_HELPERS_HPP_
#define SHIFTCOVER_TESTS_HELPERS_HPP_

#include <string>
#include <vector>

#include "oracle.hpp"
#include "shiftcover/generators.hpp"
#include "shiftcover/words.hpp"

namespace testing_support {

inline oracle::StringSet strings(const shiftcover::WordList& words) {
  oracle::StringSet out;
  for (const shiftcover::Word& w : words) out.insert(w.str());
  return out;
}

inline std::string str(const std::vector<shiftcover::Symbol>& s) {
  return shiftcover::Word(s).str();
}

inline shiftcover::GeneratorSpec fibonacci() {
  return shiftcover::SubstitutionSystem::from_strings({"01", "0"});
}

inline shiftcover::GeneratorSpec thue_morse() {
  return shiftcover::SubstitutionSystem::from_strings({"01", "10"});
}

inline shiftcover::GeneratorSpec full_shift() {
  return shiftcover::MatrixSFT{{{1, 1}, {1, 1}}};
}

inline shiftcover::GeneratorSpec golden_mean() {
  return shiftcover::MatrixSFT{{{1, 1}, {1, 0}}};
}

// Standard words with every exponent 1: the Fibonacci slope.
inline shiftcover::SturmianSpec golden_sturmian() {
  shiftcover::SturmianSpec s;
  s.cf_digits = {1};
  s.cf_period = {1};
  return s;
}

inline shiftcover::SturmianSpec golden_sturmian(shiftcover::Intercept rho) {
  shiftcover::SturmianSpec s = golden_sturmian();
  s.intercept = rho;
  return s;
}

// Frequency of the letter 1 in the Fibonacci word, (3 - sqrt 5) / 2.
inline long double golden_alpha() { return (3.0L - std::sqrt(5.0L)) / 2.0L; }

inline std::string fibonacci_text(std::size_t n) {
  return oracle::substitution({"01", "0"}, '0', n);
}

inline std::string thue_morse_text(std::size_t n) {
  return oracle::substitution({"01", "10"}, '0', n);
}

}  // namespace testing_support

#endif  // SHIFTCOVER_TESTS_HELPERS_HPP_
