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

// Finite words over small alphabets and the length-bounded language table.

#ifndef SHIFTCOVER_WORDS_HPP_
#define SHIFTCOVER_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shiftcover/error.hpp"

namespace shiftcover {

struct Symbol {
  std::uint8_t id = 0;
  friend auto operator<=>(Symbol, Symbol) = default;
};
static_assert(sizeof(Symbol) == 1);

// Symbols print as 0-9 then a-z, so alphabets of up to 36 letters are
// representable in text form.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 36;

  explicit Alphabet(std::size_t size);
  std::size_t size() const noexcept { return size_; }
  bool contains(Symbol s) const noexcept { return s.id < size_; }
  Symbol at(std::size_t i) const;

  static char glyph(Symbol s);
  static Symbol parse_glyph(char c);

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::size_t size_;
};

using WordView = std::span<const Symbol>;

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : s_(std::move(symbols)) {}
  Word(WordView v) : s_(v.begin(), v.end()) {}  // NOLINT(runtime/explicit)

  // "0100" -> symbols {0,1,0,0}; '0'-'9' and 'a'-'z'.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return s_.size(); }
  bool empty() const noexcept { return s_.empty(); }
  Symbol operator[](std::size_t i) const { return s_[i]; }
  Symbol back() const { return s_.back(); }
  auto begin() const noexcept { return s_.begin(); }
  auto end() const noexcept { return s_.end(); }
  const Symbol* data() const noexcept { return s_.data(); }
  WordView view() const noexcept { return {s_.data(), s_.size()}; }
  operator WordView() const noexcept { return view(); }  // NOLINT

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word slice(std::size_t begin, std::size_t end) const;
  Word drop(std::size_t n) const { return slice(n, size()); }
  bool starts_with(WordView p) const;
  bool ends_with(WordView p) const;

  void push_back(Symbol s) { s_.push_back(s); }
  void reserve(std::size_t n) { s_.reserve(n); }
  Word& operator+=(WordView other);
  friend Word operator+(Word a, WordView b) {
    a += b;
    return a;
  }

  std::string str() const;
  std::string_view bytes() const noexcept {
    return {reinterpret_cast<const char*>(s_.data()), s_.size()};
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> s_;
};

inline std::string_view bytes_of(WordView v) noexcept {
  return {reinterpret_cast<const char*>(v.data()), v.size()};
}

struct WordHash {
  using is_transparent = void;
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.bytes());
  }
  std::size_t operator()(WordView v) const noexcept {
    return std::hash<std::string_view>{}(bytes_of(v));
  }
};

// Sorted, duplicate-free list of words; the canonical "set of words".
using WordList = std::vector<Word>;
void normalize(WordList& words);
bool contains_sorted(const WordList& words, WordView w);
std::string join(const WordList& words, std::string_view sep = ",");

struct TableCertificate {
  std::string source;
  std::size_t prefix_length = 0;
  std::size_t doublings = 0;
};

// All admitted words of length 0..maxLen.  Immutable and cheap to copy.
class LanguageTable {
 public:
  LanguageTable(Alphabet alphabet, std::size_t max_len,
                std::vector<WordList> by_length, TableCertificate cert = {});

  const Alphabet& alphabet() const noexcept;
  std::size_t max_len() const noexcept;
  const WordList& words(std::size_t n) const;
  std::size_t count(std::size_t n) const { return words(n).size(); }
  bool contains(WordView w) const;
  const TableCertificate& certificate() const noexcept;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// Distinct length-n factors of text, sorted.
WordList factors(WordView text, std::size_t n);

struct Violation {
  enum class Kind { kAlphabet, kLength, kFactoriality, kRightExtension,
                    kLeftExtension };
  Kind kind;
  Word word;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::size_t count(Violation::Kind kind) const;
};

ValidationReport validate_table(const LanguageTable& table);

// Least p >= 1 with w[i] == w[i+p] for all valid i (|w| when none).
std::size_t smallest_period(WordView w);
// Periodicity surrogate: w has a period of at most |w| / 3.
bool looks_periodic(WordView w);

// {a : a w admitted}.
std::vector<Symbol> left_extensions(const LanguageTable& table, WordView w);
std::vector<Symbol> right_extensions(const LanguageTable& table, WordView w);

}  // namespace shiftcover

#endif  // SHIFTCOVER_WORDS_HPP_
