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

#include "shiftcover/words.hpp"

#include <algorithm>
#include <unordered_set>

namespace shiftcover {

Alphabet::Alphabet(std::size_t size) : size_(size) {
  if (size == 0 || size > kMaxSize)
    throw ConfigError("alphabet size must be in [1, 36], got " +
                      std::to_string(size));
}

Symbol Alphabet::at(std::size_t i) const {
  if (i >= size_) throw Error("symbol index out of range");
  return Symbol{static_cast<std::uint8_t>(i)};
}

char Alphabet::glyph(Symbol s) {
  return s.id < 10 ? static_cast<char>('0' + s.id)
                   : static_cast<char>('a' + (s.id - 10));
}

Symbol Alphabet::parse_glyph(char c) {
  if (c >= '0' && c <= '9') return Symbol{static_cast<std::uint8_t>(c - '0')};
  if (c >= 'a' && c <= 'z')
    return Symbol{static_cast<std::uint8_t>(10 + (c - 'a'))};
  throw ConfigError(std::string("not a symbol glyph: '") + c + "'");
}

Word Word::parse(std::string_view text) {
  std::vector<Symbol> s;
  s.reserve(text.size());
  for (char c : text) s.push_back(Alphabet::parse_glyph(c));
  return Word(std::move(s));
}

Word Word::prefix(std::size_t n) const {
  if (n > size()) throw HorizonError("prefix longer than word");
  return Word(WordView(s_.data(), n));
}

Word Word::suffix(std::size_t n) const {
  if (n > size()) throw HorizonError("suffix longer than word");
  return Word(WordView(s_.data() + (size() - n), n));
}

Word Word::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size()) throw HorizonError("slice out of range");
  return Word(WordView(s_.data() + begin, end - begin));
}

bool Word::starts_with(WordView p) const {
  return p.size() <= size() && std::equal(p.begin(), p.end(), s_.begin());
}

bool Word::ends_with(WordView p) const {
  return p.size() <= size() &&
         std::equal(p.begin(), p.end(), s_.end() - p.size());
}

Word& Word::operator+=(WordView other) {
  s_.insert(s_.end(), other.begin(), other.end());
  return *this;
}

std::string Word::str() const {
  std::string out;
  out.reserve(size());
  for (Symbol s : s_) out.push_back(Alphabet::glyph(s));
  return out;
}

void normalize(WordList& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

bool contains_sorted(const WordList& words, WordView w) {
  auto it = std::lower_bound(
      words.begin(), words.end(), w, [](const Word& a, WordView b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
      });
  return it != words.end() && std::equal(it->begin(), it->end(), w.begin(),
                                         w.end());
}

std::string join(const WordList& words, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i].empty() ? std::string("e") : words[i].str();
  }
  return out;
}

struct LanguageTable::Data {
  Alphabet alphabet{1};
  std::size_t max_len = 0;
  std::vector<WordList> by_length;
  // Views into by_length storage; Data is never copied after construction.
  std::vector<std::unordered_set<std::string_view>> index;
  TableCertificate cert;
};

LanguageTable::LanguageTable(Alphabet alphabet, std::size_t max_len,
                             std::vector<WordList> by_length,
                             TableCertificate cert) {
  auto d = std::make_shared<Data>();
  d->alphabet = alphabet;
  d->max_len = max_len;
  by_length.resize(max_len + 1);
  by_length[0] = WordList{Word{}};
  for (auto& list : by_length) normalize(list);
  d->by_length = std::move(by_length);
  d->index.resize(max_len + 1);
  for (std::size_t n = 0; n <= max_len; ++n) {
    d->index[n].reserve(d->by_length[n].size() * 2);
    for (const Word& w : d->by_length[n]) d->index[n].insert(w.bytes());
  }
  d->cert = std::move(cert);
  d_ = std::move(d);
}

const Alphabet& LanguageTable::alphabet() const noexcept {
  return d_->alphabet;
}

std::size_t LanguageTable::max_len() const noexcept { return d_->max_len; }

const WordList& LanguageTable::words(std::size_t n) const {
  if (n > d_->max_len)
    throw HorizonError("length " + std::to_string(n) +
                       " exceeds table horizon " +
                       std::to_string(d_->max_len));
  return d_->by_length[n];
}

bool LanguageTable::contains(WordView w) const {
  if (w.size() > d_->max_len)
    throw HorizonError("membership query of length " +
                       std::to_string(w.size()) + " exceeds table horizon " +
                       std::to_string(d_->max_len));
  return d_->index[w.size()].count(bytes_of(w)) != 0;
}

const TableCertificate& LanguageTable::certificate() const noexcept {
  return d_->cert;
}

WordList factors(WordView text, std::size_t n) {
  WordList out;
  if (n > text.size()) return out;
  std::unordered_set<std::string_view> seen;
  std::string_view all = bytes_of(text);
  for (std::size_t i = 0; i + n <= text.size(); ++i) {
    if (seen.insert(all.substr(i, n)).second)
      out.emplace_back(text.subspan(i, n));
  }
  normalize(out);
  return out;
}

std::size_t ValidationReport::count(Violation::Kind kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [kind](const Violation& v) { return v.kind == kind; }));
}

ValidationReport validate_table(const LanguageTable& table) {
  ValidationReport report;
  const std::size_t N = table.max_len();
  const Alphabet& A = table.alphabet();
  for (std::size_t n = 0; n <= N; ++n) {
    for (const Word& w : table.words(n)) {
      if (w.size() != n) {
        report.violations.push_back({Violation::Kind::kLength, w,
                                     "stored under length " +
                                         std::to_string(n)});
        continue;
      }
      bool letters_ok = std::all_of(w.begin(), w.end(),
                                    [&](Symbol s) { return A.contains(s); });
      if (!letters_ok) {
        report.violations.push_back(
            {Violation::Kind::kAlphabet, w, "symbol outside alphabet"});
        continue;
      }
      if (n >= 1) {
        WordView v = w.view();
        if (!table.contains(v.first(n - 1)))
          report.violations.push_back({Violation::Kind::kFactoriality, w,
                                       "prefix " + w.prefix(n - 1).str() +
                                           " not admitted"});
        if (!table.contains(v.last(n - 1)))
          report.violations.push_back({Violation::Kind::kFactoriality, w,
                                       "suffix " + w.suffix(n - 1).str() +
                                           " not admitted"});
      }
      if (n < N) {
        if (right_extensions(table, w).empty())
          report.violations.push_back({Violation::Kind::kRightExtension, w,
                                       "no admitted right extension"});
        if (left_extensions(table, w).empty())
          report.violations.push_back({Violation::Kind::kLeftExtension, w,
                                       "no admitted left extension"});
      }
    }
  }
  return report;
}

std::size_t smallest_period(WordView w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  return n - fail[n];
}

bool looks_periodic(WordView w) {
  return w.size() >= 3 && smallest_period(w) <= w.size() / 3;
}

std::vector<Symbol> left_extensions(const LanguageTable& table, WordView w) {
  if (w.size() + 1 > table.max_len())
    throw HorizonError("left extension of length " +
                       std::to_string(w.size() + 1) +
                       " exceeds table horizon");
  std::vector<Symbol> out;
  std::vector<Symbol> buf(w.size() + 1);
  std::copy(w.begin(), w.end(), buf.begin() + 1);
  for (std::size_t a = 0; a < table.alphabet().size(); ++a) {
    buf[0] = Symbol{static_cast<std::uint8_t>(a)};
    if (table.contains(buf)) out.push_back(buf[0]);
  }
  return out;
}

std::vector<Symbol> right_extensions(const LanguageTable& table,
                                     WordView w) {
  if (w.size() + 1 > table.max_len())
    throw HorizonError("right extension of length " +
                       std::to_string(w.size() + 1) +
                       " exceeds table horizon");
  std::vector<Symbol> out;
  std::vector<Symbol> buf(w.begin(), w.end());
  buf.push_back(Symbol{});
  for (std::size_t a = 0; a < table.alphabet().size(); ++a) {
    buf.back() = Symbol{static_cast<std::uint8_t>(a)};
    if (table.contains(buf)) out.push_back(buf.back());
  }
  return out;
}

}  // namespace shiftcover
