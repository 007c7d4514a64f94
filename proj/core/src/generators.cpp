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

#include "shiftcover/generators.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "quadratic.hpp"

namespace shiftcover {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_length(std::size_t n) {
  if (n > kSafetyBound)
    throw HorizonError("requested prefix " + std::to_string(n) +
                       " exceeds safety bound " + std::to_string(kSafetyBound));
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ConfigError("not an integer: '" + std::string(s) + "'");
  return v;
}

std::string digits_str(const std::vector<unsigned>& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out;
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  auto slash = text.find('/');
  Fraction f;
  if (slash == std::string_view::npos) {
    f.num = parse_int(text);
  } else {
    f.num = parse_int(text.substr(0, slash));
    f.den = parse_int(text.substr(slash + 1));
  }
  if (f.den == 0) throw ConfigError("zero denominator in '" +
                                    std::string(text) + "'");
  if (f.den < 0) {
    f.num = -f.num;
    f.den = -f.den;
  }
  std::int64_t g = std::gcd(f.num, f.den);
  if (g > 1) {
    f.num /= g;
    f.den /= g;
  }
  return f;
}

std::string Fraction::str() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

SubstitutionSystem SubstitutionSystem::from_strings(
    const std::vector<std::string>& r, char seed) {
  SubstitutionSystem sys;
  for (const auto& s : r) sys.rules.push_back(Word::parse(s));
  sys.seed = Alphabet::parse_glyph(seed);
  return sys;
}

unsigned SturmianSpec::digit(std::size_t i) const {
  if (i == 0) return 0;
  if (i <= cf_digits.size()) return cf_digits[i - 1];
  if (cf_period.empty()) return 0;
  return cf_period[(i - 1 - cf_digits.size()) % cf_period.size()];
}

std::size_t SturmianSpec::digit_count() const {
  return cf_period.empty() ? cf_digits.size()
                           : std::numeric_limits<std::size_t>::max();
}

ToeplitzSpec ToeplitzSpec::parse(std::string_view text) {
  ToeplitzSpec spec;
  for (char c : text) {
    if (c == '?')
      spec.pattern.push_back(std::nullopt);
    else
      spec.pattern.push_back(Alphabet::parse_glyph(c));
  }
  return spec;
}

std::size_t ToeplitzSpec::hole_count() const {
  return static_cast<std::size_t>(
      std::count(pattern.begin(), pattern.end(), std::nullopt));
}

std::string ToeplitzSpec::str() const {
  std::string out;
  for (const auto& p : pattern) out.push_back(p ? Alphabet::glyph(*p) : '?');
  return out;
}

std::size_t alphabet_size(const GeneratorSpec& gen) {
  return std::visit(
      Overloaded{
          [](const SubstitutionSystem& s) { return s.alphabet_size(); },
          [](const SturmianSpec&) { return std::size_t{2}; },
          [](const ToeplitzSpec& t) {
            std::size_t m = 0;
            for (const auto& p : t.pattern)
              if (p) m = std::max<std::size_t>(m, p->id + 1u);
            return std::max<std::size_t>(m, 1);
          },
          [](const MatrixSFT& m) { return m.transition.size(); }},
      gen);
}

std::string describe(const GeneratorSpec& gen) {
  return std::visit(
      Overloaded{
          [](const SubstitutionSystem& s) {
            std::string out = "substitution{";
            for (std::size_t a = 0; a < s.rules.size(); ++a) {
              if (a) out += ",";
              out += Alphabet::glyph(Symbol{static_cast<std::uint8_t>(a)});
              out += "->" + s.rules[a].str();
            }
            out += ";seed=";
            out += Alphabet::glyph(s.seed);
            return out + "}";
          },
          [](const SturmianSpec& s) {
            std::string out = "sturmian{digits=[" + digits_str(s.cf_digits) +
                              "],period=[" + digits_str(s.cf_period) + "]";
            if (s.intercept)
              out += ",rho=" + s.intercept->rational.str() + "+" +
                     s.intercept->alpha_coeff.str() + "*alpha";
            return out + "}";
          },
          [](const ToeplitzSpec& t) { return "toeplitz{" + t.str() + "}"; },
          [](const MatrixSFT& m) {
            std::string out = "sft{";
            for (std::size_t i = 0; i < m.transition.size(); ++i) {
              if (i) out += "/";
              for (auto v : m.transition[i]) out += v ? '1' : '0';
            }
            return out + "}";
          }},
      gen);
}

void validate(const GeneratorSpec& gen) {
  std::visit(
      Overloaded{
          [](const SubstitutionSystem& s) {
            const std::size_t a = s.rules.size();
            if (a == 0 || a > Alphabet::kMaxSize)
              throw ConfigError("substitution needs 1..36 rules");
            for (const Word& r : s.rules) {
              if (r.empty())
                throw ConfigError("substitution rule with empty image");
              for (Symbol x : r)
                if (x.id >= a)
                  throw ConfigError("substitution image uses symbol outside "
                                    "the rule alphabet");
            }
            if (s.seed.id >= a) throw ConfigError("seed outside alphabet");
            if (s.rules[s.seed.id][0] != s.seed)
              throw ConstructionError(
                  "rules(seed) does not begin with the seed; iteration does "
                  "not converge to a fixed point");
          },
          [](const SturmianSpec& s) {
            if (s.cf_digits.empty() && s.cf_period.empty())
              throw ConfigError("sturmian spec needs continued-fraction "
                                "digits");
            for (unsigned d : s.cf_digits)
              if (d == 0) throw ConfigError("continued-fraction digit 0");
            for (unsigned d : s.cf_period)
              if (d == 0) throw ConfigError("continued-fraction digit 0");
            if (s.intercept && (s.intercept->rational.den <= 0 ||
                                s.intercept->alpha_coeff.den <= 0))
              throw ConfigError("intercept denominators must be positive");
          },
          [](const ToeplitzSpec& t) {
            if (t.pattern.empty()) throw ConfigError("empty toeplitz pattern");
            if (t.hole_count() == 0)
              throw ConstructionError(
                  "toeplitz pattern has no hole: the word is periodic");
            if (t.hole_count() == t.pattern.size())
              throw ConstructionError("toeplitz pattern has no fixed symbol");
            if (!t.pattern[0])
              throw ConstructionError(
                  "toeplitz pattern starts with a hole: the first symbol "
                  "would fill itself");
          },
          [](const MatrixSFT& m) {
            const std::size_t n = m.transition.size();
            if (n == 0 || n > Alphabet::kMaxSize)
              throw ConfigError("matrix must be 1..36 square");
            for (const auto& row : m.transition) {
              if (row.size() != n) throw ConfigError("matrix is not square");
              for (auto v : row)
                if (v > 1) throw ConfigError("matrix entries must be 0 or 1");
            }
            for (std::size_t i = 0; i < n; ++i) {
              bool row = false, col = false;
              for (std::size_t j = 0; j < n; ++j) {
                row = row || m.transition[i][j];
                col = col || m.transition[j][i];
              }
              if (!row || !col)
                throw ConfigError("matrix has an all-zero row or column");
            }
          }},
      gen);
}

namespace {

bool substitution_primitive(const SubstitutionSystem& s) {
  const std::size_t a = s.rules.size();
  std::vector<std::vector<bool>> m(a, std::vector<bool>(a, false));
  for (std::size_t i = 0; i < a; ++i)
    for (Symbol x : s.rules[i]) m[i][x.id] = true;
  auto p = m;
  // A primitive 0-1 matrix has a positive power of exponent at most
  // (a-1)^2 + 1.
  const std::size_t limit = (a - 1) * (a - 1) + 1;
  for (std::size_t e = 1; e <= limit; ++e) {
    bool all = true;
    for (const auto& row : p)
      for (bool v : row) all = all && v;
    if (all) return true;
    std::vector<std::vector<bool>> q(a, std::vector<bool>(a, false));
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t k = 0; k < a; ++k)
        if (p[i][k])
          for (std::size_t j = 0; j < a; ++j)
            if (m[k][j]) q[i][j] = true;
    p = std::move(q);
  }
  return false;
}

constexpr std::size_t kPeriodProbe = 4096;

}  // namespace

GeneratorTags classify(const GeneratorSpec& gen) {
  validate(gen);
  GeneratorTags tags;
  std::visit(
      Overloaded{
          [&](const SubstitutionSystem& s) {
            tags.primitive = substitution_primitive(s);
            if (!tags.primitive) tags.notes.push_back("non-primitive");
            if (s.rules[s.seed.id].size() == 1) {
              tags.periodic = true;
              tags.notes.push_back("constant seed rule: fixed point is "
                                   "periodic");
            } else if (looks_periodic(substitution_prefix(s, kPeriodProbe))) {
              tags.periodic = true;
              tags.notes.push_back("fixed-point prefix is periodic");
            }
          },
          [&](const SturmianSpec& s) {
            if (!s.quadratic()) {
              tags.periodic = true;
              tags.notes.push_back("rational slope: word is periodic");
            }
          },
          [&](const ToeplitzSpec& t) {
            if (looks_periodic(toeplitz_word(t, kPeriodProbe))) {
              tags.periodic = true;
              tags.notes.push_back("filled word prefix is periodic");
            }
          },
          [&](const MatrixSFT&) {
            tags.minimal_source = false;
            tags.notes.push_back("matrix shift: not minimal");
          }},
      gen);
  return tags;
}

Word substitution_prefix(const SubstitutionSystem& sys, std::size_t n) {
  check_length(n);
  validate(GeneratorSpec(sys));
  const Word& head = sys.rules[sys.seed.id];
  Word out;
  out.reserve(n);
  if (head.size() == 1) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(sys.seed);
    return out;
  }
  // x = rules(x_0) rules(x_1) ...; the image of x_0 already extends x_0, so
  // the read position always trails the write position.
  out += head;
  for (std::size_t i = 1; out.size() < n; ++i) out += sys.rules[out[i].id];
  return out.prefix(n);
}

Word standard_sturmian_prefix(const SturmianSpec& spec, std::size_t n) {
  check_length(n);
  validate(GeneratorSpec(spec));
  if (n == 0) return {};
  Word prev = Word::parse("1");
  Word cur = Word::parse("0");
  for (std::size_t k = 1; cur.size() < n; ++k) {
    if (k > spec.digit_count())
      throw HorizonError("standard word for a rational slope has length " +
                         std::to_string(cur.size()) + " < " +
                         std::to_string(n));
    Word next;
    for (unsigned r = 0; r < spec.digit(k); ++r) next += cur;
    next += prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.prefix(n);
}

Word mechanical_word(const SturmianSpec& spec, std::size_t n) {
  check_length(n);
  validate(GeneratorSpec(spec));
  if (!spec.quadratic())
    throw UnsupportedArithmetic(
        "mechanical words need a quadratic irrational slope "
        "(eventually periodic digits)");
  detail::QuadraticField field = detail::slope_of(spec);
  Intercept rho = spec.intercept.value_or(Intercept{{0, 1}, {1, 1}});
  detail::Quad x = field.rational(rho.rational) +
                   field.times_alpha(rho.alpha_coeff);
  Word out;
  out.reserve(n);
  auto prev = field.floor(x);
  for (std::size_t k = 0; k < n; ++k) {
    x = x + field.alpha();
    auto cur = field.floor(x);
    out.push_back(
        Symbol{static_cast<std::uint8_t>((cur - prev).convert_to<int>())});
    prev = cur;
  }
  return out;
}

Word toeplitz_word(const ToeplitzSpec& spec, std::size_t n) {
  check_length(n);
  validate(GeneratorSpec(spec));
  const std::size_t p = spec.pattern.size();
  const std::size_t q = spec.hole_count();
  std::vector<std::size_t> rank(p, 0);
  for (std::size_t r = 0, h = 0; r < p; ++r) {
    rank[r] = h;
    if (!spec.pattern[r]) ++h;
  }
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Position i holds the (i/p * q + rank)-th symbol of the word itself
    // whenever it falls on a hole; the index strictly decreases.
    std::size_t j = i;
    while (!spec.pattern[j % p]) j = (j / p) * q + rank[j % p];
    out.push_back(*spec.pattern[j % p]);
  }
  return out;
}

Word sft_canonical_path(const MatrixSFT& sft, std::size_t n) {
  check_length(n);
  validate(GeneratorSpec(sft));
  Word out;
  out.reserve(n);
  std::size_t state = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Symbol{static_cast<std::uint8_t>(state)});
    std::vector<std::size_t> next;
    for (std::size_t j = 0; j < sft.transition.size(); ++j)
      if (sft.transition[state][j]) next.push_back(j);
    // Thue-Morse parity picks the successor, which keeps the walk aperiodic
    // whenever a state has two choices.
    std::size_t parity = static_cast<std::size_t>(__builtin_popcountll(i) & 1);
    state = next[parity % next.size()];
  }
  return out;
}

Word canonical_prefix(const GeneratorSpec& gen, std::size_t n) {
  return std::visit(
      Overloaded{
          [n](const SubstitutionSystem& s) { return substitution_prefix(s, n); },
          [n](const SturmianSpec& s) {
            return s.intercept ? mechanical_word(s, n)
                               : standard_sturmian_prefix(s, n);
          },
          [n](const ToeplitzSpec& t) { return toeplitz_word(t, n); },
          [n](const MatrixSFT& m) { return sft_canonical_path(m, n); }},
      gen);
}

namespace {

// p-vector and factor sets of text for lengths 1..max_len.
std::vector<WordList> text_factors(const Word& text, std::size_t max_len,
                                   std::vector<std::size_t>* counts) {
  std::vector<WordList> by_length(max_len + 1);
  counts->assign(max_len + 1, 0);
  std::string_view all = text.bytes();
  std::unordered_set<std::string_view> seen;
  for (std::size_t n = 1; n <= max_len; ++n) {
    seen.clear();
    seen.reserve(2 * text.size());
    for (std::size_t i = 0; i + n <= text.size(); ++i) {
      if (seen.insert(all.substr(i, n)).second)
        by_length[n].emplace_back(text.view().subspan(i, n));
    }
    (*counts)[n] = by_length[n].size();
  }
  return by_length;
}

LanguageTable sft_language(const MatrixSFT& m, std::size_t max_len,
                           std::size_t budget) {
  const std::size_t a = m.transition.size();
  std::vector<WordList> by_length(max_len + 1);
  std::size_t total = 0;
  if (max_len >= 1)
    for (std::size_t s = 0; s < a; ++s)
      by_length[1].push_back(
          Word(std::vector<Symbol>{Symbol{static_cast<std::uint8_t>(s)}}));
  for (std::size_t n = 2; n <= max_len; ++n) {
    for (const Word& w : by_length[n - 1]) {
      for (std::size_t j = 0; j < a; ++j) {
        if (!m.transition[w.back().id][j]) continue;
        Word x = w;
        x.push_back(Symbol{static_cast<std::uint8_t>(j)});
        by_length[n].push_back(std::move(x));
        if (++total > budget)
          throw StabilizationError(
              "matrix shift language exceeds word budget at length " +
                  std::to_string(n),
              budget);
      }
    }
  }
  return LanguageTable(Alphabet(a), max_len, std::move(by_length),
                       {describe(GeneratorSpec(m)), 0, 0});
}

}  // namespace

LanguageTable language_from_generator(const GeneratorSpec& gen,
                                      std::size_t max_len,
                                      std::size_t budget) {
  validate(gen);
  if (const auto* m = std::get_if<MatrixSFT>(&gen))
    return sft_language(*m, max_len, budget ? budget : 8'000'000);
  if (budget == 0) budget = std::min<std::size_t>(kSafetyBound,
                                                  256 * max_len + 65536);
  // The language of a Sturmian word depends only on its slope; the standard
  // word is the cheapest representative.
  GeneratorSpec source = gen;
  if (auto* s = std::get_if<SturmianSpec>(&source)) {
    if (!s->quadratic())
      throw ConstructionError(
          "rational slope gives a periodic word; supply a period");
    s->intercept.reset();
  }
  std::size_t length = std::max<std::size_t>(4 * max_len, 16);
  std::vector<std::size_t> prev_counts, counts;
  std::size_t doublings = 0;
  Word text = canonical_prefix(source, length);
  std::vector<WordList> by_length = text_factors(text, max_len, &prev_counts);
  while (true) {
    if (2 * length > budget)
      throw StabilizationError(
          "factor counts did not stabilize within prefix budget " +
              std::to_string(budget),
          budget);
    length *= 2;
    ++doublings;
    text = canonical_prefix(source, length);
    by_length = text_factors(text, max_len, &counts);
    if (counts == prev_counts) break;
    prev_counts = counts;
  }
  return LanguageTable(Alphabet(std::max<std::size_t>(alphabet_size(gen), 1)),
                       max_len, std::move(by_length),
                       {describe(gen), length, doublings});
}

struct Ray::Base {
  std::optional<GeneratorSpec> spec;
  Word chain;
  std::mutex mu;
  Word cache;

  Word get(std::size_t n) {
    if (!spec) {
      if (n > chain.size())
        throw HorizonError("word-chain ray has only " +
                           std::to_string(chain.size()) + " symbols");
      return chain.prefix(n);
    }
    check_length(n);
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() < n) {
      std::size_t want = std::max<std::size_t>(n, 2 * cache.size());
      cache = canonical_prefix(*spec, std::min(want, kSafetyBound));
    }
    return cache.prefix(n);
  }
};

Ray::Ray(GeneratorSpec source, std::size_t shift, Word prepend)
    : base_(std::make_shared<Base>()), shift_(shift),
      prepend_(std::move(prepend)) {
  validate(source);
  base_->spec = std::move(source);
}

Ray::Ray(std::shared_ptr<Base> base, std::size_t shift, Word prepend)
    : base_(std::move(base)), shift_(shift), prepend_(std::move(prepend)) {}

Ray Ray::chain(Word word) {
  auto base = std::make_shared<Base>();
  base->chain = std::move(word);
  return Ray(std::move(base), 0, Word{});
}

std::size_t Ray::available() const noexcept {
  if (base_->spec) return kSafetyBound - shift_;
  std::size_t c = base_->chain.size();
  return c >= shift_ ? c - shift_ + prepend_.size() : prepend_.size();
}

Word Ray::prefix(std::size_t n) const {
  if (n <= prepend_.size()) return prepend_.prefix(n);
  Word out = prepend_;
  out += base_->get(shift_ + n - prepend_.size()).drop(shift_);
  return out;
}

Symbol Ray::at(std::size_t i) const { return prefix(i + 1)[i]; }

Ray Ray::shifted(std::size_t s) const {
  if (s <= prepend_.size()) return Ray(base_, shift_, prepend_.drop(s));
  return Ray(base_, shift_ + (s - prepend_.size()), Word{});
}

Ray Ray::prepended(WordView w) const {
  Word p(w);
  p += prepend_;
  return Ray(base_, shift_, std::move(p));
}

bool Ray::is_chain() const noexcept { return !base_->spec.has_value(); }

const GeneratorSpec* Ray::source() const noexcept {
  return base_->spec ? &*base_->spec : nullptr;
}

std::string Ray::describe() const {
  std::string out = prepend_.empty() ? "" : prepend_.str() + ".";
  if (shift_) out += "sigma^" + std::to_string(shift_) + "(";
  out += base_->spec ? shiftcover::describe(*base_->spec)
                     : "chain[" + std::to_string(base_->chain.size()) + "]";
  if (shift_) out += ")";
  return out;
}

std::vector<Ray> canonical_rays(const GeneratorSpec& gen) {
  validate(gen);
  std::vector<Ray> out;
  if (const auto* s = std::get_if<SubstitutionSystem>(&gen)) {
    out.emplace_back(gen);
    for (std::size_t a = 0; a < s->rules.size(); ++a) {
      if (a == s->seed.id || s->rules[a][0].id != a) continue;
      SubstitutionSystem other = *s;
      other.seed = Symbol{static_cast<std::uint8_t>(a)};
      out.emplace_back(GeneratorSpec(std::move(other)));
    }
  } else if (!std::holds_alternative<MatrixSFT>(gen)) {
    out.emplace_back(gen);
  }
  return out;
}

}  // namespace shiftcover
