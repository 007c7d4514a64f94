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

#include "shiftcover/cover.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>

namespace shiftcover {

namespace {

using Key = std::pair<Word, PastSet>;

bool key_less(const CoverClass& a, const Word& p, const PastSet& s) {
  if (a.prefix != p) return a.prefix < p;
  return a.past < s;
}

// Admitted length-H words starting with p.
std::pair<WordList::const_iterator, WordList::const_iterator> with_prefix(
    const WordList& words, WordView p) {
  auto lo = std::lower_bound(
      words.begin(), words.end(), p, [](const Word& w, WordView q) {
        return std::lexicographical_compare(w.begin(), w.end(), q.begin(),
                                            q.end());
      });
  auto hi = lo;
  while (hi != words.end() && hi->starts_with(p)) ++hi;
  return {lo, hi};
}

std::vector<CoverClass> build_classes(const LanguageTable& table,
                                      LevelIndex level, std::size_t H) {
  std::map<Key, Word> seen;
  // Many words share a tail; cache its past set.
  std::unordered_map<std::string_view, PastSet> tail_cache;
  for (const Word& w : table.words(H)) {
    WordView v = w.view();
    WordView tail = v.subspan(level.k);
    auto it = tail_cache.find(bytes_of(tail));
    if (it == tail_cache.end())
      it = tail_cache.emplace(bytes_of(tail), past_set(table, tail, level.l))
               .first;
    Key key{Word(v.first(level.k)), it->second};
    seen.try_emplace(std::move(key), w);  // words are sorted: least witness
  }
  std::vector<CoverClass> out;
  out.reserve(seen.size());
  for (auto& [key, witness] : seen)
    out.push_back({level, key.first, key.second, witness});
  return out;
}

bool same_keys(const std::vector<CoverClass>& a,
               const std::vector<CoverClass>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].prefix != b[i].prefix || a[i].past != b[i].past) return false;
  return true;
}

}  // namespace

LevelIndex LevelIndex::make(std::size_t k, std::size_t l) {
  if (k < 1 || k > l)
    throw ConfigError("level index needs 1 <= k <= l, got (" +
                      std::to_string(k) + "," + std::to_string(l) + ")");
  return {k, l};
}

std::string LevelIndex::str() const {
  return "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

bool poset_leq(const LevelIndex& a, const LevelIndex& b) {
  return a.k <= b.k && a.defect() <= b.defect();
}

ChainExtraction extract_chain(std::vector<LevelIndex> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  ChainExtraction out;

  // Minimum defect first, smallest k on ties.  Everything left above the
  // pick in the poset is a candidate for the next step.
  std::vector<LevelIndex> rest = family;
  while (!rest.empty()) {
    auto best = std::min_element(
        rest.begin(), rest.end(), [](const LevelIndex& a, const LevelIndex& b) {
          if (a.defect() != b.defect()) return a.defect() < b.defect();
          return a < b;
        });
    LevelIndex pick = *best;
    out.chain.push_back(pick);
    std::vector<LevelIndex> next;
    for (const LevelIndex& y : rest)
      if (y != pick && poset_leq(pick, y)) next.push_back(y);
    rest = std::move(next);
  }

  if (family.size() <= 20) {
    // Longest chain over every comparable pair; family is sorted by k, which
    // is a linear extension of the order.
    std::vector<std::size_t> best(family.size(), 1);
    std::size_t longest = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (poset_leq(family[j], family[i]))
          best[i] = std::max(best[i], best[j] + 1);
      longest = std::max(longest, best[i]);
    }
    out.longest = longest;
  }
  return out;
}

std::optional<std::size_t> QuotientLevel::find(WordView prefix,
                                               const PastSet& past) const {
  Word p(prefix);
  auto it = std::lower_bound(
      classes.begin(), classes.end(), 0,
      [&](const CoverClass& c, int) { return key_less(c, p, past); });
  if (it == classes.end() || it->prefix != p || it->past != past)
    return std::nullopt;
  return static_cast<std::size_t>(it - classes.begin());
}

bool QuotientLevel::same_classes(const QuotientLevel& other) const {
  return level == other.level && same_keys(classes, other.classes);
}

QuotientLevel quotient_level(const LanguageTable& table, LevelIndex level,
                             std::size_t H) {
  if (level.k < 1 || level.k > level.l)
    throw ConfigError("level index needs 1 <= k <= l");
  if (H < level.k)
    throw HorizonError("quotient horizon " + std::to_string(H) +
                       " shorter than prefix length " +
                       std::to_string(level.k));
  if (H + level.l > table.max_len())
    throw HorizonError("quotient at " + level.str() + " with horizon " +
                       std::to_string(H) + " needs words of length " +
                       std::to_string(H + level.l) + " > table horizon " +
                       std::to_string(table.max_len()));
  QuotientLevel q;
  q.level = level;
  q.horizon = H;
  q.classes = build_classes(table, level, H);
  const std::size_t H2 = std::min(2 * H, table.max_len() - level.l);
  q.compared_horizon = H2;
  if (H2 > H) q.stabilized = same_keys(q.classes, build_classes(table, level, H2));
  return q;
}

QuotientLevel stabilized_level(const LanguageTable& table, LevelIndex level,
                               std::size_t h0) {
  std::size_t H = std::max(h0, level.k + 1);
  QuotientLevel q = quotient_level(table, level, H);
  while (!q.stabilized && q.compared_horizon > H) {
    H = q.compared_horizon;
    q = quotient_level(table, level, H);
  }
  return q;
}

bool ClassMap::surjective(std::size_t target_size) const {
  for (std::size_t c : preimage_counts(target_size))
    if (c == 0) return false;
  return true;
}

std::vector<std::size_t> ClassMap::preimage_counts(
    std::size_t target_size) const {
  std::vector<std::size_t> counts(target_size, 0);
  for (std::size_t t : image)
    if (t < target_size) ++counts[t];
  return counts;
}

CoverClass project_class(const CoverClass& c, LevelIndex to) {
  const LevelIndex from = c.level;
  if (!poset_leq(to, from))
    throw ConfigError("no connecting map from " + from.str() + " to " +
                      to.str());
  const std::size_t m = to.l + from.k - to.k;  // <= from.l
  WordView bridge = c.prefix.view().subspan(to.k, from.k - to.k);
  PastSet past;
  past.l = to.l;
  for (const Word& nu : c.past.members) {
    WordView s = nu.view().last(m);
    if (std::equal(bridge.begin(), bridge.end(), s.begin() + to.l))
      past.members.emplace_back(s.first(to.l));
  }
  normalize(past.members);
  return {to, c.prefix.prefix(to.k), std::move(past), c.witness};
}

Checked<ClassMap> connecting_map(const QuotientLevel& hi,
                                 const QuotientLevel& lo) {
  if (!poset_leq(lo.level, hi.level))
    return Checked<ClassMap>::fail(lo.level.str() + " is not below " +
                                   hi.level.str());
  ClassMap map{hi.level, lo.level, {}};
  map.image.reserve(hi.size());
  for (const CoverClass& c : hi.classes) {
    CoverClass img = project_class(c, lo.level);
    auto idx = lo.find(img.prefix, img.past);
    if (!idx)
      return Checked<ClassMap>::fail(
          "image of class " + c.prefix.str() + "|" + c.past.str() + " at " +
          hi.level.str() + " is missing from " + lo.level.str() +
          " (horizons " + std::to_string(hi.horizon) + " and " +
          std::to_string(lo.horizon) + ")");
    map.image.push_back(*idx);
  }
  return Checked<ClassMap>::ok(std::move(map));
}

Checked<ClassMap> shift_on_level(const QuotientLevel& from,
                                 const QuotientLevel& to) {
  if (from.level.l != to.level.l || from.level.k != to.level.k + 1)
    return Checked<ClassMap>::fail("shift runs from (k+1,l) to (k,l); got " +
                                   from.level.str() + " -> " + to.level.str());
  ClassMap map{from.level, to.level, {}};
  map.image.reserve(from.size());
  for (const CoverClass& c : from.classes) {
    Word p = c.prefix.drop(1);
    auto idx = to.find(p, c.past);
    if (!idx)
      return Checked<ClassMap>::fail("shifted class " + p.str() + "|" +
                                     c.past.str() + " missing from " +
                                     to.level.str());
    map.image.push_back(*idx);
  }
  return Checked<ClassMap>::ok(std::move(map));
}

Checked<CoverClass> iota_level(const Ray& ray, LevelIndex level,
                               const LanguageTable& table) {
  if (level.k >= table.max_len())
    return Checked<CoverClass>::fail("prefix length exceeds table horizon");
  auto sp = stabilized_past_set(ray.shifted(level.k), level.l, table);
  if (!sp) return Checked<CoverClass>::fail(sp.diagnostic());
  return Checked<CoverClass>::ok(
      {level, ray.prefix(level.k), sp->past,
       ray.prefix(level.k + sp->cert.stable_from)});
}

LevelIndex ChainSpec::at(std::size_t k) const {
  return LevelIndex::make(k, k + defect + growth * (k - 1));
}

std::vector<LevelIndex> ChainSpec::levels() const {
  std::vector<LevelIndex> out;
  for (std::size_t k = k_min; k <= k_max; ++k) out.push_back(at(k));
  return out;
}

Checked<FiberReport> pi_fiber(const Ray& ray, const ChainSpec& spec,
                              const LanguageTable& table) {
  if (spec.k_min < 1 || spec.k_min > spec.k_max)
    return Checked<FiberReport>::fail("chain needs 1 <= kMin <= kMax");
  const std::size_t k_top = spec.top();
  if (k_top < spec.k_max)
    return Checked<FiberReport>::fail("lookahead below kMax");
  const LevelIndex top = spec.at(k_top);
  if (top.l >= table.max_len())
    return Checked<FiberReport>::fail(
        "lookahead level " + top.str() + " needs a table deeper than " +
        std::to_string(table.max_len()));
  const std::size_t H = spec.horizon ? spec.horizon : table.max_len() - top.l;
  if (H < k_top || H + top.l > table.max_len())
    return Checked<FiberReport>::fail("horizon " + std::to_string(H) +
                                      " incompatible with lookahead level " +
                                      top.str());
  if (ray.available() < k_top)
    return Checked<FiberReport>::fail("ray shorter than lookahead prefix");

  FiberReport rep{ray, spec.levels(), {}, {}, 0, 0, false, H, top};
  const Word x = ray.prefix(k_top);
  const WordList& LH = table.words(H);

  // Fiber at each reported level: classes of words extending x[0,k).
  for (const LevelIndex& lv : rep.chain) {
    auto [b, e] = with_prefix(LH, x.view().first(lv.k));
    std::vector<PastSet> pasts;
    for (auto it = b; it != e; ++it)
      pasts.push_back(past_set(table, it->view().subspan(lv.k), lv.l));
    std::sort(pasts.begin(), pasts.end());
    pasts.erase(std::unique(pasts.begin(), pasts.end()), pasts.end());
    rep.per_level_counts.push_back(pasts.size());
  }
  if (rep.per_level_counts.front() == 0)
    return Checked<FiberReport>::fail("ray prefix is not admitted");

  // Threads: project the top fiber down the chain one level at a time.
  std::vector<CoverClass> alive;
  {
    auto [b, e] = with_prefix(LH, x.view());
    std::vector<PastSet> pasts;
    for (auto it = b; it != e; ++it)
      pasts.push_back(past_set(table, it->view().subspan(top.k), top.l));
    std::sort(pasts.begin(), pasts.end());
    pasts.erase(std::unique(pasts.begin(), pasts.end()), pasts.end());
    for (auto& p : pasts) alive.push_back({top, x, std::move(p), {}});
  }
  std::vector<std::size_t> counts(k_top + 1, 0);
  counts[k_top] = alive.size();
  for (std::size_t k = k_top; k > spec.k_min; --k) {
    const LevelIndex down = spec.at(k - 1);
    std::vector<CoverClass> next;
    for (const CoverClass& c : alive) next.push_back(project_class(c, down));
    std::sort(next.begin(), next.end(),
              [](const CoverClass& a, const CoverClass& b) {
                return a.past < b.past;
              });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const CoverClass& a, const CoverClass& b) {
                             return a.past == b.past;
                           }),
               next.end());
    alive = std::move(next);
    counts[k - 1] = alive.size();
  }
  for (const LevelIndex& lv : rep.chain) rep.thread_counts.push_back(counts[lv.k]);

  rep.thread_count = rep.thread_counts.back();
  std::size_t i = rep.thread_counts.size() - 1;
  while (i > 0 && rep.thread_counts[i - 1] == rep.thread_count) --i;
  rep.stable_from_k = rep.chain[i].k;
  rep.stabilized = rep.thread_counts.size() - i >= spec.window;
  return Checked<FiberReport>::ok(std::move(rep));
}

std::vector<LevelIndex> refinement_levels(LevelIndex level, std::size_t depth,
                                          std::size_t stride) {
  std::vector<LevelIndex> out;
  for (std::size_t j = 1; j <= depth; ++j)
    out.push_back({level.k + stride * j, level.l + stride * j});
  return out;
}

Checked<std::vector<std::size_t>> isolated_classes(
    const QuotientLevel& level, const std::vector<QuotientLevel>& refinements) {
  std::vector<bool> single(level.size(), true);
  for (const QuotientLevel& r : refinements) {
    auto map = connecting_map(r, level);
    if (!map) return Checked<std::vector<std::size_t>>::fail(map.diagnostic());
    auto counts = map->preimage_counts(level.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
      if (counts[i] != 1) single[i] = false;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < single.size(); ++i)
    if (single[i]) out.push_back(i);
  return Checked<std::vector<std::size_t>>::ok(std::move(out));
}

}  // namespace shiftcover
