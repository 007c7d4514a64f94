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

#include "shiftcover/pastequiv.hpp"

#include <algorithm>
#include <map>

#include "shiftcover/analysis.hpp"

namespace shiftcover {

PastSet past_set(const LanguageTable& table, WordView w, std::size_t l) {
  if (l + w.size() > table.max_len())
    throw HorizonError("past set needs words of length " +
                       std::to_string(l + w.size()) + " > table horizon " +
                       std::to_string(table.max_len()));
  PastSet out;
  out.l = l;
  std::vector<Symbol> buf(l + w.size());
  std::copy(w.begin(), w.end(), buf.begin() + static_cast<std::ptrdiff_t>(l));
  for (const Word& mu : table.words(l)) {
    std::copy(mu.begin(), mu.end(), buf.begin());
    if (table.contains(buf)) out.members.push_back(mu);
  }
  return out;  // table.words(l) is sorted, so members are too
}

Checked<StabilizedPast> stabilized_past_set(const Ray& ray, std::size_t l,
                                            const LanguageTable& table,
                                            std::size_t window) {
  if (l > table.max_len())
    return Checked<StabilizedPast>::fail("depth exceeds table horizon");
  const std::size_t top = std::min(table.max_len() - l, ray.available());
  if (top < window)
    return Checked<StabilizedPast>::fail(
        "table too shallow for a stabilization window at depth " +
        std::to_string(l));
  const Word x = ray.prefix(top);
  PastSet final_set = past_set(table, x, l);
  if (final_set.members.empty())
    return Checked<StabilizedPast>::fail("ray prefix of length " +
                                         std::to_string(top) +
                                         " has no admitted past; the ray is "
                                         "not a point of this shift");
  // Past sets shrink along longer prefixes, so equal size means equal set.
  std::size_t lo = 0, hi = top;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (past_set(table, x.view().first(mid), l).size() == final_set.size())
      hi = mid;
    else
      lo = mid + 1;
  }
  if (top - lo < window)
    return Checked<StabilizedPast>::fail(
        "past set at depth " + std::to_string(l) +
        " still shrinking at prefix length " + std::to_string(lo) +
        " (budget " + std::to_string(top) + ")");
  return Checked<StabilizedPast>::ok(
      {std::move(final_set), PastCertificate{lo, top, window}});
}

std::vector<PastClass> past_classes(const LanguageTable& table, std::size_t n,
                                    std::size_t l) {
  if (n + l > table.max_len())
    throw HorizonError("past classes need n + l <= maxLen");
  std::map<PastSet, WordList> groups;
  for (const Word& w : table.words(n)) groups[past_set(table, w, l)].push_back(w);
  std::vector<PastClass> out;
  for (auto& [past, members] : groups) {
    PastClass c;
    c.l = l;
    c.representative = members.front();
    c.members = std::move(members);
    c.past = past;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const PastClass& a, const PastClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

Checked<IsolationVerdict> is_isolated_in_past_equiv(const Ray& ray,
                                                    std::size_t l,
                                                    const LanguageTable& table,
                                                    std::size_t window) {
  auto sp = stabilized_past_set(ray, l, table, window);
  if (!sp) return Checked<IsolationVerdict>::fail(sp.diagnostic());
  // Words that look special at one length can stop doing so at another, so
  // a ladder of lengths inside the stable range is tried and the smallest
  // class kept.
  IsolationVerdict v;
  v.cert = sp->cert;
  const std::size_t lo = sp->cert.stable_from + window;
  for (std::size_t T = sp->cert.checked_to;; T = T * 3 / 4) {
    std::size_t size = 0;
    for (const Word& u : table.words(T))
      if (past_set(table, u, l) == sp->past) ++size;
    if (v.word_length == 0 || size < v.class_size) {
      v.class_size = size;
      v.word_length = T;
    }
    if (v.class_size == 1 || T * 3 / 4 < lo || T < 4) break;
  }
  v.isolated = v.class_size == 1;
  return Checked<IsolationVerdict>::ok(v);
}

Checked<UniquePastHorizon> unique_past_horizon(const Ray& ray, std::size_t l,
                                               const LanguageTable& table) {
  auto sp = stabilized_past_set(ray, l, table);
  if (!sp) return Checked<UniquePastHorizon>::fail(sp.diagnostic());
  if (!sp->past.singleton())
    return Checked<UniquePastHorizon>::fail(
        "ray has " + std::to_string(sp->past.size()) +
        " stabilized pasts at depth " + std::to_string(l) +
        "; no unique-past horizon exists");
  const std::size_t top = table.max_len() - l;
  const Word x = ray.prefix(std::min(top, ray.available()));
  for (std::size_t n = 0; n + 1 <= x.size(); ++n) {
    WordView head = x.view().first(n + 1);
    if (past_set(table, head, l).size() != 1) continue;
    // Exhaustive check over every admitted extension of the prefix.
    bool all = true;
    for (std::size_t len = n + 1; len <= top && all; ++len) {
      const WordList& words = table.words(len);
      auto it = std::lower_bound(words.begin(), words.end(), Word(head));
      for (; it != words.end() && it->starts_with(head); ++it)
        if (past_set(table, *it, l).size() != 1) {
          all = false;
          break;
        }
    }
    if (all) return Checked<UniquePastHorizon>::ok({n, top});
  }
  return Checked<UniquePastHorizon>::fail(
      "no unique-past horizon within table (scanned to length " +
      std::to_string(top) + ")");
}

Checked<IsolationHorizon> isolation_horizon(const SpecialRay& ray,
                                            const LanguageTable& table,
                                            const StarStarReport& gate,
                                            IsolationGrid grid) {
  if (!gate.pass)
    return Checked<IsolationHorizon>::fail(
        "refused: (**) required for the isolation horizon");
  if (grid.l_max <= grid.n_max)
    return Checked<IsolationHorizon>::fail("grid needs l_max > n_max");
  IsolationHorizon out;
  out.grid = grid;
  std::vector<bool> row_ok(grid.n_max + 1, true);
  for (std::size_t n = 0; n <= grid.n_max; ++n) {
    Ray shifted = ray.ray.shifted(n);
    for (std::size_t l = n + 1; l <= grid.l_max; ++l) {
      auto v = is_isolated_in_past_equiv(shifted, l, table);
      if (!v) return Checked<IsolationHorizon>::fail(v.diagnostic());
      ++out.pairs_tested;
      if (!v->isolated) {
        row_ok[n] = false;
        out.non_isolated.emplace_back(n, l);
      }
    }
  }
  std::size_t N = grid.n_max + 1;
  while (N > 0 && row_ok[N - 1]) --N;
  if (N > grid.n_max)
    return Checked<IsolationHorizon>::fail(
        "no isolation horizon within grid n <= " + std::to_string(grid.n_max) +
        ", l <= " + std::to_string(grid.l_max));
  out.n = N;
  return Checked<IsolationHorizon>::ok(std::move(out));
}

}  // namespace shiftcover
