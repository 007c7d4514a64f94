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

#include "shiftcover/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace shiftcover {

namespace {

bool is_left_special(const LanguageTable& table, WordView w) {
  return left_extensions(table, w).size() >= 2;
}

// Union-find over ray indices.
struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ComplexityProfile complexity(const LanguageTable& table) {
  ComplexityProfile out;
  const std::size_t N = table.max_len();
  for (std::size_t n = 1; n <= N; ++n) out.values.push_back(table.count(n));
  for (std::size_t n = 1; n < N; ++n)
    out.first_differences.push_back(static_cast<std::int64_t>(out.p(n + 1)) -
                                    static_cast<std::int64_t>(out.p(n)));
  for (std::size_t n = 0; n < N; ++n)
    out.left_special_counts.push_back(left_special_words(table, n).size());
  return out;
}

WordList left_special_words(const LanguageTable& table, std::size_t n) {
  if (n + 1 > table.max_len())
    throw HorizonError("left special words of length " + std::to_string(n) +
                       " need table horizon " + std::to_string(n + 1));
  WordList out;
  for (const Word& w : table.words(n))
    if (is_left_special(table, w)) out.push_back(w);
  return out;
}

GrowthReport bounded_growth_check(const ComplexityProfile& profile,
                                  std::size_t bound) {
  GrowthReport r;
  r.bound = bound;
  for (std::size_t i = 0; i < profile.first_differences.size(); ++i) {
    std::int64_t d = profile.first_differences[i];
    r.max_difference = std::max(r.max_difference, d);
    if (d > static_cast<std::int64_t>(bound) && !r.first_failure)
      r.first_failure = i + 1;
  }
  r.pass = !r.first_failure.has_value();
  for (std::size_t c : profile.left_special_counts)
    r.max_left_special = std::max(r.max_left_special, c);
  r.left_special_within_bound = r.max_left_special <= bound;
  return r;
}

RaySearch left_special_rays(const LanguageTable& table,
                            const GeneratorSpec& gen, std::size_t horizon,
                            std::size_t shift_bound) {
  RaySearch out;
  if (table.max_len() < 2)
    throw HorizonError("left special rays need maxLen >= 2");
  const std::size_t D = table.max_len() - 1;
  if (horizon > D)
    throw HorizonError("ray horizon " + std::to_string(horizon) +
                       " needs table horizon " + std::to_string(horizon + 1));
  out.horizon = horizon;
  out.confirm_depth = D;
  out.shift_bound = shift_bound ? shift_bound : D;
  std::vector<WordList> ls(D + 1);
  for (std::size_t n = 0; n <= D; ++n) {
    ls[n] = left_special_words(table, n);
    out.branch_counts.push_back(ls[n].size());
  }
  auto max_over = [&](std::size_t a, std::size_t b) {  // (a, b]
    std::size_t m = 0;
    for (std::size_t n = a + 1; n <= b; ++n) m = std::max(m, ls[n].size());
    return m;
  };
  for (std::size_t h : {horizon, D}) {
    if (h >= 8 && max_over(h / 2, h) > max_over(h / 4, h / 2)) {
      out.diagnostic = "Sp_l possibly infinite: left special branches grow "
                       "from " + std::to_string(max_over(h / 4, h / 2)) +
                       " to " + std::to_string(max_over(h / 2, h)) +
                       " below length " + std::to_string(h);
      return out;
    }
  }
  // Candidate points: sigma^m of every canonical word, keyed by D-prefix.
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> seen;
  std::vector<Ray> bases = canonical_rays(gen);
  for (std::size_t b = 0; b < bases.size(); ++b) {
    Word text = bases[b].prefix(out.shift_bound + D);
    for (std::size_t m = 0; m <= out.shift_bound; ++m) {
      std::string key(text.bytes().substr(m, D));
      seen.emplace(std::move(key), std::make_pair(b, m));
    }
  }
  for (const Word& branch : ls[horizon]) {
    std::vector<const Word*> below;
    for (const Word& d : ls[D])
      if (d.starts_with(branch)) below.push_back(&d);
    if (below.empty()) continue;  // dies before the confirm depth
    const Word* best = nullptr;
    std::pair<std::size_t, std::size_t> best_src{0, 0};
    for (const Word* d : below) {
      auto it = seen.find(std::string(d->bytes()));
      if (it == seen.end()) continue;
      if (!best || it->second.second < best_src.second) {
        best = d;
        best_src = it->second;
      }
    }
    SpecialRay r{best ? bases[best_src.first].shifted(best_src.second)
                      : Ray::chain(*below.front()),
                 0, -1, false, std::nullopt, false, false};
    r.matched = best != nullptr;
    const Word p = r.ray.prefix(D);
    std::size_t depth = 0;
    while (depth < D && is_left_special(table, p.view().first(depth + 1)))
      ++depth;
    r.certified_depth = depth;
    out.rays.push_back(std::move(r));
  }
  return out;
}

TailClassPartition tail_classes(const std::vector<SpecialRay>& rays,
                                std::size_t shift_bound,
                                std::size_t match_horizon) {
  TailClassPartition out;
  out.shift_bound = shift_bound;
  out.match_horizon = match_horizon;
  const std::size_t n = rays.size();
  std::vector<Word> text(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t len = std::min(rays[i].ray.available(),
                               shift_bound + match_horizon);
    text[i] = rays[i].ray.prefix(len);
  }
  // Window sigma^a(ray)[0, h) for a <= m, keyed so shared windows unite.
  Dsu dsu(n);
  std::unordered_map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < n; ++i) {
    if (text[i].size() < match_horizon) continue;
    for (std::size_t a = 0; a + match_horizon <= text[i].size() &&
                            a <= shift_bound; ++a) {
      std::string key(text[i].bytes().substr(a, match_horizon));
      auto [it, fresh] = owner.emplace(std::move(key), i);
      if (!fresh) dsu.unite(i, it->second);
    }
  }
  std::map<std::size_t, std::size_t> id;
  out.class_of.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = dsu.find(i);
    auto [it, fresh] = id.emplace(root, out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
    out.class_of[i] = static_cast<int>(it->second);
  }
  out.n_x = out.classes.size();
  return out;
}

Checked<SpecialRay> j_maximal(const std::vector<SpecialRay>& members,
                              const LanguageTable& table,
                              std::size_t test_depth) {
  if (members.empty()) return Checked<SpecialRay>::fail("empty class");
  const std::size_t T = table.max_len() - 1;
  std::vector<const SpecialRay*> candidates;
  for (const SpecialRay& r : members) {
    bool shifts_plain = true;
    for (std::size_t s = 1; s <= test_depth && shifts_plain; ++s) {
      Ray y = r.ray.shifted(s);
      if (y.available() < T) {
        shifts_plain = false;
        break;
      }
      if (is_left_special(table, y.prefix(T))) shifts_plain = false;
    }
    if (shifts_plain) candidates.push_back(&r);
  }
  if (candidates.size() != 1)
    return Checked<SpecialRay>::fail(
        "inconclusive: " + std::to_string(candidates.size()) +
        " candidates with no left special shift up to depth " +
        std::to_string(test_depth) + "; raise the depth");
  SpecialRay out = *candidates.front();
  out.is_maximal = true;
  return Checked<SpecialRay>::ok(std::move(out));
}

AdjustedSet adjusted_set(const std::vector<SpecialRay>& members,
                         const LanguageTable& table, std::size_t back_depth) {
  AdjustedSet out;
  out.back_depth = back_depth;
  if (table.max_len() < back_depth + 2) return out;
  const std::size_t T = table.max_len() - 1 - back_depth;
  std::vector<Word> prefix;
  for (const SpecialRay& r : members)
    prefix.push_back(r.ray.prefix(std::min(r.ray.available(), T + back_depth)));
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (prefix[i].size() < T) continue;
    WordView x = prefix[i].view().first(T);
    bool hit = false;
    // Another member shifting onto this one.
    for (std::size_t j = 0; j < members.size() && !hit; ++j)
      for (std::size_t s = 1; s <= back_depth && !hit; ++s)
        if (prefix[j].size() >= s + T &&
            std::equal(x.begin(), x.end(), prefix[j].begin() +
                                               static_cast<std::ptrdiff_t>(s)))
          hit = true;
    // A left special backward extension mu x.
    for (std::size_t s = 1; s <= back_depth && !hit; ++s)
      for (const Word& mu : past_set(table, x, s).members)
        if (is_left_special(table, mu + x)) {
          hit = true;
          break;
        }
    if (!hit) {
      SpecialRay r = members[i];
      r.is_adjusted = true;
      out.rays.push_back(std::move(r));
    }
  }
  return out;
}

Checked<DValue> path_count(const Ray& ray, const LanguageTable& table,
                           std::size_t window) {
  const std::size_t N = table.max_len();
  const std::size_t m_max = N / 2;
  if (m_max < window + 1)
    return Checked<DValue>::fail("table too shallow for a path count");
  std::vector<std::size_t> c(m_max + 1, 0);
  for (std::size_t m = 1; m <= m_max; ++m) {
    const std::size_t T = std::min(N - m, ray.available());
    c[m] = past_set(table, ray.prefix(T), m).size();
    if (c[m] == 0)
      return Checked<DValue>::fail("ray prefix has no admitted past");
  }
  // Shallow depths can sit on an early plateau (a ray shifted past its
  // branch point looks unbranched there) and the deepest ones overcount
  // because the prefix evaluated gets short.  Take the longest run.
  std::size_t best = 1, best_len = 0;
  for (std::size_t m = 1; m <= m_max;) {
    std::size_t e = m;
    while (e + 1 <= m_max && c[e + 1] == c[m]) ++e;
    if (e - m + 1 > best_len) {
      best = m;
      best_len = e - m + 1;
    }
    m = e + 1;
  }
  if (best_len < window + 1)
    return Checked<DValue>::fail(
        "unbounded d: past counts never constant over a window up to depth " +
        std::to_string(m_max) + " (last count " + std::to_string(c[m_max]) +
        ")");
  return Checked<DValue>::ok(
      {c[best], best, window, std::min(N - best, ray.available())});
}

StarReport property_star_check(const LanguageTable& table, std::size_t n,
                               std::size_t search_horizon) {
  if (n + search_horizon > table.max_len())
    throw HorizonError("property (*) search needs n + h <= maxLen");
  StarReport r;
  r.n = n;
  r.search_horizon = search_horizon;
  WordList hit;
  for (const Word& w : table.words(search_horizon)) {
    PastSet p = past_set(table, w, n);
    if (p.singleton()) hit.push_back(p.members.front());
  }
  normalize(hit);
  for (const Word& mu : table.words(n))
    if (!contains_sorted(hit, mu)) r.unwitnessed.push_back(mu);
  r.witnessed = table.count(n) - r.unwitnessed.size();
  r.pass = r.unwitnessed.empty();
  return r;
}

StarStarReport property_star_star_check(const LanguageTable& table,
                                        const RaySearch& rays,
                                        const StarStarConfig& config) {
  StarStarReport r;
  bool star_ok = true;
  for (std::size_t n = 1; n <= config.max_n; ++n) {
    std::size_t h = config.search_horizon ? config.search_horizon
                                          : table.max_len() - n;
    if (n + h > table.max_len()) h = table.max_len() - n;
    r.star.push_back(property_star_check(table, n, h));
    if (!r.star.back().pass) {
      star_ok = false;
      r.reasons.push_back("property (*) fails at n=" + std::to_string(n) +
                          " (" +
                          std::to_string(r.star.back().unwitnessed.size()) +
                          " unwitnessed)");
    }
  }
  r.rays_finite = rays.finite();
  if (!r.rays_finite) r.reasons.push_back(*rays.diagnostic);
  for (const SpecialRay& s : rays.rays) {
    Word p = s.ray.prefix(std::min(s.ray.available(), rays.confirm_depth));
    if (looks_periodic(p)) {
      r.periodic_ray = true;
      r.reasons.push_back("periodic left special ray " + s.ray.describe());
    }
  }
  if (config.tags.periodic)
    r.reasons.push_back("periodic generator: " +
                        (config.tags.notes.empty() ? std::string("tagged")
                                                   : config.tags.notes[0]));
  r.pass = star_ok && r.rays_finite && !r.periodic_ray && !config.tags.periodic;
  return r;
}

}  // namespace shiftcover
