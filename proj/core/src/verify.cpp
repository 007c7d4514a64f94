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

#include "shiftcover/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace shiftcover {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- config parsing -------------------------------------------------------

void reject_unknown(const Json& j, std::initializer_list<const char*> keys,
                    const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : keys) ok = ok || it.key() == k;
    if (!ok) throw ConfigError("unknown field '" + it.key() + "' in " + where);
  }
}

std::size_t get_size(const Json& j, const char* key, std::size_t fallback,
                     const std::string& where) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ConfigError(where + "." + key + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string get_string(const Json& j, const char* key,
                       const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ConfigError(where + "." + key + " must be a string");
  return j.at(key).get<std::string>();
}

std::vector<unsigned> get_digits(const Json& j, const char* key,
                                 const std::string& where) {
  std::vector<unsigned> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array())
    throw ConfigError(where + "." + key + " must be an array");
  for (const Json& d : j.at(key)) {
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1)
      throw ConfigError(where + "." + key + " entries must be positive");
    out.push_back(d.get<unsigned>());
  }
  return out;
}

Fraction get_fraction(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return {0, 1};
  const Json& v = j.at(key);
  if (v.is_number_integer()) return {v.get<std::int64_t>(), 1};
  if (!v.is_string())
    throw ConfigError(where + "." + key + " must be a fraction string");
  try {
    return Fraction::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

LevelIndex parse_level(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer() || j[0].get<std::int64_t>() < 1 ||
      j[1].get<std::int64_t>() < 1)
    throw ConfigError(where + " must be a pair [k, l]");
  return LevelIndex::make(j[0].get<std::size_t>(), j[1].get<std::size_t>());
}

ChainSpec parse_chain(const Json& j, ChainSpec c, const std::string& where) {
  reject_unknown(j, {"defect", "kMin", "kMax", "growth", "lookahead",
                     "horizon", "window"},
                 where);
  c.defect = get_size(j, "defect", c.defect, where);
  c.k_min = get_size(j, "kMin", c.k_min, where);
  c.k_max = get_size(j, "kMax", c.k_max, where);
  c.growth = get_size(j, "growth", c.growth, where);
  c.lookahead = get_size(j, "lookahead", c.lookahead, where);
  c.horizon = get_size(j, "horizon", c.horizon, where);
  c.window = get_size(j, "window", c.window, where);
  if (c.k_min < 1 || c.k_min > c.k_max)
    throw ConfigError(where + " needs 1 <= kMin <= kMax");
  if (c.lookahead && c.lookahead < c.k_max)
    throw ConfigError(where + ".lookahead must be at least kMax");
  return c;
}

Json json_of(const Word& w) { return w.str(); }

Json json_of(const PastSet& p) {
  Json a = Json::array();
  for (const Word& w : p.members) a.push_back(w.str());
  return a;
}

}  // namespace

Ray ProbeSpec::ray() const {
  Ray r(system, shift);
  return prepend.empty() ? r : r.prepended(prepend);
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{
      "complexity", "special",  "star",   "oracle",
      "categorical", "isolated", "fibers", "two_sided"};
  return names;
}

GeneratorSpec parse_system(const Json& j) {
  const std::string where = "system";
  if (!j.is_object()) throw ConfigError("system must be an object");
  const std::string type = get_string(j, "type", where);
  GeneratorSpec gen;
  if (type == "substitution") {
    reject_unknown(j, {"type", "rules", "seed"}, where);
    if (!j.contains("rules")) throw ConfigError("substitution needs rules");
    const Json& r = j.at("rules");
    std::vector<std::string> rules;
    if (r.is_array()) {
      for (const Json& x : r) {
        if (!x.is_string()) throw ConfigError("rules must be strings");
        rules.push_back(x.get<std::string>());
      }
    } else if (r.is_object()) {
      rules.resize(r.size());
      for (auto it = r.begin(); it != r.end(); ++it) {
        if (it.key().size() != 1 || !it.value().is_string())
          throw ConfigError("rules map single glyphs to strings");
        std::size_t a = Alphabet::parse_glyph(it.key()[0]).id;
        if (a >= rules.size())
          throw ConfigError("rule keys must be the symbols 0..n-1");
        rules[a] = it.value().get<std::string>();
      }
    } else {
      throw ConfigError("rules must be an array or an object");
    }
    std::string seed = j.contains("seed") ? get_string(j, "seed", where) : "0";
    if (seed.size() != 1) throw ConfigError("seed must be one symbol");
    gen = SubstitutionSystem::from_strings(rules, seed[0]);
  } else if (type == "sturmian") {
    reject_unknown(j, {"type", "cfDigits", "cfPeriod", "intercept"}, where);
    SturmianSpec s;
    s.cf_digits = get_digits(j, "cfDigits", where);
    s.cf_period = get_digits(j, "cfPeriod", where);
    if (j.contains("intercept")) {
      const Json& ic = j.at("intercept");
      reject_unknown(ic, {"rational", "alphaCoeff"}, "system.intercept");
      s.intercept = Intercept{get_fraction(ic, "rational", "system.intercept"),
                              get_fraction(ic, "alphaCoeff",
                                           "system.intercept")};
    }
    gen = s;
  } else if (type == "toeplitz") {
    reject_unknown(j, {"type", "pattern"}, where);
    gen = ToeplitzSpec::parse(get_string(j, "pattern", where));
  } else if (type == "sft") {
    reject_unknown(j, {"type", "matrix"}, where);
    if (!j.contains("matrix") || !j.at("matrix").is_array())
      throw ConfigError("sft needs a matrix");
    MatrixSFT m;
    for (const Json& row : j.at("matrix")) {
      if (!row.is_array()) throw ConfigError("matrix rows must be arrays");
      std::vector<std::uint8_t> r;
      for (const Json& x : row) {
        if (!x.is_number_integer() ||
            (x.get<int>() != 0 && x.get<int>() != 1))
          throw ConfigError("matrix entries must be 0 or 1");
        r.push_back(static_cast<std::uint8_t>(x.get<int>()));
      }
      m.transition.push_back(std::move(r));
    }
    gen = m;
  } else {
    throw ConfigError("unknown system type '" + type + "'");
  }
  validate(gen);
  return gen;
}

SystemConfig parse_config(const Json& j) {
  reject_unknown(j, {"name", "system", "horizons", "expect", "probes",
                     "suites", "out"},
                 "config");
  SystemConfig cfg;
  cfg.name = j.contains("name") ? get_string(j, "name", "config") : "system";
  if (!j.contains("system")) throw ConfigError("config needs a system");
  cfg.system = parse_system(j.at("system"));

  if (!j.contains("horizons")) throw ConfigError("config needs horizons");
  const Json& h = j.at("horizons");
  const std::string hw = "horizons";
  reject_unknown(h, {"maxLen", "H", "defect", "window", "complexityUpTo",
                     "starMaxN", "oracleMaxL", "oracleMaxH", "samples", "seed",
                     "isolationDepth", "isolationStride", "levels",
                     "fiberChain", "orbitChain", "orbitShifts"},
                 hw);
  Horizons& z = cfg.horizons;
  if (!h.contains("maxLen")) throw ConfigError("horizons.maxLen is required");
  z.max_len = get_size(h, "maxLen", 0, hw);
  z.H = get_size(h, "H", 0, hw);
  z.defect = get_size(h, "defect", z.defect, hw);
  z.window = get_size(h, "window", z.window, hw);
  z.complexity_up_to = get_size(h, "complexityUpTo", z.complexity_up_to, hw);
  z.star_max_n = get_size(h, "starMaxN", z.star_max_n, hw);
  z.oracle_max_l = get_size(h, "oracleMaxL", z.oracle_max_l, hw);
  z.oracle_max_h = get_size(h, "oracleMaxH", z.oracle_max_h, hw);
  z.samples = get_size(h, "samples", z.samples, hw);
  z.seed = get_size(h, "seed", z.seed, hw);
  z.isolation_depth = get_size(h, "isolationDepth", z.isolation_depth, hw);
  z.isolation_stride = get_size(h, "isolationStride", z.isolation_stride, hw);
  z.orbit_shifts = get_size(h, "orbitShifts", z.orbit_shifts, hw);
  if (h.contains("levels")) {
    z.levels.clear();
    if (!h.at("levels").is_array())
      throw ConfigError("horizons.levels must be an array");
    for (const Json& lv : h.at("levels"))
      z.levels.push_back(parse_level(lv, "horizons.levels entry"));
  }
  z.fiber_chain.defect = z.defect;
  z.fiber_chain.window = z.window;
  z.orbit_chain.defect = z.defect;
  z.orbit_chain.window = z.window;
  if (h.contains("fiberChain"))
    z.fiber_chain = parse_chain(h.at("fiberChain"), z.fiber_chain,
                                "horizons.fiberChain");
  if (h.contains("orbitChain"))
    z.orbit_chain = parse_chain(h.at("orbitChain"), z.orbit_chain,
                                "horizons.orbitChain");

  if (j.contains("expect")) {
    const Json& e = j.at("expect");
    reject_unknown(e, {"complexity", "growthBound", "leftSpecialPerLength",
                       "specialRays", "nX", "star"},
                   "expect");
    if (e.contains("complexity")) {
      const Json& c = e.at("complexity");
      reject_unknown(c, {"slope", "offset"}, "expect.complexity");
      if (!c.contains("slope") || !c.contains("offset") ||
          !c.at("slope").is_number_integer() ||
          !c.at("offset").is_number_integer())
        throw ConfigError("expect.complexity needs integer slope and offset");
      cfg.expect.affine_complexity = std::make_pair(
          c.at("slope").get<std::int64_t>(), c.at("offset").get<std::int64_t>());
    }
    if (e.contains("growthBound"))
      cfg.expect.growth_bound = get_size(e, "growthBound", 0, "expect");
    if (e.contains("leftSpecialPerLength"))
      cfg.expect.left_special_per_length =
          get_size(e, "leftSpecialPerLength", 0, "expect");
    if (e.contains("specialRays"))
      cfg.expect.special_rays = get_size(e, "specialRays", 0, "expect");
    if (e.contains("nX")) cfg.expect.n_x = get_size(e, "nX", 0, "expect");
    if (e.contains("star")) {
      if (!e.at("star").is_boolean())
        throw ConfigError("expect.star must be a boolean");
      cfg.expect.star = e.at("star").get<bool>();
    }
  }

  if (j.contains("probes")) {
    if (!j.at("probes").is_array())
      throw ConfigError("probes must be an array");
    for (const Json& p : j.at("probes")) {
      reject_unknown(p, {"name", "system", "shift", "prepend"}, "probe");
      ProbeSpec probe{get_string(p, "name", "probe"),
                      p.contains("system") ? parse_system(p.at("system"))
                                           : cfg.system,
                      get_size(p, "shift", 0, "probe"), Word{}};
      if (p.contains("prepend"))
        probe.prepend = Word::parse(get_string(p, "prepend", "probe"));
      cfg.probes.push_back(std::move(probe));
    }
  }

  if (j.contains("suites")) {
    if (!j.at("suites").is_array())
      throw ConfigError("suites must be an array");
    for (const Json& s : j.at("suites")) {
      if (!s.is_string()) throw ConfigError("suite names must be strings");
      cfg.suites.push_back(s.get<std::string>());
    }
  }
  cfg.out = j.contains("out") ? get_string(j, "out", "config")
                              : "reports/" + cfg.name;
  check_config(cfg);
  return cfg;
}

SystemConfig parse_config_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void check_config(const SystemConfig& cfg) {
  const Horizons& h = cfg.horizons;
  if (h.max_len < 1 || h.max_len > kMaxConfigLength)
    throw ConfigError("horizons.maxLen must be in [1, " +
                      std::to_string(kMaxConfigLength) + "], got " +
                      std::to_string(h.max_len));
  if (h.window < 1) throw ConfigError("horizons.window must be positive");
  if (h.samples < 1) throw ConfigError("horizons.samples must be positive");
  if (h.oracle_max_l > 8 || h.oracle_max_h > 14)
    throw ConfigError("oracle caps are l <= 8 and H <= 14");
  if (h.star_max_n < 1) throw ConfigError("horizons.starMaxN must be positive");
  const std::size_t A = alphabet_size(cfg.system);
  for (const ProbeSpec& p : cfg.probes)
    if (alphabet_size(p.system) != A)
      throw ConfigError("probe '" + p.name + "' uses another alphabet");
  for (const std::string& s : cfg.suites) {
    const auto& known = known_suites();
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw ConfigError("unknown suite '" + s + "'");
    if (s == "fibers" && A != 2)
      throw ConfigError("the fibers suite needs a binary alphabet, got " +
                        std::to_string(A) + " symbols");
  }
}

SystemContext::SystemContext(SystemConfig cfg)
    : cfg_(std::move(cfg)),
      table_(language_from_generator(cfg_.system, cfg_.horizons.max_len)),
      tags_(classify(cfg_.system)),
      profile_(complexity(table_)) {
  const std::size_t N = table_.max_len();
  if (N >= 3) {
    rays_ = left_special_rays(table_, cfg_.system, (N - 1) / 2);
    partition_ = tail_classes(rays_.rays, N / 2, 4 * N);
    for (const auto& cls : partition_.classes) {
      std::vector<SpecialRay> members;
      for (std::size_t i : cls) members.push_back(rays_.rays[i]);
      maximal_.push_back(j_maximal(members, table_, (N - 1) / 2));
    }
  } else {
    rays_.diagnostic = "table too shallow for a ray search";
  }
  StarStarConfig sc;
  sc.max_n = std::min(cfg_.horizons.star_max_n, N > 1 ? N - 1 : 1);
  sc.tags = tags_;
  if (N > sc.max_n) gate_ = property_star_star_check(table_, rays_, sc);
  else gate_.reasons.push_back("table too shallow for property (*)");
}

// ---- oracle ----------------------------------------------------------------

QuotientLevel naive_oracle_quotient(const LanguageTable& table,
                                    LevelIndex level, std::size_t H) {
  const std::size_t k = level.k, l = level.l;
  if (k < 1 || k > l) throw ConfigError("oracle needs 1 <= k <= l");
  if (l > 8 || H > 14)
    throw ConfigError("oracle caps are l <= 8 and H <= 14, got l = " +
                      std::to_string(l) + ", H = " + std::to_string(H));
  if (H < k) throw HorizonError("oracle horizon below k");
  if (H + l > table.max_len())
    throw HorizonError("oracle needs words of length H + l");
  const std::size_t A = table.alphabet().size();
  const WordList& LH = table.words(H);
  const WordList& Lpast = table.words(l + H - k);

  auto next = [A](std::vector<Symbol>& w) {  // lexicographic successor
    for (std::size_t i = w.size(); i-- > 0;) {
      if (w[i].id + 1u < A) {
        ++w[i].id;
        return true;
      }
      w[i].id = 0;
    }
    return false;
  };

  std::map<std::pair<Word, PastSet>, Word> classes;
  std::vector<Symbol> w(H);
  do {
    Word word(w);
    if (!std::binary_search(LH.begin(), LH.end(), word)) continue;
    PastSet past;
    past.l = l;
    std::vector<Symbol> mu(l);
    do {
      Word cand(mu);
      cand += WordView(w).subspan(k);
      if (std::binary_search(Lpast.begin(), Lpast.end(), cand))
        past.members.emplace_back(mu);
    } while (next(mu));
    classes.try_emplace({word.prefix(k), std::move(past)}, word);
  } while (next(w));

  QuotientLevel q;
  q.level = level;
  q.horizon = H;
  for (auto& [key, witness] : classes)
    q.classes.push_back({level, key.first, key.second, witness});
  return q;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

// ---- suites ----------------------------------------------------------------

namespace {

struct Outcome {
  SuiteResult r;
  bool failed = false;
  bool unsure = false;

  explicit Outcome(std::string name) { r.name = std::move(name); }
  void fail(std::string why) {
    failed = true;
    r.diagnostics.push_back(std::move(why));
  }
  void unsure_because(std::string why) {
    unsure = true;
    r.diagnostics.push_back(std::move(why));
  }
  SuiteResult done() {
    r.verdict = failed ? Verdict::kFail
                       : unsure ? Verdict::kInconclusive : Verdict::kPass;
    return std::move(r);
  }
};

// Suites that rely on the minimal-shift theorems refuse other inputs.
bool require_gate(const SystemContext& ctx, Outcome& out) {
  if (ctx.gate().pass) return true;
  std::string why = "(**) required";
  for (const std::string& r : ctx.gate().reasons) why += "; " + r;
  out.fail(why);
  return false;
}

std::vector<Ray> maximal_rays(const SystemContext& ctx, Outcome& out) {
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < ctx.maximal().size(); ++j) {
    const auto& m = ctx.maximal()[j];
    if (!m) {
      out.unsure_because("tail class " + std::to_string(j) +
                         ": no maximal ray (" + m.diagnostic() + ")");
      continue;
    }
    rays.push_back(m->ray);
  }
  return rays;
}

using ClassKey = std::pair<Word, PastSet>;

ClassKey key_at(const LanguageTable& table, WordView w, LevelIndex level) {
  return {Word(w.first(level.k)), past_set(table, w.subspan(level.k), level.l)};
}

std::set<ClassKey> keys_of(const QuotientLevel& q,
                           const std::vector<std::size_t>& idx) {
  std::set<ClassKey> out;
  for (std::size_t i : idx) out.insert({q.classes[i].prefix, q.classes[i].past});
  return out;
}

struct IsoLevel {
  QuotientLevel q;
  std::vector<std::size_t> iso;
  std::set<ClassKey> iso_keys;
};

Checked<IsoLevel> iso_level(const LanguageTable& table, LevelIndex level,
                            std::size_t H, const Horizons& h) {
  IsoLevel out{quotient_level(table, level, H), {}, {}};
  if (!out.q.stabilized)
    return Checked<IsoLevel>::fail("level " + level.str() +
                                   " not stabilized at horizon " +
                                   std::to_string(H));
  std::vector<QuotientLevel> refs;
  for (LevelIndex r : refinement_levels(level, h.isolation_depth,
                                        h.isolation_stride)) {
    refs.push_back(quotient_level(table, r, H));
    if (!refs.back().stabilized)
      return Checked<IsoLevel>::fail("refinement " + r.str() +
                                     " not stabilized at horizon " +
                                     std::to_string(H));
  }
  auto iso = isolated_classes(out.q, refs);
  if (!iso) return Checked<IsoLevel>::fail(iso.diagnostic());
  out.iso = *iso;
  out.iso_keys = keys_of(out.q, out.iso);
  return Checked<IsoLevel>::ok(std::move(out));
}

// Horizon leaving room to compare against twice the horizon at the deepest
// level needed.
std::size_t level_horizon(const SystemContext& ctx, std::size_t deepest_l) {
  if (ctx.config().horizons.H) return ctx.config().horizons.H;
  const std::size_t N = ctx.table().max_len();
  if (deepest_l >= N) throw HorizonError("levels deeper than the table");
  return (N - deepest_l) / 2;
}

std::size_t deepest_refinement(const Horizons& h,
                               const std::vector<LevelIndex>& levels) {
  std::size_t deepest = 0;
  for (const LevelIndex& lv : levels)
    deepest = std::max(deepest,
                       lv.l + h.isolation_depth * h.isolation_stride);
  return deepest;
}

}  // namespace

SuiteResult verify_complexity(const SystemContext& ctx) {
  Outcome out("complexity");
  const LanguageTable& t = ctx.table();
  const ComplexityProfile& prof = ctx.profile();
  const std::size_t up_to =
      std::min(ctx.config().horizons.complexity_up_to, t.max_len());

  ValidationReport vr = validate_table(t);
  if (!vr.ok())
    out.fail("language table invalid: " + std::to_string(vr.violations.size()) +
             " violations, first on " + vr.violations.front().word.str() +
             " (" + vr.violations.front().detail + ")");

  // p(n+1) - p(n) is the left-branching excess of the length-n words.
  std::size_t identity_checked = 0;
  for (std::size_t n = 1; n + 1 <= t.max_len() && n <= up_to; ++n) {
    std::int64_t excess = 0;
    for (const Word& w : t.words(n))
      excess += static_cast<std::int64_t>(left_extensions(t, w).size()) - 1;
    if (excess != prof.first_differences[n - 1])
      out.fail("branching identity fails at n = " + std::to_string(n));
    ++identity_checked;
  }

  Json values = Json::array();
  for (std::size_t n = 1; n <= up_to; ++n) values.push_back(prof.p(n));
  out.r.details["upTo"] = up_to;
  out.r.details["p"] = values;
  out.r.details["identityChecked"] = identity_checked;

  const Expectations& e = ctx.config().expect;
  if (e.affine_complexity) {
    auto [a, b] = *e.affine_complexity;
    for (std::size_t n = 1; n <= up_to; ++n) {
      const std::int64_t want = a * static_cast<std::int64_t>(n) + b;
      if (static_cast<std::int64_t>(prof.p(n)) != want) {
        out.fail("p(" + std::to_string(n) + ") = " + std::to_string(prof.p(n)) +
                 ", expected " + std::to_string(want));
        break;
      }
    }
    out.r.details["expectedAffine"] = {a, b};
  }
  if (e.growth_bound) {
    GrowthReport g = bounded_growth_check(prof, *e.growth_bound);
    Json lsc = Json::array();
    for (std::size_t n = 1; n <= up_to && n < prof.left_special_counts.size();
         ++n)
      lsc.push_back(prof.left_special_counts[n]);
    out.r.details["growth"] = {{"bound", g.bound},
                               {"pass", g.pass},
                               {"maxDifference", g.max_difference},
                               {"maxLeftSpecial", g.max_left_special},
                               {"leftSpecialCounts", lsc}};
    if (!g.pass)
      out.fail("bounded growth fails with K = " + std::to_string(g.bound) +
               (g.first_failure
                    ? " at n = " + std::to_string(*g.first_failure)
                    : std::string()));
    if (!g.left_special_within_bound)
      out.fail("left special count exceeds K = " + std::to_string(g.bound));
  }
  if (e.left_special_per_length) {
    for (std::size_t n = 1; n < up_to && n < prof.left_special_counts.size();
         ++n)
      if (prof.left_special_counts[n] != *e.left_special_per_length) {
        out.fail(std::to_string(prof.left_special_counts[n]) +
                 " left special words of length " + std::to_string(n));
        break;
      }
  }
  return out.done();
}

SuiteResult verify_special(const SystemContext& ctx) {
  Outcome out("special");
  const RaySearch& rs = ctx.rays();
  out.r.details["finite"] = rs.finite();
  out.r.details["searchHorizon"] = rs.horizon;
  out.r.details["confirmDepth"] = rs.confirm_depth;
  if (!rs.finite()) {
    out.r.details["diagnostic"] = *rs.diagnostic;
    out.fail("left special rays possibly infinite: " + *rs.diagnostic);
    return out.done();
  }
  Json rays = Json::array();
  for (std::size_t i = 0; i < rs.rays.size(); ++i) {
    const SpecialRay& r = rs.rays[i];
    auto d = path_count(r.ray, ctx.table(), ctx.config().horizons.window);
    Json jr{{"ray", r.ray.describe()},
            {"matched", r.matched},
            {"certifiedDepth", r.certified_depth},
            {"tailClass", ctx.partition().class_of.at(i)}};
    if (d) jr["d"] = d->value;
    else out.unsure_because("d undetermined for " + r.ray.describe());
    rays.push_back(jr);
  }
  Json maximal = Json::array();
  for (const auto& m : ctx.maximal()) {
    if (m) maximal.push_back(m->ray.describe());
    else {
      maximal.push_back(nullptr);
      out.unsure_because("maximal element not determined: " + m.diagnostic());
    }
  }
  out.r.details["rays"] = rays;
  out.r.details["nX"] = ctx.partition().n_x;
  out.r.details["maximal"] = maximal;
  out.r.details["tailShiftBound"] = ctx.partition().shift_bound;
  out.r.details["tailMatchHorizon"] = ctx.partition().match_horizon;
  out.r.details["starStar"] = ctx.gate().pass;

  const Expectations& e = ctx.config().expect;
  if (e.special_rays && rs.rays.size() != *e.special_rays)
    out.fail(std::to_string(rs.rays.size()) + " special rays, expected " +
             std::to_string(*e.special_rays));
  if (e.n_x && ctx.partition().n_x != *e.n_x)
    out.fail("n_X = " + std::to_string(ctx.partition().n_x) + ", expected " +
             std::to_string(*e.n_x));
  return out.done();
}

SuiteResult verify_star(const SystemContext& ctx) {
  Outcome out("star");
  const LanguageTable& t = ctx.table();
  const std::size_t max_n =
      std::min(ctx.config().horizons.star_max_n, t.max_len() - 1);
  bool holds = true;
  std::optional<std::size_t> first_failure;
  Json per = Json::array();
  for (std::size_t n = 1; n <= max_n; ++n) {
    StarReport s = property_star_check(t, n, t.max_len() - n);
    per.push_back({{"n", n},
                   {"searchHorizon", s.search_horizon},
                   {"pass", s.pass},
                   {"witnessed", s.witnessed},
                   {"unwitnessed", join(s.unwitnessed)}});
    if (!s.pass && holds) {
      holds = false;
      first_failure = n;
    }
  }
  out.r.details["maxN"] = max_n;
  out.r.details["holds"] = holds;
  if (first_failure) out.r.details["firstFailure"] = *first_failure;
  out.r.details["lengths"] = per;
  const bool want = ctx.config().expect.star.value_or(true);
  out.r.details["expected"] = want;
  if (holds != want)
    out.fail(std::string("property (*) ") + (holds ? "holds" : "fails") +
             (first_failure ? " at n = " + std::to_string(*first_failure)
                            : std::string()) +
             ", expected it to " + (want ? "hold" : "fail"));
  return out.done();
}

SuiteResult verify_oracle(const SystemContext& ctx) {
  Outcome out("oracle");
  const LanguageTable& t = ctx.table();
  const Horizons& h = ctx.config().horizons;
  std::size_t compared = 0, skipped = 0, mismatches = 0;
  for (std::size_t l = 1; l <= h.oracle_max_l; ++l) {
    for (std::size_t k = 1; k <= l; ++k) {
      for (std::size_t H = k; H <= h.oracle_max_h; ++H) {
        if (H + l > t.max_len()) {
          ++skipped;
          continue;
        }
        QuotientLevel a = quotient_level(t, {k, l}, H);
        QuotientLevel b = naive_oracle_quotient(t, {k, l}, H);
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i)
          same = a.classes[i].prefix == b.classes[i].prefix &&
                 a.classes[i].past == b.classes[i].past &&
                 a.classes[i].witness == b.classes[i].witness;
        ++compared;
        if (!same) {
          ++mismatches;
          if (mismatches <= 5)
            out.fail("quotient at (" + std::to_string(k) + "," +
                     std::to_string(l) + "), H = " + std::to_string(H) +
                     " differs from the oracle (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + " classes)");
        }
      }
    }
  }
  out.r.details["maxL"] = h.oracle_max_l;
  out.r.details["maxH"] = h.oracle_max_h;
  out.r.details["compared"] = compared;
  out.r.details["skipped"] = skipped;
  out.r.details["mismatches"] = mismatches;
  if (skipped)
    out.unsure_because(std::to_string(skipped) +
                       " (k, l, H) triples exceed the table horizon");
  return out.done();
}

SuiteResult verify_categorical(const SystemContext& ctx) {
  Outcome out("categorical");
  const LanguageTable& t = ctx.table();
  const Horizons& h = ctx.config().horizons;
  const std::size_t N = t.max_len();
  const std::size_t l_max = std::min<std::size_t>(20, N / 2);
  const std::size_t H = h.H ? h.H : (N - l_max) / 2;
  const std::size_t k_cap = std::min(H - 1, l_max - 1);
  if (l_max < 3 || k_cap < 2 || H + l_max > N) {
    out.unsure_because("table too shallow for sampled level squares");
    return out.done();
  }

  std::mt19937_64 rng(h.seed);
  auto pick = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::map<LevelIndex, QuotientLevel> cache;
  auto level = [&](LevelIndex lv) -> const QuotientLevel& {
    auto it = cache.find(lv);
    if (it == cache.end()) it = cache.emplace(lv, quotient_level(t, lv, H)).first;
    return it->second;
  };
  std::vector<Ray> rays = canonical_rays(ctx.config().system);
  if (rays.empty()) rays.emplace_back(ctx.config().system);

  std::size_t composition = 0, surjective = 0, natural = 0, section = 0;
  std::size_t unstable = 0, iota_unrealized = 0;
  auto note = [&out](bool ok, const std::string& what) {
    if (!ok) out.fail(what);
  };
  for (std::size_t s = 0; s < h.samples; ++s) {
    // c above b above a, with room for a level shift at b and c.
    const std::size_t kc = pick(2, k_cap);
    const std::size_t lc = pick(kc + 1, l_max);
    const std::size_t kb = pick(2, kc);
    const std::size_t lb = kb + pick(1, lc - kc);
    const std::size_t ka = pick(1, kb);
    const std::size_t la = ka + pick(0, lb - kb);
    const LevelIndex a{ka, la}, b{kb, lb}, c{kc, lc};
    const std::string tag = " on " + a.str() + " <= " + b.str() + " <= " +
                            c.str();
    const QuotientLevel& qa = level(a);
    const QuotientLevel& qb = level(b);
    const QuotientLevel& qc = level(c);
    if (!qa.stabilized || !qb.stabilized || !qc.stabilized) ++unstable;

    auto ab = connecting_map(qb, qa), bc = connecting_map(qc, qb),
         ac = connecting_map(qc, qa);
    if (!ab || !bc || !ac) {
      out.fail("connecting map undefined" + tag + ": " +
               (!ab ? ab.diagnostic()
                    : !bc ? bc.diagnostic() : ac.diagnostic()));
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < qc.size(); ++i)
      ok = ok && ab->image[bc->image[i]] == ac->image[i];
    note(ok, "composition fails" + tag);
    composition += ok;
    ok = ab->surjective(qa.size()) && bc->surjective(qb.size()) &&
         ac->surjective(qa.size());
    note(ok, "connecting map not surjective" + tag);
    surjective += ok;

    const LevelIndex c1{kc - 1, lc}, b1{kb - 1, lb};
    const QuotientLevel& qc1 = level(c1);
    const QuotientLevel& qb1 = level(b1);
    auto sc = shift_on_level(qc, qc1), sb = shift_on_level(qb, qb1);
    auto down1 = connecting_map(qc1, qb1);
    if (!sc || !sb || !down1) {
      out.fail("level shift or map undefined" + tag);
      continue;
    }
    ok = true;
    for (std::size_t i = 0; i < qc.size(); ++i)
      ok = ok && down1->image[sc->image[i]] == sb->image[bc->image[i]];
    note(ok, "shift does not commute with connecting maps" + tag);
    natural += ok;

    const Ray& base = rays[pick(0, rays.size() - 1)];
    const Ray x = base.shifted(pick(0, 63));
    auto io = iota_level(x, c, t);
    if (!io) {
      ++unstable;
      continue;
    }
    ok = io->prefix == x.prefix(c.k);
    note(ok, "pi(iota(x)) differs from x at " + c.str() + " for " +
                 x.describe());
    section += ok;
    if (!qc.find(io->prefix, io->past)) ++iota_unrealized;
  }
  out.r.details["samples"] = h.samples;
  out.r.details["seed"] = h.seed;
  out.r.details["horizon"] = H;
  out.r.details["maxL"] = l_max;
  out.r.details["composition"] = composition;
  out.r.details["surjective"] = surjective;
  out.r.details["naturality"] = natural;
  out.r.details["section"] = section;
  out.r.details["unstableLevels"] = unstable;
  out.r.details["iotaUnrealized"] = iota_unrealized;
  if (unstable)
    out.unsure_because(std::to_string(unstable) +
                       " samples touched levels that did not stabilize");
  if (iota_unrealized)
    out.unsure_because(std::to_string(iota_unrealized) +
                       " ray classes not realized at the sampled horizon");
  return out.done();
}

SuiteResult verify_isolated_orbits(const SystemContext& ctx) {
  Outcome out("isolated");
  if (!require_gate(ctx, out)) return out.done();
  const LanguageTable& t = ctx.table();
  const Horizons& h = ctx.config().horizons;
  std::vector<Ray> omegas = maximal_rays(ctx, out);
  const std::size_t n_x = ctx.partition().n_x;
  out.r.details["nX"] = n_x;
  if (omegas.size() != n_x) return out.done();

  std::vector<std::size_t> horizons;
  Json jh = Json::array();
  for (std::size_t j = 0; j < n_x; ++j) {
    auto ih = isolation_horizon(*ctx.maximal()[j], t, ctx.gate());
    if (!ih) {
      out.unsure_because("isolation horizon: " + ih.diagnostic());
      return out.done();
    }
    horizons.push_back(ih->n);
    jh.push_back({{"ray", omegas[j].describe()},
                  {"n", ih->n},
                  {"grid", {ih->grid.n_max, ih->grid.l_max}}});
  }
  out.r.details["isolationHorizons"] = jh;

  std::vector<LevelIndex> levels;
  for (const LevelIndex& lv : h.levels) {
    levels.push_back(lv);
    if (lv.k + 1 <= lv.l) levels.push_back({lv.k + 1, lv.l});
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const std::size_t H = level_horizon(ctx, deepest_refinement(h, levels));
  out.r.details["horizon"] = H;
  out.r.details["refinementDepth"] = h.isolation_depth;
  out.r.details["refinementStride"] = h.isolation_stride;

  // Orbit shadow of class j at a level: classes of u sigma^m(omega_j) for
  // m in [lo, l) and u a k-past of sigma^m(omega_j).
  auto shadow = [&](LevelIndex lv, std::size_t j, std::size_t lo) {
    std::set<ClassKey> out_keys;
    const std::size_t len = H - lv.k;
    for (std::size_t m = lo; m < lv.l; ++m) {
      Word x = omegas[j].shifted(m).prefix(len);
      PastSet p = past_set(t, x, lv.l);
      for (const Word& u : past_set(t, x, lv.k).members)
        out_keys.insert({u, p});
    }
    return out_keys;
  };

  std::map<LevelIndex, IsoLevel> built;
  std::map<LevelIndex, std::vector<std::set<ClassKey>>> full_shadow;
  Json jl = Json::array();
  std::set<std::size_t> labels_seen;
  for (const LevelIndex& lv : levels) {
    auto il = iso_level(t, lv, H, h);
    if (!il) {
      out.unsure_because(il.diagnostic());
      return out.done();
    }
    const IsoLevel& L = built.emplace(lv, *il).first->second;
    std::vector<std::set<ClassKey>> hi(n_x);
    std::size_t lo_size = 0;
    bool complete = true;
    for (std::size_t j = 0; j < n_x; ++j) {
      hi[j] = shadow(lv, j, 0);
      std::set<ClassKey> lo = shadow(lv, j, horizons[j]);
      lo_size += lo.size();
      for (const ClassKey& key : lo) complete = complete && L.iso_keys.count(key);
    }
    if (!complete)
      out.fail("an orbit class past the isolation horizon is not isolated at " +
               lv.str());
    bool sound = true, labelled = true;
    for (const ClassKey& key : L.iso_keys) {
      std::size_t hits = 0, label = 0;
      for (std::size_t j = 0; j < n_x; ++j)
        if (hi[j].count(key)) {
          ++hits;
          label = j;
        }
      if (hits == 0) sound = false;
      else if (hits > 1) labelled = false;
      else labels_seen.insert(label);
    }
    if (!sound)
      out.fail("isolated class off every orbit shadow at " + lv.str());
    if (!labelled)
      out.fail("isolated class on two orbit shadows at " + lv.str());

    // Density: every class is met by the forward orbit of some omega_j.
    std::set<ClassKey> met;
    const std::size_t budget = 16 * t.max_len();
    for (std::size_t j = 0; j < n_x; ++j) {
      Word x = omegas[j].prefix(budget + H);
      for (std::size_t n = 0; n < budget; ++n)
        met.insert(key_at(t, x.view().subspan(n, H), lv));
    }
    std::size_t unmet = 0;
    for (const CoverClass& c : L.q.classes)
      unmet += met.count({c.prefix, c.past}) == 0;
    if (unmet)
      out.fail(std::to_string(unmet) + " classes at " + lv.str() +
               " not met by any orbit within " + std::to_string(budget));

    // Off-orbit probes stay out.
    std::size_t probes_isolated = 0;
    for (const ProbeSpec& p : ctx.config().probes) {
      Word z = p.ray().prefix(H);
      if (L.iso_keys.count(key_at(t, z, lv))) {
        ++probes_isolated;
        out.fail("probe '" + p.name + "' lands on an isolated class at " +
                 lv.str());
      }
    }
    jl.push_back({{"level", to_json(lv)},
                  {"classes", L.q.size()},
                  {"isolated", L.iso.size()},
                  {"shadowFromHorizon", lo_size},
                  {"probesIsolated", probes_isolated},
                  {"unmet", unmet}});
    full_shadow.emplace(lv, std::move(hi));
  }
  if (labels_seen.size() != n_x)
    out.fail(std::to_string(labels_seen.size()) +
             " discrete orbit shadows, expected n_X = " + std::to_string(n_x));
  out.r.details["orbitShadows"] = labels_seen.size();
  out.r.details["levels"] = jl;

  // The level shift keeps each isolated class on its own orbit shadow.
  std::size_t shift_checked = 0;
  for (const auto& [lv, L] : built) {
    if (lv.k < 2) continue;
    const LevelIndex down{lv.k - 1, lv.l};
    auto it = built.find(down);
    if (it == built.end()) continue;
    auto sm = shift_on_level(L.q, it->second.q);
    if (!sm) {
      out.fail(sm.diagnostic());
      continue;
    }
    const auto& hi_up = full_shadow.at(lv);
    const auto& hi_down = full_shadow.at(down);
    for (std::size_t i : L.iso) {
      const CoverClass& c = L.q.classes[i];
      const CoverClass& d = it->second.q.classes[sm->image[i]];
      for (std::size_t j = 0; j < n_x; ++j)
        if (hi_up[j].count({c.prefix, c.past}) &&
            !hi_down[j].count({d.prefix, d.past}))
          out.fail("shift moves an isolated class off its orbit at " +
                   lv.str());
      ++shift_checked;
    }
  }
  out.r.details["shiftChecked"] = shift_checked;
  return out.done();
}

SuiteResult verify_fiber_counts(const SystemContext& ctx) {
  Outcome out("fibers");
  if (ctx.table().alphabet().size() != 2) {
    out.fail("the fibers suite needs a binary alphabet");
    return out.done();
  }
  if (!require_gate(ctx, out)) return out.done();
  const LanguageTable& t = ctx.table();
  const Horizons& h = ctx.config().horizons;
  std::vector<Ray> omegas = maximal_rays(ctx, out);

  Json samples = Json::array();
  std::optional<std::size_t> first_omega, first_back, first_probe;
  auto check = [&](const std::string& role, const Ray& x, const ChainSpec& cs,
                   std::optional<std::size_t> expected) {
    auto f = pi_fiber(x, cs, t);
    Json s{{"role", role}, {"ray", x.describe()}};
    if (!f) {
      out.unsure_because(x.describe() + ": " + f.diagnostic());
      s["error"] = f.diagnostic();
      samples.push_back(s);
      return std::optional<std::size_t>{};
    }
    s["threadCount"] = f->thread_count;
    s["stableFromK"] = f->stable_from_k;
    s["stabilized"] = f->stabilized;
    s["chainTop"] = to_json(f->top);
    if (expected) s["expected"] = *expected;
    samples.push_back(s);
    if (!f->stabilized) {
      out.unsure_because(x.describe() + ": thread count not stabilized");
      return std::optional<std::size_t>{};
    }
    if (f->stable_from_k > 6 && role != "forward")
      out.unsure_because(x.describe() + ": thread count settles only at k = " +
                         std::to_string(f->stable_from_k));
    if (expected && f->thread_count != *expected)
      out.fail(role + " " + x.describe() + ": " +
               std::to_string(f->thread_count) + " threads, expected " +
               std::to_string(*expected));
    return std::optional<std::size_t>{f->thread_count};
  };
  auto d_plus_one = [&](const Ray& x) -> std::optional<std::size_t> {
    auto d = path_count(x, t, h.window);
    if (!d) {
      out.unsure_because(x.describe() + ": " + d.diagnostic());
      return std::nullopt;
    }
    return d->value + 1;
  };

  for (const Ray& w : omegas) {
    auto c = check("maximal", w, h.fiber_chain, d_plus_one(w));
    if (!first_omega) first_omega = c;
    Word head = w.prefix(std::min<std::size_t>(t.max_len() - 1, 16));
    for (Symbol a : left_extensions(t, head)) {
      Ray back = w.prepended(Word(std::vector<Symbol>{a}));
      auto cb = check("backward", back, h.fiber_chain, d_plus_one(back));
      if (!first_back) first_back = cb;
    }
    auto base = check("forward", w, h.orbit_chain, d_plus_one(w));
    for (std::size_t s = 1; s <= h.orbit_shifts; ++s) {
      Ray fwd = w.shifted(s);
      auto cf = check("forward", fwd, h.orbit_chain, d_plus_one(fwd));
      if (base && cf && *base != *cf)
        out.fail("thread count changes along the orbit of " + w.describe());
    }
  }
  for (const ProbeSpec& p : ctx.config().probes) {
    auto cp = check("offOrbit", p.ray(), h.fiber_chain, std::size_t{1});
    if (!first_probe) first_probe = cp;
  }
  out.r.details["fiberChain"] = {{"defect", h.fiber_chain.defect},
                                 {"kMin", h.fiber_chain.k_min},
                                 {"kMax", h.fiber_chain.k_max},
                                 {"growth", h.fiber_chain.growth},
                                 {"lookahead", h.fiber_chain.top()}};
  out.r.details["orbitChain"] = {{"defect", h.orbit_chain.defect},
                                 {"kMin", h.orbit_chain.k_min},
                                 {"kMax", h.orbit_chain.k_max},
                                 {"growth", h.orbit_chain.growth},
                                 {"lookahead", h.orbit_chain.top()}};
  out.r.details["samples"] = samples;
  Json triple = Json::array();
  for (const auto& v : {first_omega, first_back, first_probe})
    triple.push_back(v ? Json(*v) : Json(nullptr));
  out.r.details["triple"] = triple;
  return out.done();
}

SuiteResult verify_two_sided_shadow(const SystemContext& ctx) {
  Outcome out("two_sided");
  if (!require_gate(ctx, out)) return out.done();
  const LanguageTable& t = ctx.table();
  const Horizons& h = ctx.config().horizons;
  std::vector<LevelIndex> levels;
  for (const LevelIndex& lv : h.levels) {
    levels.push_back(lv);
    if (lv.k + 1 <= lv.l) levels.push_back({lv.k + 1, lv.l});
  }
  const std::size_t H = level_horizon(ctx, deepest_refinement(h, levels));
  out.r.details["horizon"] = H;

  Json jl = Json::array();
  for (const LevelIndex& lv : h.levels) {
    auto il = iso_level(t, lv, H, h);
    if (!il) {
      out.unsure_because(il.diagnostic());
      continue;
    }
    const IsoLevel& L = *il;
    // Non-isolated classes with a one-word past, mapped to that word.
    std::set<std::size_t> iso(L.iso.begin(), L.iso.end());
    std::map<Word, std::size_t> image;
    bool injective = true, suffixed = true;
    for (std::size_t i = 0; i < L.q.size(); ++i) {
      const CoverClass& c = L.q.classes[i];
      if (iso.count(i) || !c.past.singleton()) continue;
      const Word& mu = c.past.members.front();
      suffixed = suffixed && mu.ends_with(c.prefix);
      injective = image.emplace(mu, i).second && injective;
    }
    if (!suffixed) out.fail("past word does not end with the prefix at " +
                            lv.str());
    if (!injective) out.fail("two classes share a past word at " + lv.str());

    // Oracle: length-l words that are the only l-past of some tail.
    std::set<Word> determined;
    const WordList& Ll = t.words(lv.l);
    for (const Word& u : t.words(H - lv.k)) {
      const WordList& Lj = t.words(lv.l + u.size());
      const Word* only = nullptr;
      std::size_t hits = 0;
      for (const Word& nu : Ll) {
        if (std::binary_search(Lj.begin(), Lj.end(), nu + u)) {
          ++hits;
          only = &nu;
          if (hits > 1) break;
        }
      }
      if (hits == 1) determined.insert(*only);
    }
    if (image.size() != determined.size())
      out.fail(std::to_string(image.size()) + " two-sided classes at " +
               lv.str() + ", oracle counts " +
               std::to_string(determined.size()) + " left-determined words");
    for (const auto& [mu, i] : image)
      if (!determined.count(mu)) {
        out.fail("two-sided class word " + mu.str() + " not left-determined");
        break;
      }

    // The level shift keeps the window word and moves the origin.
    std::size_t shifted = 0;
    if (lv.k + 1 <= lv.l) {
      auto up = iso_level(t, {lv.k + 1, lv.l}, H, h);
      if (!up) {
        out.unsure_because(up.diagnostic());
      } else {
        auto sm = shift_on_level(up->q, L.q);
        if (!sm) {
          out.fail(sm.diagnostic());
        } else {
          std::set<std::size_t> up_iso(up->iso.begin(), up->iso.end());
          for (std::size_t i = 0; i < up->q.size(); ++i) {
            const CoverClass& c = up->q.classes[i];
            if (up_iso.count(i) || !c.past.singleton()) continue;
            const std::size_t d = sm->image[i];
            const CoverClass& dc = L.q.classes[d];
            if (iso.count(d) || dc.past != c.past)
              out.fail("shift does not act as the word shift at " +
                       lv.str());
            ++shifted;
          }
        }
      }
    }
    jl.push_back({{"level", to_json(lv)},
                  {"classes", L.q.size()},
                  {"twoSided", image.size()},
                  {"oracle", determined.size()},
                  {"shiftChecked", shifted}});
  }
  out.r.details["levels"] = jl;
  return out.done();
}

SuiteResult run_suite(const std::string& name, const SystemContext& ctx) {
  const auto t0 = Clock::now();
  SuiteResult r;
  try {
    if (name == "complexity") r = verify_complexity(ctx);
    else if (name == "special") r = verify_special(ctx);
    else if (name == "star") r = verify_star(ctx);
    else if (name == "oracle") r = verify_oracle(ctx);
    else if (name == "categorical") r = verify_categorical(ctx);
    else if (name == "isolated") r = verify_isolated_orbits(ctx);
    else if (name == "fibers") r = verify_fiber_counts(ctx);
    else if (name == "two_sided") r = verify_two_sided_shadow(ctx);
    else throw ConfigError("unknown suite '" + name + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (const HorizonError& e) {
    r.name = name;
    r.verdict = Verdict::kInconclusive;
    r.diagnostics.push_back(std::string("horizon: ") + e.what());
  } catch (const StabilizationError& e) {
    r.name = name;
    r.verdict = Verdict::kInconclusive;
    r.diagnostics.push_back(std::string("stabilization: ") + e.what());
  } catch (const Error& e) {
    r.name = name;
    r.verdict = Verdict::kFail;
    r.diagnostics.push_back(e.what());
  }
  r.seconds = since(t0);
  return r;
}

// ---- report ----------------------------------------------------------------

bool VerificationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) {
    return s.verdict == Verdict::kPass;
  });
}

Json VerificationReport::body() const {
  Json j;
  j["system"] = system;
  j["description"] = description;
  j["verdict"] = passed() ? "pass" : "fail";
  j["summary"] = summary;
  Json s = Json::array();
  for (const SuiteResult& r : suites)
    s.push_back({{"name", r.name},
                 {"verdict", to_string(r.verdict)},
                 {"diagnostics", r.diagnostics},
                 {"details", r.details}});
  j["suites"] = s;
  return j;
}

Json VerificationReport::timing_json() const {
  Json j = Json::object();
  for (const auto& [k, v] : timing) j[k] = v;
  return j;
}

VerificationReport run_config(const SystemConfig& cfg) {
  check_config(cfg);
  VerificationReport rep;
  rep.system = cfg.name;
  rep.description = describe(cfg.system);
  auto t0 = Clock::now();
  SystemContext ctx(cfg);
  rep.timing["context"] = since(t0);

  const TableCertificate& cert = ctx.table().certificate();
  rep.summary["maxLen"] = ctx.table().max_len();
  rep.summary["table"] = {{"source", cert.source},
                          {"prefixLength", cert.prefix_length},
                          {"doublings", cert.doublings}};
  Json tags = Json::array();
  for (const std::string& n : ctx.tags().notes) tags.push_back(n);
  rep.summary["tags"] = {{"primitive", ctx.tags().primitive},
                         {"periodic", ctx.tags().periodic},
                         {"minimalSource", ctx.tags().minimal_source},
                         {"notes", tags}};
  rep.summary["starStar"] = ctx.gate().pass;
  rep.summary["nX"] = ctx.rays().finite() ? Json(ctx.partition().n_x)
                                          : Json(nullptr);
  // Reported only: one compact summand slot per discrete orbit.
  rep.summary["compactSummands"] = rep.summary["nX"];

  for (const std::string& name : known_suites()) {
    if (std::find(cfg.suites.begin(), cfg.suites.end(), name) ==
        cfg.suites.end())
      continue;
    SuiteResult r = run_suite(name, ctx);
    rep.timing[name] = r.seconds;
    if (name == "special" && r.details.contains("rays")) {
      Json dt = Json::array();
      for (const Json& ray : r.details["rays"])
        dt.push_back({{"ray", ray["ray"]},
                      {"d", ray.contains("d") ? ray["d"] : Json(nullptr)}});
      rep.summary["dTable"] = dt;
    }
    if (name == "fibers" && r.details.contains("triple"))
      rep.summary["fiberTriple"] = r.details["triple"];
    if (name == "complexity" && r.details.contains("p"))
      rep.summary["complexity"] = r.details["p"];
    rep.suites.push_back(std::move(r));
  }
  rep.timing["total"] = since(t0);
  return rep;
}

int verify_and_write(const SystemConfig& cfg, const std::string& out_dir) {
  const std::string dir = out_dir.empty() ? cfg.out : out_dir;
  VerificationReport rep;
  try {
    rep = run_config(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ConstructionError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    rep.system = cfg.name;
    rep.description = describe(cfg.system);
    SuiteResult r;
    r.name = "generate";
    r.verdict = Verdict::kFail;
    r.diagnostics.push_back(e.what());
    rep.suites.push_back(std::move(r));
  }
  try {
    write_text(dir + "/report.json", rep.body().dump(2) + "\n");
    write_text(dir + "/timing.json", rep.timing_json().dump(2) + "\n");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  for (const SuiteResult& r : rep.suites) {
    std::cout << r.name << ": " << to_string(r.verdict) << "\n";
    for (const std::string& d : r.diagnostics) std::cout << "  " << d << "\n";
  }
  std::cout << (rep.passed() ? "PASS" : "FAIL") << " " << cfg.name
            << " (report in " << dir << ")\n";
  return rep.exit_code();
}

int run_config_file(const std::string& path, const std::string& out_dir,
                    const std::vector<std::string>& suites) {
  SystemConfig cfg;
  try {
    cfg = load_config(path);
    if (!suites.empty()) {
      cfg.suites = suites;
      check_config(cfg);
    }
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return verify_and_write(cfg, out_dir);
}

// ---- export ----------------------------------------------------------------

Json to_json(const LevelIndex& level) { return {level.k, level.l}; }

Json to_json(const QuotientLevel& q) {
  Json classes = Json::array();
  for (const CoverClass& c : q.classes)
    classes.push_back({{"prefix", json_of(c.prefix)},
                       {"past", json_of(c.past)},
                       {"witness", json_of(c.witness)}});
  return {{"level", to_json(q.level)},
          {"horizon", q.horizon},
          {"stabilized", q.stabilized},
          {"comparedHorizon", q.compared_horizon},
          {"classes", classes}};
}

Json to_json(const FiberReport& f) {
  Json chain = Json::array();
  for (const LevelIndex& lv : f.chain) chain.push_back(to_json(lv));
  return {{"target", f.target.describe()},
          {"chain", chain},
          {"perLevelCounts", f.per_level_counts},
          {"threadCounts", f.thread_counts},
          {"threadCount", f.thread_count},
          {"stableFromK", f.stable_from_k},
          {"stabilized", f.stabilized},
          {"horizon", f.horizon},
          {"top", to_json(f.top)}};
}

std::string export_dot(const DotInput& g) {
  std::ostringstream os;
  os << "digraph shiftcover {\n";
  if (g.levels.empty() && g.maps.empty()) {
    os << "}\n";
    return os.str();
  }
  auto id = [](const LevelIndex& lv, std::size_t i) {
    return "\"" + std::to_string(lv.k) + "," + std::to_string(lv.l) + ":" +
           std::to_string(i) + "\"";
  };
  os << "  node [shape=box];\n";
  for (const QuotientLevel& q : g.levels) {
    std::set<std::size_t> iso;
    if (auto it = g.isolated.find(q.level); it != g.isolated.end())
      iso.insert(it->second.begin(), it->second.end());
    os << "  subgraph \"cluster_" << q.level.k << "_" << q.level.l
       << "\" {\n    label=\"" << q.level.str() << "\";\n";
    for (std::size_t i = 0; i < q.size(); ++i) {
      os << "    " << id(q.level, i) << " [label=\"" << q.classes[i].prefix.str()
         << "|" << q.classes[i].past.size() << "\"";
      if (iso.count(i)) os << ", peripheries=2, style=bold";
      os << "];\n";
    }
    os << "  }\n";
  }
  for (const ClassMap& m : g.maps) {
    const bool connecting = poset_leq(m.to, m.from);
    for (std::size_t i = 0; i < m.image.size(); ++i) {
      os << "  " << id(m.from, i) << " -> " << id(m.to, m.image[i]);
      if (!connecting) os << " [style=dashed, label=\"shift\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

DotInput chain_graph(const LanguageTable& table,
                     const std::vector<LevelIndex>& levels, std::size_t H,
                     const Horizons& horizons) {
  DotInput g;
  for (const LevelIndex& lv : levels) {
    g.levels.push_back(quotient_level(table, lv, H));
    std::size_t deep = lv.l + horizons.isolation_depth * horizons.isolation_stride;
    if (deep + H > table.max_len()) continue;
    std::vector<QuotientLevel> refs;
    for (LevelIndex r : refinement_levels(lv, horizons.isolation_depth,
                                          horizons.isolation_stride))
      refs.push_back(quotient_level(table, r, H));
    if (auto iso = isolated_classes(g.levels.back(), refs))
      g.isolated[lv] = *iso;
  }
  for (std::size_t i = 0; i + 1 < g.levels.size(); ++i) {
    const QuotientLevel& lo = g.levels[i];
    const QuotientLevel& hi = g.levels[i + 1];
    if (poset_leq(lo.level, hi.level)) {
      if (auto m = connecting_map(hi, lo)) g.maps.push_back(*m);
    } else if (hi.level.l == lo.level.l && hi.level.k == lo.level.k + 1) {
      if (auto m = shift_on_level(hi, lo)) g.maps.push_back(*m);
    }
  }
  return g;
}

std::string complexity_csv(const ComplexityProfile& p, std::size_t up_to) {
  const std::size_t n_max =
      up_to ? std::min(up_to, p.values.size()) : p.values.size();
  std::ostringstream os;
  os << "n,p,first_difference,left_special\n";
  for (std::size_t n = 1; n <= n_max; ++n) {
    os << n << "," << p.p(n) << ",";
    if (n - 1 < p.first_differences.size()) os << p.first_differences[n - 1];
    os << ",";
    if (n < p.left_special_counts.size()) os << p.left_special_counts[n];
    os << "\n";
  }
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace shiftcover
