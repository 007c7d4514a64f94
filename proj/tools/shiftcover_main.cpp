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

// shiftcover: build language tables, analyze special structure, compute
// cover levels, run verification suites and export graphs.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shiftcover/verify.hpp"

namespace sc = shiftcover;

namespace {

struct Common {
  std::string config;
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> defect;
  std::string out;
  std::string format;
  std::vector<std::string> suites;
};

sc::SystemConfig load(const Common& c) {
  sc::SystemConfig cfg = sc::load_config(c.config);
  if (c.max_len) cfg.horizons.max_len = *c.max_len;
  if (c.defect) {
    cfg.horizons.defect = *c.defect;
    cfg.horizons.fiber_chain.defect = *c.defect;
    cfg.horizons.orbit_chain.defect = *c.defect;
  }
  if (!c.suites.empty()) cfg.suites = c.suites;
  sc::check_config(cfg);
  return cfg;
}

// stdout when no directory was given.
void emit(const Common& c, const std::string& file, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  sc::write_text(c.out + "/" + file, text);
  std::cout << "wrote " << c.out << "/" << file << "\n";
}

int cmd_generate(const Common& c) {
  sc::SystemConfig cfg = load(c);
  sc::LanguageTable t =
      sc::language_from_generator(cfg.system, cfg.horizons.max_len);
  if (c.format == "csv") {
    emit(c, "complexity.csv", sc::complexity_csv(sc::complexity(t)));
    return 0;
  }
  sc::Json counts = sc::Json::array();
  for (std::size_t n = 0; n <= t.max_len(); ++n) counts.push_back(t.count(n));
  sc::Json words = sc::Json::object();
  for (std::size_t n = 1; n <= std::min<std::size_t>(t.max_len(), 10); ++n) {
    sc::Json list = sc::Json::array();
    for (const sc::Word& w : t.words(n)) list.push_back(w.str());
    words[std::to_string(n)] = list;
  }
  sc::Json j{{"system", sc::describe(cfg.system)},
             {"maxLen", t.max_len()},
             {"certificate",
              {{"source", t.certificate().source},
               {"prefixLength", t.certificate().prefix_length},
               {"doublings", t.certificate().doublings}}},
             {"counts", counts},
             {"words", words}};
  emit(c, "language.json", j.dump(2) + "\n");
  return 0;
}

int cmd_analyze(const Common& c) {
  sc::SystemContext ctx(load(c));
  sc::Json j{{"system", sc::describe(ctx.config().system)},
             {"maxLen", ctx.table().max_len()}};
  bool ok = true;
  for (const auto& r : {sc::verify_complexity(ctx), sc::verify_special(ctx),
                        sc::verify_star(ctx)}) {
    j[r.name] = r.details;
    ok = ok && r.verdict == sc::Verdict::kPass;
  }
  sc::Json reasons = sc::Json::array();
  for (const std::string& r : ctx.gate().reasons) reasons.push_back(r);
  j["starStar"] = {{"pass", ctx.gate().pass}, {"reasons", reasons}};
  emit(c, "analysis.json", j.dump(2) + "\n");
  return ok ? 0 : 1;
}

struct CoverData {
  sc::DotInput graph;
  std::size_t H = 0;
};

CoverData cover_data(const sc::SystemConfig& cfg) {
  sc::LanguageTable t =
      sc::language_from_generator(cfg.system, cfg.horizons.max_len);
  const sc::ChainSpec& chain = cfg.horizons.fiber_chain;
  std::vector<sc::LevelIndex> levels = chain.levels();
  const std::size_t top = levels.back().l;
  const std::size_t refine =
      cfg.horizons.isolation_depth * cfg.horizons.isolation_stride;
  if (top >= t.max_len())
    throw sc::HorizonError("chain level " + levels.back().str() +
                           " does not fit maxLen " +
                           std::to_string(t.max_len()));
  std::size_t H = cfg.horizons.H;
  if (!H) {
    const std::size_t room = t.max_len() - top;
    H = room > refine ? (room - refine) / 2 : room / 2;
  }
  H = std::max(H, levels.back().k);
  return {sc::chain_graph(t, levels, H, cfg.horizons), H};
}

sc::Json cover_json(const CoverData& d) {
  sc::Json levels = sc::Json::array();
  for (const sc::QuotientLevel& q : d.graph.levels) {
    sc::Json jq = sc::to_json(q);
    auto it = d.graph.isolated.find(q.level);
    jq["isolated"] = it == d.graph.isolated.end() ? sc::Json(nullptr)
                                                  : sc::Json(it->second);
    levels.push_back(jq);
  }
  sc::Json maps = sc::Json::array();
  for (const sc::ClassMap& m : d.graph.maps)
    maps.push_back({{"from", sc::to_json(m.from)},
                    {"to", sc::to_json(m.to)},
                    {"image", m.image}});
  return {{"horizon", d.H}, {"levels", levels}, {"maps", maps}};
}

int cmd_cover(const Common& c) {
  CoverData d = cover_data(load(c));
  if (c.format == "dot") {
    emit(c, "cover.dot", sc::export_dot(d.graph));
  } else if (c.format == "json") {
    emit(c, "cover.json", cover_json(d).dump(2) + "\n");
  } else {
    std::cout << "horizon " << d.H << "\n";
    for (const sc::QuotientLevel& q : d.graph.levels) {
      auto it = d.graph.isolated.find(q.level);
      std::cout << q.level.str() << " classes=" << q.size()
                << " stabilized=" << (q.stabilized ? "yes" : "no")
                << " isolated="
                << (it == d.graph.isolated.end()
                        ? std::string("-")
                        : std::to_string(it->second.size()))
                << "\n";
    }
  }
  return 0;
}

int cmd_verify(const Common& c) { return sc::verify_and_write(load(c), c.out); }

int cmd_export(const Common& c) {
  sc::SystemConfig cfg = load(c);
  Common where = c;
  if (where.out.empty()) where.out = cfg.out;
  if (c.format == "csv") {
    sc::LanguageTable t =
        sc::language_from_generator(cfg.system, cfg.horizons.max_len);
    emit(where, "complexity.csv", sc::complexity_csv(sc::complexity(t)));
  } else if (c.format == "json") {
    emit(where, "cover.json", cover_json(cover_data(cfg)).dump(2) + "\n");
  } else {
    emit(where, "cover.dot", sc::export_dot(cover_data(cfg).graph));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftcover: finite covers of one-sided shift spaces"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&c](CLI::App* sub, bool with_format,
                         std::vector<std::string> formats) {
    sub->add_option("--config", c.config, "system configuration (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--max-len", c.max_len, "override horizons.maxLen");
    sub->add_option("--defect", c.defect, "override the chain defect");
    sub->add_option("--out", c.out, "output directory");
    if (with_format)
      sub->add_option("--format", c.format, "output format")
          ->check(CLI::IsMember(formats));
  };
  auto* gen = app.add_subcommand("generate", "build the language table");
  add_common(gen, true, {"json", "csv"});
  auto* ana = app.add_subcommand("analyze", "complexity and special rays");
  add_common(ana, false, {});
  auto* cov = app.add_subcommand("cover", "quotient levels along the chain");
  add_common(cov, true, {"json", "dot"});
  auto* ver = app.add_subcommand("verify", "run verification suites");
  add_common(ver, false, {});
  ver->add_option("--suite", c.suites, "suites to run (comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember(sc::known_suites()));
  auto* exp = app.add_subcommand("export", "write graphs and tables");
  add_common(exp, true, {"dot", "json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_generate(c);
    if (*ana) return cmd_analyze(c);
    if (*cov) return cmd_cover(c);
    if (*ver) return cmd_verify(c);
    if (*exp) return cmd_export(c);
  } catch (const sc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const sc::ConstructionError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
