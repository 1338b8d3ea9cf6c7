// Copyright 2026 The sgames Authors.
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


// Command-line front end for the sgames library.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_io.h"
#include "sgames/canonical.h"
#include "sgames/catalog.h"
#include "sgames/composition.h"
#include "sgames/desirability.h"
#include "sgames/enumerate.h"
#include "sgames/errors.h"
#include "sgames/paper_certificates.h"
#include "sgames/suites.h"
#include "sgames/trading.h"
#include "sgames/weights.h"

namespace {

using sgames::io::Json;
using sgames::io::to_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string g_format = "json";

void emit(const Json& j) {
  if (g_format == "csv") {
    std::cout << sgames::io::to_csv(j);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

Json coalition_list(sgames::Coalition c) { return sgames::io::coalition_json(c); }

int analyze(const std::string& source) {
  const auto g = sgames::io::read_game(source);
  Json j{{"game", to_json(g)}};
  j["complete"] = sgames::is_complete(g);
  if (j["complete"].get<bool>()) {
    j["desirability_levels"] = sgames::desirability_levels(g);
  } else {
    j["incompleteness_certificate"] =
        to_json(*sgames::incompleteness_certificate(g));
  }
  j["dummies"] = coalition_list(sgames::dummies(g));
  j["vetoers"] = coalition_list(sgames::vetoers(g));
  j["passers"] = coalition_list(sgames::passers(g));
  j["trivial_full"] = sgames::is_trivial_full(g);
  emit(j);
  return kPass;
}

int weights(const std::string& source, const std::string& check) {
  const auto g = sgames::io::read_game(source);
  if (!check.empty()) {
    const Json r = sgames::io::read_json(check);
    sgames::WeightedRepresentation rep;
    auto text = [](const Json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    rep.quota = sgames::parse_rational(text(r.at("quota")));
    for (const auto& w : r.at("weights")) {
      rep.weights.push_back(sgames::parse_rational(text(w)));
    }
    const bool ok = sgames::verify_representation(g, rep);
    emit(Json{{"accepted", ok}});
    return ok ? kPass : kFail;
  }
  Json j;
  if (auto rep = sgames::synthesize_weights(g)) {
    j["weighted"] = true;
    j["representation"] = to_json(*rep);
  } else {
    j["weighted"] = false;
    j["certificate"] = to_json(sgames::farkas_certificate(g));
  }
  emit(j);
  return kPass;
}

int certificate(const std::string& source, const std::string& check,
                const std::string& kind, int search_len) {
  const auto g = sgames::io::read_game(source);
  if (!check.empty()) {
    const auto t = sgames::io::transform_from_json(sgames::io::read_json(check));
    const auto k = kind == "incompleteness"
                       ? sgames::CertificateKind::kIncompleteness
                       : sgames::CertificateKind::kNonweightedness;
    const auto v = sgames::check_certificate(g, t, k);
    emit(Json{{"valid", v.valid}, {"reason", v.reason}});
    return v.valid ? kPass : kFail;
  }
  Json j;
  j["weighted"] = sgames::is_weighted(g);
  if (!j["weighted"].get<bool>()) {
    j["farkas"] = to_json(sgames::farkas_certificate(g));
  }
  if (search_len > 0) {
    auto found = sgames::search_certificate(g, search_len);
    j["search"] = found ? to_json(*found) : Json();
  }
  if (auto t = sgames::incompleteness_certificate(g)) {
    j["incompleteness"] = to_json(*t);
  }
  emit(j);
  return kPass;
}

int compose(const std::string& outer, int pivot, const std::string& inner,
            const std::vector<int>& map) {
  sgames::CompositionSpec spec{sgames::io::read_game(outer), pivot,
                               sgames::io::read_game(inner), map};
  emit(to_json(sgames::compose(spec)));
  return kPass;
}

int decompose(const std::string& source, int limit) {
  const auto g = sgames::io::read_game(source);
  Json a = Json::array();
  for (const auto& d : sgames::find_decompositions(g, limit)) {
    a.push_back(to_json(d));
  }
  emit(Json{{"indecomposable", a.empty()}, {"decompositions", a}});
  return kPass;
}

int classify(const std::string& source) {
  const auto g = sgames::io::read_game(source);
  auto tag = sgames::classify(g);
  emit(Json{{"catalog", tag ? to_json(*tag) : Json()}});
  return kPass;
}

sgames::CatalogParams params(const std::string& family,
                             const std::vector<int>& n,
                             const std::vector<int>& k) {
  return {sgames::parse_family(family), n, k};
}

sgames::Mode parse_mode(const std::string& m) {
  return m == "indecomposable" ? sgames::Mode::kIndecomposable
                               : sgames::Mode::kFull;
}

int make(const std::string& family, const std::vector<int>& n,
         const std::vector<int>& k, const std::string& mode) {
  emit(to_json(sgames::make(params(family, n, k), parse_mode(mode))));
  return kPass;
}

int paper_cert(const std::string& id, const std::string& family,
               const std::vector<int>& n, const std::vector<int>& k,
               int level, const std::string& inner,
               const std::string& branch) {
  sgames::CaseInput in{params(family, n, k), level,
                       sgames::io::read_game(inner), sgames::Branch::kAny};
  if (branch == "in") in.branch = sgames::Branch::kPivotInY;
  if (branch == "out") in.branch = sgames::Branch::kPivotNotInY;
  Json j{{"case", id}};
  try {
    auto c = sgames::certificate_for(sgames::parse_case(id), in);
    auto v = sgames::validate(c);
    j["composite"] = to_json(c.composite);
    j["pivot"] = c.pivot;
    j["transform"] = to_json(c.transform);
    j["kind"] = c.kind == sgames::CertificateKind::kIncompleteness
                    ? "incompleteness"
                    : "nonweightedness";
    j["valid"] = v.valid;
    j["reason"] = v.reason;
    emit(j);
    return v.valid ? kPass : kFail;
  } catch (const sgames::UnrealizableDisplay& e) {
    j["valid"] = false;
    j["reason"] = std::string("unrealizable display: ") + e.what();
  } catch (const sgames::UndefinedDisplay& e) {
    j["valid"] = false;
    j["reason"] = std::string("undefined display: ") + e.what();
  }
  emit(j);
  return kFail;
}

int canon(const std::string& source, bool paths) {
  const auto g = sgames::io::read_game(source);
  auto out = sgames::canonical_analysis(g);
  Json j;
  j["recognized"] = out.form.has_value();
  j["form"] = out.form ? to_json(*out.form) : Json();
  if (!out.form) j["reason"] = out.reason;
  if (paths && out.form) {
    Json a = Json::array();
    for (const auto& f : sgames::all_canonical_paths(g)) {
      a.push_back(sgames::to_string(f));
    }
    j["paths"] = a;
    j["unique"] = sgames::verify_uniqueness(g);
  }
  emit(j);
  return kPass;
}

int enumerate(int n, bool collapse, bool allow_five) {
  auto games = sgames::enumerate_games(n, allow_five);
  if (collapse) games = sgames::collapse_isomorphic(games);
  Json a = Json::array();
  for (const auto& g : games) a.push_back(to_json(g));
  if (g_format == "csv") {
    Json rows = Json::array();
    for (const auto& g : games) rows.push_back(Json{{"id", g.to_string()}});
    emit(rows);
  } else {
    emit(Json{{"n", n}, {"count", games.size()}, {"games", a}});
  }
  return kPass;
}

int verify(const std::string& suite, const sgames::SuiteOptions& opt) {
  const auto rep = sgames::run_suite(suite, opt);
  if (g_format == "csv" && suite == "census") {
    std::cout << sgames::census_csv(rep.census);
  } else if (g_format == "csv") {
    Json rows = Json::array();
    for (const auto& c : rep.checks) rows.push_back(to_json(c));
    emit(rows);
  } else {
    emit(to_json(rep));
  }
  return rep.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis of simple games: weights, certificates, composition"};
  app.require_subcommand(1);
  app.add_option("--format", g_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string game, outer, inner, check, kind = "nonweightedness";
  std::string family, mode = "full", case_id, branch = "any", suite;
  std::vector<int> n_list, k_list, map;
  int pivot = 0, limit = 0, search_len = 0, level = 0, n = 4;
  bool collapse = false, allow_five = false, paths = false;
  sgames::SuiteOptions opt;

  auto* a = app.add_subcommand("analyze", "Completeness and special players");
  a->add_option("--game", game, "Game JSON: path, - or inline")->required();

  auto* w = app.add_subcommand("weights", "Weighted representation");
  w->add_option("--game", game, "Game JSON")->required();
  w->add_option("--check", check, "Representation JSON to verify");

  auto* c = app.add_subcommand("certificate", "Trading certificates");
  c->add_option("--game", game, "Game JSON")->required();
  c->add_option("--check", check, "Transform JSON to validate");
  c->add_option("--kind", kind, "Certificate kind")
      ->check(CLI::IsMember({"nonweightedness", "incompleteness"}));
  c->add_option("--search", search_len, "Bounded search length");

  auto* co = app.add_subcommand("compose", "Compose two games");
  co->add_option("--outer", outer, "Outer game JSON")->required();
  co->add_option("--pivot", pivot, "Outer player replaced")->required();
  co->add_option("--inner", inner, "Inner game JSON")->required();
  co->add_option("--map", map, "Player permutation of the result");

  auto* d = app.add_subcommand("decompose", "All decompositions");
  d->add_option("--game", game, "Game JSON")->required();
  d->add_option("--limit", limit, "Stop after this many (0: all)");

  auto* cl = app.add_subcommand("classify", "Catalog membership");
  cl->add_option("--game", game, "Game JSON")->required();

  auto* mk = app.add_subcommand("make", "Build a catalog game");
  mk->add_option("--family", family, "Family name")->required();
  mk->add_option("--n", n_list, "Level sizes")->required()->delimiter(',');
  mk->add_option("--k", k_list, "Thresholds")->delimiter(',');
  mk->add_option("--mode", mode, "Constructor mode")
      ->check(CLI::IsMember({"full", "indecomposable"}));

  auto* pc = app.add_subcommand("paper-cert", "Certificate for a composition");
  pc->add_option("--case", case_id, "Case identifier")->required();
  pc->add_option("--family", family, "Outer family")->required();
  pc->add_option("--n", n_list, "Outer level sizes")->required()->delimiter(',');
  pc->add_option("--k", k_list, "Outer thresholds")->delimiter(',');
  pc->add_option("--level", level, "Pivot level (0: natural)");
  pc->add_option("--inner", inner, "Inner game JSON")->required();
  pc->add_option("--branch", branch, "Incompleteness branch")
      ->check(CLI::IsMember({"any", "in", "out"}));

  auto* ca = app.add_subcommand("canon", "Canonical decomposition");
  ca->add_option("--game", game, "Game JSON")->required();
  ca->add_flag("--paths", paths, "List every decomposition path");

  auto* en = app.add_subcommand("enumerate", "All games on n players");
  en->add_option("--n", n, "Player count")->required();
  en->add_flag("--collapse-iso", collapse, "One game per isomorphism class");
  en->add_flag("--allow-five", allow_five, "Permit n = 5");

  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(sgames::suite_names()));
  v->add_option("--n", opt.n, "Largest enumerated player count");
  v->add_option("--seed", opt.seed, "Seed for random composition triples");
  v->add_option("--triples", opt.triples, "Random composition triples");
  v->add_flag("--allow-five", opt.allow_five, "Permit n = 5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*a) return analyze(game);
    if (*w) return weights(game, check);
    if (*c) return certificate(game, check, kind, search_len);
    if (*co) return compose(outer, pivot, inner, map);
    if (*d) return decompose(game, limit);
    if (*cl) return classify(game);
    if (*mk) return make(family, n_list, k_list, mode);
    if (*pc) {
      return paper_cert(case_id, family, n_list, k_list, level, inner,
                        branch);
    }
    if (*ca) return canon(game, paths);
    if (*en) return enumerate(n, collapse, allow_five);
    if (*v) return verify(suite, opt);
  } catch (const sgames::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sgames::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
