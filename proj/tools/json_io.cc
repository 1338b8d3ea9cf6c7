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


#include "json_io.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sgames/errors.h"

namespace sgames::io {

Json coalition_json(Coalition c) {
  Json a = Json::array();
  for (int i : members_of(c)) a.push_back(i);
  return a;
}

Coalition coalition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("a coalition is an array of players");
  std::vector<int> members;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw InvalidInput("player indices are integers");
    }
    members.push_back(v.get<int>());
  }
  return make_coalition(members);
}

namespace {

std::vector<Coalition> family_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("a family is an array of coalitions");
  std::vector<Coalition> out;
  for (const auto& c : j) out.push_back(coalition_from_json(c));
  return out;
}

Json family_json(const std::vector<Coalition>& f) {
  Json a = Json::array();
  for (Coalition c : f) a.push_back(coalition_json(c));
  return a;
}

std::string cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

SimpleGame game_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw InvalidInput("a game needs an integer \"n\"");
  }
  const int n = j["n"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  if (j.contains("min_winning")) {
    return SimpleGame(n, family_from_json(j["min_winning"]), labels);
  }
  if (j.contains("winning")) {
    return SimpleGame::from_winning(n, family_from_json(j["winning"]), labels);
  }
  if (j.contains("quota") && j.contains("weights")) {
    if (n > 24) throw InvalidInput("weighted input supports n <= 24");
    const Rational q = parse_rational(j["quota"].is_string()
                                          ? j["quota"].get<std::string>()
                                          : j["quota"].dump());
    std::vector<Rational> w;
    for (const auto& v : j["weights"]) {
      w.push_back(parse_rational(v.is_string() ? v.get<std::string>()
                                               : v.dump()));
    }
    if (static_cast<int>(w.size()) != n) {
      throw InvalidInput("weights differ in length from n");
    }
    std::vector<Coalition> winning;
    for (Coalition s = 0; s <= full_set(n); ++s) {
      Rational sum = 0;
      for (int i : members_of(s)) sum += w[i];
      if (sum >= q) winning.push_back(s);
    }
    if (winning.empty()) throw InvalidInput("no coalition reaches the quota");
    return SimpleGame::from_winning(n, winning, labels);
  }
  throw InvalidInput(
      "a game needs \"min_winning\", \"winning\" or \"quota\" and \"weights\"");
}

Json to_json(const SimpleGame& g) {
  Json j;
  j["n"] = g.n();
  j["min_winning"] = family_json(g.min_winning());
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

Json read_json(const std::string& source) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!source.empty() && (source[0] == '{' || source[0] == '[')) {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw InvalidInput("cannot read " + source);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

SimpleGame read_game(const std::string& source) {
  return game_from_json(read_json(source));
}

Json to_json(const TradingTransform& t) {
  return Json{{"x", family_json(t.x)}, {"y", family_json(t.y)}};
}

TradingTransform transform_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
    throw InvalidInput("a transform needs \"x\" and \"y\"");
  }
  return {family_from_json(j["x"]), family_from_json(j["y"])};
}

Json to_json(const WeightedRepresentation& rep) {
  Json j;
  j["quota"] = to_string(rep.quota);
  Json w = Json::array();
  for (const auto& v : rep.weights) w.push_back(to_string(v));
  j["weights"] = w;
  if (rep.integer_form) {
    Json iw = Json::array();
    for (const auto& v : rep.integer_form->weights) iw.push_back(to_string(v));
    j["integer_form"] = {{"quota", to_string(rep.integer_form->quota)},
                         {"weights", iw}};
  }
  j["text"] = to_string(rep);
  return j;
}

Json to_json(const CatalogParams& p) {
  return Json{{"family", family_name(p.family)},
              {"n", p.n},
              {"k", p.k},
              {"text", to_string(p)}};
}

Json to_json(const CompositionSpec& spec) {
  return Json{{"outer", to_json(spec.outer)},
              {"pivot", spec.pivot},
              {"inner", to_json(spec.inner)},
              {"player_map", spec.player_map}};
}

Json to_json(const CanonicalForm& form) {
  Json heads = Json::array();
  for (const auto& h : form.heads) heads.push_back(to_json(h));
  Json j{{"text", to_string(form)}, {"heads", heads}};
  j["core"] = form.core ? to_json(*form.core) : Json();
  j["tail"] = form.tail ? Json(*form.tail) : Json();
  return j;
}

Json to_json(const CheckOutcome& c) {
  return Json{{"check", c.name},     {"passed", c.passed()},
              {"checked", c.checked}, {"failed", c.failed},
              {"seconds", c.seconds}, {"examples", c.examples},
              {"notes", c.notes}};
}

Json to_json(const CensusRecord& r) {
  return Json{{"id", r.id},
              {"iso_class", r.iso_class},
              {"n", r.n},
              {"trivial_full", r.trivial_full},
              {"complete", r.complete},
              {"weighted", r.weighted},
              {"indecomposable", r.indecomposable},
              {"dummies", r.dummies},
              {"catalog", r.catalog},
              {"recognized", r.recognized},
              {"canonical", r.canonical}};
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json j{{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
  if (!r.census.empty()) {
    Json rows = Json::array();
    for (const auto& c : r.census) rows.push_back(to_json(c));
    j["census"] = rows;
  }
  return j;
}

std::string to_csv(const Json& j) {
  std::ostringstream os;
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    std::vector<std::string> keys;
    for (const auto& row : j) {
      for (const auto& [k, v] : row.items()) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
          keys.push_back(k);
        }
      }
    }
    for (size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
    os << '\n';
    for (const auto& row : j) {
      for (size_t i = 0; i < keys.size(); ++i) {
        if (i) os << ',';
        if (row.contains(keys[i])) os << cell(row[keys[i]]);
      }
      os << '\n';
    }
  } else if (j.is_object()) {
    os << "key,value\n";
    for (const auto& [k, v] : j.items()) os << k << ',' << cell(v) << '\n';
  } else {
    os << cell(j) << '\n';
  }
  return os.str();
}

}  // namespace sgames::io
