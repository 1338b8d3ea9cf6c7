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


#ifndef SGAMES_TOOLS_JSON_IO_H_
#define SGAMES_TOOLS_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "sgames/canonical.h"
#include "sgames/catalog.h"
#include "sgames/composition.h"
#include "sgames/suites.h"
#include "sgames/trading.h"
#include "sgames/weights.h"

namespace sgames::io {

using Json = nlohmann::ordered_json;

// A game object carries "n" and one of "min_winning", "winning" (any
// family, minimalized) or "quota" with "weights"; "labels" is optional.
// Coalitions are arrays of player indices.
SimpleGame game_from_json(const Json& j);
Json to_json(const SimpleGame& g);

// Reads a game from a file path, "-" for stdin, or inline JSON text.
SimpleGame read_game(const std::string& source);
Json read_json(const std::string& source);

Json coalition_json(Coalition c);
Coalition coalition_from_json(const Json& j);

Json to_json(const TradingTransform& t);
TradingTransform transform_from_json(const Json& j);
Json to_json(const WeightedRepresentation& rep);
Json to_json(const CatalogParams& p);
Json to_json(const CompositionSpec& spec);
Json to_json(const CanonicalForm& form);
Json to_json(const CheckOutcome& c);
Json to_json(const SuiteReport& r);
Json to_json(const CensusRecord& r);

// Arrays of objects become one row per element under the union of keys;
// an object becomes key,value rows. Nested values are written as JSON.
std::string to_csv(const Json& j);

}  // namespace sgames::io

#endif  // SGAMES_TOOLS_JSON_IO_H_
