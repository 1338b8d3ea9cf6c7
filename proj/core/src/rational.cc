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


#include "sgames/rational.h"

#include <regex>

#include "sgames/errors.h"

namespace sgames {

Rational parse_rational(const std::string& text) {
  static const std::regex kForm(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, kForm)) {
    throw InvalidInput("not a rational: '" + text + "'");
  }
  Rational r;
  r.set_str(text, 10);
  if (sgn(r.get_den()) == 0) throw InvalidInput("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

}  // namespace sgames
