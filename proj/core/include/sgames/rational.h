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

#ifndef SGAMES_RATIONAL_H_
#define SGAMES_RATIONAL_H_

#include <gmpxx.h>

#include <string>

namespace sgames {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a" or "a/b" into canonical form. Throws InvalidInput.
Rational parse_rational(const std::string& text);

// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

}  // namespace sgames

#endif  // SGAMES_RATIONAL_H_
