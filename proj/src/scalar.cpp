// Copyright 2026 The gamesep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gamesep/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "gamesep/errors.hpp"

namespace gamesep {
namespace {

bool IsInteger(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

boost::multiprecision::mpz_int ParseInteger(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return boost::multiprecision::mpz_int(std::string(s));
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = Trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!IsInteger(s))
      throw ParseError("not a rational literal: '" + std::string(text) + "'");
    return Rational(ParseInteger(s));
  }
  std::string_view num = Trim(s.substr(0, slash));
  std::string_view den = Trim(s.substr(slash + 1));
  if (!IsInteger(num) || !IsInteger(den))
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  auto d = ParseInteger(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(ParseInteger(num), d);
}

double ParseDouble(std::string_view text) {
  std::string_view s = Trim(text);
  if (s.find('/') != std::string_view::npos) {
    return ParseRational(s).convert_to<double>();
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("not a number: '" + std::string(text) + "'");
  return value;
}

std::string FormatRational(const Rational& value) {
  auto num = numerator(value);
  auto den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace gamesep
