// Copyright 2026 The clinwer Authors
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

#include "clinwer/rational.h"

#include <cctype>

#include "clinwer/errors.h"

namespace clinwer {

namespace {

using boost::multiprecision::cpp_int;

cpp_int Pow10(int n) {
  cpp_int p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int ParseInt(std::string_view s) { return cpp_int(std::string(s)); }

Rational ParseDecimal(std::string_view text, std::string_view original) {
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty())
    throw DataError("not a number: '" + std::string(original) + "'");
  if ((!whole.empty() && !AllDigits(whole)) || (!frac.empty() && !AllDigits(frac)))
    throw DataError("not a number: '" + std::string(original) + "'");
  cpp_int num = whole.empty() ? cpp_int(0) : ParseInt(whole);
  cpp_int den = Pow10(static_cast<int>(frac.size()));
  num *= den;
  if (!frac.empty()) num += ParseInt(frac);
  return Rational(num, den);
}

}  // namespace

std::string FormatDecimal(const Rational& value, int decimals) {
  cpp_int num = boost::multiprecision::numerator(value);
  cpp_int den = boost::multiprecision::denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;
  cpp_int scale = Pow10(decimals);
  // round(num*scale/den) with ties away from zero
  cpp_int scaled = (2 * num * scale + den) / (2 * den);
  cpp_int int_part = scaled / scale;
  cpp_int frac_part = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += int_part.str();
  if (decimals > 0) {
    std::string f = frac_part.str();
    out += '.';
    out += std::string(static_cast<size_t>(decimals) - f.size(), '0');
    out += f;
  }
  return out;
}

std::string FormatPercent(const Rational& value, int decimals) {
  return FormatDecimal(value * 100, decimals);
}

double ToDouble(const Rational& value) {
  return value.convert_to<double>();
}

Rational ParseFraction(std::string_view text) {
  std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw DataError("empty fraction");

  if (text.back() == '%') {
    return ParseDecimal(text.substr(0, text.size() - 1), original) / 100;
  }
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view n = text.substr(0, slash);
    std::string_view d = text.substr(slash + 1);
    if (!AllDigits(n) || !AllDigits(d))
      throw DataError("not a fraction: '" + std::string(original) + "'");
    cpp_int den = ParseInt(d);
    if (den == 0) throw DataError("zero denominator: '" + std::string(original) + "'");
    return Rational(ParseInt(n), den);
  }
  return ParseDecimal(text, original);
}

}  // namespace clinwer
