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

#ifndef CLINWER_RATIONAL_H_
#define CLINWER_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace clinwer {

// Exact rational arithmetic for WER values and fractions. Aggregating
// hundreds of per-utterance WERs overflows any fixed-width denominator.
using Rational = boost::multiprecision::cpp_rational;

// Renders 100*value with `decimals` digits after the point, rounding half
// away from zero. FormatPercent(Rational(1, 4)) == "25.00".
std::string FormatPercent(const Rational& value, int decimals = 2);

// Same rounding, without the x100 scaling.
std::string FormatDecimal(const Rational& value, int decimals = 2);

double ToDouble(const Rational& value);

// Accepts "0.25", ".25", "1/4", "3" or "25%". Throws DataError on anything
// else, including a zero denominator.
Rational ParseFraction(std::string_view text);

}  // namespace clinwer

#endif  // CLINWER_RATIONAL_H_
