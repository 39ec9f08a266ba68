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

#ifndef CLINWER_SRC_JSONL_H_
#define CLINWER_SRC_JSONL_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"

#include "clinwer/errors.h"

namespace clinwer::internal {

// Calls fn(object, line_number) for every non-blank line. Parse failures
// become FormatError with the 1-based line number.
template <typename Fn>
void ForEachJsonLine(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::ordered_json obj;
    try {
      obj = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(number, std::string("invalid JSON: ") + e.what());
    }
    fn(obj, number);
  }
  if (in.bad()) throw IoError("read error");
}

inline std::string RequireString(const nlohmann::ordered_json& obj, const char* key,
                                 std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(line, std::string("missing '") + key + "'");
  if (!it->is_string()) throw FormatError(line, std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

inline std::optional<std::string> OptionalString(const nlohmann::ordered_json& obj,
                                                 const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw FormatError(line, std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

// Compact, UTF-8 preserving, invalid bytes replaced so output is always
// valid JSON.
inline void WriteJsonLine(std::ostream& out, const nlohmann::ordered_json& obj) {
  out << obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
}

}  // namespace clinwer::internal

#endif  // CLINWER_SRC_JSONL_H_
