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

#ifndef CLINWER_TEXTNORM_H_
#define CLINWER_TEXTNORM_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace clinwer {

inline constexpr std::string_view kMaskToken = "<mask>";

struct NormConfig {
  bool lowercase = true;
  bool strip_punctuation = true;
  bool collapse_whitespace = true;
  // A whitespace-delimited word spelled exactly "<mask>" passes through
  // untouched instead of losing its angle brackets.
  bool keep_mask_token = true;
};

// Ordered words. No token is empty and none contains whitespace.
class TokenSeq {
 public:
  TokenSeq() = default;
  // Throws std::invalid_argument if a token is empty or contains whitespace.
  explicit TokenSeq(std::vector<std::string> tokens);

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }
  auto begin() const { return tokens_.begin(); }
  auto end() const { return tokens_.end(); }

  // Appends every token of `other`.
  void Append(const TokenSeq& other);
  // Tokens joined by single spaces.
  std::string Join() const;

  friend bool operator==(const TokenSeq&, const TokenSeq&) = default;

 private:
  std::vector<std::string> tokens_;
};

// Splits `text` (UTF-8) into normalized words. Total: invalid UTF-8 bytes,
// control and format characters are dropped, never reported.
//
// With strip_punctuation, characters of the Unicode punctuation (P*) and
// symbol (S*) categories are deleted, except an apostrophe (U+0027 or
// U+2019) with a letter, mark or digit on both sides. Deletion joins the
// remaining pieces: "two-weekly" becomes "twoweekly".
TokenSeq Normalize(std::string_view text, const NormConfig& config = {});

// String form of Normalize. With collapse_whitespace the words are joined by
// single spaces; without it the original whitespace between surviving words
// is kept verbatim.
std::string NormalizeText(std::string_view text, const NormConfig& config = {});

// Splits on Unicode whitespace only; no other transformation.
TokenSeq SplitWords(std::string_view text);

// Decodes UTF-8, silently skipping ill-formed sequences.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);

}  // namespace clinwer

#endif  // CLINWER_TEXTNORM_H_
