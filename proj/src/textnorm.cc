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

#include "clinwer/textnorm.h"

#include <stdexcept>
#include <utility>

#include <unicode/locid.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace clinwer {

namespace {

bool IsSpace(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

// Cc (minus whitespace), Cf, Co, Cn and surrogates never reach a token.
bool IsInvisible(char32_t c) {
  if (IsSpace(c)) return false;
  const uint32_t mask = U_GET_GC_MASK(static_cast<UChar32>(c));
  return (mask & U_GC_C_MASK) != 0;
}

bool IsPunctOrSymbol(char32_t c) {
  const uint32_t mask = U_GET_GC_MASK(static_cast<UChar32>(c));
  return (mask & (U_GC_P_MASK | U_GC_S_MASK)) != 0;
}

bool IsWordChar(char32_t c) {
  const uint32_t mask = U_GET_GC_MASK(static_cast<UChar32>(c));
  return (mask & (U_GC_L_MASK | U_GC_M_MASK | U_GC_N_MASK)) != 0;
}

bool IsApostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

std::u32string StripPunctuation(const std::u32string& word) {
  std::u32string out;
  out.reserve(word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    char32_t c = word[i];
    if (IsApostrophe(c)) {
      bool inner = i > 0 && i + 1 < word.size() && IsWordChar(word[i - 1]) &&
                   IsWordChar(word[i + 1]);
      if (inner) out.push_back(c);
      continue;
    }
    if (!IsPunctOrSymbol(c)) out.push_back(c);
  }
  return out;
}

std::string Lowercase(const std::u32string& word) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(word.data()),
      static_cast<int32_t>(word.size()));
  u.toLower(icu::Locale::getRoot());
  std::string out;
  u.toUTF8String(out);
  return out;
}

std::string TransformWord(const std::u32string& word, const NormConfig& config) {
  static const std::u32string kMask = U"<mask>";
  if (config.keep_mask_token && word == kMask) return std::string(kMaskToken);
  std::u32string w = config.strip_punctuation ? StripPunctuation(word) : word;
  if (w.empty()) return {};
  return config.lowercase ? Lowercase(w) : EncodeUtf8(w);
}

struct Segment {
  std::u32string text;
  bool space;
};

// Alternating runs of whitespace and word characters, invisible characters
// already removed.
std::vector<Segment> Segments(std::string_view text) {
  std::vector<Segment> segs;
  for (char32_t c : DecodeUtf8(text)) {
    if (IsInvisible(c)) continue;
    bool space = IsSpace(c);
    if (segs.empty() || segs.back().space != space) segs.push_back({{}, space});
    segs.back().text.push_back(c);
  }
  return segs;
}

}  // namespace

TokenSeq::TokenSeq(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (const auto& t : tokens_) {
    if (t.empty()) throw std::invalid_argument("empty token");
    for (char32_t c : DecodeUtf8(t)) {
      if (IsSpace(c)) throw std::invalid_argument("token contains whitespace: " + t);
    }
  }
}

void TokenSeq::Append(const TokenSeq& other) {
  tokens_.insert(tokens_.end(), other.tokens_.begin(), other.tokens_.end());
}

std::string TokenSeq::Join() const {
  std::string out;
  for (size_t i = 0; i < tokens_.size(); ++i) {
    if (i) out += ' ';
    out += tokens_[i];
  }
  return out;
}

TokenSeq Normalize(std::string_view text, const NormConfig& config) {
  std::vector<std::string> tokens;
  for (const Segment& seg : Segments(text)) {
    if (seg.space) continue;
    std::string w = TransformWord(seg.text, config);
    if (!w.empty()) tokens.push_back(std::move(w));
  }
  return TokenSeq(std::move(tokens));
}

std::string NormalizeText(std::string_view text, const NormConfig& config) {
  if (config.collapse_whitespace) return Normalize(text, config).Join();
  std::string out;
  for (const Segment& seg : Segments(text)) {
    out += seg.space ? EncodeUtf8(seg.text) : TransformWord(seg.text, config);
  }
  return out;
}

TokenSeq SplitWords(std::string_view text) {
  std::vector<std::string> tokens;
  std::u32string word;
  for (char32_t c : DecodeUtf8(text)) {
    if (IsSpace(c)) {
      if (!word.empty()) tokens.push_back(EncodeUtf8(word));
      word.clear();
    } else {
      word.push_back(c);
    }
  }
  if (!word.empty()) tokens.push_back(EncodeUtf8(word));
  return TokenSeq(std::move(tokens));
}

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c >= 0) out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (!error) out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
  }
  return out;
}

}  // namespace clinwer
