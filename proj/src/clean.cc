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

#include <memory>
#include <set>

#include <spdlog/spdlog.h>
#include <unicode/locid.h>
#include <unicode/regex.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "clinwer/corpus.h"
#include "clinwer/errors.h"

namespace clinwer {

namespace {

// Drops invisible characters, turns every whitespace run into one space and
// trims both ends.
std::u32string BasicClean(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char32_t c : text) {
    auto cp = static_cast<UChar32>(c);
    if (u_isUWhiteSpace(cp)) {
      pending_space = true;
      continue;
    }
    if ((U_GET_GC_MASK(cp) & U_GC_C_MASK) != 0) continue;
    if (pending_space && !out.empty()) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

// URLs go first and in a pass of their own, so a TeX command or word glued
// to the front of a URL cannot swallow its scheme.
constexpr const char* kUrlPattern = R"([a-z][a-z0-9+.\-]*://\S*|www\.\S*)";

// Alternatives, tried left to right at each position:
//   TeX environments, display math, inline math with TeX markup, TeX
//   commands with braced arguments, bracketed figure/table/equation
//   references, PubMed "[Formula: see text]"-style placeholders, and
//   bracket pairs left empty by earlier removals.
constexpr const char* kArtifactPattern =
    R"(\\begin\{([a-z]+\*?)\}.*?\\end\{\1\})"
    R"(|\$\$.*?\$\$)"
    R"(|\\\[.*?\\\])"
    R"(|\\\(.*?\\\))"
    R"(|\$[^$]*[\\^_{}][^$]*\$)"
    R"(|\\[a-z]+\*?(?:\{[^{}]*\})*)"
    R"(|[(\[]\s*(?:see\s+)?(?:supplementary\s+)?(?:fig(?:ure)?s?|tab(?:le)?s?|eq(?:uation)?s?|formulae?)\.?\s*)"
    R"((?:S?\d+[a-z]?|[ivx]+)(?:\s*(?:[-–,&]|and)\s*(?:S?\d+[a-z]?|[ivx]+))*\s*[)\]])"
    R"(|\[\s*(?:figure|table|formula|equation)\s*:\s*see\s+text\s*\])"
    R"(|\(\s*\)|\[\s*\])";

std::unique_ptr<icu::RegexPattern> Compile(const char* source) {
  UErrorCode status = U_ZERO_ERROR;
  UParseError perr;
  std::unique_ptr<icu::RegexPattern> p(icu::RegexPattern::compile(
      icu::UnicodeString::fromUTF8(source), UREGEX_CASE_INSENSITIVE | UREGEX_DOTALL, perr,
      status));
  if (U_FAILURE(status)) {
    throw std::logic_error(std::string("bad artifact pattern: ") + u_errorName(status));
  }
  return p;
}

const icu::RegexPattern& UrlPattern() {
  static const std::unique_ptr<icu::RegexPattern> pattern = Compile(kUrlPattern);
  return *pattern;
}

const icu::RegexPattern& ArtifactPattern() {
  static const std::unique_ptr<icu::RegexPattern> pattern = Compile(kArtifactPattern);
  return *pattern;
}

bool IsTrailingUrlPunct(UChar c) {
  return c == u'.' || c == u',' || c == u';' || c == u':' || c == u'!' || c == u'?' ||
         c == u'\'' || c == u'"' || c == u')' || c == u']' || c == u'}' || c == u'>';
}

bool IsUrlMatch(icu::UnicodeString m) {
  m.toLower(icu::Locale::getRoot());
  return m.indexOf(u"://") >= 0 || m.startsWith(u"www.");
}

bool ClosesClause(UChar c) {
  return c == u'.' || c == u',' || c == u';' || c == u':' || c == u'!' || c == u'?' ||
         c == u')' || c == u']';
}

// One removal pass. A space left dangling before the end of the
// text, another space, or clause punctuation is dropped with the artifact.
icu::UnicodeString RemoveMatches(const icu::RegexPattern& pattern,
                                 const icu::UnicodeString& text) {
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<icu::RegexMatcher> matcher(pattern.matcher(text, status));
  if (U_FAILURE(status)) throw std::runtime_error(u_errorName(status));

  icu::UnicodeString out;
  int32_t copied = 0;
  int32_t from = 0;
  while (from < text.length() && matcher->find(from, status)) {
    int32_t start = matcher->start(status);
    int32_t end = matcher->end(status);
    icu::UnicodeString m = matcher->group(status);
    if (IsUrlMatch(m)) {
      while (end > start && IsTrailingUrlPunct(text.charAt(end - 1))) --end;
    }
    if (end <= start) {
      from = start + 1;
      continue;
    }
    out.append(text, copied, start - copied);
    bool at_boundary = end >= text.length() || u_isUWhiteSpace(text.char32At(end)) ||
                       ClosesClause(text.charAt(end));
    if (at_boundary) {
      while (out.length() > 0 && u_isUWhiteSpace(out.char32At(out.length() - 1))) {
        out.truncate(out.length() - 1);
      }
    }
    copied = end;
    from = end;
  }
  if (U_FAILURE(status)) throw std::runtime_error(u_errorName(status));
  out.append(text, copied, text.length() - copied);
  return out;
}

icu::UnicodeString ToIcu(const std::u32string& s) {
  return icu::UnicodeString::fromUTF32(reinterpret_cast<const UChar32*>(s.data()),
                                       static_cast<int32_t>(s.size()));
}

std::u32string FromIcu(const icu::UnicodeString& s) {
  std::string utf8;
  s.toUTF8String(utf8);
  return DecodeUtf8(utf8);
}

}  // namespace

std::string CleanTitle(std::string_view raw) {
  std::u32string cleaned = BasicClean(DecodeUtf8(raw));
  if (cleaned.empty()) throw EmptyAfterCleaning("title is empty after cleaning");
  return EncodeUtf8(cleaned);
}

std::string CleanAbstract(std::string_view raw) {
  std::u32string current = BasicClean(DecodeUtf8(raw));
  // Removing one artifact can splice together the pieces of another, so run
  // to a fixed point. Every productive pass strictly shortens the text.
  for (;;) {
    icu::UnicodeString text = RemoveMatches(UrlPattern(), ToIcu(current));
    text = RemoveMatches(ArtifactPattern(), text);
    std::u32string next = BasicClean(FromIcu(text));
    if (next == current) break;
    current = std::move(next);
  }
  if (current.empty()) throw EmptyAfterCleaning("abstract is empty after cleaning");
  return EncodeUtf8(current);
}

CleanResult CleanRecords(std::span<const PubMedRecord> raw) {
  CleanResult result;
  std::set<std::string> seen;
  for (const auto& r : raw) {
    if (seen.count(r.pmid)) {
      result.dropped.push_back({r.pmid, "duplicate pmid"});
      continue;
    }
    try {
      PubMedRecord c{r.pmid, CleanTitle(r.title), CleanAbstract(r.abstract)};
      seen.insert(r.pmid);
      result.records.push_back(std::move(c));
    } catch (const EmptyAfterCleaning& e) {
      result.dropped.push_back({r.pmid, e.what()});
    }
  }
  for (const auto& d : result.dropped) {
    spdlog::warn("dropping pmid {}: {}", d.pmid, d.reason);
  }
  return result;
}

}  // namespace clinwer
