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

#include "clinwer/pubmed_fetch.h"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <thread>
#include <utility>

#include <curl/curl.h>

#include "clinwer/errors.h"
#include "clinwer/textnorm.h"
#include "json.hpp"

namespace clinwer {

namespace {

size_t AppendBody(char* data, size_t size, size_t count, void* user) {
  static_cast<std::string*>(user)->append(data, size * count);
  return size * count;
}

// Inner text of the first <tag ...>...</tag> at or after `from`, or npos.
struct Element {
  std::size_t begin = std::string_view::npos;  // first byte of content
  std::size_t end = std::string_view::npos;    // one past the content
  std::size_t after = std::string_view::npos;  // one past the closing tag
};

Element FindElement(std::string_view xml, std::string_view tag, std::size_t from,
                    std::size_t limit) {
  const std::string open = "<" + std::string(tag);
  const std::string close = "</" + std::string(tag) + ">";
  std::size_t pos = from;
  while ((pos = xml.find(open, pos)) != std::string_view::npos && pos < limit) {
    std::size_t next = pos + open.size();
    if (next < xml.size() && (xml[next] == '>' || xml[next] == ' ' || xml[next] == '\t' ||
                              xml[next] == '\n' || xml[next] == '/')) {
      std::size_t gt = xml.find('>', next);
      if (gt == std::string_view::npos) return {};
      if (xml[gt - 1] == '/') return {gt + 1, gt + 1, gt + 1};  // <tag/>
      std::size_t stop = xml.find(close, gt + 1);
      if (stop == std::string_view::npos || stop > limit) return {};
      return {gt + 1, stop, stop + close.size()};
    }
    pos = next;
  }
  return {};
}

void AppendCodePoint(std::string& out, std::uint32_t cp) {
  out += EncodeUtf8(std::u32string(1, static_cast<char32_t>(cp)));
}

// Strips markup, decodes the predefined and numeric entities.
std::string InnerText(std::string_view xml) {
  std::string out;
  for (std::size_t i = 0; i < xml.size();) {
    char c = xml[i];
    if (c == '<') {
      std::size_t gt = xml.find('>', i);
      if (gt == std::string_view::npos) break;
      i = gt + 1;
      continue;
    }
    if (c == '&') {
      std::size_t semi = xml.find(';', i);
      if (semi != std::string_view::npos && semi - i <= 10) {
        std::string_view ent = xml.substr(i + 1, semi - i - 1);
        bool known = true;
        if (ent == "amp") out += '&';
        else if (ent == "lt") out += '<';
        else if (ent == "gt") out += '>';
        else if (ent == "quot") out += '"';
        else if (ent == "apos") out += '\'';
        else if (ent.size() > 1 && ent[0] == '#') {
          try {
            std::uint32_t cp = (ent[1] == 'x' || ent[1] == 'X')
                                   ? static_cast<std::uint32_t>(
                                         std::stoul(std::string(ent.substr(2)), nullptr, 16))
                                   : static_cast<std::uint32_t>(
                                         std::stoul(std::string(ent.substr(1)), nullptr, 10));
            AppendCodePoint(out, cp);
          } catch (const std::exception&) {
            known = false;
          }
        } else {
          known = false;
        }
        if (known) {
          i = semi + 1;
          continue;
        }
      }
    }
    out += c;
    ++i;
  }
  return out;
}

}  // namespace

CurlTransport::CurlTransport() : handle_(curl_easy_init()) {
  if (!handle_) throw IoError("curl_easy_init failed");
}

CurlTransport::~CurlTransport() { curl_easy_cleanup(static_cast<CURL*>(handle_)); }

std::string CurlTransport::Get(const std::string& url) {
  CURL* curl = static_cast<CURL*>(handle_);
  std::string body;
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, &AppendBody);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
  curl_easy_setopt(curl, CURLOPT_USERAGENT, "clinwer-fetch/1.0");
  CURLcode rc = curl_easy_perform(curl);
  if (rc != CURLE_OK) throw IoError(std::string("GET failed: ") + curl_easy_strerror(rc));
  long status = 0;
  curl_easy_getinfo(curl, CURLINFO_RESPONSE_CODE, &status);
  if (status < 200 || status >= 300) {
    throw IoError("GET " + url + " returned HTTP " + std::to_string(status));
  }
  return body;
}

RateLimiter::RateLimiter(Clock::duration interval, Sleeper sleeper)
    : interval_(interval), sleeper_(std::move(sleeper)) {}

RateLimiter::Sleeper RateLimiter::DefaultSleeper() {
  return [](Clock::duration d) { std::this_thread::sleep_for(d); };
}

void RateLimiter::Wait() {
  auto now = Clock::now();
  if (!first_ && now - last_ < interval_) {
    sleeper_(interval_ - (now - last_));
    now = last_ + interval_;
  }
  first_ = false;
  last_ = now;
}

std::string BuildSearchQuery(const std::vector<std::string>& terms) {
  std::string q;
  for (const auto& t : terms) {
    if (!q.empty()) q += " AND ";
    q += "(" + t + ")";
  }
  return q;
}

std::string UrlEncode(std::string_view text) {
  static const char* kHex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    }
  }
  return out;
}

std::string SearchUrl(const FetchOptions& options) {
  std::string url = options.base_url + "esearch.fcgi?db=pubmed&retmode=json&retmax=" +
                    std::to_string(options.max_records) +
                    "&term=" + UrlEncode(BuildSearchQuery(options.terms));
  if (!options.api_key.empty()) url += "&api_key=" + UrlEncode(options.api_key);
  return url;
}

std::string FetchUrl(const FetchOptions& options, const std::vector<std::string>& pmids) {
  std::string ids;
  for (const auto& id : pmids) {
    if (!ids.empty()) ids += ',';
    ids += UrlEncode(id);
  }
  std::string url = options.base_url + "efetch.fcgi?db=pubmed&retmode=xml&id=" + ids;
  if (!options.api_key.empty()) url += "&api_key=" + UrlEncode(options.api_key);
  return url;
}

std::vector<std::string> ParseSearchResponse(std::string_view body) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("esearch response is not JSON: ") + e.what());
  }
  std::vector<std::string> ids;
  const auto& list = doc["esearchresult"]["idlist"];
  if (!list.is_array()) throw DataError("esearch response has no idlist");
  for (const auto& id : list) ids.push_back(id.get<std::string>());
  return ids;
}

std::vector<PubMedRecord> ParseFetchResponse(std::string_view xml) {
  std::vector<PubMedRecord> records;
  std::size_t pos = 0;
  for (;;) {
    Element article = FindElement(xml, "PubmedArticle", pos, xml.size());
    if (article.begin == std::string_view::npos) break;
    pos = article.after;
    std::string_view body = xml.substr(0, article.end);

    Element pmid = FindElement(body, "PMID", article.begin, article.end);
    Element title = FindElement(body, "ArticleTitle", article.begin, article.end);
    if (pmid.begin == std::string_view::npos || title.begin == std::string_view::npos) continue;

    PubMedRecord r;
    r.pmid = InnerText(body.substr(pmid.begin, pmid.end - pmid.begin));
    r.title = InnerText(body.substr(title.begin, title.end - title.begin));
    std::size_t from = article.begin;
    for (;;) {
      Element section = FindElement(body, "AbstractText", from, article.end);
      if (section.begin == std::string_view::npos) break;
      if (!r.abstract.empty()) r.abstract += ' ';
      r.abstract += InnerText(body.substr(section.begin, section.end - section.begin));
      from = section.after;
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<PubMedRecord> FetchPubMed(HttpTransport& http, const FetchOptions& options,
                                      RateLimiter& limiter) {
  if (options.batch_size == 0) throw DataError("batch size must be positive");
  limiter.Wait();
  std::vector<std::string> ids = ParseSearchResponse(http.Get(SearchUrl(options)));
  if (ids.size() > options.max_records) ids.resize(options.max_records);

  std::vector<PubMedRecord> records;
  for (std::size_t i = 0; i < ids.size(); i += options.batch_size) {
    std::vector<std::string> batch(
        ids.begin() + static_cast<std::ptrdiff_t>(i),
        ids.begin() + static_cast<std::ptrdiff_t>(std::min(ids.size(), i + options.batch_size)));
    limiter.Wait();
    for (auto& r : ParseFetchResponse(http.Get(FetchUrl(options, batch)))) {
      records.push_back(std::move(r));
    }
  }
  return records;
}

}  // namespace clinwer
