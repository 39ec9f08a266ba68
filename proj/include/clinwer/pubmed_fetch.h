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

#ifndef CLINWER_PUBMED_FETCH_H_
#define CLINWER_PUBMED_FETCH_H_

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "clinwer/corpus.h"

namespace clinwer {

// Thin adapter over the NCBI E-utilities that writes raw (uncleaned)
// PubMed records. Nothing else in the library touches the network.

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  // Returns the response body; throws IoError on transport failure or a
  // non-2xx status.
  virtual std::string Get(const std::string& url) = 0;
};

class CurlTransport : public HttpTransport {
 public:
  CurlTransport();
  ~CurlTransport() override;
  CurlTransport(const CurlTransport&) = delete;
  CurlTransport& operator=(const CurlTransport&) = delete;

  std::string Get(const std::string& url) override;

 private:
  void* handle_;
};

// Spaces consecutive calls to Wait() at least `interval` apart.
class RateLimiter {
 public:
  using Clock = std::chrono::steady_clock;
  using Sleeper = std::function<void(Clock::duration)>;

  explicit RateLimiter(Clock::duration interval, Sleeper sleeper = DefaultSleeper());
  void Wait();

  static Sleeper DefaultSleeper();

 private:
  Clock::duration interval_;
  Sleeper sleeper_;
  Clock::time_point last_{};
  bool first_ = true;
};

struct FetchOptions {
  std::vector<std::string> terms = {"gastrointestinal symptoms", "diagnosis", "clinical",
                                    "examination", "patient"};
  std::size_t max_records = 100;
  std::size_t batch_size = 100;
  std::string api_key;
  std::string base_url = "https://eutils.ncbi.nlm.nih.gov/entrez/eutils/";
  // NCBI allows 3 requests/s without a key and 10 with one.
  std::chrono::milliseconds min_interval{340};
};

// "(gastrointestinal symptoms) AND (diagnosis) AND ..."
std::string BuildSearchQuery(const std::vector<std::string>& terms);

std::string UrlEncode(std::string_view text);

std::string SearchUrl(const FetchOptions& options);
std::string FetchUrl(const FetchOptions& options, const std::vector<std::string>& pmids);

// PMIDs from an esearch JSON response.
std::vector<std::string> ParseSearchResponse(std::string_view body);

// Title/abstract records from an efetch PubmedArticleSet XML response.
// Inline markup inside titles and abstracts is dropped and entities
// decoded; structured abstract sections are joined with single spaces.
std::vector<PubMedRecord> ParseFetchResponse(std::string_view xml);

std::vector<PubMedRecord> FetchPubMed(HttpTransport& http, const FetchOptions& options,
                                      RateLimiter& limiter);

}  // namespace clinwer

#endif  // CLINWER_PUBMED_FETCH_H_
