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

#include <chrono>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "clinwer/errors.h"

namespace clinwer {
namespace {

class FakeTransport : public HttpTransport {
 public:
  std::vector<std::string> urls;
  std::string search_body;
  std::vector<std::string> fetch_bodies;

  std::string Get(const std::string& url) override {
    urls.push_back(url);
    if (url.find("esearch.fcgi") != std::string::npos) return search_body;
    if (fetch_bodies.empty()) throw IoError("no canned body");
    std::string body = fetch_bodies.front();
    fetch_bodies.erase(fetch_bodies.begin());
    return body;
  }
};

std::string Article(const std::string& pmid, const std::string& title,
                    const std::string& abstract_xml) {
  return "<PubmedArticle><MedlineCitation Status=\"MEDLINE\"><PMID Version=\"1\">" + pmid +
         "</PMID><Article><ArticleTitle>" + title + "</ArticleTitle><Abstract>" + abstract_xml +
         "</Abstract></Article></MedlineCitation><PubmedData><ArticleIdList><ArticleId "
         "IdType=\"pubmed\">" +
         pmid + "</ArticleId></ArticleIdList></PubmedData></PubmedArticle>";
}

TEST(Query, AndCombinesTerms) {
  EXPECT_EQ(BuildSearchQuery({"a b", "c"}), "(a b) AND (c)");
  EXPECT_EQ(BuildSearchQuery(FetchOptions{}.terms),
            "(gastrointestinal symptoms) AND (diagnosis) AND (clinical) AND (examination) AND "
            "(patient)");
}

TEST(Query, UrlEncoding) {
  EXPECT_EQ(UrlEncode("a b(c)&d~e"), "a%20b%28c%29%26d~e");
  EXPECT_EQ(UrlEncode("\xC3\xA9"), "%C3%A9");
}

TEST(Query, Urls) {
  FetchOptions o;
  o.terms = {"x y"};
  o.max_records = 5;
  EXPECT_EQ(SearchUrl(o),
            "https://eutils.ncbi.nlm.nih.gov/entrez/eutils/"
            "esearch.fcgi?db=pubmed&retmode=json&retmax=5&term=%28x%20y%29");
  o.api_key = "k1";
  EXPECT_EQ(FetchUrl(o, {"1", "2"}),
            "https://eutils.ncbi.nlm.nih.gov/entrez/eutils/"
            "efetch.fcgi?db=pubmed&retmode=xml&id=1,2&api_key=k1");
}

TEST(Parse, SearchResponse) {
  EXPECT_EQ(ParseSearchResponse(R"({"header":{},"esearchresult":{"count":"2","idlist":["11","22"]}})"),
            (std::vector<std::string>{"11", "22"}));
  EXPECT_THROW(ParseSearchResponse("<html>"), DataError);
  EXPECT_THROW(ParseSearchResponse(R"({"esearchresult":{}})"), DataError);
}

TEST(Parse, FetchResponseStructuredAbstract) {
  std::string xml = "<?xml version=\"1.0\"?><PubmedArticleSet>" +
                    Article("123", "Gastric <i>H. pylori</i> &amp; ulcers",
                            "<AbstractText Label=\"BACKGROUND\">Common &lt;10%.</AbstractText>"
                            "<AbstractText Label=\"RESULTS\">Caf&#233; &#x3b1;.</AbstractText>") +
                    Article("456", "No abstract", "") + "</PubmedArticleSet>";
  auto records = ParseFetchResponse(xml);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].pmid, "123");
  EXPECT_EQ(records[0].title, "Gastric H. pylori & ulcers");
  EXPECT_EQ(records[0].abstract, "Common <10%. Caf\xC3\xA9 \xCE\xB1.");
  EXPECT_EQ(records[1].pmid, "456");
  EXPECT_EQ(records[1].abstract, "");
}

TEST(Fetch, BatchesAndRateLimits) {
  FakeTransport http;
  http.search_body = R"({"esearchresult":{"idlist":["1","2","3"]}})";
  http.fetch_bodies = {"<PubmedArticleSet>" + Article("1", "T1", "<AbstractText>A1</AbstractText>") +
                           Article("2", "T2", "<AbstractText>A2</AbstractText>") +
                           "</PubmedArticleSet>",
                       "<PubmedArticleSet>" + Article("3", "T3", "<AbstractText>A3</AbstractText>") +
                           "</PubmedArticleSet>"};
  FetchOptions o;
  o.batch_size = 2;
  int sleeps = 0;
  RateLimiter limiter(std::chrono::hours(1), [&](RateLimiter::Clock::duration d) {
    EXPECT_GT(d.count(), 0);
    ++sleeps;
  });
  auto records = FetchPubMed(http, o, limiter);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[2].title, "T3");
  ASSERT_EQ(http.urls.size(), 3u);
  EXPECT_NE(http.urls[1].find("id=1,2"), std::string::npos);
  EXPECT_NE(http.urls[2].find("id=3"), std::string::npos);
  EXPECT_EQ(sleeps, 2);
}

TEST(Fetch, MaxRecordsTruncates) {
  FakeTransport http;
  http.search_body = R"({"esearchresult":{"idlist":["1","2","3"]}})";
  http.fetch_bodies = {"<PubmedArticleSet>" + Article("1", "T1", "") + "</PubmedArticleSet>"};
  FetchOptions o;
  o.max_records = 1;
  RateLimiter limiter(std::chrono::milliseconds(0), [](RateLimiter::Clock::duration) {});
  auto records = FetchPubMed(http, o, limiter);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_NE(http.urls[1].find("id=1"), std::string::npos);
  EXPECT_EQ(http.urls[1].find("id=1,"), std::string::npos);
}

TEST(Fetch, ZeroBatchRejected) {
  FakeTransport http;
  FetchOptions o;
  o.batch_size = 0;
  RateLimiter limiter(std::chrono::milliseconds(0));
  EXPECT_THROW(FetchPubMed(http, o, limiter), DataError);
}

TEST(RateLimiter, FirstCallNeverSleeps) {
  int sleeps = 0;
  RateLimiter limiter(std::chrono::hours(1), [&](RateLimiter::Clock::duration) { ++sleeps; });
  limiter.Wait();
  EXPECT_EQ(sleeps, 0);
  limiter.Wait();
  EXPECT_EQ(sleeps, 1);
}

}  // namespace
}  // namespace clinwer
