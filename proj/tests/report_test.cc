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

#include "clinwer/report.h"

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "clinwer/errors.h"
#include "clinwer/metrics.h"

namespace clinwer {
namespace {

TranscriptPair Pair(const std::string& system, const std::string& file, std::uint64_t utt,
                    const std::string& ref, std::optional<std::string> hyp) {
  TranscriptPair p;
  p.reference = {file, utt, std::nullopt, ref};
  if (hyp) p.hypothesis = Utterance{file, utt, std::nullopt, *hyp};
  p.system = system;
  return p;
}

const char* kTen = "the patient reports mild pain in the upper left abdomen";

std::map<std::string, std::vector<TranscriptPair>> TwoSystems() {
  return {{"A", {Pair("A", "f1", 0, kTen, kTen)}},
          {"B", {Pair("B", "f1", 0, kTen, "the patient reports mild pain in the upper right abdomen")}}};
}

TEST(CompareSystems, PerfectAndOneSubstitution) {
  auto results = CompareSystems(TwoSystems());
  ASSERT_EQ(results.size(), 2u);
  EXPECT_EQ(results[0].system, "A");
  EXPECT_EQ(results[0].macro_wer, 0);
  EXPECT_EQ(results[1].system, "B");
  EXPECT_EQ(results[1].macro_wer, Rational(1, 10));
  EXPECT_EQ(FormatPercent(results[1].macro_wer), "10.00");
  EXPECT_EQ(results[1].n_groups, 1u);
}

TEST(CompareSystems, SingleSystemAndEmpty) {
  auto results = CompareSystems({{"only", {Pair("only", "f", 0, "a b", "a")}}});
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].macro_wer, Rational(1, 2));
  EXPECT_THROW(CompareSystems({}), DataError);
  EXPECT_THROW(CompareSystems({{"x", {}}}), DataError);
}

TEST(CompareSystems, OrderedByWerThenName) {
  std::map<std::string, std::vector<TranscriptPair>> corpora = {
      {"zeta", {Pair("zeta", "f", 0, "a b", "a b")}},
      {"alpha", {Pair("alpha", "f", 0, "a b", "a b")}},
      {"mid", {Pair("mid", "f", 0, "a b", "a c")}}};
  auto results = CompareSystems(corpora);
  std::vector<std::string> names;
  for (const auto& r : results) names.push_back(r.system);
  EXPECT_EQ(names, (std::vector<std::string>{"alpha", "zeta", "mid"}));
}

TEST(CompareSystems, ErrorNamesSystem) {
  try {
    CompareSystems({{"aws", {Pair("aws", "f9", 3, "!!!", "x")}}});
    FAIL();
  } catch (const EmptyReference& e) {
    EXPECT_EQ(e.pair_id(), "f9#3");
    EXPECT_NE(std::string(e.what()).find("aws"), std::string::npos);
  }
}

TEST(CompareSystemsProperty, InputOrderDoesNotMatter) {
  std::mt19937_64 rng(11);
  std::vector<std::string> vocab = {"pain", "nausea", "stool", "blood", "fever", "meal"};
  auto sentence = [&](int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (i ? " " : "") + vocab[rng() % vocab.size()];
    return s;
  };
  std::map<std::string, std::vector<TranscriptPair>> corpora;
  for (const char* sys : {"s1", "s2", "s3"}) {
    for (int f = 0; f < 4; ++f) {
      for (int u = 0; u < 6; ++u) {
        corpora[sys].push_back(Pair(sys, "f" + std::to_string(f), static_cast<std::uint64_t>(u),
                                    sentence(1 + static_cast<int>(rng() % 6)),
                                    sentence(static_cast<int>(rng() % 6))));
      }
    }
  }
  auto base = CompareSystems(corpora);
  for (int round = 0; round < 5; ++round) {
    auto shuffled = corpora;
    for (auto& [_, pairs] : shuffled) std::shuffle(pairs.begin(), pairs.end(), rng);
    auto results = CompareSystems(shuffled, {}, 3);
    ASSERT_EQ(results.size(), base.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
      EXPECT_EQ(results[i].system, base[i].system);
      EXPECT_EQ(results[i].macro_wer, base[i].macro_wer);
      EXPECT_EQ(results[i].micro_wer, base[i].micro_wer);
    }
  }
}

TEST(EqualDifferent, AbsentHypothesesAreDifferent) {
  std::vector<TranscriptPair> pairs = {
      Pair("ibm", "f", 0, "Hello there.", "hello there"),
      Pair("ibm", "f", 1, "a b", std::nullopt), Pair("ibm", "f", 2, "a b", std::nullopt),
      Pair("ibm", "f", 3, "a b", std::nullopt), Pair("ibm", "f", 4, "a b", "a c")};
  auto b = EqualDifferent(pairs, HypothesisSource::kAsr);
  EXPECT_EQ(b.system, "ibm");
  EXPECT_EQ(b.equal, 1u);
  EXPECT_EQ(b.different, 4u);
  EXPECT_EQ(b.total, 5u);
}

TEST(EqualDifferent, AllPerfect) {
  std::vector<TranscriptPair> pairs = {Pair("s", "f", 0, "a", "A"), Pair("s", "f", 1, "b c", "b, c")};
  auto b = EqualDifferent(pairs, HypothesisSource::kModel);
  EXPECT_EQ(b.equal, 2u);
  EXPECT_EQ(b.different, 0u);
  EXPECT_EQ(b.source, HypothesisSource::kModel);
}

TEST(EqualDifferent, MixedSystemsRejected) {
  std::vector<TranscriptPair> pairs = {Pair("a", "f", 0, "x", "x"), Pair("b", "f", 0, "x", "x")};
  EXPECT_THROW(EqualDifferent(pairs, HypothesisSource::kAsr), DataError);
}

TEST(EqualDifferentProperty, EqualIffZeroWer) {
  std::mt19937_64 rng(5);
  std::vector<std::string> vocab = {"a", "b", "c", "A", "b.", "c,"};
  for (int i = 0; i < 2000; ++i) {
    std::string ref, hyp;
    for (int n = 1 + static_cast<int>(rng() % 4); n > 0; --n) ref += " " + vocab[rng() % 6];
    for (int n = static_cast<int>(rng() % 4); n > 0; --n) hyp += " " + vocab[rng() % 6];
    TranscriptPair p = Pair("s", "f", 0, ref, hyp);
    auto b = EqualDifferent(std::span<const TranscriptPair>(&p, 1), HypothesisSource::kAsr);
    const Rational wer = Wer(Align(Normalize(ref), Normalize(hyp)));
    EXPECT_EQ(b.equal == 1, wer == 0) << ref << " | " << hyp;
    EXPECT_EQ(b.equal + b.different, b.total);
  }
}

std::vector<SystemResult> Results() {
  return {{"microsoft", Rational(1, 6), Rational(1, 8), 7}, {"aws", Rational(2, 9), Rational(1, 5), 7}};
}

TEST(ChartData, CsvGolden) {
  std::ostringstream out;
  EmitChartData(Results(), TableFormat::kCsv, out);
  EXPECT_EQ(out.str(),
            "system,macro_wer_pct,micro_wer_pct\n"
            "microsoft,16.67,12.50\n"
            "aws,22.22,20.00\n");
}

TEST(ChartData, JsonlGolden) {
  std::ostringstream out;
  EmitChartData(Results(), TableFormat::kJsonl, out);
  EXPECT_EQ(out.str(),
            "{\"system\":\"microsoft\",\"macro_wer_pct\":16.67,\"micro_wer_pct\":12.50}\n"
            "{\"system\":\"aws\",\"macro_wer_pct\":22.22,\"micro_wer_pct\":20.00}\n");
}

TEST(ChartData, OneRowPerSystem) {
  std::vector<SystemResult> four = {{"a", 0, 0, 1}, {"b", 0, 0, 1}, {"c", 0, 0, 1}, {"d", 0, 0, 1}};
  std::ostringstream out;
  EmitChartData(four, TableFormat::kCsv, out);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

TEST(ChartData, QuotesAwkwardNames) {
  std::vector<SystemResult> r = {{"a,\"b\"", 0, 0, 1}};
  std::ostringstream out;
  EmitChartData(r, TableFormat::kCsv, out);
  EXPECT_EQ(out.str(), "system,macro_wer_pct,micro_wer_pct\n\"a,\"\"b\"\"\",0.00,0.00\n");
}

TEST(ChartData, Errors) {
  std::ostringstream out;
  EXPECT_THROW(EmitChartData({}, TableFormat::kCsv, out), DataError);
  EXPECT_THROW(EmitChartData(Results(), TableFormat::kCsv,
                             std::filesystem::path("/nonexistent-dir/x/chart.csv")),
               IoError);
  EXPECT_THROW(ParseTableFormat("xml"), DataError);
}

TEST(ChartData, WritesFile) {
  auto path = std::filesystem::temp_directory_path() / "clinwer_chart_test.csv";
  EmitChartData(Results(), TableFormat::kCsv, path);
  EXPECT_EQ(std::filesystem::file_size(path), 73u);
  std::filesystem::remove(path);
}

TEST(EqualDifferentTable, Csv) {
  std::vector<EqualDifferentBreakdown> rows = {{"aws", HypothesisSource::kAsr, 30, 269, 299},
                                               {"aws+model", HypothesisSource::kModel, 40, 259, 299}};
  std::ostringstream out;
  EmitEqualDifferent(rows, TableFormat::kCsv, out);
  EXPECT_EQ(out.str(),
            "system,source,equal,different,total\n"
            "aws,asr,30,269,299\n"
            "aws+model,model,40,259,299\n");
}

}  // namespace
}  // namespace clinwer
