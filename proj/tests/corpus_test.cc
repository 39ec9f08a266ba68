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

#include "clinwer/corpus.h"

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "clinwer/errors.h"

namespace clinwer {
namespace {

std::vector<TranscriptPair> Parse(const std::string& text) {
  std::istringstream in(text);
  return ReadDialogueCorpus(in);
}

TEST(ReadDialogueCorpus, TwoLines) {
  auto pairs = Parse(
      R"({"file_id":"f1","utt":0,"speaker":"clinician","ref":"Hello there","hyp":"hello their","system":"aws"})"
      "\n"
      R"({"file_id":"f1","utt":1,"ref":"How are you","hyp":"how are you","system":"aws"})"
      "\n");
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].reference.speaker, "clinician");
  EXPECT_EQ(pairs[0].hypothesis->text, "hello their");
  EXPECT_EQ(pairs[0].hypothesis->file_id, "f1");
  EXPECT_FALSE(pairs[1].reference.speaker.has_value());
  EXPECT_EQ(pairs[1].Id(), "f1#1");
}

TEST(ReadDialogueCorpus, MissingHypothesisIsAbsent) {
  auto pairs = Parse(
      R"({"file_id":"f1","utt":0,"ref":"Hello","system":"aws"})"
      "\n"
      R"({"file_id":"f1","utt":1,"ref":"Hello","hyp":null,"system":"aws"})"
      "\n"
      R"({"file_id":"f1","utt":2,"ref":"Hello","hyp":"","system":"aws"})");
  ASSERT_EQ(pairs.size(), 3u);
  for (const auto& p : pairs) EXPECT_FALSE(p.hypothesis.has_value());
}

TEST(ReadDialogueCorpus, GroupsBySystemInFirstAppearanceOrder) {
  auto pairs = Parse(
      R"({"file_id":"f1","utt":0,"ref":"a","hyp":"a","system":"ibm"})"
      "\n"
      R"({"file_id":"f1","utt":0,"ref":"a","hyp":"a","system":"aws"})"
      "\n"
      R"({"file_id":"f1","utt":1,"ref":"b","hyp":"b","system":"ibm"})");
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(pairs[0].system, "ibm");
  EXPECT_EQ(pairs[1].system, "ibm");
  EXPECT_EQ(pairs[1].reference.utterance_index, 1u);
  EXPECT_EQ(pairs[2].system, "aws");
  EXPECT_EQ(Systems(pairs), (std::vector<std::string>{"ibm", "aws"}));
  EXPECT_EQ(FilterSystem(pairs, "aws").size(), 1u);
}

TEST(ReadDialogueCorpus, FormatErrorsCarryLineNumbers) {
  auto expect_line = [](const std::string& text, std::size_t line) {
    try {
      Parse(text);
      FAIL() << "expected FormatError for " << text;
    } catch (const FormatError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
    }
  };
  const std::string good = R"({"file_id":"f","utt":0,"ref":"a","system":"s"})";
  expect_line(good + "\n{not json", 2);
  expect_line(good + "\n\n" + R"({"file_id":"f","utt":1,"system":"s"})", 3);
  expect_line(R"({"file_id":"f","utt":-1,"ref":"a","system":"s"})", 1);
  expect_line(R"({"file_id":"f","utt":"3","ref":"a","system":"s"})", 1);
  expect_line(R"({"file_id":"f","utt":0,"ref":"","system":"s"})", 1);
  expect_line(R"({"file_id":"f","utt":0,"ref":"a","system":"s","extra":1})", 1);
  expect_line(R"({"file_id":"f","utt":0,"ref":"a","hyp":5,"system":"s"})", 1);
  expect_line(R"(["f",0])", 1);
}

TEST(ReadDialogueCorpus, DuplicateUtterance) {
  const std::string line = R"({"file_id":"f","utt":0,"ref":"a","system":"s"})";
  EXPECT_THROW(Parse(line + "\n" + line), DuplicateUtterance);
  // Same utterance from another system is fine.
  EXPECT_NO_THROW(Parse(line + "\n" + R"({"file_id":"f","utt":0,"ref":"a","system":"t"})"));
}

TEST(DialogueCorpus, RoundTrip) {
  const std::string text =
      R"({"file_id":"f1","utt":0,"speaker":"patient","ref":"Aye, a wee bit.","hyp":"I a we bit","system":"google"})"
      "\n"
      R"({"file_id":"f1","utt":1,"ref":"Naïve “quotes” – dash","system":"google"})"
      "\n"
      R"({"file_id":"f2","utt":0,"ref":"x","hyp":"y","system":"aws"})"
      "\n";
  auto first = Parse(text);
  std::ostringstream out;
  WriteDialogueCorpus(first, out);
  EXPECT_EQ(out.str(), text);
  EXPECT_EQ(Parse(out.str()), first);
}

TEST(CorpusStats, SingleUtterance) {
  auto pairs = Parse(R"({"file_id":"f","utt":0,"ref":"one two three four five","system":"s"})");
  CorpusStats s = ComputeCorpusStats(pairs);
  EXPECT_EQ(s.n_files, 1u);
  EXPECT_EQ(s.mean_utterances_per_file, 1);
  EXPECT_EQ(s.mean_words_per_utterance, 5);
  EXPECT_EQ(s.n_pairs, 1u);
}

TEST(CorpusStats, ReferencesCountedOnceAcrossSystems) {
  auto pairs = Parse(
      R"({"file_id":"f1","utt":0,"ref":"a b","hyp":"a","system":"s1"})"
      "\n"
      R"({"file_id":"f1","utt":0,"ref":"a b","system":"s2"})"
      "\n"
      R"({"file_id":"f2","utt":0,"ref":"a b c d","hyp":"a","system":"s1"})"
      "\n"
      R"({"file_id":"f2","utt":1,"ref":"a b c d","hyp":"a","system":"s1"})");
  CorpusStats s = ComputeCorpusStats(pairs);
  EXPECT_EQ(s.n_files, 2u);
  EXPECT_EQ(s.mean_utterances_per_file, Rational(3, 2));
  EXPECT_EQ(s.mean_words_per_utterance, Rational(10, 3));
  EXPECT_EQ(s.n_pairs, 4u);
}

TEST(CorpusStats, EmptyCorpus) {
  EXPECT_THROW(ComputeCorpusStats(std::vector<TranscriptPair>{}), EmptyCorpus);
  EXPECT_THROW(ComputePubMedStats(std::vector<PubMedRecord>{}), EmptyCorpus);
}

TEST(CorpusStats, GcdFixture) {
  auto pairs = LoadDialogueCorpus(CLINWER_DATA_DIR "/gcd_sample.jsonl");
  CorpusStats s = ComputeCorpusStats(pairs);
  EXPECT_EQ(s.n_files, 7u);
  EXPECT_EQ(s.mean_utterances_per_file, 47);
  EXPECT_EQ(s.n_pairs, 299u + 300u + 284u + 225u);
}

TEST(PubMedRecords, ReadAndWrite) {
  std::istringstream in(
      R"({"pmid":"123","title":"T","abstract":"A"})"
      "\n"
      R"({"pmid":456,"title":"T2","abstract":"A2"})"
      "\n");
  auto records = ReadPubMedRecords(in);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[1].pmid, "456");
  std::ostringstream out;
  WritePubMedRecords(records, out);
  EXPECT_EQ(out.str(),
            R"({"pmid":"123","title":"T","abstract":"A"})"
            "\n"
            R"({"pmid":"456","title":"T2","abstract":"A2"})"
            "\n");

  std::istringstream bad(R"({"pmid":"1","title":"T"})");
  EXPECT_THROW(ReadPubMedRecords(bad), FormatError);
}

TEST(PubMedStats, Counts) {
  std::vector<PubMedRecord> records = {{"1", "A title here.", "One two three four."},
                                       {"2", "Short", "x y"}};
  PubMedStats s = ComputePubMedStats(records);
  EXPECT_EQ(s.n_pairs, 2u);
  EXPECT_EQ(s.mean_title_words, 2);
  EXPECT_EQ(s.mean_abstract_words, 3);
}

TEST(LoadDialogueCorpus, MissingFileIsIoError) {
  EXPECT_THROW(LoadDialogueCorpus("/nonexistent/x.jsonl"), IoError);
}

}  // namespace
}  // namespace clinwer
