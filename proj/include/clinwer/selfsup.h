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

#ifndef CLINWER_SELFSUP_H_
#define CLINWER_SELFSUP_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clinwer/corpus.h"
#include "clinwer/rational.h"

namespace clinwer {

enum class Task { kSummarization, kParaphrase, kMaskFilling };

// "summarization", "paraphrase", "mask_filling"
std::string_view ToString(Task task);
// Also accepts the dashed CLI spelling "mask-filling".
Task ParseTask(std::string_view name);

// A (input, target) fine-tuning pair derived from one PubMed record.
struct SelfSupExample {
  Task task;
  std::string input;
  std::string target;
  std::string source_pmid;

  friend bool operator==(const SelfSupExample&, const SelfSupExample&) = default;
};

// input = abstract, target = title; one example per record, order kept.
std::vector<SelfSupExample> GenerateSummarization(std::span<const PubMedRecord> records);

// Replaces ceil(mask_fraction * n) of a title's n whitespace words with
// "<mask>". Positions are drawn uniformly without replacement from a
// generator seeded by (seed, pmid), so a record's masking does not depend on
// which other records are present or their order.
std::vector<SelfSupExample> GenerateMaskFilling(std::span<const PubMedRecord> records,
                                                const Rational& mask_fraction, std::uint64_t seed);

struct ParaphraseResult {
  std::vector<SelfSupExample> examples;
  // Records that had no paraphrase.
  std::size_t skipped = 0;
};

// input = supplied paraphrase, target = original title. Examples follow
// record order. Throws UnknownPmid for a paraphrase whose pmid has no record.
ParaphraseResult PairParaphrases(std::span<const PubMedRecord> records,
                                 const std::map<std::string, std::string>& paraphrases);

// Paraphrase files: one {"pmid": str, "paraphrase": str} per line.
std::map<std::string, std::string> LoadParaphrases(const std::filesystem::path& path);

struct SplitSpec {
  Rational train_fraction{9, 10};
  std::uint64_t seed = 0;
};

struct Split {
  std::vector<SelfSupExample> train;
  std::vector<SelfSupExample> eval;
};

// Ranks examples by a seeded hash of their content and cuts the ranking at
// round(train_fraction * total), halves rounding up. Membership and order of
// both halves depend only on the seed and the multiset of examples.
// Throws TooFewExamples below two examples and DataError for a fraction
// outside (0, 1).
Split SplitExamples(std::span<const SelfSupExample> examples, const SplitSpec& spec);

// Line format: {"task": str, "input": str, "target": str, "pmid": str}
void WriteExamples(std::span<const SelfSupExample> examples, std::ostream& out);
std::vector<SelfSupExample> ReadExamples(std::istream& in);

// "<task>.<split>.jsonl", e.g. "mask_filling.train.jsonl".
std::string DatasetFileName(Task task, std::string_view split);

// Stable 64-bit hashing and a seeded generator whose output is fixed across
// platforms and standard libraries (unlike std::uniform_int_distribution).
std::uint64_t StableHash(std::string_view bytes, std::uint64_t seed = 0);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next();
  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t Below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

}  // namespace clinwer

#endif  // CLINWER_SELFSUP_H_
