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

#ifndef CLINWER_CORPUS_H_
#define CLINWER_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clinwer/rational.h"
#include "clinwer/textnorm.h"

namespace clinwer {

// One spoken turn. (file_id, utterance_index) is unique within a corpus.
struct Utterance {
  std::string file_id;
  std::uint64_t utterance_index = 0;
  std::optional<std::string> speaker;
  std::string text;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

// A reference utterance and what one system produced for it. An absent
// hypothesis means the system skipped that stretch of audio.
struct TranscriptPair {
  Utterance reference;
  std::optional<Utterance> hypothesis;
  std::string system;

  // "<file_id>#<utterance_index>"
  std::string Id() const;

  friend bool operator==(const TranscriptPair&, const TranscriptPair&) = default;
};

// Transcript records, one JSON object per line:
//   {"file_id": str, "utt": int, "speaker": str?, "ref": str, "hyp": str?,
//    "system": str}
// Unknown fields are rejected. A null or empty "hyp" reads as absent.
// Pairs come back grouped by system, systems in order of first appearance,
// records in file order within a system.
std::vector<TranscriptPair> ReadDialogueCorpus(std::istream& in);
std::vector<TranscriptPair> LoadDialogueCorpus(const std::filesystem::path& path);

void WriteDialogueCorpus(std::span<const TranscriptPair> pairs, std::ostream& out);
void SaveDialogueCorpus(std::span<const TranscriptPair> pairs,
                        const std::filesystem::path& path);

// Distinct system labels in first-appearance order.
std::vector<std::string> Systems(std::span<const TranscriptPair> pairs);
std::vector<TranscriptPair> FilterSystem(std::span<const TranscriptPair> pairs,
                                         std::string_view system);

struct CorpusStats {
  std::size_t n_files = 0;
  Rational mean_utterances_per_file;
  Rational mean_words_per_utterance;
  std::size_t n_pairs = 0;
};

// Files and utterances are counted over distinct reference utterances, so a
// corpus holding four systems' output for the same dialogues reports the
// dialogues once. Word counts are normalized token counts.
CorpusStats ComputeCorpusStats(std::span<const TranscriptPair> pairs,
                               const NormConfig& config = {});

// ---------------------------------------------------------------------------
// PubMed title/abstract records.

struct PubMedRecord {
  std::string pmid;
  std::string title;
  std::string abstract;

  friend bool operator==(const PubMedRecord&, const PubMedRecord&) = default;
};

// Raw and cleaned records share one line format:
//   {"pmid": str, "title": str, "abstract": str}
std::vector<PubMedRecord> ReadPubMedRecords(std::istream& in);
std::vector<PubMedRecord> LoadPubMedRecords(const std::filesystem::path& path);
void WritePubMedRecords(std::span<const PubMedRecord> records, std::ostream& out);
void SavePubMedRecords(std::span<const PubMedRecord> records,
                       const std::filesystem::path& path);

// Removes control, format, private-use and unassigned characters and
// ill-formed UTF-8, collapses every whitespace run to one space and trims.
// Throws EmptyAfterCleaning if nothing is left.
std::string CleanTitle(std::string_view raw);

// CleanTitle plus removal of URLs (scheme:// or www. prefixed), TeX math and
// environments, TeX commands, and bracketed figure/table/equation/formula
// references such as "(Fig. 2)" or "[Formula: see text]".
std::string CleanAbstract(std::string_view raw);

struct DroppedRecord {
  std::string pmid;
  std::string reason;
};

struct CleanResult {
  std::vector<PubMedRecord> records;
  std::vector<DroppedRecord> dropped;
};

// Cleans every record. Records that come out empty, or repeat an earlier
// pmid, are dropped and logged rather than failing the batch.
CleanResult CleanRecords(std::span<const PubMedRecord> raw);

struct PubMedStats {
  std::size_t n_pairs = 0;
  Rational mean_title_words;
  Rational mean_abstract_words;
};

PubMedStats ComputePubMedStats(std::span<const PubMedRecord> records);

}  // namespace clinwer

#endif  // CLINWER_CORPUS_H_
