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

#ifndef CLINWER_METRICS_H_
#define CLINWER_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clinwer/corpus.h"
#include "clinwer/rational.h"
#include "clinwer/textnorm.h"

namespace clinwer {

enum class EditKind { kMatch, kSubstitute, kDelete, kInsert };

const char* ToString(EditKind kind);

// match/substitute carry both indices, delete only ref_index, insert only
// hyp_index.
struct EditOp {
  EditKind kind;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;

  static EditOp Match(std::size_t r, std::size_t h) { return {EditKind::kMatch, r, h}; }
  static EditOp Substitute(std::size_t r, std::size_t h) {
    return {EditKind::kSubstitute, r, h};
  }
  static EditOp Delete(std::size_t r) { return {EditKind::kDelete, r, std::nullopt}; }
  static EditOp Insert(std::size_t h) { return {EditKind::kInsert, std::nullopt, h}; }

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct AlignmentTrace {
  std::vector<EditOp> ops;
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t matches = 0;
  // Reference length; always substitutions + deletions + matches.
  std::size_t ref_length = 0;

  std::size_t errors() const { return substitutions + deletions + insertions; }
};

// Minimum edit alignment under unit costs. Among equal-cost alignments the
// backtrace prefers match, then substitute, then delete, then insert, so the
// result is a pure function of the inputs.
AlignmentTrace Align(const TokenSeq& ref, const TokenSeq& hyp);

// (S + D + I) / N, exactly. Throws EmptyReference when N == 0. Values above
// one are legitimate (insertion-heavy hypotheses) and are not clamped.
Rational Wer(const AlignmentTrace& trace);

// Renders the alignment as three aligned rows (REF/HYP/op), in the spirit of
// sclite's pralign output. Used by `clinwer score --show-alignment`.
std::string RenderAlignment(const AlignmentTrace& trace, const TokenSeq& ref,
                            const TokenSeq& hyp);

enum class Grouping { kPerUtterance, kPerFile };

struct GroupScore {
  // "<file_id>" for per-file grouping, "<file_id>#<utt>" per utterance.
  std::string id;
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t matches = 0;
  std::size_t ref_length = 0;
  Rational wer;
};

struct WerReport {
  // Sorted by id (utterances by file then index).
  std::vector<GroupScore> per_pair;
  // Mean of per-group WERs.
  Rational macro_wer;
  // Pooled: (sum S + sum D + sum I) / sum N.
  Rational micro_wer;
};

// Scores one system's pairs. Per-file grouping concatenates each file's
// reference utterances (in utterance order) and, separately, its hypothesis
// utterances before aligning. Every reference must keep at least one word
// after normalization; otherwise EmptyReference names the first offending
// pair. Throws DataError on an empty input or pairs from several systems.
// `jobs` > 1 scores groups on worker threads; the report does not depend on
// it.
WerReport CorpusWer(std::span<const TranscriptPair> pairs, Grouping grouping,
                    const NormConfig& config = {}, unsigned jobs = 1);

}  // namespace clinwer

#endif  // CLINWER_METRICS_H_
