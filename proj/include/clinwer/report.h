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

#ifndef CLINWER_REPORT_H_
#define CLINWER_REPORT_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clinwer/corpus.h"
#include "clinwer/metrics.h"
#include "clinwer/rational.h"
#include "clinwer/textnorm.h"

namespace clinwer {

struct SystemResult {
  std::string system;
  Rational macro_wer;
  Rational micro_wer;
  std::size_t n_groups = 0;
};

// Per-file WER for every system, best (lowest macro WER) first; ties broken
// by system label, so the result does not depend on input order. Metric
// errors are rethrown with the system label in the message.
std::vector<SystemResult> CompareSystems(
    const std::map<std::string, std::vector<TranscriptPair>>& corpora,
    const NormConfig& config = {}, unsigned jobs = 1);

// Splits a mixed corpus by system label.
std::map<std::string, std::vector<TranscriptPair>> BySystem(
    std::span<const TranscriptPair> pairs);

enum class HypothesisSource { kAsr, kModel };

std::string_view ToString(HypothesisSource source);
HypothesisSource ParseHypothesisSource(std::string_view name);

struct EqualDifferentBreakdown {
  std::string system;
  HypothesisSource source = HypothesisSource::kAsr;
  std::size_t equal = 0;
  std::size_t different = 0;
  std::size_t total = 0;
};

// Counts utterances whose normalized hypothesis equals the normalized
// reference. A missing hypothesis counts as different. Throws DataError if
// the pairs span several systems.
EqualDifferentBreakdown EqualDifferent(std::span<const TranscriptPair> pairs,
                                       HypothesisSource source, const NormConfig& config = {});

enum class TableFormat { kCsv, kJsonl };

TableFormat ParseTableFormat(std::string_view name);

// Chart data behind a per-system WER bar chart: columns system,
// macro_wer_pct, micro_wer_pct with two decimals. Throws DataError for empty
// results.
void EmitChartData(std::span<const SystemResult> results, TableFormat format, std::ostream& out);
// Throws IoError if the file cannot be written.
void EmitChartData(std::span<const SystemResult> results, TableFormat format,
                   const std::filesystem::path& path);

// Columns system, source, equal, different, total.
void EmitEqualDifferent(std::span<const EqualDifferentBreakdown> rows, TableFormat format,
                        std::ostream& out);

}  // namespace clinwer

#endif  // CLINWER_REPORT_H_
