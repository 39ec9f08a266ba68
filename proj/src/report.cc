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
#include <fstream>
#include <ostream>
#include <tuple>

#include "clinwer/errors.h"
#include "json.hpp"

namespace clinwer {

std::vector<SystemResult> CompareSystems(
    const std::map<std::string, std::vector<TranscriptPair>>& corpora,
    const NormConfig& config, unsigned jobs) {
  if (corpora.empty()) throw DataError("no systems to compare");
  std::vector<SystemResult> results;
  for (const auto& [system, pairs] : corpora) {
    if (pairs.empty()) throw DataError("system '" + system + "' has no transcripts");
    WerReport report;
    try {
      report = CorpusWer(pairs, Grouping::kPerFile, config, jobs);
    } catch (const EmptyReference& e) {
      throw EmptyReference(e.pair_id(), "system '" + system + "': " + e.what());
    } catch (const DataError& e) {
      throw DataError("system '" + system + "': " + e.what());
    }
    results.push_back({system, report.macro_wer, report.micro_wer, report.per_pair.size()});
  }
  std::sort(results.begin(), results.end(), [](const SystemResult& a, const SystemResult& b) {
    return std::tie(a.macro_wer, a.system) < std::tie(b.macro_wer, b.system);
  });
  return results;
}

std::map<std::string, std::vector<TranscriptPair>> BySystem(
    std::span<const TranscriptPair> pairs) {
  std::map<std::string, std::vector<TranscriptPair>> out;
  for (const auto& p : pairs) out[p.system].push_back(p);
  return out;
}

std::string_view ToString(HypothesisSource source) {
  return source == HypothesisSource::kAsr ? "asr" : "model";
}

HypothesisSource ParseHypothesisSource(std::string_view name) {
  if (name == "asr") return HypothesisSource::kAsr;
  if (name == "model") return HypothesisSource::kModel;
  throw DataError("unknown hypothesis source '" + std::string(name) + "'");
}

EqualDifferentBreakdown EqualDifferent(std::span<const TranscriptPair> pairs,
                                       HypothesisSource source, const NormConfig& config) {
  EqualDifferentBreakdown b;
  b.source = source;
  if (!pairs.empty()) b.system = pairs.front().system;
  for (const auto& p : pairs) {
    if (p.system != b.system) {
      throw DataError("pairs from several systems ('" + b.system + "', '" + p.system + "')");
    }
    ++b.total;
    if (p.hypothesis &&
        Normalize(p.hypothesis->text, config) == Normalize(p.reference.text, config)) {
      ++b.equal;
    } else {
      ++b.different;
    }
  }
  return b;
}

TableFormat ParseTableFormat(std::string_view name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "jsonl") return TableFormat::kJsonl;
  throw DataError("unknown table format '" + std::string(name) + "'");
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string JsonString(const std::string& s) {
  return nlohmann::json(s).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace

void EmitChartData(std::span<const SystemResult> results, TableFormat format,
                   std::ostream& out) {
  if (results.empty()) throw DataError("no results to emit");
  if (format == TableFormat::kCsv) out << "system,macro_wer_pct,micro_wer_pct\n";
  for (const auto& r : results) {
    const std::string macro = FormatPercent(r.macro_wer);
    const std::string micro = FormatPercent(r.micro_wer);
    if (format == TableFormat::kCsv) {
      out << CsvField(r.system) << ',' << macro << ',' << micro << '\n';
    } else {
      // Numbers are written by hand so they keep exactly two decimals.
      out << "{\"system\":" << JsonString(r.system) << ",\"macro_wer_pct\":" << macro
          << ",\"micro_wer_pct\":" << micro << "}\n";
    }
  }
}

void EmitChartData(std::span<const SystemResult> results, TableFormat format,
                   const std::filesystem::path& path) {
  if (results.empty()) throw DataError("no results to emit");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  EmitChartData(results, format, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

void EmitEqualDifferent(std::span<const EqualDifferentBreakdown> rows, TableFormat format,
                        std::ostream& out) {
  if (format == TableFormat::kCsv) out << "system,source,equal,different,total\n";
  for (const auto& r : rows) {
    if (format == TableFormat::kCsv) {
      out << CsvField(r.system) << ',' << ToString(r.source) << ',' << r.equal << ','
          << r.different << ',' << r.total << '\n';
    } else {
      nlohmann::ordered_json obj;
      obj["system"] = r.system;
      obj["source"] = ToString(r.source);
      obj["equal"] = r.equal;
      obj["different"] = r.different;
      obj["total"] = r.total;
      out << obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
    }
  }
}

}  // namespace clinwer
