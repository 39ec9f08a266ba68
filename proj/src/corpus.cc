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

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "json.hpp"

#include "clinwer/errors.h"
#include "jsonl.h"

namespace clinwer {

using json = nlohmann::ordered_json;

std::string TranscriptPair::Id() const {
  return reference.file_id + "#" + std::to_string(reference.utterance_index);
}

namespace {

const std::set<std::string> kDialogueFields = {"file_id", "utt", "speaker",
                                               "ref",     "hyp", "system"};

TranscriptPair ParseDialogueRecord(const json& obj, std::size_t line) {
  if (!obj.is_object()) throw FormatError(line, "record is not an object");
  for (const auto& [key, _] : obj.items()) {
    if (!kDialogueFields.count(key)) throw FormatError(line, "unknown field '" + key + "'");
  }
  TranscriptPair pair;
  pair.reference.file_id = internal::RequireString(obj, "file_id", line);
  pair.system = internal::RequireString(obj, "system", line);
  pair.reference.text = internal::RequireString(obj, "ref", line);
  if (pair.reference.file_id.empty()) throw FormatError(line, "'file_id' is empty");
  if (pair.system.empty()) throw FormatError(line, "'system' is empty");
  if (pair.reference.text.empty()) throw FormatError(line, "'ref' is empty");

  auto utt = obj.find("utt");
  if (utt == obj.end() || !utt->is_number_integer())
    throw FormatError(line, "'utt' must be an integer");
  if (utt->is_number_unsigned()) {
    pair.reference.utterance_index = utt->get<std::uint64_t>();
  } else {
    auto v = utt->get<std::int64_t>();
    if (v < 0) throw FormatError(line, "'utt' must be non-negative");
    pair.reference.utterance_index = static_cast<std::uint64_t>(v);
  }

  pair.reference.speaker = internal::OptionalString(obj, "speaker", line);
  auto hyp = internal::OptionalString(obj, "hyp", line);
  if (hyp && !hyp->empty()) {
    Utterance h = pair.reference;
    h.text = *hyp;
    pair.hypothesis = std::move(h);
  }
  return pair;
}

}  // namespace

std::vector<TranscriptPair> ReadDialogueCorpus(std::istream& in) {
  std::vector<TranscriptPair> pairs;
  std::set<std::tuple<std::string, std::uint64_t, std::string>> seen;
  internal::ForEachJsonLine(in, [&](const json& obj, std::size_t line) {
    TranscriptPair p = ParseDialogueRecord(obj, line);
    auto key = std::make_tuple(p.reference.file_id, p.reference.utterance_index, p.system);
    if (!seen.insert(key).second) {
      throw DuplicateUtterance("line " + std::to_string(line) + ": duplicate utterance " +
                               p.Id() + " for system '" + p.system + "'");
    }
    pairs.push_back(std::move(p));
  });

  std::vector<TranscriptPair> grouped;
  grouped.reserve(pairs.size());
  for (const std::string& system : Systems(pairs)) {
    for (auto& p : pairs) {
      if (p.system == system) grouped.push_back(std::move(p));
    }
  }
  return grouped;
}

std::vector<TranscriptPair> LoadDialogueCorpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadDialogueCorpus(in);
}

void WriteDialogueCorpus(std::span<const TranscriptPair> pairs, std::ostream& out) {
  for (const auto& p : pairs) {
    json obj;
    obj["file_id"] = p.reference.file_id;
    obj["utt"] = p.reference.utterance_index;
    if (p.reference.speaker) obj["speaker"] = *p.reference.speaker;
    obj["ref"] = p.reference.text;
    if (p.hypothesis) obj["hyp"] = p.hypothesis->text;
    obj["system"] = p.system;
    internal::WriteJsonLine(out, obj);
  }
}

void SaveDialogueCorpus(std::span<const TranscriptPair> pairs,
                        const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  WriteDialogueCorpus(pairs, out);
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<std::string> Systems(std::span<const TranscriptPair> pairs) {
  std::vector<std::string> systems;
  std::set<std::string> seen;
  for (const auto& p : pairs) {
    if (seen.insert(p.system).second) systems.push_back(p.system);
  }
  return systems;
}

std::vector<TranscriptPair> FilterSystem(std::span<const TranscriptPair> pairs,
                                         std::string_view system) {
  std::vector<TranscriptPair> out;
  for (const auto& p : pairs) {
    if (p.system == system) out.push_back(p);
  }
  return out;
}

CorpusStats ComputeCorpusStats(std::span<const TranscriptPair> pairs,
                               const NormConfig& config) {
  if (pairs.empty()) throw EmptyCorpus("corpus has no transcript records");
  // Distinct references; the first system's copy of the text wins.
  std::map<std::pair<std::string, std::uint64_t>, const std::string*> refs;
  for (const auto& p : pairs) {
    refs.emplace(std::make_pair(p.reference.file_id, p.reference.utterance_index),
                 &p.reference.text);
  }
  std::set<std::string> files;
  long long words = 0;
  for (const auto& [key, text] : refs) {
    files.insert(key.first);
    words += static_cast<long long>(Normalize(*text, config).size());
  }
  CorpusStats stats;
  stats.n_files = files.size();
  stats.n_pairs = pairs.size();
  const auto n_utts = static_cast<long long>(refs.size());
  stats.mean_utterances_per_file = Rational(n_utts, static_cast<long long>(files.size()));
  stats.mean_words_per_utterance = Rational(words, n_utts);
  return stats;
}

// ---------------------------------------------------------------------------

std::vector<PubMedRecord> ReadPubMedRecords(std::istream& in) {
  static const std::set<std::string> kFields = {"pmid", "title", "abstract"};
  std::vector<PubMedRecord> records;
  internal::ForEachJsonLine(in, [&](const json& obj, std::size_t line) {
    if (!obj.is_object()) throw FormatError(line, "record is not an object");
    for (const auto& [key, _] : obj.items()) {
      if (!kFields.count(key)) throw FormatError(line, "unknown field '" + key + "'");
    }
    PubMedRecord r;
    // PMIDs are numeric in PubMed exports; accept either spelling.
    auto pmid = obj.find("pmid");
    if (pmid != obj.end() && pmid->is_number_integer()) {
      r.pmid = pmid->dump();
    } else {
      r.pmid = internal::RequireString(obj, "pmid", line);
    }
    if (r.pmid.empty()) throw FormatError(line, "'pmid' is empty");
    r.title = internal::RequireString(obj, "title", line);
    r.abstract = internal::RequireString(obj, "abstract", line);
    records.push_back(std::move(r));
  });
  return records;
}

std::vector<PubMedRecord> LoadPubMedRecords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ReadPubMedRecords(in);
}

void WritePubMedRecords(std::span<const PubMedRecord> records, std::ostream& out) {
  for (const auto& r : records) {
    json obj;
    obj["pmid"] = r.pmid;
    obj["title"] = r.title;
    obj["abstract"] = r.abstract;
    internal::WriteJsonLine(out, obj);
  }
}

void SavePubMedRecords(std::span<const PubMedRecord> records,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  WritePubMedRecords(records, out);
  if (!out) throw IoError("write failed: " + path.string());
}

PubMedStats ComputePubMedStats(std::span<const PubMedRecord> records) {
  if (records.empty()) throw EmptyCorpus("no PubMed records");
  long long title_words = 0;
  long long abstract_words = 0;
  for (const auto& r : records) {
    title_words += static_cast<long long>(Normalize(r.title).size());
    abstract_words += static_cast<long long>(Normalize(r.abstract).size());
  }
  const auto n = static_cast<long long>(records.size());
  return {records.size(), Rational(title_words, n), Rational(abstract_words, n)};
}

}  // namespace clinwer
