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

#include "clinwer/selfsup.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <tuple>

#include "clinwer/errors.h"
#include "clinwer/textnorm.h"
#include "json.hpp"
#include "jsonl.h"

namespace clinwer {

using json = nlohmann::ordered_json;

namespace {

std::uint64_t Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t CeilMul(const Rational& fraction, std::size_t n) {
  Rational product = fraction * static_cast<long long>(n);
  boost::multiprecision::cpp_int num = boost::multiprecision::numerator(product);
  boost::multiprecision::cpp_int den = boost::multiprecision::denominator(product);
  return static_cast<std::uint64_t>((num + den - 1) / den);
}

}  // namespace

std::string_view ToString(Task task) {
  switch (task) {
    case Task::kSummarization:
      return "summarization";
    case Task::kParaphrase:
      return "paraphrase";
    case Task::kMaskFilling:
      return "mask_filling";
  }
  return "?";
}

Task ParseTask(std::string_view name) {
  if (name == "summarization") return Task::kSummarization;
  if (name == "paraphrase") return Task::kParaphrase;
  if (name == "mask_filling" || name == "mask-filling") return Task::kMaskFilling;
  throw DataError("unknown task '" + std::string(name) + "'");
}

std::uint64_t StableHash(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ Mix(seed);
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Mix(h);
}

std::uint64_t SplitMix64::Next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return Mix(state_);
}

std::uint64_t SplitMix64::Below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % bound;
}

std::vector<SelfSupExample> GenerateSummarization(std::span<const PubMedRecord> records) {
  std::vector<SelfSupExample> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    out.push_back({Task::kSummarization, r.abstract, r.title, r.pmid});
  }
  return out;
}

std::vector<SelfSupExample> GenerateMaskFilling(std::span<const PubMedRecord> records,
                                                const Rational& mask_fraction,
                                                std::uint64_t seed) {
  if (mask_fraction <= 0 || mask_fraction > 1) {
    throw DataError("mask fraction must be in (0, 1], got " + FormatDecimal(mask_fraction, 4));
  }
  std::vector<SelfSupExample> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    std::vector<std::string> words = SplitWords(r.title).tokens();
    if (words.empty()) throw DataError("pmid " + r.pmid + ": title has no words");
    const std::size_t n = words.size();
    const std::size_t k = CeilMul(mask_fraction, n);

    SplitMix64 rng(StableHash(r.pmid, seed));
    std::vector<std::size_t> positions(n);
    std::iota(positions.begin(), positions.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + rng.Below(n - i);
      std::swap(positions[i], positions[j]);
      words[positions[i]] = std::string(kMaskToken);
    }
    out.push_back({Task::kMaskFilling, TokenSeq(std::move(words)).Join(), r.title, r.pmid});
  }
  return out;
}

ParaphraseResult PairParaphrases(std::span<const PubMedRecord> records,
                                 const std::map<std::string, std::string>& paraphrases) {
  std::map<std::string_view, const PubMedRecord*> by_pmid;
  for (const auto& r : records) by_pmid.emplace(r.pmid, &r);
  for (const auto& [pmid, _] : paraphrases) {
    if (!by_pmid.count(pmid)) throw UnknownPmid(pmid);
  }
  ParaphraseResult result;
  for (const auto& r : records) {
    auto it = paraphrases.find(r.pmid);
    if (it == paraphrases.end()) {
      ++result.skipped;
      continue;
    }
    result.examples.push_back({Task::kParaphrase, it->second, r.title, r.pmid});
  }
  return result;
}

std::map<std::string, std::string> LoadParaphrases(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::map<std::string, std::string> out;
  internal::ForEachJsonLine(in, [&](const json& obj, std::size_t line) {
    if (!obj.is_object()) throw FormatError(line, "record is not an object");
    std::string pmid = internal::RequireString(obj, "pmid", line);
    std::string text = internal::RequireString(obj, "paraphrase", line);
    if (text.empty()) throw FormatError(line, "'paraphrase' is empty");
    if (!out.emplace(pmid, std::move(text)).second) {
      throw FormatError(line, "second paraphrase for pmid " + pmid);
    }
  });
  return out;
}

Split SplitExamples(std::span<const SelfSupExample> examples, const SplitSpec& spec) {
  if (examples.size() < 2) {
    throw TooFewExamples("need at least 2 examples to split, got " +
                         std::to_string(examples.size()));
  }
  if (spec.train_fraction <= 0 || spec.train_fraction >= 1) {
    throw DataError("train fraction must be in (0, 1), got " +
                    FormatDecimal(spec.train_fraction, 4));
  }

  struct Keyed {
    std::uint64_t key;
    const SelfSupExample* example;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(examples.size());
  for (const auto& e : examples) {
    std::string content;
    content += ToString(e.task);
    content += '\x1f';
    content += e.input;
    content += '\x1f';
    content += e.target;
    content += '\x1f';
    content += e.source_pmid;
    keyed.push_back({StableHash(content, spec.seed), &e});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    const auto& x = *a.example;
    const auto& y = *b.example;
    return std::tie(a.key, x.task, x.input, x.target, x.source_pmid) <
           std::tie(b.key, y.task, y.input, y.target, y.source_pmid);
  });

  Rational scaled = spec.train_fraction * static_cast<long long>(examples.size()) + Rational(1, 2);
  const auto n_train = static_cast<std::size_t>(boost::multiprecision::numerator(scaled) /
                                                boost::multiprecision::denominator(scaled));
  Split split;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    (i < n_train ? split.train : split.eval).push_back(*keyed[i].example);
  }
  return split;
}

void WriteExamples(std::span<const SelfSupExample> examples, std::ostream& out) {
  for (const auto& e : examples) {
    json obj;
    obj["task"] = ToString(e.task);
    obj["input"] = e.input;
    obj["target"] = e.target;
    obj["pmid"] = e.source_pmid;
    internal::WriteJsonLine(out, obj);
  }
}

std::vector<SelfSupExample> ReadExamples(std::istream& in) {
  std::vector<SelfSupExample> out;
  internal::ForEachJsonLine(in, [&](const json& obj, std::size_t line) {
    if (!obj.is_object()) throw FormatError(line, "record is not an object");
    SelfSupExample e;
    try {
      e.task = ParseTask(internal::RequireString(obj, "task", line));
    } catch (const FormatError&) {
      throw;
    } catch (const DataError& err) {
      throw FormatError(line, err.what());
    }
    e.input = internal::RequireString(obj, "input", line);
    e.target = internal::RequireString(obj, "target", line);
    e.source_pmid = internal::RequireString(obj, "pmid", line);
    out.push_back(std::move(e));
  });
  return out;
}

std::string DatasetFileName(Task task, std::string_view split) {
  return std::string(ToString(task)) + "." + std::string(split) + ".jsonl";
}

}  // namespace clinwer
