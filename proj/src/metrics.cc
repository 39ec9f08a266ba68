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

#include "clinwer/metrics.h"

#include <algorithm>
#include <cstdint>
#include <tuple>

#include "clinwer/errors.h"
#include "parallel.h"

namespace clinwer {

const char* ToString(EditKind kind) {
  switch (kind) {
    case EditKind::kMatch:
      return "match";
    case EditKind::kSubstitute:
      return "substitute";
    case EditKind::kDelete:
      return "delete";
    case EditKind::kInsert:
      return "insert";
  }
  return "?";
}

AlignmentTrace Align(const TokenSeq& ref, const TokenSeq& hyp) {
  const std::size_t m = ref.size();
  const std::size_t n = hyp.size();
  const std::size_t width = n + 1;
  std::vector<std::uint32_t> cost((m + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return cost[i * width + j];
  };

  for (std::size_t i = 0; i <= m; ++i) at(i, 0) = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= n; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      std::uint32_t diag = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  AlignmentTrace trace;
  trace.ref_length = m;
  trace.ops.reserve(std::max(m, n));
  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 || j > 0) {
    const std::uint32_t here = at(i, j);
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && here == at(i - 1, j - 1)) {
      trace.ops.push_back(EditOp::Match(i - 1, j - 1));
      ++trace.matches;
      --i;
      --j;
    } else if (i > 0 && j > 0 && ref[i - 1] != hyp[j - 1] &&
               here == at(i - 1, j - 1) + 1) {
      trace.ops.push_back(EditOp::Substitute(i - 1, j - 1));
      ++trace.substitutions;
      --i;
      --j;
    } else if (i > 0 && here == at(i - 1, j) + 1) {
      trace.ops.push_back(EditOp::Delete(i - 1));
      ++trace.deletions;
      --i;
    } else {
      trace.ops.push_back(EditOp::Insert(j - 1));
      ++trace.insertions;
      --j;
    }
  }
  std::reverse(trace.ops.begin(), trace.ops.end());
  return trace;
}

Rational Wer(const AlignmentTrace& trace) {
  if (trace.ref_length == 0) throw EmptyReference("<anonymous>");
  return Rational(static_cast<long long>(trace.errors()),
                  static_cast<long long>(trace.ref_length));
}

std::string RenderAlignment(const AlignmentTrace& trace, const TokenSeq& ref,
                            const TokenSeq& hyp) {
  std::string ref_row = "REF:";
  std::string hyp_row = "HYP:";
  std::string op_row = "OP: ";
  for (const EditOp& op : trace.ops) {
    std::string r = op.ref_index ? ref[*op.ref_index] : "***";
    std::string h = op.hyp_index ? hyp[*op.hyp_index] : "***";
    std::string o;
    switch (op.kind) {
      case EditKind::kMatch:
        break;
      case EditKind::kSubstitute:
        o = "S";
        break;
      case EditKind::kDelete:
        o = "D";
        break;
      case EditKind::kInsert:
        o = "I";
        break;
    }
    // Column width in code points keeps rows aligned for non-ASCII words.
    auto cols = [](const std::string& s) { return DecodeUtf8(s).size(); };
    std::size_t w = std::max({cols(r), cols(h), cols(o)});
    auto pad = [&](std::string& row, const std::string& cell) {
      row += ' ';
      row += cell;
      row.append(w - cols(cell), ' ');
    };
    pad(ref_row, r);
    pad(hyp_row, h);
    pad(op_row, o);
  }
  auto rstrip = [](std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
  };
  rstrip(ref_row);
  rstrip(hyp_row);
  rstrip(op_row);
  return ref_row + "\n" + hyp_row + "\n" + op_row + "\n";
}

namespace {

struct Group {
  std::string id;
  std::vector<const TranscriptPair*> members;
};

std::vector<Group> BuildGroups(std::span<const TranscriptPair> pairs, Grouping grouping) {
  std::vector<const TranscriptPair*> ordered;
  ordered.reserve(pairs.size());
  for (const auto& p : pairs) ordered.push_back(&p);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return std::tie(a->reference.file_id, a->reference.utterance_index) <
           std::tie(b->reference.file_id, b->reference.utterance_index);
  });

  std::vector<Group> groups;
  for (const TranscriptPair* p : ordered) {
    if (grouping == Grouping::kPerUtterance) {
      groups.push_back({p->Id(), {p}});
    } else if (!groups.empty() && groups.back().id == p->reference.file_id) {
      groups.back().members.push_back(p);
    } else {
      groups.push_back({p->reference.file_id, {p}});
    }
  }
  return groups;
}

}  // namespace

WerReport CorpusWer(std::span<const TranscriptPair> pairs, Grouping grouping,
                    const NormConfig& config, unsigned jobs) {
  if (pairs.empty()) throw DataError("no transcript pairs to score");
  for (const auto& p : pairs) {
    if (p.system != pairs.front().system) {
      throw DataError("pairs from several systems ('" + pairs.front().system +
                      "', '" + p.system + "'); score one system at a time");
    }
  }

  std::vector<Group> groups = BuildGroups(pairs, grouping);
  WerReport report;
  report.per_pair.resize(groups.size());

  internal::ParallelFor(groups.size(), jobs, [&](std::size_t g) {
    TokenSeq ref;
    TokenSeq hyp;
    for (const TranscriptPair* p : groups[g].members) {
      TokenSeq r = Normalize(p->reference.text, config);
      if (r.empty()) throw EmptyReference(p->Id());
      ref.Append(r);
      if (p->hypothesis) hyp.Append(Normalize(p->hypothesis->text, config));
    }
    AlignmentTrace trace = Align(ref, hyp);
    GroupScore& s = report.per_pair[g];
    s.id = groups[g].id;
    s.substitutions = trace.substitutions;
    s.deletions = trace.deletions;
    s.insertions = trace.insertions;
    s.matches = trace.matches;
    s.ref_length = trace.ref_length;
    s.wer = Wer(trace);
  });

  Rational sum = 0;
  std::size_t errors = 0;
  std::size_t words = 0;
  for (const GroupScore& s : report.per_pair) {
    sum += s.wer;
    errors += s.substitutions + s.deletions + s.insertions;
    words += s.ref_length;
  }
  report.macro_wer = sum / static_cast<long long>(report.per_pair.size());
  report.micro_wer =
      Rational(static_cast<long long>(errors), static_cast<long long>(words));
  return report;
}

}  // namespace clinwer
