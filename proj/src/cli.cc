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

#include "clinwer/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "clinwer/corpus.h"
#include "clinwer/errors.h"
#include "clinwer/metrics.h"
#include "clinwer/pubmed_fetch.h"
#include "clinwer/report.h"
#include "clinwer/selfsup.h"

namespace clinwer {

namespace fs = std::filesystem;

namespace {

constexpr const char* kDataDirEnv = "CLINWER_DATA_DIR";

struct RunConfig {
  std::string data_dir;
  unsigned jobs = 1;
  bool no_lowercase = false;
  bool keep_punct = false;

  std::string input;
  std::string output;
  std::string kind;
  std::string format = "csv";

  // gen-dataset
  std::string task;
  std::optional<std::uint64_t> seed;
  std::string mask_fraction = "1/4";
  std::string train_fraction = "0.9";
  std::string paraphrases;

  // score / report
  std::string system;
  std::string grouping = "file";
  std::string source = "auto";
  bool micro = false;
  bool per_group = false;
  bool show_alignment = false;

  // fetch-pubmed
  std::vector<std::string> terms;
  std::size_t max_records = 100;
  std::size_t batch_size = 100;
  std::string api_key;

  NormConfig Norm() const {
    NormConfig c;
    c.lowercase = !no_lowercase;
    c.strip_punctuation = !keep_punct;
    return c;
  }
};

fs::path ResolveInput(const RunConfig& cfg, const std::string& path) {
  fs::path p(path);
  if (p.is_relative() && !fs::exists(p) && !cfg.data_dir.empty()) {
    fs::path candidate = fs::path(cfg.data_dir) / p;
    if (fs::exists(candidate)) return candidate;
  }
  return p;
}

void AddNormFlags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_flag("--no-lowercase", cfg.no_lowercase, "Compare words case-sensitively");
  cmd->add_flag("--keep-punct", cfg.keep_punct, "Keep punctuation and symbols inside words");
}

int RunStats(const RunConfig& cfg, std::ostream& out) {
  fs::path in = ResolveInput(cfg, cfg.input);
  if (cfg.kind == "pubmed") {
    auto records = LoadPubMedRecords(in);
    PubMedStats s = ComputePubMedStats(records);
    out << "pairs=" << s.n_pairs << " mean_title_words=" << FormatDecimal(s.mean_title_words)
        << " mean_abstract_words=" << FormatDecimal(s.mean_abstract_words) << '\n';
    return kExitOk;
  }
  auto pairs = LoadDialogueCorpus(in);
  CorpusStats s = ComputeCorpusStats(pairs, cfg.Norm());
  out << "files=" << s.n_files
      << " mean_utterances_per_file=" << FormatDecimal(s.mean_utterances_per_file)
      << " mean_words_per_utterance=" << FormatDecimal(s.mean_words_per_utterance)
      << " pairs=" << s.n_pairs << '\n';
  return kExitOk;
}

int RunClean(const RunConfig& cfg, std::ostream& out) {
  auto raw = LoadPubMedRecords(ResolveInput(cfg, cfg.input));
  CleanResult result = CleanRecords(raw);
  SavePubMedRecords(result.records, cfg.output);
  out << "kept " << result.records.size() << " records, dropped " << result.dropped.size()
      << " -> " << cfg.output << '\n';
  return kExitOk;
}

void WriteDataset(const fs::path& path, std::span<const SelfSupExample> examples) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  WriteExamples(examples, f);
  f.flush();
  if (!f) throw IoError("write failed: " + path.string());
}

int RunGenDataset(const RunConfig& cfg, std::ostream& out) {
  const Task task = ParseTask(cfg.task);
  auto records = LoadPubMedRecords(ResolveInput(cfg, cfg.input));

  std::vector<SelfSupExample> examples;
  std::size_t skipped = 0;
  switch (task) {
    case Task::kSummarization:
      examples = GenerateSummarization(records);
      break;
    case Task::kMaskFilling:
      examples = GenerateMaskFilling(records, ParseFraction(cfg.mask_fraction), *cfg.seed);
      break;
    case Task::kParaphrase: {
      auto result = PairParaphrases(records, LoadParaphrases(ResolveInput(cfg, cfg.paraphrases)));
      examples = std::move(result.examples);
      skipped = result.skipped;
      break;
    }
  }

  Split split = SplitExamples(examples, {ParseFraction(cfg.train_fraction), *cfg.seed});
  fs::path dir(cfg.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  WriteDataset(dir / DatasetFileName(task, "train"), split.train);
  WriteDataset(dir / DatasetFileName(task, "eval"), split.eval);

  out << ToString(task) << ": " << split.train.size() << " train, " << split.eval.size()
      << " eval";
  if (skipped) out << ", " << skipped << " records without paraphrase skipped";
  out << " -> " << dir.string() << '\n';
  return kExitOk;
}

int RunScore(const RunConfig& cfg, std::ostream& out) {
  auto pairs = LoadDialogueCorpus(ResolveInput(cfg, cfg.input));
  const Grouping grouping = cfg.grouping == "utterance" ? Grouping::kPerUtterance
                                                        : Grouping::kPerFile;
  std::vector<std::string> systems;
  if (cfg.system.empty()) {
    systems = Systems(pairs);
  } else {
    systems = {cfg.system};
  }
  for (const std::string& system : systems) {
    auto mine = FilterSystem(pairs, system);
    if (mine.empty()) throw DataError("no transcripts for system '" + system + "'");
    WerReport report = CorpusWer(mine, grouping, cfg.Norm(), cfg.jobs);
    if (cfg.per_group) {
      for (const GroupScore& g : report.per_pair) {
        out << system << '\t' << g.id << "\tS=" << g.substitutions << " D=" << g.deletions
            << " I=" << g.insertions << " C=" << g.matches << " N=" << g.ref_length
            << "\twer=" << FormatPercent(g.wer) << "%\n";
      }
    }
    if (cfg.show_alignment) {
      for (const auto& p : mine) {
        TokenSeq ref = Normalize(p.reference.text, cfg.Norm());
        TokenSeq hyp = p.hypothesis ? Normalize(p.hypothesis->text, cfg.Norm()) : TokenSeq{};
        out << p.Id() << '\n' << RenderAlignment(Align(ref, hyp), ref, hyp);
      }
    }
    out << system << " macro_wer=" << FormatPercent(report.macro_wer) << '%';
    if (cfg.micro) out << " micro_wer=" << FormatPercent(report.micro_wer) << '%';
    out << " groups=" << report.per_pair.size() << '\n';
  }
  return kExitOk;
}

HypothesisSource SourceFor(const RunConfig& cfg, const std::string& system) {
  if (cfg.source != "auto") return ParseHypothesisSource(cfg.source);
  constexpr std::string_view kSuffix = "+model";
  bool model = system.size() >= kSuffix.size() &&
               system.compare(system.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0;
  return model ? HypothesisSource::kModel : HypothesisSource::kAsr;
}

int RunReport(const RunConfig& cfg, std::ostream& out) {
  auto pairs = LoadDialogueCorpus(ResolveInput(cfg, cfg.input));
  const TableFormat format = ParseTableFormat(cfg.format);
  std::ostringstream table;
  std::size_t rows = 0;
  if (cfg.kind == "equal-different") {
    std::vector<EqualDifferentBreakdown> breakdowns;
    for (const auto& [system, mine] : BySystem(pairs)) {
      breakdowns.push_back(EqualDifferent(mine, SourceFor(cfg, system), cfg.Norm()));
    }
    EmitEqualDifferent(breakdowns, format, table);
    rows = breakdowns.size();
  } else {
    auto results = CompareSystems(BySystem(pairs), cfg.Norm(), cfg.jobs);
    EmitChartData(results, format, table);
    rows = results.size();
  }
  if (cfg.output.empty()) {
    out << table.str();
    return kExitOk;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw IoError("cannot write " + cfg.output);
  f << table.str();
  f.flush();
  if (!f) throw IoError("write failed: " + cfg.output);
  out << "wrote " << rows << " rows -> " << cfg.output << '\n';
  return kExitOk;
}

int RunFetch(const RunConfig& cfg, std::ostream& out) {
  FetchOptions options;
  if (!cfg.terms.empty()) options.terms = cfg.terms;
  options.max_records = cfg.max_records;
  options.batch_size = cfg.batch_size;
  options.api_key = cfg.api_key;
  if (!options.api_key.empty()) options.min_interval = std::chrono::milliseconds(110);
  CurlTransport http;
  RateLimiter limiter(options.min_interval);
  auto records = FetchPubMed(http, options, limiter);
  SavePubMedRecords(records, cfg.output);
  out << "fetched " << records.size() << " records -> " << cfg.output << '\n';
  return kExitOk;
}

void UseStderrLogger() {
  static bool done = [] {
    auto logger = spdlog::get("clinwer");
    if (!logger) logger = spdlog::stderr_color_mt("clinwer");
    spdlog::set_default_logger(logger);
    return true;
  }();
  (void)done;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  UseStderrLogger();
  RunConfig cfg;
  CLI::App app{"Clinical dialogue ASR evaluation and self-supervised data tooling", "clinwer"};
  app.require_subcommand(1);
  app.add_option("--data-dir", cfg.data_dir,
                 "Directory searched for relative input paths that do not exist")
      ->envname(kDataDirEnv);
  app.add_option("-j,--jobs", cfg.jobs, "Worker threads for scoring")->check(CLI::Range(1u, 256u));

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("-i,--input", cfg.input, "Transcript or PubMed records file")->required();
  stats->add_option("--kind", cfg.kind, "dialogue or pubmed")
      ->check(CLI::IsMember({"dialogue", "pubmed"}))
      ->default_val("dialogue");
  AddNormFlags(stats, cfg);

  auto* clean = app.add_subcommand("clean", "Clean raw PubMed records");
  clean->add_option("-i,--input", cfg.input, "Raw records file")->required();
  clean->add_option("-o,--output", cfg.output, "Cleaned records file")->required();

  auto* gen = app.add_subcommand(
      "gen-dataset",
      "Build a self-supervised dataset and split it. Writes <task>.train.jsonl and "
      "<task>.eval.jsonl (task: summarization, paraphrase, mask_filling) into --output-dir");
  gen->add_option("-i,--input", cfg.input, "Cleaned PubMed records file")->required();
  gen->add_option("--task", cfg.task, "summarization, paraphrase or mask-filling")
      ->required()
      ->check(CLI::IsMember({"summarization", "paraphrase", "mask-filling", "mask_filling"}));
  gen->add_option("--seed", cfg.seed, "Seed for masking and splitting")->required();
  gen->add_option("-o,--output-dir", cfg.output, "Output directory")->required();
  gen->add_option("--mask-fraction", cfg.mask_fraction, "Share of title words masked")
      ->capture_default_str();
  gen->add_option("--train-fraction", cfg.train_fraction, "Share of examples used for training")
      ->capture_default_str();
  gen->add_option("--paraphrases", cfg.paraphrases,
                  "Paraphrase file ({\"pmid\", \"paraphrase\"} per line); paraphrase task only");

  auto* score = app.add_subcommand("score", "Word error rate of one or all systems");
  score->add_option("-r,--refs", cfg.input, "Transcript records file")->required();
  score->add_option("-s,--system", cfg.system, "System label (default: every system)");
  score->add_option("--grouping", cfg.grouping, "file or utterance")
      ->check(CLI::IsMember({"file", "utterance"}))
      ->capture_default_str();
  score->add_flag("--micro", cfg.micro, "Also print pooled (micro) WER");
  score->add_flag("--per-group", cfg.per_group, "Print S/D/I/C/N for every group");
  score->add_flag("--show-alignment", cfg.show_alignment, "Print word alignments");
  AddNormFlags(score, cfg);

  auto* report = app.add_subcommand("report", "Comparison tables across systems");
  report->add_option("-r,--refs", cfg.input, "Transcript records file")->required();
  report->add_option("--kind", cfg.kind, "wer or equal-different")
      ->check(CLI::IsMember({"wer", "equal-different"}))
      ->default_val("wer");
  report->add_option("--format", cfg.format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  report->add_option("--source", cfg.source,
                     "asr, model, or auto (systems ending in +model are model output)")
      ->check(CLI::IsMember({"auto", "asr", "model"}))
      ->capture_default_str();
  report->add_option("-o,--output", cfg.output, "Output file (default: standard output)");
  AddNormFlags(report, cfg);

  auto* fetch = app.add_subcommand("fetch-pubmed", "Download raw PubMed records (network)");
  fetch->add_option("-o,--output", cfg.output, "Raw records file")->required();
  fetch->add_option("--term", cfg.terms, "Search term, repeatable (all must match)");
  fetch->add_option("--max", cfg.max_records, "Maximum records")->capture_default_str();
  fetch->add_option("--batch", cfg.batch_size, "Records per efetch request")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fetch->add_option("--api-key", cfg.api_key, "NCBI API key")->envname("NCBI_API_KEY");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (stats->parsed()) return RunStats(cfg, out);
    if (clean->parsed()) return RunClean(cfg, out);
    if (gen->parsed()) {
      if (ParseTask(cfg.task) == Task::kParaphrase && cfg.paraphrases.empty()) {
        err << "gen-dataset: --paraphrases is required for the paraphrase task\n";
        return kExitUsage;
      }
      return RunGenDataset(cfg, out);
    }
    if (score->parsed()) return RunScore(cfg, out);
    if (report->parsed()) return RunReport(cfg, out);
    if (fetch->parsed()) return RunFetch(cfg, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace clinwer
