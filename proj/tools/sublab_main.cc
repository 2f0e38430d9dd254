// Copyright 2026 The Sublab Authors
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

// sublab: train unigram subword vocabularies, segment text, and measure how
// segmentation interacts with token-classification labels.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sublab/conll.h"
#include "sublab/file_util.h"
#include "sublab/frequency_table.h"
#include "sublab/impact.h"
#include "sublab/language_stats.h"
#include "sublab/model.h"
#include "sublab/parallel.h"
#include "sublab/segmenter.h"
#include "sublab/string_util.h"
#include "sublab/trainer.h"
#include "sublab/utf8.h"

namespace sublab {
namespace {

constexpr std::string_view kToolVersion = "1.0.0";

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status.message() << "\n";
  return 1;
}

// Opens `path`, or stdin for "-" / empty.
class InputStream {
 public:
  explicit InputStream(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      ok_ = static_cast<bool>(file_);
    }
  }
  bool ok() const { return ok_; }
  std::istream& get() { return file_.is_open() ? file_ : std::cin; }

 private:
  std::ifstream file_;
  bool ok_ = true;
};

struct NormalizationFlags {
  std::string form = "NFKC";
  bool lowercase = false;
  bool keep_whitespace = false;

  void Register(CLI::App* cmd) {
    cmd->add_option("--normalization", form, "NFKC, NFC or None")
        ->capture_default_str();
    cmd->add_flag("--lowercase", lowercase, "Lowercase after normalization");
    cmd->add_flag("--no-collapse-whitespace", keep_whitespace,
                  "Keep whitespace runs (each extra space becomes a bare marker)");
  }

  absl::StatusOr<NormalizationConfig> Resolve() const {
    auto f = ParseNormalizationForm(form);
    if (!f.ok()) return f.status();
    return NormalizationConfig{*f, lowercase, !keep_whitespace};
  }
};

struct TrainerFlags {
  TrainerConfig cfg;
  NormalizationFlags norm;
  std::optional<size_t> sample;
  uint64_t seed = 0;

  void Register(CLI::App* cmd) {
    cmd->add_option("--seed-size", cfg.seed_size,
                    "Seed vocabulary size (0 = min(1e6, 25 x target))")
        ->capture_default_str();
    cmd->add_option("--shrink-factor", cfg.shrink_factor,
                    "Fraction of pieces kept per pruning round")
        ->capture_default_str();
    cmd->add_option("--em-iters", cfg.em_iterations_per_round,
                    "EM iterations per pruning round")
        ->capture_default_str();
    cmd->add_option("--char-coverage", cfg.character_coverage,
                    "Character mass covered by single-character pieces")
        ->capture_default_str();
    cmd->add_option("--max-piece-len", cfg.max_piece_length,
                    "Maximum piece length in characters")
        ->capture_default_str();
    cmd->add_option("--sample", sample,
                    "Reservoir-sample this many sentences before counting");
    cmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    norm.Register(cmd);
  }
};

absl::StatusOr<WordFrequencyTable> LoadTable(const std::string& input,
                                             const TrainerFlags& flags,
                                             int threads) {
  InputStream in(input);
  if (!in.ok()) return absl::NotFoundError(StrCat("cannot open ", input));
  auto norm = flags.norm.Resolve();
  if (!norm.ok()) return norm.status();
  FrequencyTableOptions options;
  options.normalization = *norm;
  options.max_sentences = flags.sample;
  options.sample_seed = flags.seed;
  options.num_threads = threads;
  auto table = BuildFrequencyTable(in.get(), options);
  if (!table.ok()) {
    return absl::Status(table.status().code(),
                        StrCat(input, ": ", table.status().message()));
  }
  return table;
}

double MeanFragmentation(const WordFrequencyTable& table,
                         const SubwordModel& model) {
  if (table.total_words() == 0) return 0.0;
  int64_t pieces = 0;
  for (const auto& [surface, count] : table.entries()) {
    pieces += count * Fragmentation(surface, model);
  }
  return static_cast<double>(pieces) / static_cast<double>(table.total_words());
}

void LogLine(const std::string& line) { std::cerr << line << "\n"; }

absl::StatusOr<SubwordModel> TrainAndSave(const WordFrequencyTable& table,
                                          const TrainerConfig& cfg,
                                          const std::filesystem::path& output,
                                          TrainingSummary* summary) {
  auto model = Train(table, cfg, LogLine, summary);
  if (!model.ok()) return model.status();
  if (auto st = model->Save(output); !st.ok()) return st;
  std::cerr << "wrote " << output.string() << ": vocab=" << model->vocab_size()
            << " loglik=" << fmt::format("{:.6f}", summary->final_log_likelihood)
            << " rounds=" << summary->rounds << "\n";
  return model;
}

int RunTrain(const std::string& input, int vocab_size,
             const std::string& output, TrainerFlags flags, int threads) {
  auto norm = flags.norm.Resolve();
  if (!norm.ok()) return Fail(norm.status());
  flags.cfg.target_vocab_size = vocab_size;
  flags.cfg.normalization = *norm;
  flags.cfg.num_threads = threads;
  if (auto st = flags.cfg.Validate(); !st.ok()) return Fail(st);
  auto table = LoadTable(input, flags, threads);
  if (!table.ok()) return Fail(table.status());
  TrainingSummary summary;
  auto model = TrainAndSave(*table, flags.cfg, output, &summary);
  if (!model.ok()) return Fail(model.status());
  return 0;
}

int RunSweep(const std::string& input, const std::vector<int>& sizes,
             const std::string& output_dir, TrainerFlags flags, int threads) {
  auto norm = flags.norm.Resolve();
  if (!norm.ok()) return Fail(norm.status());
  flags.cfg.normalization = *norm;
  flags.cfg.num_threads = threads;
  if (sizes.empty()) return Fail(absl::InvalidArgumentError("--sizes is empty"));
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      std::cerr << "usage error: --sizes must be strictly increasing\n";
      return 2;
    }
    TrainerConfig probe = flags.cfg;
    probe.target_vocab_size = sizes[i];
    if (auto st = probe.Validate(); !st.ok()) {
      std::cerr << "usage error: " << st.message() << "\n";
      return 2;
    }
  }

  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) {
    return Fail(absl::PermissionDeniedError(
        StrCat("cannot create ", output_dir, ": ", ec.message())));
  }
  // One sample shared by every size, so vocabulary size is the only factor
  // that varies.
  auto table = LoadTable(input, flags, threads);
  if (!table.ok()) return Fail(table.status());

  nlohmann::json report;
  report["corpus"] = {{"input", input},
                      {"total_words", table->total_words()},
                      {"total_chars", table->total_chars()},
                      {"unique_words", table->size()},
                      {"seed", flags.seed}};
  report["corpus"]["sample"] =
      flags.sample.has_value() ? nlohmann::json(*flags.sample) : nlohmann::json();
  report["trainer"] = {
      {"seed_size", flags.cfg.seed_size},
      {"shrink_factor", flags.cfg.shrink_factor},
      {"em_iterations_per_round", flags.cfg.em_iterations_per_round},
      {"character_coverage", flags.cfg.character_coverage},
      {"max_piece_length", flags.cfg.max_piece_length},
      {"normalization", std::string(NormalizationFormName(norm->form))}};
  report["models"] = nlohmann::json::array();
  const std::filesystem::path dir(output_dir);
  for (int size : sizes) {
    TrainerConfig cfg = flags.cfg;
    cfg.target_vocab_size = size;
    const std::string name = StrCat("model-", size, ".tsv");
    TrainingSummary summary;
    auto model = TrainAndSave(*table, cfg, dir / name, &summary);
    if (!model.ok()) return Fail(model.status());
    report["models"].push_back(
        {{"vocab_size", size},
         {"model", name},
         {"mean_fragmentation", MeanFragmentation(*table, *model)},
         {"final_log_likelihood", summary.final_log_likelihood},
         {"rounds", summary.rounds}});
    if (auto st = WriteFileAtomically(dir / "sweep.json", report.dump(2) + "\n");
        !st.ok()) {
      return Fail(st);
    }
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

int RunEncode(const std::string& model_path, const std::string& input,
              const std::string& format) {
  auto model = SubwordModel::Load(model_path);
  if (!model.ok()) return Fail(model.status());
  InputStream in(input);
  if (!in.ok()) return Fail(absl::NotFoundError(StrCat("cannot open ", input)));
  std::string line;
  size_t line_number = 0;
  while (std::getline(in.get(), line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto bad = FindInvalidUtf8(line); bad.has_value()) {
      return Fail(absl::InvalidArgumentError(StrCat(
          "line ", line_number, ": invalid UTF-8 at byte ", *bad)));
    }
    const Encoding enc = Encode(line, *model);
    std::string out;
    if (format == "json") {
      out = enc.ToJson().dump();
    } else if (format == "ids") {
      for (size_t i = 0; i < enc.ids.size(); ++i) {
        StrAppend(&out, i > 0 ? " " : "", enc.ids[i]);
      }
    } else {
      for (size_t i = 0; i < enc.pieces.size(); ++i) {
        StrAppend(&out, i > 0 ? " " : "", enc.pieces[i]);
      }
    }
    std::cout << out << "\n";
  }
  return 0;
}

int RunDecode(const std::string& model_path, const std::string& input,
              const std::string& format) {
  auto model = SubwordModel::Load(model_path);
  if (!model.ok()) return Fail(model.status());
  InputStream in(input);
  if (!in.ok()) return Fail(absl::NotFoundError(StrCat("cannot open ", input)));
  std::string line;
  size_t line_number = 0;
  while (std::getline(in.get(), line)) {
    ++line_number;
    std::vector<int> ids;
    for (std::string_view tok : SplitAny(line, " \t\r")) {
      if (format == "pieces") {
        auto id = model->PieceToId(tok);
        ids.push_back(id.value_or(model->unk_id()));
        continue;
      }
      int id = 0;
      const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), id);
      if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
        return Fail(absl::InvalidArgumentError(
            StrCat("line ", line_number, ": \"", tok, "\" is not an id")));
      }
      ids.push_back(id);
    }
    auto text = Decode(ids, *model);
    if (!text.ok()) {
      return Fail(absl::Status(text.status().code(),
                               StrCat("line ", line_number, ": ",
                                      text.status().message())));
    }
    std::cout << *text << "\n";
  }
  return 0;
}

int RunStats(const std::string& input, bool languages, const std::string& tag,
             const NormalizationFlags& norm_flags) {
  auto norm = norm_flags.Resolve();
  if (!norm.ok()) return Fail(norm.status());
  absl::StatusOr<LanguageDistribution> dist;
  if (languages && std::filesystem::is_directory(input)) {
    dist = LanguageDistributionFromDirectory(input, *norm);
  } else if (languages) {
    InputStream in(input);
    if (!in.ok()) return Fail(absl::NotFoundError(StrCat("cannot open ", input)));
    dist = LanguageDistributionFromTsv(in.get(), *norm);
  } else {
    const std::string lang =
        tag.empty() ? std::filesystem::path(input).stem().string() : tag;
    dist = LanguageDistributionFromFile(input, lang, *norm);
  }
  if (!dist.ok()) return Fail(dist.status());
  std::cout << CanonicalJson(dist->ToJson()) << "\n";
  return 0;
}

int RunAnalyze(const std::vector<std::string>& model_paths,
               const std::string& gold_path, const std::string& pred_path,
               const std::string& unit_name, int token_col, int label_col,
               std::optional<int> pred_label_col, int threads) {
  auto unit = ParseCorrelationUnit(unit_name);
  if (!unit.ok()) return Fail(unit.status());
  auto sentences = ParseConllFile(gold_path, token_col, label_col);
  if (!sentences.ok()) return Fail(sentences.status());
  if (!pred_path.empty()) {
    auto pred =
        ParseConllFile(pred_path, token_col, pred_label_col.value_or(label_col));
    if (!pred.ok()) return Fail(pred.status());
    if (auto st = AttachPredictions(*pred, &*sentences); !st.ok()) {
      return Fail(absl::Status(st.code(), StrCat(pred_path, ": ", st.message())));
    }
  }
  if (sentences->empty()) {
    return Fail(absl::InvalidArgumentError(StrCat(gold_path, ": no sentences")));
  }
  std::vector<nlohmann::json> reports;
  for (const auto& path : model_paths) {
    auto model = SubwordModel::Load(path);
    if (!model.ok()) return Fail(model.status());
    const auto stats = ComputeSegmentationStats(*sentences, *model, threads);
    for (const auto& w : stats.warnings) std::cerr << "warning: " << w << "\n";
    std::optional<CorrelationReport> corr;
    if (!pred_path.empty()) {
      auto c = ComputeFragmentationErrorCorrelation(*sentences, *model, *unit,
                                                    threads);
      if (!c.ok()) return Fail(c.status());
      corr = *c;
    }
    reports.push_back(EmitReport(stats, corr, {model->vocab_size(), path}));
  }
  if (reports.size() == 1) {
    std::cout << CanonicalJson(reports.front()) << "\n";
  } else {
    std::cout << CanonicalJson(CombineReports(std::move(reports))) << "\n";
  }
  return 0;
}

}  // namespace
}  // namespace sublab

int main(int argc, char** argv) {
  using namespace sublab;
  CLI::App app{"Unigram subword vocabulary trainer, segmenter and "
               "tokenization-impact analyzer"};
  app.require_subcommand(1);
  app.set_version_flag(
      "--version", StrCat("sublab ", kToolVersion, " (model format ",
                          kModelMagic, " ", kModelFormatVersion, ")"));
  int threads = DefaultThreadCount();
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads,
                    "Worker threads (default $SUBLAB_THREADS or all cores); "
                    "results do not depend on it")
        ->check(CLI::PositiveNumber);
  };

  std::string input;
  std::string output;
  int vocab_size = 0;
  TrainerFlags train_flags;
  auto* train = app.add_subcommand("train", "Train a model of exact size");
  train->add_option("--input", input, "Training text, one sentence per line")
      ->required();
  train->add_option("--vocab-size", vocab_size,
                    "Final entry count, special tokens included")
      ->required();
  train->add_option("--output", output, "Model file to write")->required();
  train_flags.Register(train);
  add_threads(train);

  std::vector<int> sizes;
  std::string output_dir;
  TrainerFlags sweep_flags;
  auto* sweep = app.add_subcommand(
      "sweep", "Train one model per size on a single shared sample");
  sweep->add_option("--input", input, "Training text")->required();
  sweep->add_option("--sizes", sizes, "Comma-separated vocabulary sizes")
      ->delimiter(',')
      ->default_str("32000,64000,128000");
  sweep->add_option("--output-dir", output_dir, "Directory for models")
      ->required();
  sweep_flags.Register(sweep);
  add_threads(sweep);

  std::string model_path;
  std::string format = "pieces";
  auto* encode = app.add_subcommand("encode", "Segment text line by line");
  encode->add_option("--model", model_path, "Model file")->required();
  encode->add_option("--input", input, "Input text (default stdin)");
  encode->add_option("--format", format, "pieces, ids or json")
      ->check(CLI::IsMember({"pieces", "ids", "json"}))
      ->capture_default_str();

  std::string decode_format = "ids";
  auto* decode = app.add_subcommand("decode", "Turn ids back into text");
  decode->add_option("--model", model_path, "Model file")->required();
  decode->add_option("--input", input, "Space-separated ids per line");
  decode->add_option("--format", decode_format, "ids or pieces")
      ->check(CLI::IsMember({"ids", "pieces"}))
      ->capture_default_str();

  bool languages = false;
  std::string lang_tag;
  NormalizationFlags stats_norm;
  auto* stats = app.add_subcommand("stats", "Corpus and language statistics");
  stats->add_option("--input", input,
                    "Text file, `lang<TAB>sentence` TSV, or <lang>.txt directory")
      ->required();
  stats->add_flag("--languages", languages,
                  "Input is a tagged TSV or a directory of <lang>.txt files");
  stats->add_option("--lang", lang_tag,
                    "Tag for a single-language file (default: file stem)");
  stats_norm.Register(stats);

  std::vector<std::string> model_paths;
  std::string gold_path;
  std::string pred_path;
  std::string unit = "token";
  int token_col = 0;
  int label_col = -1;
  std::optional<int> pred_label_col;
  auto* analyze = app.add_subcommand(
      "analyze", "Per-class segmentation rates and fragmentation/error "
                 "correlation on CoNLL data");
  analyze->add_option("--model", model_paths, "Model file (repeatable)")
      ->required();
  analyze->add_option("--conll", gold_path, "Gold CoNLL file")->required();
  analyze->add_option("--pred", pred_path, "Predictions in the same layout");
  analyze->add_option("--unit", unit, "token or entity")
      ->check(CLI::IsMember({"token", "entity"}))
      ->capture_default_str();
  analyze->add_option("--token-col", token_col, "Token column")
      ->capture_default_str();
  analyze->add_option("--label-col", label_col,
                      "Label column (negative counts from the end)")
      ->capture_default_str();
  analyze->add_option("--pred-label-col", pred_label_col,
                      "Label column in the predictions file (default: --label-col)");
  add_threads(analyze);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version arrive here with exit code 0.
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (train->parsed()) {
    return RunTrain(input, vocab_size, output, train_flags, threads);
  }
  if (sweep->parsed()) {
    if (sizes.empty()) sizes = {32000, 64000, 128000};
    return RunSweep(input, sizes, output_dir, sweep_flags, threads);
  }
  if (encode->parsed()) return RunEncode(model_path, input, format);
  if (decode->parsed()) return RunDecode(model_path, input, decode_format);
  if (stats->parsed()) return RunStats(input, languages, lang_tag, stats_norm);
  if (analyze->parsed()) {
    return RunAnalyze(model_paths, gold_path, pred_path, unit, token_col,
                      label_col, pred_label_col, threads);
  }
  return 2;
}
