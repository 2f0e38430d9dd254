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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fmt/format.h"
#include "json.hpp"
#include "oracles.h"
#include "sublab/conll.h"
#include "sublab/file_util.h"
#include "sublab/frequency_table.h"
#include "sublab/impact.h"
#include "sublab/model.h"
#include "sublab/normalizer.h"
#include "sublab/pearson.h"
#include "sublab/pretokenizer.h"
#include "sublab/segmenter.h"
#include "sublab/synthetic.h"
#include "sublab/trainer.h"
#include "sublab/utf8.h"

namespace sublab {
namespace {

namespace fs = std::filesystem;

const std::string M(kMarkerUtf8);

// Pinned limits.
constexpr int kViterbiCases = 1000;
constexpr double kViterbiSeconds = 10.0;
constexpr double kEmTolerance = 1e-9;
constexpr int kEmCorpora = 100;
constexpr int kEmIterations = 10;
constexpr size_t kExactSizeBytes = 1200000;
constexpr double kExactSizeSeconds = 300.0;
constexpr size_t kSweepBytes = 6000000;
constexpr double kSweepSeconds = 1800.0;
constexpr double kPearsonTolerance = 1e-12;
constexpr int kPearsonFiles = 100;
constexpr int kRoundTripStrings = 10000;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void Report(int id, const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": "
            << o.detail << std::endl;
  if (!o.pass) ++failures;
}

fs::path g_dir;
std::string g_cli;

// Shared synthetic data.
SyntheticConfig CorpusConfig(uint64_t seed) {
  SyntheticConfig cfg;
  cfg.seed = seed;
  return cfg;
}

WordFrequencyTable TableFromFile(const fs::path& path, int threads) {
  std::ifstream in(path, std::ios::binary);
  FrequencyTableOptions opt;
  opt.num_threads = threads;
  auto t = BuildFrequencyTable(in, opt);
  if (!t.ok()) {
    std::cerr << t.status() << "\n";
    std::exit(100);
  }
  return *std::move(t);
}

std::u32string RandomWord(std::mt19937_64& rng, std::u32string_view alphabet,
                          size_t lo, size_t hi) {
  const size_t len = lo + rng() % (hi - lo + 1);
  std::u32string w;
  for (size_t i = 0; i < len; ++i) w += alphabet[rng() % alphabet.size()];
  return w;
}

absl::StatusOr<SubwordModel> ModelFromWeights(
    const std::vector<std::pair<std::string, double>>& w) {
  double total = 0;
  for (const auto& p : w) total += p.second;
  PieceTable t;
  for (const auto& [s, x] : w) t.pieces.push_back({s, std::log(x / total), false});
  return SubwordModel::Create(DefaultSpecials(), t, NormalizationConfig{});
}

// 1. Viterbi optimality against exhaustive enumeration.
void ViterbiOptimality() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(1001);
  const std::u32string alphabet = U"abc" "▁";
  int mismatches = 0;
  int covered = 0;
  int cases = 0;
  for (; covered < kViterbiCases && cases < 4 * kViterbiCases; ++cases) {
    std::set<std::u32string> surfaces;
    const size_t size = 1 + rng() % 30;
    // Most vocabularies hold every single character so the word is segmentable.
    if (size >= alphabet.size() && rng() % 4 != 0) {
      for (char32_t c : alphabet) surfaces.insert(std::u32string(1, c));
    }
    while (surfaces.size() < size) surfaces.insert(RandomWord(rng, alphabet, 1, 4));
    std::vector<std::pair<std::string, double>> w;
    for (const auto& s : surfaces) w.push_back({EncodeUtf8(s), 1.0 + rng() % 997});
    auto model = ModelFromWeights(w);
    if (!model.ok()) {
      o.Require(false, model.status().ToString());
      break;
    }
    oracle::Vocab vocab;
    for (const auto& p : model->piece_table().pieces) {
      vocab[DecodeUtf8(p.surface)] = p.log_prob;
    }
    const std::u32string word = RandomWord(rng, alphabet, 1, 10);
    const auto best = oracle::BestScore(word, vocab);
    const auto seg = ViterbiSegment(EncodeUtf8(word), *model);
    const bool has_unk = std::count(seg.ids.begin(), seg.ids.end(), model->unk_id()) > 0;
    if (!best) {
      if (!has_unk) ++mismatches;
      continue;
    }
    ++covered;
    double score = 0.0;
    for (const auto& p : seg.pieces) {
      auto it = vocab.find(DecodeUtf8(p));
      score += it == vocab.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
    }
    if (has_unk || score != *best) ++mismatches;
  }
  const double secs = Seconds(start);
  o.Require(mismatches == 0, fmt::format("{} mismatches", mismatches));
  o.Require(covered >= kViterbiCases, fmt::format("only {} segmentable cases", covered));
  o.Require(secs < kViterbiSeconds, fmt::format("{:.2f} s exceeds {} s", secs, kViterbiSeconds));
  if (o.pass) {
    o.detail = fmt::format("{} segmentable cases score-equal to exhaustive enumeration, "
                           "{} pathless cases fell back to [UNK]; {:.2f} s (limit {} s)",
                           covered, cases - covered, secs, kViterbiSeconds);
  }
  Report(1, "viterbi optimality", o);
}

// 2. EM example and monotonicity.
void EmCorrectness() {
  Outcome o;
  WordFrequencyTable ab;
  ab.Add("ab", 1);
  PieceTable t;
  t.pieces = {{"a", std::log(0.25)}, {"b", std::log(0.25)}, {"ab", std::log(0.5)}};
  auto r = EmRound(ab, t);
  double err = 1.0;
  if (r.ok()) {
    err = std::max({std::abs(std::exp(r->pieces.pieces[0].log_prob) - 0.1),
                    std::abs(std::exp(r->pieces.pieces[1].log_prob) - 0.1),
                    std::abs(std::exp(r->pieces.pieces[2].log_prob) - 0.8)});
  }
  o.Require(r.ok() && err <= kEmTolerance, fmt::format("example error {:.3g}", err));

  std::mt19937_64 rng(2002);
  double worst_drop = 0.0;
  for (int c = 0; c < kEmCorpora && o.pass; ++c) {
    WordFrequencyTable table;
    for (int i = 0; i < 8; ++i) table.Add(EncodeUtf8(RandomWord(rng, U"abcd", 1, 8)), 1 + rng() % 20);
    std::set<std::string> surfaces = {"a", "b", "c", "d"};
    while (surfaces.size() < 20) surfaces.insert(EncodeUtf8(RandomWord(rng, U"abcd", 2, 5)));
    PieceTable pieces;
    double total = 0;
    std::vector<double> w;
    for (size_t i = 0; i < surfaces.size(); ++i) total += w.emplace_back(1.0 + rng() % 50);
    size_t k = 0;
    for (const auto& s : surfaces) pieces.pieces.push_back({s, std::log(w[k++] / total)});
    double prev = -std::numeric_limits<double>::infinity();
    for (int it = 0; it < kEmIterations; ++it) {
      auto step = EmRound(table, pieces);
      if (!step.ok()) {
        o.Require(false, step.status().ToString());
        break;
      }
      worst_drop = std::max(worst_drop, prev - step->log_likelihood);
      o.Require(step->log_likelihood >= prev - kEmTolerance,
                fmt::format("corpus {} iteration {} decreased by {:.3g}", c, it,
                            prev - step->log_likelihood));
      o.Require(std::abs(step->pieces.ProbabilityMass() - 1.0) <= kEmTolerance,
                "probabilities do not sum to 1");
      prev = step->log_likelihood;
      pieces = step->pieces;
    }
  }
  if (o.pass) {
    o.detail = fmt::format("{{ab:1}} -> {{ab:0.8,a:0.1,b:0.1}} (max error {:.2g}); {} corpora x "
                           "{} iterations non-decreasing (tolerance {})",
                           err, kEmCorpora, kEmIterations, kEmTolerance);
  }
  Report(2, "EM correctness", o);
}

std::vector<SubwordModel> g_models;  // every trained model, checked in 6

// 3. Exact size and determinism.
void ExactSize() {
  Outcome o;
  const fs::path text = g_dir / "exact.txt";
  {
    SyntheticCorpus gen(CorpusConfig(3003));
    std::ofstream out(text, std::ios::binary);
    WriteText(gen.GenerateBytes(kExactSizeBytes), out);
  }
  const auto bytes = fs::file_size(text);
  const auto start = Clock::now();
  std::vector<std::string> summary;
  for (int target : {1000, 2000, 8000}) {
    std::string first;
    for (int run = 0; run < 3; ++run) {
      const int threads = run == 2 ? 4 : 1;
      const auto table = TableFromFile(text, threads);
      TrainerConfig cfg;
      cfg.target_vocab_size = target;
      cfg.num_threads = threads;
      auto model = Train(table, cfg);
      if (!model.ok()) {
        o.Require(false, fmt::format("target {}: {}", target, model.status().ToString()));
        break;
      }
      const fs::path path = g_dir / fmt::format("exact-{}-{}.tsv", target, run);
      o.Require(model->Save(path).ok(), "save failed");
      const std::string file = *ReadFile(path);
      o.Require(model->vocab_size() == target,
                fmt::format("target {} produced {}", target, model->vocab_size()));
      if (run == 0) {
        first = file;
        g_models.push_back(*model);
      } else {
        o.Require(file == first, fmt::format("target {} run {} (threads {}) differs",
                                             target, run, threads));
      }
    }
  }
  const double secs = Seconds(start);
  o.Require(bytes >= 1000000, "corpus under 1 MB");
  o.Require(secs < kExactSizeSeconds, fmt::format("{:.1f} s exceeds {} s", secs, kExactSizeSeconds));
  if (o.pass) {
    o.detail = fmt::format("{} byte corpus; sizes 1000/2000/8000 exact; byte-identical across "
                           "2 runs and threads {{1,4}}; {:.1f} s (limit {} s)",
                           bytes, secs, kExactSizeSeconds);
  }
  Report(3, "exact-size contract", o);
}

// 4. Fragmentation trend and NE/NotNE ordering.
void FragmentationTrend() {
  Outcome o;
  const fs::path text = g_dir / "sweep.txt";
  std::vector<LabeledSentence> conll;
  {
    SyntheticCorpus gen(CorpusConfig(4004));
    std::ofstream out(text, std::ios::binary);
    WriteText(gen.GenerateBytes(kSweepBytes), out);
    std::ofstream gold(g_dir / "sweep.conll");
    WriteConll(gen.GenerateSentences(3000), false, gold);
  }
  auto parsed = ParseConllFile(g_dir / "sweep.conll", 0, -1);
  o.Require(parsed.ok(), "CoNLL parse failed");
  const auto bytes = fs::file_size(text);
  const auto start = Clock::now();
  const auto table = TableFromFile(text, 1);
  double prev_frag = std::numeric_limits<double>::infinity();
  std::string trend, rates;
  for (int size : {2000, 8000, 16000}) {
    TrainerConfig cfg;
    cfg.target_vocab_size = size;
    auto model = Train(table, cfg);
    if (!model.ok()) {
      o.Require(false, model.status().ToString());
      break;
    }
    g_models.push_back(*model);
    int64_t pieces = 0;
    for (const auto& [w, c] : table.entries()) pieces += c * Fragmentation(w, *model);
    const double frag = static_cast<double>(pieces) / static_cast<double>(table.total_words());
    o.Require(frag <= prev_frag, fmt::format("fragmentation rose at {}", size));
    prev_frag = frag;
    trend += fmt::format("{}{:.4f}", trend.empty() ? "" : " -> ", frag);
    if (parsed.ok()) {
      const auto stats = ComputeSegmentationStats(*parsed, *model);
      const double ne = stats.classes.at(std::string(kEntityClass)).rate_pct();
      const double not_ne = stats.classes.at(std::string(kNonEntityClass)).rate_pct();
      o.Require(ne > not_ne, fmt::format("NE {:.2f}% <= NotNE {:.2f}% at {}", ne, not_ne, size));
      rates += fmt::format("{}{}: NE {:.2f}% / NotNE {:.2f}%", rates.empty() ? "" : ", ",
                           size, ne, not_ne);
    }
  }
  const double secs = Seconds(start);
  o.Require(bytes >= 5000000 && bytes <= 20000000, "corpus outside 5-20 MB");
  o.Require(secs < kSweepSeconds, fmt::format("{:.1f} s exceeds {} s", secs, kSweepSeconds));
  if (o.pass) {
    o.detail = fmt::format("{} byte corpus; mean fragmentation {} (non-increasing); {}; "
                           "{:.1f} s (limit {} s)", bytes, trend, rates, secs, kSweepSeconds);
  }
  Report(4, "fragmentation trend", o);
}

// Oracle x/y extraction, independent of the library's sample collection.
void OracleSamples(const std::vector<LabeledSentence>& sentences, const SubwordModel& model,
                   bool entity, std::vector<double>* x, std::vector<double>* y) {
  for (const auto& s : sentences) {
    std::vector<int> frag;
    for (const auto& t : s.tokens) frag.push_back(Fragmentation(M + t, model));
    if (!entity) {
      for (size_t i = 0; i < s.tokens.size(); ++i) {
        x->push_back(frag[i]);
        y->push_back(s.gold[i] != (*s.pred)[i] ? 1.0 : 0.0);
      }
      continue;
    }
    for (const auto& span : oracle::EntitySpans(s.gold)) {
      double pieces = 0;
      bool miss = false;
      for (size_t i = span.begin; i < span.end; ++i) {
        pieces += frag[i];
        miss = miss || s.gold[i] != (*s.pred)[i];
      }
      x->push_back(pieces / static_cast<double>(span.end - span.begin));
      y->push_back(miss ? 1.0 : 0.0);
    }
  }
}

// 5. Pearson oracle, hand case, directional harness.
void PearsonOracle() {
  Outcome o;
  if (g_models.empty()) {
    o.Require(false, "no trained model available");
    Report(5, "pearson oracle", o);
    return;
  }
  const SubwordModel& model = g_models.front();
  std::mt19937_64 rng(5005);
  double worst = 0.0;
  int defined = 0;
  for (int f = 0; f < kPearsonFiles && o.pass; ++f) {
    SyntheticConfig cfg = CorpusConfig(50000 + f);
    cfg.num_stems = 600;
    cfg.num_entities = 150;
    SyntheticCorpus gen(cfg);
    auto sentences = gen.GenerateSentences(20 + rng() % 80);
    // Fuzzed predictions: random label flips at a per-file rate.
    const double flip = static_cast<double>(rng() % 40) / 100.0;
    for (auto& s : sentences) {
      auto& pred = *s.labeled.pred;
      pred = s.labeled.gold;
      for (auto& l : pred) {
        if (static_cast<double>(rng() % 1000) / 1000.0 < flip) l = l == "O" ? "B-PER" : "O";
      }
    }
    const fs::path gold_path = g_dir / "p_gold.conll", pred_path = g_dir / "p_pred.conll";
    {
      std::ofstream g(gold_path), p(pred_path);
      WriteConll(sentences, false, g);
      WriteConll(sentences, true, p);
    }
    auto gold = ParseConllFile(gold_path, 0, -1);
    auto pred = ParseConllFile(pred_path, 0, -1);
    o.Require(gold.ok() && pred.ok() && AttachPredictions(*pred, &*gold).ok(),
              "prediction file failed to parse or align");
    if (!o.pass) break;
    for (bool entity : {false, true}) {
      auto r = ComputeFragmentationErrorCorrelation(
          *gold, model, entity ? CorrelationUnit::kEntity : CorrelationUnit::kToken,
          1 + f % 4);
      std::vector<double> x, y;
      OracleSamples(*gold, model, entity, &x, &y);
      const auto want = oracle::TwoPassPearson(x, y);
      o.Require(r.ok(), "correlation failed");
      if (!r.ok()) break;
      o.Require(r->n == static_cast<int64_t>(x.size()), fmt::format("file {}: n mismatch", f));
      o.Require(r->pearson_r.has_value() == want.has_value(),
                fmt::format("file {}: definedness mismatch", f));
      if (r->pearson_r && want) {
        ++defined;
        worst = std::max(worst, std::abs(*r->pearson_r - *want));
      }
    }
  }
  o.Require(worst <= kPearsonTolerance, fmt::format("max deviation {:.3g}", worst));

  PearsonAccumulator hand;
  const double hx[] = {1, 2, 3, 4}, hy[] = {0, 0, 1, 1};
  for (int i = 0; i < 4; ++i) hand.Add(hx[i], hy[i]);
  const double hand_r = hand.Correlation().value_or(0.0);
  o.Require(std::abs(hand_r - 0.8944) <= 1e-4, fmt::format("hand case r = {:.6f}", hand_r));

  // Directional harness: mislabel probability increases with fragmentation.
  SyntheticConfig cfg = CorpusConfig(5555);
  SyntheticCorpus gen(cfg);
  auto sentences = gen.GenerateSentences(3000);
  std::vector<LabeledSentence> labeled;
  for (auto& s : sentences) {
    auto& pred = *s.labeled.pred;
    pred = s.labeled.gold;
    for (size_t i = 0; i < pred.size(); ++i) {
      const int frag = Fragmentation(M + s.labeled.tokens[i], model);
      const double p = std::min(0.9, 0.02 + 0.08 * (frag - 1));
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) pred[i] = pred[i] == "O" ? "B-MISC" : "O";
    }
    labeled.push_back(s.labeled);
  }
  auto dir = ComputeFragmentationErrorCorrelation(labeled, model, CorrelationUnit::kToken);
  const double dir_r = dir.ok() && dir->pearson_r ? *dir->pearson_r : -2.0;
  o.Require(dir_r > 0.0, fmt::format("directional r = {:.4f}", dir_r));
  if (o.pass) {
    o.detail = fmt::format("{} files x 2 units ({} defined), max |r - two-pass| {:.2g} "
                           "(limit {}); hand case r = {:.4f}; directional r = {:.4f} > 0",
                           kPearsonFiles, defined, worst, kPearsonTolerance, hand_r, dir_r);
  }
  Report(5, "pearson oracle", o);
}

// 6. Round trip and serialization.
void RoundTrip() {
  Outcome o;
  if (g_models.empty()) {
    o.Require(false, "no trained model available");
    Report(6, "round-trip and serialization", o);
    return;
  }
  const SubwordModel& model = g_models.front();
  std::u32string alphabet;
  for (const auto& p : model.piece_table().pieces) {
    const auto s = DecodeUtf8(p.surface);
    if (s.size() == 1 && s[0] != kMarker) alphabet += s[0];
  }
  alphabet += U"   ";
  std::mt19937_64 rng(6006);
  int bad = 0;
  for (int i = 0; i < kRoundTripStrings; ++i) {
    const std::string text = EncodeUtf8(RandomWord(rng, alphabet, 0, 40));
    const auto enc = Encode(text, model);
    auto dec = Decode(enc.ids, model);
    if (!dec.ok() || *dec != NormalizeText(text, model.normalization())) {
      if (bad++ == 0) std::cerr << "round trip failed for \"" << text << "\"\n";
    }
  }
  o.Require(bad == 0, fmt::format("{} of {} strings failed", bad, kRoundTripStrings));
  int models = 0;
  for (const auto& m : g_models) {
    const fs::path path = g_dir / "rt.tsv";
    auto loaded = m.Save(path).ok() ? SubwordModel::Load(path)
                                    : absl::StatusOr<SubwordModel>(absl::InternalError("save"));
    o.Require(loaded.ok() && *loaded == m && loaded->Serialize() == m.Serialize(),
              fmt::format("model of size {} changed through save/load", m.vocab_size()));
    ++models;
  }
  if (o.pass) {
    o.detail = fmt::format("decode(encode(t)) = normalize(t) on {} covered strings; "
                           "load(save(m)) = m for {} trained models", kRoundTripStrings, models);
  }
  Report(6, "round-trip and serialization", o);
}

int Run(const std::string& args, std::string* out) {
  const fs::path out_path = g_dir / "cli.out", err_path = g_dir / "cli.err";
  const std::string cmd = g_cli + " " + args + " >" + out_path.string() + " 2>" +
                          err_path.string();
  const int status = std::system(cmd.c_str());
  *out = ReadFile(out_path).value_or("");
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool ValidReport(const nlohmann::json& r, bool with_correlation) {
  if (!r.is_object() || !r.contains("model") || !r.contains("segmentation")) return false;
  if (!r["model"]["vocab_size"].is_number_integer()) return false;
  for (const char* cls : {"NE", "NotNE"}) {
    const auto& c = r["segmentation"][cls];
    if (!c["tokens"].is_number_integer() || !c["pieces"].is_number_integer() ||
        !c["rate_pct"].is_number()) {
      return false;
    }
  }
  if (r.contains("correlation") != with_correlation) return false;
  if (with_correlation) {
    const auto& c = r["correlation"];
    if (!c["unit"].is_string() || !c["n"].is_number_integer() ||
        !c["error_rate"].is_number() ||
        !(c["pearson_r"].is_number() || c["pearson_r"] == "undefined")) {
      return false;
    }
  }
  return true;
}

// 7. CLI end to end.
void CliEndToEnd() {
  Outcome o;
  const fs::path text = g_dir / "cli.txt";
  {
    SyntheticCorpus gen(CorpusConfig(7007));
    std::ofstream out(text, std::ios::binary);
    WriteText(gen.GenerateBytes(1000000), out);
    const auto labeled = gen.GenerateSentences(1000);
    std::ofstream gold(g_dir / "cli_gold.conll");
    WriteConll(labeled, false, gold);
    std::ofstream pred(g_dir / "cli_pred.conll");
    WriteConll(labeled, true, pred);
  }
  const fs::path out_dir = g_dir / "cli_sweep";
  std::string out;
  const int sweep = Run(fmt::format("sweep --input {} --sizes 1000,2000,4000 --output-dir {}",
                                    text.string(), out_dir.string()), &out);
  o.Require(sweep == 0, fmt::format("sweep exited {}", sweep));
  std::string models;
  for (int size : {4000, 1000, 2000}) {
    models += fmt::format(" --model {}", (out_dir / fmt::format("model-{}.tsv", size)).string());
  }
  const std::string gold = (g_dir / "cli_gold.conll").string();
  int code = Run(fmt::format("analyze{} --conll {} --pred {}", models, gold,
                             (g_dir / "cli_pred.conll").string()), &out);
  o.Require(code == 0, fmt::format("analyze exited {}", code));
  auto j = nlohmann::json::parse(out, nullptr, false);
  o.Require(j.is_array() && j.size() == 3, "comparison JSON is not a 3-element array");
  if (j.is_array() && j.size() == 3) {
    int prev = 0;
    for (const auto& r : j) {
      o.Require(ValidReport(r, true), "report block fails the schema");
      const int vs = r["model"]["vocab_size"].is_number_integer() ? r["model"]["vocab_size"].get<int>() : 0;
      o.Require(vs > prev, "blocks not ordered by vocab_size");
      prev = vs;
    }
  }
  code = Run(fmt::format("analyze{} --conll {} --pred {}", models, gold, gold), &out);
  auto same = nlohmann::json::parse(out, nullptr, false);
  o.Require(code == 0 && same.is_array(), "analyze with --pred = gold failed");
  if (same.is_array()) {
    for (const auto& r : same) {
      o.Require(ValidReport(r, true), "degenerate report fails the schema");
      o.Require(r["correlation"]["error_rate"] == 0.0, "error_rate is not 0");
      o.Require(r["correlation"]["pearson_r"] == "undefined", "correlation not undefined");
    }
  }
  code = Run(fmt::format("analyze --model {} --conll {}",
                         (out_dir / "model-1000.tsv").string(), gold), &out);
  auto single = nlohmann::json::parse(out, nullptr, false);
  o.Require(code == 0 && ValidReport(single, false), "gold-only report malformed");
  if (o.pass) {
    o.detail = "sweep 1000,2000,4000 then analyze: 3 schema-valid blocks sorted by "
               "vocab_size; --pred = gold gives error_rate 0 and pearson_r \"undefined\"";
  }
  Report(7, "CLI end to end", o);
}

}  // namespace
}  // namespace sublab

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-sublab-cli>\n";
    return 2;
  }
  sublab::g_cli = argv[1];
  sublab::g_dir = std::filesystem::temp_directory_path() /
                  ("sublab_acceptance_" + std::to_string(::getpid()));
  std::filesystem::remove_all(sublab::g_dir);
  std::filesystem::create_directories(sublab::g_dir);

  sublab::ViterbiOptimality();
  sublab::EmCorrectness();
  sublab::ExactSize();
  sublab::FragmentationTrend();
  sublab::PearsonOracle();
  sublab::RoundTrip();
  sublab::CliEndToEnd();

  std::filesystem::remove_all(sublab::g_dir);
  std::cout << (sublab::failures == 0 ? "ALL PASS" : fmt::format("{} FAILED", sublab::failures))
            << std::endl;
  return sublab::failures;
}
