// Copyright 2026 The Ontotag Authors.
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

// ontotag: command-line driver.
//
//   ontotag build-dict      --ontology hp.obo [--root HP:0000118] --output dict.tsv
//   ontotag gen-dataset     --dict dict.tsv --corpus corpus/ --negatives N
//                           --output train.tsv [--dev-output dev.tsv]
//   ontotag train           --input train.tsv [--dev dev.tsv] --model model.bin
//   ontotag tag             --input docs --dict dict.tsv --model model.bin --output out.pubtator
//   ontotag eval            --gold gold.pubtator --input pred.pubtator [--mode both]
//   ontotag sweep-negatives --dict dict.tsv --corpus corpus/ --input gold.pubtator
//                           --counts 0,500,5000
//   ontotag tune-threshold  --dict dict.tsv --model model.bin --input dev.pubtator
//                           --grid 0.5,0.9,0.95
//
// Exit codes: 0 success, 1 usage, 2 I/O, 3 invalid input or failed run.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ontotag/dataset.h"
#include "ontotag/error.h"
#include "ontotag/eval.h"
#include "ontotag/matcher.h"
#include "ontotag/model.h"
#include "ontotag/ontology.h"
#include "ontotag/pipeline.h"
#include "ontotag/pubtator.h"
#include "ontotag/recognizer.h"

namespace ontotag {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInvalid = 3;

struct Options {
  std::string ontology, root, dict, corpus, model, input, output, dev, dev_output, gold,
      doc_gold;
  double threshold = RecognizerConfig().threshold;
  uint64_t seed = 1;
  size_t negatives = 0;
  int max_epochs = TrainConfig().max_epochs;
  double learning_rate = TrainConfig().learning_rate;
  int batch_size = TrainConfig().batch_size;
  int patience = TrainConfig().patience;
  int dim = TrainConfig().dim;
  double dev_fraction = DatasetSpec().dev_fraction;
  size_t max_ngram = DatasetSpec().max_ngram;
  bool disable_dict = false;
  bool disable_ml = false;
  std::string format = "text";
  std::string mode = "both";
  std::vector<size_t> counts;
  std::vector<double> grid;
};

void RequireExists(const std::string &path, const char *what) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw Error(ErrorKind::kIo, std::string(what) + " not found: " + path);
  }
}

// Writes to `path`, or stdout when empty. The file is replaced only after the
// content is complete.
class Output {
 public:
  explicit Output(std::string path) : path_(std::move(path)) {}
  std::ostream &stream() { return path_.empty() ? std::cout : buffer_; }
  void Commit() {
    if (path_.empty()) {
      std::cout.flush();
      return;
    }
    std::ofstream out(path_, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + path_);
    out << buffer_.str();
    out.close();
    if (!out) throw Error(ErrorKind::kIo, "write failed for " + path_);
  }

 private:
  std::string path_;
  std::ostringstream buffer_;
};

TrainConfig MakeTrainConfig(const Options &o) {
  TrainConfig c;
  c.learning_rate = o.learning_rate;
  c.batch_size = o.batch_size;
  c.max_epochs = o.max_epochs;
  c.patience = o.patience;
  c.dim = o.dim;
  c.seed = o.seed;
  c.Validate();
  return c;
}

DatasetSpec MakeDatasetSpec(const Options &o, size_t negatives) {
  DatasetSpec s;
  s.negative_count = negatives;
  s.max_ngram = o.max_ngram;
  s.seed = o.seed;
  s.dev_fraction = o.dev_fraction;
  if (!(s.dev_fraction >= 0.0 && s.dev_fraction < 1.0)) {
    throw Error(ErrorKind::kUsage, "--dev-fraction must lie in [0, 1)");
  }
  return s;
}

TaggerOptions MakeTaggerOptions(const Options &o) {
  if (o.disable_dict && o.disable_ml) {
    throw Error(ErrorKind::kUsage, "--disable-dict and --disable-ml are mutually exclusive");
  }
  TaggerOptions t;
  t.recognizer.threshold = o.threshold;
  t.use_dict = !o.disable_dict;
  t.use_ml = !o.disable_ml;
  t.Validate();
  return t;
}

std::string Fixed(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << v;
  return s.str();
}

// Tags `docs`, reporting per-document failures on stderr.
std::vector<PubtatorDoc> TagAll(const Tagger &tagger, const std::vector<PubtatorDoc> &docs) {
  std::vector<PubtatorDoc> out;
  out.reserve(docs.size());
  for (TagOutcome &o : TagDocuments(tagger, docs, DefaultThreads())) {
    if (!o.error.empty()) std::cerr << "ontotag: document " << o.doc.id << ": " << o.error << "\n";
    out.push_back(std::move(o.doc));
  }
  return out;
}

Prf MicroScores(const GoldSet &gold, const std::vector<PubtatorDoc> &tagged) {
  return MentionMicro(gold, PredFromDocs(tagged)).scores;
}

int CmdBuildDict(const Options &o) {
  RequireExists(o.ontology, "ontology");
  OntologyGraph graph = LoadObo(o.ontology);
  std::set<std::string> scope;
  if (o.root.empty()) {
    for (const auto &[id, c] : graph.concepts()) scope.insert(id);
  } else {
    scope = SelectSubontology(graph, o.root);
  }
  Dictionary dict = BuildDictionary(graph, scope);
  Output out(o.output);
  dict.WriteTsv(out.stream());
  out.Commit();
  std::cerr << "ontotag: " << scope.size() << " concepts, " << dict.term_count()
            << " dictionary entries\n";
  return kExitOk;
}

int CmdGenDataset(const Options &o) {
  RequireExists(o.dict, "dictionary");
  RequireExists(o.corpus, "corpus");
  Dictionary dict = LoadDictionary(o.dict);
  std::vector<std::string> corpus = LoadCorpus(o.corpus);
  DatasetSpec spec = MakeDatasetSpec(o, o.negatives);
  if (o.dev_output.empty()) spec.dev_fraction = 0.0;
  Positives pos = GeneratePositives(dict, o.max_ngram);
  std::vector<TrainingInstance> neg = SampleNegatives(corpus, dict, spec);
  Split split = Assemble(pos.instances, neg, spec);
  Output train(o.output);
  WriteDataset(split.train, train.stream());
  train.Commit();
  if (!o.dev_output.empty()) {
    Output dev(o.dev_output);
    WriteDataset(split.dev, dev.stream());
    dev.Commit();
  }
  std::cerr << "ontotag: " << pos.instances.size() << " positives (" << pos.skipped_overlong
            << " overlong skipped), " << neg.size() << " negatives; " << split.train.size()
            << " train, " << split.dev.size() << " dev\n";
  return kExitOk;
}

int CmdTrain(const Options &o) {
  RequireExists(o.input, "training set");
  if (o.model.empty()) throw Error(ErrorKind::kUsage, "train needs --model for the output");
  std::vector<TrainingInstance> train = LoadDataset(o.input);
  std::vector<TrainingInstance> dev;
  if (o.dev.empty()) {
    std::cerr << "ontotag: warning: no dev set; early stopping is off, running all "
              << o.max_epochs << " epochs\n";
  } else {
    RequireExists(o.dev, "dev set");
    dev = LoadDataset(o.dev);
  }
  TrainResult r = Train(train, dev, MakeTrainConfig(o));
  r.model.SaveFile(o.model);
  std::cerr << "ontotag: " << r.epochs_run << " epochs, best epoch " << r.best_epoch
            << ", train accuracy " << Fixed(r.train_accuracy);
  if (!r.dev_accuracy.empty()) {
    std::cerr << ", dev accuracy " << Fixed(r.dev_accuracy[r.best_epoch - 1]);
  }
  std::cerr << "\n";
  return kExitOk;
}

struct Resources {
  std::unique_ptr<TokenTrie> trie;
  std::unique_ptr<Model> model;
};

Resources LoadResources(const Options &o, const TaggerOptions &t) {
  Resources r;
  if (t.use_dict) {
    if (o.dict.empty()) throw Error(ErrorKind::kUsage, "--dict is required");
    RequireExists(o.dict, "dictionary");
    r.trie = std::make_unique<TokenTrie>(LoadDictionary(o.dict));
  }
  if (t.use_ml) {
    if (o.model.empty()) throw Error(ErrorKind::kUsage, "--model is required");
    RequireExists(o.model, "model");
    r.model = std::make_unique<Model>(Model::LoadFile(o.model));
  }
  return r;
}

int CmdTag(const Options &o) {
  TaggerOptions topts = MakeTaggerOptions(o);
  RequireExists(o.input, "input");
  Resources res = LoadResources(o, topts);
  Tagger tagger(res.trie.get(), res.model.get(), topts);
  std::vector<DocumentError> errors;
  std::vector<PubtatorDoc> docs = LoadDocuments(o.input, &errors);
  for (const auto &e : errors) std::cerr << "ontotag: document " << e.id << ": " << e.message << "\n";
  Output out(o.output);
  WritePubtator(TagAll(tagger, docs), out.stream());
  out.Commit();
  return kExitOk;
}

nlohmann::ordered_json PrfJson(const EvalReport &r) {
  size_t tp = 0, fp = 0, fn = 0;
  for (const auto &[id, c] : r.per_doc) {
    tp += c.tp;
    fp += c.fp;
    fn += c.fn;
  }
  nlohmann::ordered_json j;
  j["precision"] = r.scores.precision;
  j["recall"] = r.scores.recall;
  j["f1"] = r.scores.f1;
  j["precision_undefined"] = r.scores.precision_undefined;
  j["recall_undefined"] = r.scores.recall_undefined;
  j["tp"] = tp;
  j["fp"] = fp;
  j["fn"] = fn;
  j["documents"] = r.documents;
  return j;
}

void PrintReport(std::ostream &out, const char *name, const EvalReport &r) {
  out << name << "\tprecision=" << Fixed(r.scores.precision)
      << (r.scores.precision_undefined ? " (undefined)" : "")
      << "\trecall=" << Fixed(r.scores.recall)
      << (r.scores.recall_undefined ? " (undefined)" : "") << "\tf1=" << Fixed(r.scores.f1)
      << "\tdocuments=" << r.documents << "\n";
}

int CmdEval(const Options &o) {
  if (o.gold.empty() == o.doc_gold.empty()) {
    throw Error(ErrorKind::kUsage, "eval needs exactly one of --gold or --doc-gold");
  }
  if (o.mode != "micro" && o.mode != "macro" && o.mode != "both") {
    throw Error(ErrorKind::kUsage, "--mode must be micro, macro or both");
  }
  if (o.format != "text" && o.format != "json") {
    throw Error(ErrorKind::kUsage, "--format must be text or json");
  }
  RequireExists(o.input, "predictions");
  GoldSet gold;
  if (!o.gold.empty()) {
    RequireExists(o.gold, "gold");
    gold = GoldFromDocs(LoadPubtator(o.gold));
  } else {
    RequireExists(o.doc_gold, "gold");
    std::ifstream in(o.doc_gold);
    if (!in) throw Error(ErrorKind::kIo, "cannot open " + o.doc_gold);
    gold = ReadDocLevelGold(in);
  }
  PredSet pred = PredFromDocs(LoadPubtator(o.input));

  std::optional<EvalReport> micro, macro;
  if (o.mode != "macro") micro = MentionMicro(gold, pred);
  if (o.mode != "micro") macro = DocMacro(gold, pred);
  Output out(o.output);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    if (micro) j["micro"] = PrfJson(*micro);
    if (macro) j["macro"] = PrfJson(*macro);
    out.stream() << j.dump(2) << "\n";
  } else {
    if (micro) PrintReport(out.stream(), "micro", *micro);
    if (macro) PrintReport(out.stream(), "macro", *macro);
  }
  out.Commit();
  return kExitOk;
}

int CmdSweepNegatives(const Options &o) {
  if (o.counts.empty()) throw Error(ErrorKind::kUsage, "--counts needs at least one value");
  RequireExists(o.dict, "dictionary");
  RequireExists(o.corpus, "corpus");
  RequireExists(o.input, "evaluation set");
  TaggerOptions topts = MakeTaggerOptions(o);
  TrainConfig tconf = MakeTrainConfig(o);
  Dictionary dict = LoadDictionary(o.dict);
  TokenTrie trie(dict);
  std::vector<std::string> corpus = LoadCorpus(o.corpus);
  std::vector<PubtatorDoc> eval_docs = LoadPubtator(o.input);
  GoldSet gold = GoldFromDocs(eval_docs);
  Positives pos = GeneratePositives(dict, o.max_ngram);

  Output out(o.output);
  out.stream() << "negatives\tprecision\trecall\tf1\tmacro_precision\tmacro_recall\tmacro_f1\n";
  for (size_t count : o.counts) {
    DatasetSpec spec = MakeDatasetSpec(o, count);
    Split split = Assemble(pos.instances, SampleNegatives(corpus, dict, spec), spec);
    TrainResult r = Train(split.train, split.dev, tconf);
    Tagger tagger(topts.use_dict ? &trie : nullptr, topts.use_ml ? &r.model : nullptr, topts);
    std::vector<PubtatorDoc> tagged = TagAll(tagger, eval_docs);
    PredSet pred = PredFromDocs(tagged);
    Prf micro = MentionMicro(gold, pred).scores;
    Prf macro = DocMacro(gold, pred).scores;
    out.stream() << count << "\t" << Fixed(micro.precision) << "\t" << Fixed(micro.recall)
                 << "\t" << Fixed(micro.f1) << "\t" << Fixed(macro.precision) << "\t"
                 << Fixed(macro.recall) << "\t" << Fixed(macro.f1) << "\n";
    std::cerr << "ontotag: negatives=" << count << " f1=" << Fixed(micro.f1) << "\n";
  }
  out.Commit();
  return kExitOk;
}

int CmdTuneThreshold(const Options &o) {
  if (o.grid.empty()) throw Error(ErrorKind::kUsage, "--grid needs at least one value");
  for (double t : o.grid) {
    if (!(t > 0.0 && t < 1.0)) {
      throw Error(ErrorKind::kUsage, "--grid values must lie in (0, 1), got " + Fixed(t));
    }
  }
  if (o.disable_ml) throw Error(ErrorKind::kUsage, "tuning the threshold needs the classifier");
  RequireExists(o.input, "dev set");
  Options base = o;
  base.threshold = o.grid.front();
  TaggerOptions topts = MakeTaggerOptions(base);
  Resources res = LoadResources(o, topts);
  std::vector<PubtatorDoc> docs = LoadPubtator(o.input);
  GoldSet gold = GoldFromDocs(docs);

  std::vector<double> grid = o.grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  Output out(o.output);
  out.stream() << "threshold\tprecision\trecall\tf1\n";
  double best_t = grid.front();
  double best_f1 = -1.0;
  for (double t : grid) {
    topts.recognizer.threshold = t;
    Tagger tagger(res.trie.get(), res.model.get(), topts);
    Prf s = MicroScores(gold, TagAll(tagger, docs));
    out.stream() << t << "\t" << Fixed(s.precision) << "\t" << Fixed(s.recall) << "\t"
                 << Fixed(s.f1) << "\n";
    if (s.f1 >= best_f1) {  // ascending grid: ties go to the larger T
      best_f1 = s.f1;
      best_t = t;
    }
  }
  out.stream() << "best\t" << best_t << "\tf1=" << Fixed(best_f1) << "\n";
  out.Commit();
  return kExitOk;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
    case ErrorKind::kConfig:
      return kExitUsage;
    case ErrorKind::kIo:
      return kExitIo;
    default:
      return kExitInvalid;
  }
}

int Run(int argc, char **argv) {
  CLI::App app{"Ontology concept recognition: dictionary matching plus an n-gram classifier."};
  app.require_subcommand(1);
  Options o;

  auto add_train_flags = [&](CLI::App *c) {
    c->add_option("--seed", o.seed, "Seed for every random draw");
    c->add_option("--max-epochs", o.max_epochs, "Training epoch cap");
    c->add_option("--learning-rate", o.learning_rate, "Adam step size");
    c->add_option("--batch-size", o.batch_size, "Mini-batch size");
    c->add_option("--patience", o.patience, "Epochs without dev improvement before stopping");
    c->add_option("--dim", o.dim, "Embedding dimension");
  };
  auto add_tag_flags = [&](CLI::App *c) {
    c->add_option("--threshold", o.threshold, "Classifier score threshold, in (0, 1)");
    c->add_flag("--disable-dict", o.disable_dict, "Classifier only");
    c->add_flag("--disable-ml", o.disable_ml, "Dictionary only");
  };
  auto add_dataset_flags = [&](CLI::App *c) {
    c->add_option("--dev-fraction", o.dev_fraction, "Share of instances held out for dev");
    c->add_option("--max-ngram", o.max_ngram, "Longest n-gram for positives and negatives");
  };

  CLI::App *build = app.add_subcommand("build-dict", "Build the dictionary TSV from an OBO file");
  build->add_option("--ontology", o.ontology, "OBO file")->required();
  build->add_option("--root", o.root, "Restrict to the subtree under this concept");
  build->add_option("--output", o.output, "Dictionary TSV (default stdout)");

  CLI::App *gen = app.add_subcommand("gen-dataset", "Build the distantly supervised dataset");
  gen->add_option("--dict", o.dict, "Dictionary TSV")->required();
  gen->add_option("--corpus", o.corpus, "Directory of text files or one document per line")
      ->required();
  gen->add_option("--negatives", o.negatives, "Number of NONE instances to sample");
  gen->add_option("--seed", o.seed, "Seed for every random draw");
  gen->add_option("--output", o.output, "Training TSV (default stdout)");
  gen->add_option("--dev-output", o.dev_output, "Dev TSV; without it nothing is held out");
  add_dataset_flags(gen);

  CLI::App *train = app.add_subcommand("train", "Train the n-gram classifier");
  train->add_option("--input", o.input, "Training TSV")->required();
  train->add_option("--dev", o.dev, "Dev TSV for early stopping");
  train->add_option("--model", o.model, "Output model file")->required();
  add_train_flags(train);

  CLI::App *tag = app.add_subcommand("tag", "Annotate documents; writes PubTator");
  tag->add_option("--input", o.input, "PubTator file or directory of text files")->required();
  tag->add_option("--dict", o.dict, "Dictionary TSV");
  tag->add_option("--model", o.model, "Model file");
  tag->add_option("--output", o.output, "PubTator output (default stdout)");
  add_tag_flags(tag);

  CLI::App *eval = app.add_subcommand("eval", "Score predictions against gold");
  eval->add_option("--input", o.input, "Predicted PubTator file")->required();
  eval->add_option("--gold", o.gold, "Gold PubTator file");
  eval->add_option("--doc-gold", o.doc_gold, "Document-level gold TSV (doc_id<TAB>label)");
  eval->add_option("--mode", o.mode, "micro, macro or both");
  eval->add_option("--format", o.format, "text or json");
  eval->add_option("--output", o.output, "Report file (default stdout)");

  CLI::App *sweep = app.add_subcommand("sweep-negatives", "F1 against the number of negatives");
  sweep->add_option("--dict", o.dict, "Dictionary TSV")->required();
  sweep->add_option("--corpus", o.corpus, "Negative-sampling corpus")->required();
  sweep->add_option("--input", o.input, "Gold PubTator evaluation set")->required();
  sweep->add_option("--counts", o.counts, "Negative counts, comma separated")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber)
      ->required();
  sweep->add_option("--output", o.output, "TSV table (default stdout)");
  add_train_flags(sweep);
  add_tag_flags(sweep);
  add_dataset_flags(sweep);

  CLI::App *tune = app.add_subcommand("tune-threshold", "Pick the threshold maximizing dev F1");
  tune->add_option("--input", o.input, "Gold PubTator dev set")->required();
  tune->add_option("--dict", o.dict, "Dictionary TSV");
  tune->add_option("--model", o.model, "Model file")->required();
  tune->add_option("--grid", o.grid, "Thresholds, comma separated")->delimiter(',')->required();
  tune->add_option("--output", o.output, "TSV table (default stdout)");
  tune->add_flag("--disable-dict", o.disable_dict, "Classifier only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return CmdBuildDict(o);
    if (*gen) return CmdGenDataset(o);
    if (*train) return CmdTrain(o);
    if (*tag) return CmdTag(o);
    if (*eval) return CmdEval(o);
    if (*sweep) return CmdSweepNegatives(o);
    if (*tune) return CmdTuneThreshold(o);
  } catch (const Error &e) {
    std::cerr << "ontotag: " << ErrorKindName(e.kind()) << ": " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "ontotag: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace ontotag

int main(int argc, char **argv) { return ontotag::Run(argc, argv); }
