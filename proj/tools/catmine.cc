// Copyright 2026 The catmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// catmine: find the categorical attributes of web tables that people find
// interesting. Each subcommand reads and writes plain files so any stage can
// be rerun from the artifacts of the previous one.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "catmine/core/error.h"
#include "catmine/core/normalize.h"
#include "catmine/core/value_set.h"
#include "catmine/eval/agreement.h"
#include "catmine/eval/assessments.h"
#include "catmine/eval/poisson.h"
#include "catmine/eval/report.h"
#include "catmine/ingest/corpus.h"
#include "catmine/measures/measures.h"
#include "catmine/sampler/generate.h"
#include "catmine/sampler/sample_io.h"
#include "catmine/sampler/split.h"
#include "catmine/svm/combinations.h"
#include "catmine/svm/model_io.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace catmine {
namespace {

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError(fmt::format("{}: {}", dir.string(), ec.message()));
}

ingest::UnitsDictionary LoadUnits(const std::string& path) {
  return path.empty() ? ingest::UnitsDictionary::Default()
                      : ingest::UnitsDictionary::FromFile(path);
}

ingest::CorpusFormat FormatFor(const std::string& flag, const fs::path& path) {
  if (!flag.empty()) {
    const auto f = ingest::ParseCorpusFormat(flag);
    if (!f) throw UsageError("--format must be json or wikitext");
    return *f;
  }
  return path.extension() == ".json" ? ingest::CorpusFormat::kJson
                                     : ingest::CorpusFormat::kWikitext;
}

void EmitWarnings(const std::vector<ingest::Warning>& warnings,
                  const std::string& path) {
  const std::string lines = ingest::WarningsToJsonLines(warnings);
  if (!path.empty()) {
    sampler::WriteTextFile(path, lines);
  } else {
    std::cerr << lines;
  }
}

std::vector<TableRecord> LoadRecords(const fs::path& corpus,
                                     const ingest::UnitsDictionary& units,
                                     std::vector<ingest::Warning>* warnings) {
  const auto raw = ingest::ReadRawTables(corpus, ingest::CorpusFormat::kJson, warnings);
  return ingest::BuildRecords(raw, units, warnings);
}

// ---------------------------------------------------------------- ingest

struct IngestArgs {
  std::vector<std::string> inputs;
  std::string format;
  std::string output;
  std::string units;
  std::string warnings;
};

int RunIngest(const IngestArgs& a) {
  const auto units = LoadUnits(a.units);
  std::vector<ingest::Warning> warnings;
  std::vector<ingest::RawTable> kept;
  std::map<std::string, std::string> seen;  // id -> source file
  for (const auto& input : a.inputs) {
    const auto raw = ingest::ReadRawTables(input, FormatFor(a.format, input), &warnings);
    for (const auto& table : raw) {
      if (!ingest::BuildRecord(table, units, &warnings)) continue;
      const auto [it, fresh] = seen.emplace(table.id, input);
      if (!fresh) {
        throw DataError(fmt::format("duplicate table id '{}' in {} and {}",
                                    table.id, it->second, input));
      }
      kept.push_back(table);
    }
  }
  sampler::WriteTextFile(a.output, ingest::WriteCanonicalJson(kept));
  EmitWarnings(warnings, a.warnings);
  fmt::print("{} tables written to {}, {} warnings\n", kept.size(), a.output,
             warnings.size());
  return 0;
}

// --------------------------------------------------------------- samples

struct SamplesArgs {
  std::string corpus;
  std::string output;
  std::string units;
  std::string warnings;
  std::string sparse;
  bool dedup = false;
  int jobs = 1;
};

int RunSamples(const SamplesArgs& a) {
  std::vector<ingest::Warning> warnings;
  const auto records = LoadRecords(a.corpus, LoadUnits(a.units), &warnings);
  sampler::GenerateOptions options;
  options.dedup_keep_first = a.dedup;
  options.jobs = a.jobs;
  const auto samples = sampler::GenerateSamples(records, options, &warnings);
  sampler::WriteTextFile(a.output, sampler::WriteSamplesJsonl(samples));
  if (!a.sparse.empty()) sampler::WriteTextFile(a.sparse, sampler::WriteSparse(samples));
  EmitWarnings(warnings, a.warnings);
  fmt::print("{} tables, {} interesting, {} non_interesting samples\n",
             records.size(), samples.interesting.size(),
             samples.non_interesting.size());
  return 0;
}

// -------------------------------------------------------------- features

struct FeaturesArgs {
  std::string values;
  std::string column;
  bool as_json = false;
};

ValueSet ParseValueCounts(std::string_view text) {
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = Trim(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    const auto colon = item.rfind(':');
    if (colon == std::string_view::npos) {
      throw UsageError(fmt::format("--values: '{}' is not value:count", item));
    }
    const std::string_view num = Trim(item.substr(colon + 1));
    std::int64_t count = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), count);
    if (ec != std::errc() || ptr != num.data() + num.size() || count < 1) {
      throw UsageError(fmt::format("--values: bad count in '{}'", item));
    }
    counts.emplace_back(std::string(item.substr(0, colon)), count);
  }
  if (counts.empty()) throw UsageError("--values is empty");
  return ValueSet::FromCounts(counts);
}

int RunFeatures(const FeaturesArgs& a) {
  if (a.values.empty() == a.column.empty()) {
    throw UsageError("give exactly one of --values or --column");
  }
  ValueSet vs = [&] {
    if (!a.values.empty()) return ParseValueCounts(a.values);
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (pos <= a.column.size()) {
      auto comma = a.column.find(',', pos);
      if (comma == std::string::npos) comma = a.column.size();
      cells.push_back(a.column.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return ValueSet::FromColumn(cells);
  }();
  const FeatureVector fv = measures::ComputeFeatures(vs);
  if (a.as_json) {
    json obj = json::object();
    for (const auto id : kAllMeasures) obj[std::string(MeasureName(id))] = fv[id];
    json doc = {{"table_size", vs.table_size()},
                {"distinct", vs.distinct()},
                {"features", fv.values},
                {"measures", obj}};
    fmt::print("{}\n", doc.dump());
    return 0;
  }
  fmt::print("[{:.4f}]\n", fmt::join(fv.values, ", "));
  for (const auto id : kAllMeasures) {
    const bool degenerate = (fv.degenerate >> SlotOf(id)) & 1u;
    fmt::print("{:<15}{:.4f}{}\n", MeasureName(id), fv[id],
               degenerate ? "  (degenerate input)" : "");
  }
  return 0;
}

// ----------------------------------------------------------------- split

struct SplitArgs {
  std::string samples;
  double test = 0.25;
  int subfiles = 10;
  std::uint64_t seed = 1;
  std::string output = "split";
};

int RunSplit(const SplitArgs& a) {
  const auto samples = sampler::ReadSamplesFile(a.samples);
  const auto split = sampler::MakeHoldoutSplit(samples, a.test, a.seed);
  const auto files = sampler::MakeBalancedSubfiles(split.train, a.subfiles, a.seed);
  const fs::path dir = a.output;
  EnsureDir(dir);
  sampler::WriteTextFile(dir / "train.jsonl", sampler::WriteSamplesJsonl(split.train));
  sampler::WriteTextFile(dir / "test_pos.jsonl", sampler::WriteSamplesJsonl(split.test_pos));
  sampler::WriteTextFile(dir / "test_neg.jsonl", sampler::WriteSamplesJsonl(split.test_neg));
  json subfiles = json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string name = fmt::format("subfile_{:02}.jsonl", i + 1);
    sampler::WriteTextFile(dir / name, sampler::WriteSamplesJsonl(files[i]));
    subfiles.push_back({{"file", name},
                        {"interesting", files[i].interesting.size()},
                        {"non_interesting", files[i].non_interesting.size()}});
  }
  json manifest = {
      {"input", fs::path(a.samples).filename().string()},
      {"corpus_hash", samples.provenance.corpus_hash},
      {"seed", a.seed},
      {"test_fraction", a.test},
      {"train", {{"interesting", split.train.interesting.size()},
                 {"non_interesting", split.train.non_interesting.size()}}},
      {"test_pos", split.test_pos.size()},
      {"test_neg", split.test_neg.size()},
      {"subfiles", subfiles},
  };
  sampler::WriteTextFile(dir / "manifest.json", manifest.dump(2) + "\n");
  fmt::print("train {}+{}, test {}+{}, {} subfiles in {}\n",
             split.train.interesting.size(), split.train.non_interesting.size(),
             split.test_pos.size(), split.test_neg.size(), files.size(), dir.string());
  return 0;
}

// ----------------------------------------------------------------- train

struct TrainArgs {
  std::string subfiles;
  std::string testpos;
  std::string testneg;
  std::string grid = "default";
  std::string combos = "all";
  std::string rule = "max-then-sum";
  std::uint64_t seed = 1;
  int jobs = 1;
  double eps = 1e-5;
  std::int64_t max_iter = 10'000'000;
  std::string output = "model";
  bool save_all = false;
};

std::vector<fs::path> SubfilePaths(const fs::path& where) {
  if (!fs::is_directory(where)) return {where};
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(where)) {
    const std::string name = entry.path().filename().string();
    if (name.starts_with("subfile_") && name.ends_with(".jsonl")) {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) {
    throw DataError(where.string() + ": no subfile_*.jsonl files");
  }
  return paths;
}

std::vector<FeatureMask> ParseCombos(const std::string& text) {
  if (text == "all") return svm::AllMasks();
  std::vector<FeatureMask> masks;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item(Trim(std::string_view(text).substr(pos, comma - pos)));
    pos = comma + 1;
    const auto mask = FeatureMask::Parse(item);
    if (!mask || mask->empty()) throw UsageError(fmt::format("--combos: bad mask '{}'", item));
    if (std::find(masks.begin(), masks.end(), *mask) == masks.end()) masks.push_back(*mask);
  }
  return masks;
}

json SubfileJson(const svm::SubfileResult& r) {
  return {{"subfile", r.subfile + 1},
          {"nu", r.grid.best_nu},
          {"gamma", r.grid.best_gamma},
          {"cv_balanced_accuracy", r.grid.best_score},
          {"err_pos", r.err_pos},
          {"err_neg", r.err_neg}};
}

int RunTrain(const TrainArgs& a) {
  const fs::path source = a.subfiles;
  const fs::path base = fs::is_directory(source) ? source : source.parent_path();
  std::vector<sampler::SampleSet> subfiles;
  for (const auto& p : SubfilePaths(source)) subfiles.push_back(sampler::ReadSamplesFile(p));
  const auto test_pos = sampler::ReadSamplesFile(
      a.testpos.empty() ? base / "test_pos.jsonl" : fs::path(a.testpos));
  const auto test_neg = sampler::ReadSamplesFile(
      a.testneg.empty() ? base / "test_neg.jsonl" : fs::path(a.testneg));

  svm::CombinationOptions options;
  options.grid = svm::ParseGridSpec(a.grid);
  options.grid_options.seed = a.seed;
  options.grid_options.jobs = a.jobs;
  options.grid_options.train.eps = a.eps;
  options.grid_options.train.max_iterations = a.max_iter;
  options.masks = ParseCombos(a.combos);
  if (a.rule == "max-then-sum") {
    options.rule = svm::SelectionRule::kMaxThenSum;
  } else if (a.rule == "sum-only") {
    options.rule = svm::SelectionRule::kSumOnly;
  } else {
    throw UsageError("--rule must be max-then-sum or sum-only");
  }

  const auto search = svm::SearchFeatureCombinations(subfiles, test_pos, test_neg, options);
  const svm::SubfileResult* final_result = search.Final();
  if (final_result == nullptr) {
    for (const auto& combo : search.combos) {
      for (const auto& r : combo.subfiles) {
        if (r.no_convergence) {
          throw ConvergenceError(
              "no feature combination produced a usable model: " + r.failure, 0.0);
        }
      }
    }
    throw DataError("no feature combination produced a usable model");
  }

  const fs::path dir = a.output;
  EnsureDir(dir);
  sampler::WriteTextFile(dir / "cv_report.csv", svm::CombinationReportCsv(search));
  json combos = json::array();
  for (const auto& combo : search.combos) {
    json entry = {{"mask", combo.mask.ToString()}, {"features", combo.mask.Describe()}};
    if (combo.best) {
      entry["best"] = SubfileJson(combo.subfiles[*combo.best]);
      if (a.save_all) {
        EnsureDir(dir / "models");
        sampler::WriteTextFile(dir / "models" / (combo.mask.ToString() + ".json"),
                               svm::SerializeModel(*combo.subfiles[*combo.best].model));
      }
    } else {
      entry["best"] = nullptr;
    }
    combos.push_back(std::move(entry));
  }
  const auto& final_mask = search.combos[*search.final_combo].mask;
  json selection = {
      {"seed", a.seed},
      {"rule", a.rule},
      {"final", {{"mask", final_mask.ToString()},
                 {"features", final_mask.Describe()},
                 {"model", SubfileJson(*final_result)}}},
      {"combos", combos},
  };
  sampler::WriteTextFile(dir / "selection.json", selection.dump(2) + "\n");
  sampler::WriteTextFile(dir / "final_model.json", svm::SerializeModel(*final_result->model));
  fmt::print("final model: {} (subfile {}, nu {:.4g}, gamma {:.4g}), "
             "err_pos {:.4f}, err_neg {:.4f}, CV balanced accuracy {:.4f}\n",
             final_mask.Describe(), final_result->subfile + 1, final_result->grid.best_nu,
             final_result->grid.best_gamma, final_result->err_pos,
             final_result->err_neg, final_result->grid.best_score);
  return 0;
}

// --------------------------------------------------------------- predict

struct PredictArgs {
  std::string model;
  std::string table;
  std::string units;
  bool as_json = false;
};

int RunPredict(const PredictArgs& a) {
  const auto model = svm::ReadModelFile(a.model);
  std::string text = ReadText(a.table);
  // A lone table object is accepted as well as a corpus array.
  if (const auto first = text.find_first_not_of(" \t\r\n");
      first != std::string::npos && text[first] == '{') {
    text = "[" + text + "]";
  }
  std::vector<ingest::Warning> warnings;
  const auto raw = ingest::ParseCanonicalJson(text, a.table, &warnings);
  const auto records = ingest::BuildRecords(raw, LoadUnits(a.units), &warnings);
  EmitWarnings(warnings, "");

  struct Row {
    std::string table_id, attribute;
    Label label;
    double decision;
  };
  std::vector<Row> rows;
  for (const auto& record : records) {
    for (const Column* column : record.Categorical()) {
      const auto vs = ValueSet::FromColumn(column->cells);
      const auto p = svm::Predict(model, measures::ComputeFeatures(vs));
      rows.push_back({record.id, column->name, p.label, p.decision_value});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return x.decision > y.decision;
  });
  if (a.as_json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"table_id", r.table_id},
                     {"attribute", r.attribute},
                     {"label", std::string(LabelName(r.label))},
                     {"decision_value", r.decision}});
    }
    fmt::print("{}\n", out.dump(2));
  } else {
    for (const auto& r : rows) {
      fmt::print("{:+.6f}\t{}\t{}\t{}\n", r.decision, LabelName(r.label),
                 r.table_id, r.attribute);
    }
  }
  return 0;
}

// -------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string model;
  std::string assessments;
  std::string samples;
  std::string levels;
  std::string json_out;
};

int RunEvaluate(const EvaluateArgs& a) {
  const auto model = svm::ReadModelFile(a.model);
  const auto matrix = eval::ReadAssessmentsFile(a.assessments);
  const auto samples = sampler::ReadSamplesFile(a.samples);
  std::map<std::string, Label> predictions;
  for (const auto& s : samples.All()) {
    predictions.emplace(s.Id(), svm::Predict(model, s.features).label);
  }
  const auto levels = a.levels.empty()
                          ? eval::DefaultAgreementLevels(static_cast<int>(matrix.evaluators()))
                          : eval::ParseLevels(a.levels);
  const auto report = eval::Evaluate(predictions, matrix, levels);
  fmt::print("{}", eval::RenderTable(report));
  if (!a.json_out.empty()) sampler::WriteTextFile(a.json_out, eval::RenderJson(report));
  return 0;
}

// ----------------------------------------------------------------- stats

struct StatsArgs {
  std::string corpus;
  std::string units;
  bool as_json = false;
};

int RunStats(const StatsArgs& a) {
  std::vector<ingest::Warning> warnings;
  const auto records = LoadRecords(a.corpus, LoadUnits(a.units), &warnings);
  if (records.empty()) throw DataError(a.corpus + ": no usable tables");
  std::vector<std::int64_t> counts;
  for (const auto& r : records) {
    counts.push_back(static_cast<std::int64_t>(r.Categorical().size()));
  }
  const auto fit = eval::FitPoisson(counts);
  if (a.as_json) {
    json hist = json::object();
    for (const auto& [k, n] : fit.histogram) hist[std::to_string(k)] = n;
    json doc = {{"tables", records.size()},
                {"histogram", hist},
                {"lambda", fit.lambda},
                {"relative_sse", fit.relative_sse}};
    fmt::print("{}\n", doc.dump(2));
    return 0;
  }
  fmt::print("categorical_columns  tables  empirical  poisson\n");
  const double n = static_cast<double>(counts.size());
  for (const auto& [k, freq] : fit.histogram) {
    fmt::print("{:>19}  {:>6}  {:>9.4f}  {:>7.4f}\n", k, freq,
               static_cast<double>(freq) / n, eval::PoissonPmf(k, fit.lambda));
  }
  fmt::print("tables {}  lambda {:.4f}  relative_sse {:.4g}\n", records.size(),
             fit.lambda, fit.relative_sse);
  return 0;
}

// ------------------------------------------------------------ config file

// "key = value" lines; '#' starts a comment. Keys are option names without
// the leading dashes, '_' and '-' interchangeable.
std::vector<std::pair<std::string, std::string>> ReadConfig(const std::string& path) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(ReadText(path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(fmt::format("{}:{}: expected key = value", path, line_no));
    }
    std::string key(Trim(trimmed.substr(0, eq)));
    std::replace(key.begin(), key.end(), '_', '-');
    out.emplace_back(key, std::string(Trim(trimmed.substr(eq + 1))));
  }
  return out;
}

// Inserts config entries as "--key=value" right after the subcommand name,
// so that flags given on the command line (which come later) win.
std::vector<std::string> ApplyConfig(const CLI::App& app,
                                     std::vector<std::string> args) {
  std::optional<std::string> config_path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    if (args[i].starts_with("--config=")) config_path = args[i].substr(9);
  }
  if (!config_path) return args;

  std::size_t sub_pos = 0;
  const CLI::App* sub = nullptr;
  for (std::size_t i = 1; i < args.size() && sub == nullptr; ++i) {
    if (args[i] == "--config") {
      ++i;
      continue;
    }
    for (const CLI::App* s : app.get_subcommands({})) {
      if (s->get_name() == args[i]) {
        sub = s;
        sub_pos = i;
      }
    }
  }
  if (sub == nullptr) return args;

  std::vector<std::string> injected;
  for (const auto& [key, value] : ReadConfig(*config_path)) {
    const bool known_here = sub->get_option_no_throw("--" + key) != nullptr;
    bool known_anywhere = known_here;
    for (const CLI::App* s : app.get_subcommands({})) {
      known_anywhere = known_anywhere || s->get_option_no_throw("--" + key) != nullptr;
    }
    if (!known_anywhere) throw UsageError(fmt::format("unknown config key '{}'", key));
    if (known_here) injected.push_back(fmt::format("--{}={}", key, value));
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_pos) + 1,
              injected.begin(), injected.end());
  return args;
}

void PrintError(std::string_view kind, std::string_view message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

int Main(int argc, char** argv) {
  CLI::App app{"Find interesting categorical attributes in web tables", "catmine"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config;
  app.add_option("--config", config, "key = value file; command-line flags win");

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand("ingest", "Parse tables into a canonical corpus");
  ingest->add_option("inputs", ingest_args.inputs, "Corpus files")->required();
  ingest->add_option("--format", ingest_args.format, "json or wikitext (default: by extension)");
  ingest->add_option("-o,--output", ingest_args.output, "Canonical corpus path")->required();
  ingest->add_option("--units", ingest_args.units, "Units dictionary file");
  ingest->add_option("--warnings", ingest_args.warnings, "Warnings JSONL (default: stderr)");

  SamplesArgs samples_args;
  auto* samples = app.add_subcommand("samples", "Label categorical attributes by parent/child tables");
  samples->add_option("corpus", samples_args.corpus, "Canonical corpus")->required();
  samples->add_option("-o,--output", samples_args.output, "Sample JSONL path")->required();
  samples->add_option("--units", samples_args.units, "Units dictionary file");
  samples->add_option("--warnings", samples_args.warnings, "Warnings JSONL (default: stderr)");
  samples->add_option("--sparse", samples_args.sparse, "Also write the sparse text format");
  samples->add_flag("--dedup", samples_args.dedup, "Keep one sample per (subject, attribute)");
  samples->add_option("--jobs", samples_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  FeaturesArgs features_args;
  auto* features = app.add_subcommand("features", "Print the seven measures of one value distribution");
  features->add_option("--values", features_args.values, "value:count,value:count,...");
  features->add_option("--column", features_args.column, "Comma-separated cells");
  features->add_flag("--json", features_args.as_json, "JSON output");

  SplitArgs split_args;
  auto* split = app.add_subcommand("split", "Hold out test sets and cut balanced training subfiles");
  split->add_option("samples", split_args.samples, "Sample JSONL")->required();
  split->add_option("--test", split_args.test, "Held-out fraction per class")->capture_default_str();
  split->add_option("--subfiles", split_args.subfiles, "Number of subfiles")->capture_default_str();
  split->add_option("--seed", split_args.seed, "Random seed")->capture_default_str();
  split->add_option("-o,--output", split_args.output, "Output directory")->capture_default_str();

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "Grid-search nu-SVMs over feature combinations");
  train->add_option("--subfiles", train_args.subfiles, "Split directory or one sample file")->required();
  train->add_option("--testpos", train_args.testpos, "Held-out positives (default: <dir>/test_pos.jsonl)");
  train->add_option("--testneg", train_args.testneg, "Held-out negatives (default: <dir>/test_neg.jsonl)");
  train->add_option("--grid", train_args.grid, "default or nu=..;gamma=..[;folds=k][;refine]")->capture_default_str();
  train->add_option("--combos", train_args.combos, "all, or comma-separated masks")->capture_default_str();
  train->add_option("--rule", train_args.rule, "max-then-sum or sum-only")->capture_default_str();
  train->add_option("--seed", train_args.seed, "Seed for CV folds")->capture_default_str();
  train->add_option("--jobs", train_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  train->add_option("--eps", train_args.eps, "KKT tolerance")->capture_default_str();
  train->add_option("--max-iter", train_args.max_iter, "Solver iteration cap")->capture_default_str();
  train->add_option("-o,--output", train_args.output, "Output directory")->capture_default_str();
  train->add_flag("--save-all", train_args.save_all, "Also write the best model of every combination");

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "Rank the categorical columns of tables");
  predict->add_option("--model", predict_args.model, "Model file")->required();
  predict->add_option("--table", predict_args.table, "Table object or canonical corpus")->required();
  predict->add_option("--units", predict_args.units, "Units dictionary file");
  predict->add_flag("--json", predict_args.as_json, "JSON output");

  EvaluateArgs evaluate_args;
  auto* evaluate = app.add_subcommand("evaluate", "Score a model against user assessments");
  evaluate->add_option("--model", evaluate_args.model, "Model file")->required();
  evaluate->add_option("--assessments", evaluate_args.assessments, "Assessment CSV")->required();
  evaluate->add_option("--samples", evaluate_args.samples, "Sample JSONL with the assessed ids")->required();
  evaluate->add_option("--levels", evaluate_args.levels, "e.g. 5..9 (default: every strict majority)");
  evaluate->add_option("--json", evaluate_args.json_out, "Also write the report as JSON");

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Categorical columns per table and a Poisson fit");
  stats->add_option("corpus", stats_args.corpus, "Canonical corpus")->required();
  stats->add_option("--units", stats_args.units, "Units dictionary file");
  stats->add_flag("--json", stats_args.as_json, "JSON output");

  for (CLI::App* sub : app.get_subcommands({})) {
    for (CLI::Option* opt : sub->get_options()) {
      if (opt->get_expected_min() == 1 && opt->get_expected_max() == 1) opt->take_last();
    }
  }

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = ApplyConfig(app, std::move(args));
    std::vector<const char*> cargs;
    for (const auto& s : args) cargs.push_back(s.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    PrintError(ErrorKindName(ErrorKind::kUsage), e.what());
    return static_cast<int>(ErrorKind::kUsage);
  }

  if (*ingest) return RunIngest(ingest_args);
  if (*samples) return RunSamples(samples_args);
  if (*features) return RunFeatures(features_args);
  if (*split) return RunSplit(split_args);
  if (*train) return RunTrain(train_args);
  if (*predict) return RunPredict(predict_args);
  if (*evaluate) return RunEvaluate(evaluate_args);
  return RunStats(stats_args);
}

}  // namespace
}  // namespace catmine

int main(int argc, char** argv) {
  try {
    return catmine::Main(argc, argv);
  } catch (const catmine::Error& e) {
    catmine::PrintError(catmine::ErrorKindName(e.kind()), e.what());
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    catmine::PrintError(catmine::ErrorKindName(catmine::ErrorKind::kData), e.what());
    return static_cast<int>(catmine::ErrorKind::kData);
  }
}
