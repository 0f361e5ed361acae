// Copyright 2026 The mpcc Authors
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

#include "mpcc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "mpcc/anomaly_scorer.hpp"
#include "mpcc/pattern_model.hpp"
#include "mpcc/trie_bench.hpp"

namespace mpcc {

namespace {

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void report_skips(const IngestReport &report, std::ostream &err) {
  for (const auto &d : report.skip_diagnostics) err << d.format() << '\n';
}

std::vector<std::filesystem::path> to_paths(const std::vector<std::string> &v) {
  return {v.begin(), v.end()};
}

struct Args {
  std::vector<std::string> corpus;
  std::vector<std::string> inputs;
  std::string out;
  std::string model;
  std::string rules;
  std::string format = "text";
  std::string ns;
  std::string expr;
  unsigned jobs = 1;
  double threshold = 1000.0;
  std::size_t top = 20;
  std::size_t limit = 0;
  bool per_file = false;
};

int cmd_train(const Args &a, std::ostream &out, std::ostream &err) {
  TrainOptions opts;
  opts.ingest.jobs = std::max(1u, a.jobs);
  if (!a.rules.empty()) opts.rules = load_rules(a.rules);
  TrainResult r = train(to_paths(a.corpus), opts);
  report_skips(r.report, err);
  save(r.model, a.out);
  out << "trained " << r.model.total_sites << " predicates from " << r.report.files_parsed
      << " files: " << r.model.counts.size() << " signatures, " << r.report.sites_skipped
      << " skipped\n";
  return 0;
}

int cmd_scan(const Args &a, std::ostream &out, std::ostream &err, const CliEnv &env) {
  ScorerConfig cfg;
  cfg.threshold = a.threshold;
  cfg.top_n = a.top;
  cfg.per_file = a.per_file;
  try {
    cfg.validate();
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  PatternModel model = load(a.model);
  ScanReport report = scan(to_paths(a.inputs), model, cfg);
  report_skips(report.ingest, err);
  bool color = env.color && a.format == "text" && std::getenv("MPCC_NO_COLOR") == nullptr;
  for (const auto &f : report.findings)
    out << (a.format == "json" ? format_json(f) : format_text(f, color)) << '\n';
  if (a.format == "text")
    err << report.findings.size() << " finding(s) in " << report.sites_scored << " predicate(s)\n";
  return report.findings.empty() ? 0 : 1;
}

int cmd_merge(const Args &a, std::ostream &out) {
  std::vector<PatternModel> models;
  for (const auto &p : a.inputs) models.push_back(load(p));
  PatternModel merged = merge(models);
  save(merged, a.out);
  out << "merged " << models.size() << " models: " << merged.total_sites << " predicates, "
      << merged.counts.size() << " signatures\n";
  return 0;
}

int cmd_inspect(const Args &a, std::ostream &out) {
  PatternModel model = load(a.model);
  out << "# total_sites " << model.total_sites << " entries " << model.counts.size()
      << " fingerprint " << to_hex(model.corpus_fingerprint) << '\n';
  for (const auto &r : model.rules_applied) out << "# rule " << r << '\n';
  std::size_t shown = 0;
  for (const auto &[key, count] : model.counts) {
    if (!a.ns.empty() && key.compare(0, a.ns.size() + 1, a.ns + ":") != 0) continue;
    if (a.limit && shown >= a.limit) break;
    out << key << '\t' << count << '\n';
    ++shown;
  }
  return 0;
}

int cmd_explain(const Args &a, std::ostream &out) {
  ScorerConfig cfg;
  cfg.threshold = a.threshold;
  PatternModel model = load(a.model);
  Expr expr;
  try {
    expr = parse_expr(a.expr);
  } catch (const ParseError &e) {
    throw UsageError(std::string("cannot parse expression: ") + e.what());
  }
  Decomposition d = decompose(expr);
  ScoreResult r = score_expr(expr, d, model, cfg);

  out << "expression: " << print_expr(expr) << '\n';
  out << "signatures:\n";
  for (const auto &sig : signature_set(expr)) out << "  " << sig.key() << '\t' << model.count(sig) << '\n';
  out << "units:\n";
  std::uint64_t whole = model.count(d.whole);
  if (whole > 0) {
    out << "  " << d.whole.key() << '\t' << whole << "  (whole expression seen)\n";
  } else {
    for (const auto &cb : d.complex) out << "  " << cb.signature.key() << '\t' << model.count(cb.signature) << '\n';
    for (std::size_t b : d.isolated_blocks())
      out << "  " << d.split.blocks[b].signature.key() << '\t' << model.count(d.split.blocks[b].signature)
          << '\n';
  }
  out << "complexity: " << r.complexity << '\n';
  out << "frequency: " << r.frequency << '\n';
  out << "score: " << r.score.decimal() << '\n';
  out << "tags: ";
  auto tags = tag_finding(expr, a.expr);
  if (tags.empty()) out << '-';
  for (std::size_t i = 0; i < tags.size(); ++i) out << (i ? "," : "") << to_string(tags[i]);
  out << '\n';
  out << "decision: " << (r.score.exceeds(cfg.threshold) ? "flagged" : "not flagged") << " (threshold "
      << cfg.threshold << ")\n";
  return 0;
}

int cmd_bench(const Args &a, std::ostream &out, std::ostream &err) {
  BenchOptions opts;
  opts.jobs = std::max(1u, a.jobs);
  BenchReport report = run_bench(to_paths(a.corpus), a.out, opts);
  out << report.table();
  for (const auto &w : report.warnings) err << "warning: " << w << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            const CliEnv &env) {
  CLI::App app{"Pattern-frequency anomaly checker for C and C++ control predicates", "mpcc"};
  app.require_subcommand(1);
  Args a;

  auto *train = app.add_subcommand("train", "Learn a pattern model from a corpus");
  train->add_option("--corpus", a.corpus, "Corpus root (repeatable)")->required()->expected(1, -1);
  train->add_option("--out", a.out, "Model file to write")->required();
  train->add_option("--rules", a.rules, "Rule file applied after training");
  train->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto *scan_cmd = app.add_subcommand("scan", "Report anomalous predicates");
  scan_cmd->add_option("--model", a.model, "Model file")->required();
  scan_cmd->add_option("--threshold", a.threshold, "Flag scores above this value");
  scan_cmd->add_option("--top", a.top, "Findings to report")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--per-file", a.per_file, "Apply --top within each file");
  scan_cmd->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  scan_cmd->add_option("paths", a.inputs, "Files or directories to scan")->required();

  auto *merge_cmd = app.add_subcommand("merge", "Sum several models");
  merge_cmd->add_option("--out", a.out, "Model file to write")->required();
  merge_cmd->add_option("models", a.inputs, "Input models")->required();

  auto *inspect = app.add_subcommand("inspect", "List model entries");
  inspect->add_option("--model", a.model, "Model file")->required();
  inspect->add_option("--namespace", a.ns, "B, C or E")->check(CLI::IsMember({"B", "C", "E"}));
  inspect->add_option("--limit", a.limit, "Maximum entries to print");

  auto *explain = app.add_subcommand("explain", "Show how one expression is scored");
  explain->add_option("--model", a.model, "Model file")->required();
  explain->add_option("--expr", a.expr, "Predicate text")->required();
  explain->add_option("--threshold", a.threshold, "Flag scores above this value");

  auto *bench = app.add_subcommand("bench", "Compare the block table with a syntax trie");
  bench->add_option("--corpus", a.corpus, "Corpus root (repeatable)")->required()->expected(1, -1);
  bench->add_option("--out", a.out, "JSON report to write")->required();
  bench->add_option("--jobs", a.jobs, "Worker threads for ingestion")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App *sub = nullptr;
    for (auto *s : app.get_subcommands()) sub = s;
    err << (sub ? sub->help() : app.help());
    return kExitUsage;
  }

  try {
    if (train->parsed()) return cmd_train(a, out, err);
    if (scan_cmd->parsed()) return cmd_scan(a, out, err, env);
    if (merge_cmd->parsed()) return cmd_merge(a, out);
    if (inspect->parsed()) return cmd_inspect(a, out);
    if (explain->parsed()) return cmd_explain(a, out);
    if (bench->parsed()) return cmd_bench(a, out, err);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mpcc
