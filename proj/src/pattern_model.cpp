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

#include "mpcc/pattern_model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

namespace mpcc {

std::uint64_t PatternModel::count(std::string_view key) const {
  auto it = counts.find(std::string(key));
  return it == counts.end() ? 0 : it->second;
}

void PatternModel::add(const std::string &key, std::uint64_t n) {
  if (n == 0) return;
  counts[key] += n;
}

void PatternModel::add_site(const Expr &expr) {
  for (const auto &sig : signature_occurrences(decompose(expr))) add(sig.key());
  ++total_sites;
}

std::string to_hex(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[value & 0xF];
    value >>= 4;
  }
  return out;
}

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = kFnvOffset) {
  for (unsigned char c : data) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::string_view trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_u64(std::string_view s, std::uint64_t &out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

std::uint64_t fingerprint_files(const std::vector<std::filesystem::path> &sorted_files) {
  std::uint64_t h = kFnvOffset;
  for (const auto &f : sorted_files) {
    h = fnv1a(f.generic_string(), h);
    h = fnv1a("\n", h);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Rules

std::string Rule::descriptor() const {
  switch (kind) {
    case Kind::Suppress: return "suppress " + pattern;
    case Kind::Rewrite: return "rewrite " + pattern + " -> " + target;
    case Kind::Nominal: return "nominal " + pattern + " " + std::to_string(floor);
  }
  return {};
}

bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0;
  std::size_t star = std::string_view::npos, resume = 0;
  while (t < text.size()) {
    if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      resume = t;
      continue;
    }
    if (p < pattern.size()) {
      bool escaped = pattern[p] == '\\' && p + 1 < pattern.size();
      char want = escaped ? pattern[p + 1] : pattern[p];
      if ((!escaped && want == '?') || want == text[t]) {
        p += escaped ? 2 : 1;
        ++t;
        continue;
      }
    }
    if (star == std::string_view::npos) return false;
    p = star + 1;
    t = ++resume;
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

bool is_canonical_key(std::string_view key) {
  auto sig = parse_signature_key(key);
  if (!sig) return false;
  try {
    Expr e = parse_expr(sig->text, ParseMode::Canonical);
    if (sig->ns == Namespace::Basic && split_basic_blocks(e).blocks.size() != 1) return false;
    if (sig->ns == Namespace::Complex && split_basic_blocks(e).blocks.size() < 2) return false;
    return normalize(e) == sig->text;
  } catch (const ParseError &) {
    return false;
  }
}

namespace {

void check_idempotent(const std::vector<Rule> &rules) {
  // A rewrite source that some rule can repopulate, or a rewrite target
  // erased by an earlier suppress, would make a second application move or
  // drop counts again.
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule &r = rules[i];
    if (r.kind != Rule::Kind::Rewrite) continue;
    if (r.pattern == r.target) throw ModelError("rewrite source equals its target", r.line);
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Rule &o = rules[j];
      if ((o.kind == Rule::Kind::Nominal && o.pattern == r.pattern) ||
          (o.kind == Rule::Kind::Rewrite && j != i && o.target == r.pattern))
        throw ModelError("rule on line " + std::to_string(o.line) +
                             " repopulates the source of this rewrite",
                         r.line);
      if (o.kind == Rule::Kind::Suppress && j < i && glob_match(o.pattern, r.target))
        throw ModelError("rewrite target is erased by the suppress on line " +
                             std::to_string(o.line),
                         r.line);
    }
  }
}

}  // namespace

RuleSet parse_rules(std::string_view text) {
  RuleSet set;
  auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::size_t lineno = n + 1;
    std::string_view line = trim(lines[n]);
    if (line.empty() || line.front() == '#') continue;
    std::size_t sp = line.find(' ');
    std::string_view verb = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp + 1));
    Rule rule;
    rule.line = lineno;
    if (verb == "suppress") {
      if (rest.empty()) throw ModelError("suppress needs a glob", lineno);
      rule.kind = Rule::Kind::Suppress;
      rule.pattern = std::string(rest);
    } else if (verb == "rewrite") {
      std::size_t arrow = rest.find(" -> ");
      if (arrow == std::string_view::npos)
        throw ModelError("expected 'rewrite <key> -> <key>'", lineno);
      rule.kind = Rule::Kind::Rewrite;
      rule.pattern = std::string(trim(rest.substr(0, arrow)));
      rule.target = std::string(trim(rest.substr(arrow + 4)));
      if (!parse_signature_key(rule.pattern))
        throw ModelError("malformed signature key '" + rule.pattern + "'", lineno);
      if (!is_canonical_key(rule.target))
        throw ModelError("rewrite target '" + rule.target + "' is not in canonical form", lineno);
    } else if (verb == "nominal") {
      std::size_t last = rest.find_last_of(" \t");
      if (last == std::string_view::npos)
        throw ModelError("expected 'nominal <key> <floor>'", lineno);
      rule.kind = Rule::Kind::Nominal;
      rule.pattern = std::string(trim(rest.substr(0, last)));
      if (!parse_u64(rest.substr(last + 1), rule.floor) || rule.floor == 0)
        throw ModelError("nominal floor must be a positive integer", lineno);
      if (!is_canonical_key(rule.pattern))
        throw ModelError("nominal key '" + rule.pattern + "' is not in canonical form", lineno);
    } else {
      throw ModelError("unknown rule '" + std::string(verb) + "'", lineno);
    }
    set.rules.push_back(std::move(rule));
  }
  check_idempotent(set.rules);
  return set;
}

RuleSet load_rules(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot read rule file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_rules(text);
}

PatternModel apply_rules(PatternModel model, const RuleSet &rules) {
  for (const Rule &r : rules.rules) {
    switch (r.kind) {
      case Rule::Kind::Suppress:
        for (auto it = model.counts.begin(); it != model.counts.end();) {
          if (glob_match(r.pattern, it->first))
            it = model.counts.erase(it);
          else
            ++it;
        }
        break;
      case Rule::Kind::Rewrite: {
        auto it = model.counts.find(r.pattern);
        if (it == model.counts.end()) break;
        std::uint64_t moved = it->second;
        model.counts.erase(it);
        model.counts[r.target] += moved;
        break;
      }
      case Rule::Kind::Nominal: {
        auto &slot = model.counts[r.pattern];
        slot = std::max(slot, r.floor);
        break;
      }
    }
    std::string d = r.descriptor();
    if (std::find(model.rules_applied.begin(), model.rules_applied.end(), d) ==
        model.rules_applied.end())
      model.rules_applied.push_back(std::move(d));
  }
  return model;
}

// ---------------------------------------------------------------------------
// Training

TrainResult train(const std::vector<std::filesystem::path> &roots, const TrainOptions &options) {
  TrainResult result;
  IngestReport walk_report;
  auto files = walk_sources(roots, options.ingest.extensions, &walk_report);

  // One private model per file; summed in path order.
  struct Shard {
    PatternModel model;
    IngestReport report;
  };
  std::vector<Shard> shards(files.size());
  parallel_for(files.size(), options.ingest.jobs, [&](std::size_t i) {
    Extraction ex = extract_file(files[i]);
    for (const auto &ps : parse_sites(ex)) shards[i].model.add_site(ps.expr);
    shards[i].report = std::move(ex.report);
  });

  result.report = std::move(walk_report);
  for (auto &s : shards) {
    result.report.absorb(s.report);
    for (const auto &[k, v] : s.model.counts) result.model.counts[k] += v;
    result.model.total_sites += s.model.total_sites;
  }
  if (result.model.total_sites == 0) throw ModelError("empty model");
  result.model.corpus_fingerprint = fingerprint_files(files);
  if (!options.rules.empty()) result.model = apply_rules(std::move(result.model), options.rules);
  return result;
}

PatternModel merge(const std::vector<PatternModel> &models) {
  if (models.empty()) throw ModelError("merge needs at least one model");
  PatternModel out;
  out.format_version = models.front().format_version;
  out.rules_applied = models.front().rules_applied;
  std::vector<std::string> prints;
  for (const auto &m : models) {
    if (m.format_version != out.format_version) throw ModelError("format_version mismatch in merge");
    if (m.rules_applied != out.rules_applied) throw ModelError("rules_applied mismatch in merge");
    for (const auto &[k, v] : m.counts) out.counts[k] += v;
    out.total_sites += m.total_sites;
    prints.push_back(to_hex(m.corpus_fingerprint));
  }
  std::sort(prints.begin(), prints.end());
  std::string joined;
  for (const auto &p : prints) joined += p;
  out.corpus_fingerprint = fnv1a(joined);
  return out;
}

// ---------------------------------------------------------------------------
// Persistence
//
//   mpcc-model <format_version> <total_sites> <fingerprint-hex>
//   rule <descriptor>            (zero or more, application order)
//   <ns>:<signature>\t<count>    (sorted bytewise by key)

std::string serialize(const PatternModel &model) {
  std::string out;
  out += "mpcc-model " + std::to_string(model.format_version) + " " +
         std::to_string(model.total_sites) + " " + to_hex(model.corpus_fingerprint) + "\n";
  for (const auto &r : model.rules_applied) out += "rule " + r + "\n";
  for (const auto &[key, count] : model.counts) {
    out += key;
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

PatternModel deserialize(std::string_view text) {
  if (text.empty()) throw ModelError("empty model file", 1);
  if (text.back() != '\n') {
    std::size_t lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
    throw ModelError("missing final newline", lines);
  }
  auto lines = split_lines(text);
  PatternModel m;

  std::string_view header = lines[0];
  std::vector<std::string_view> fields;
  for (std::size_t s = 0; s <= header.size();) {
    std::size_t e = header.find(' ', s);
    if (e == std::string_view::npos) e = header.size();
    fields.push_back(header.substr(s, e - s));
    s = e + 1;
  }
  std::uint64_t version = 0;
  if (fields.size() != 4 || fields[0] != "mpcc-model" || !parse_u64(fields[1], version))
    throw ModelError("malformed header", 1);
  if (version != static_cast<std::uint64_t>(kModelFormatVersion))
    throw ModelError("unknown format_version " + std::string(fields[1]), 1);
  m.format_version = static_cast<int>(version);
  if (!parse_u64(fields[2], m.total_sites)) throw ModelError("malformed total_sites", 1);
  if (fields[3].size() != 16 ||
      fields[3].find_first_not_of("0123456789abcdef") != std::string_view::npos)
    throw ModelError("malformed corpus fingerprint", 1);
  std::from_chars(fields[3].data(), fields[3].data() + 16, m.corpus_fingerprint, 16);

  bool in_entries = false;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    std::size_t lineno = n + 1;
    std::string_view line = lines[n];
    if (line.empty()) throw ModelError("empty line", lineno);
    if (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')
      throw ModelError("trailing whitespace", lineno);
    if (!in_entries && line.substr(0, 5) == "rule ") {
      m.rules_applied.emplace_back(line.substr(5));
      continue;
    }
    in_entries = true;
    std::size_t tab = line.rfind('\t');
    if (tab == std::string_view::npos) throw ModelError("expected '<key>\\t<count>'", lineno);
    std::string_view key = line.substr(0, tab);
    std::uint64_t count = 0;
    if (!parse_u64(line.substr(tab + 1), count) || count == 0)
      throw ModelError("count must be a positive integer", lineno);
    if (!parse_signature_key(key)) throw ModelError("malformed signature key", lineno);
    if (!m.counts.empty() && key <= std::string_view(m.counts.rbegin()->first)) {
      if (m.counts.count(std::string(key)))
        throw ModelError("duplicate signature '" + std::string(key) + "'", lineno);
      throw ModelError("entries are not sorted", lineno);
    }
    m.counts.emplace(std::string(key), count);
  }
  return m;
}

void save(const PatternModel &model, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ModelError("cannot write model file " + path.string());
  std::string text = serialize(model);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw ModelError("write failed for " + path.string());
}

PatternModel load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot read model file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize(text);
}

}  // namespace mpcc
