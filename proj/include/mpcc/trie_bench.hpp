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

#ifndef MPCC_TRIE_BENCH_HPP
#define MPCC_TRIE_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpcc {

/// Character-level trie over raw predicate text. Children are kept as a
/// sorted sibling list, so each node is a small fixed-size record.
class SyntaxTrie {
 public:
  SyntaxTrie();

  void insert(std::string_view text, std::uint64_t n = 1);
  std::uint64_t lookup(std::string_view text) const;

  /// Distinct non-empty prefixes stored (the root is not counted).
  std::size_t node_count() const { return nodes_.size() - 1; }
  std::uint64_t total() const { return total_; }

  std::string serialize() const;
  static SyntaxTrie deserialize(std::string_view bytes);

  static constexpr std::size_t kNodeBytes = 16;

  bool operator==(const SyntaxTrie &other) const { return serialize() == other.serialize(); }

 private:
  struct Node {
    std::uint32_t first_child = 0;  // 0 means none; the root is never a child
    std::uint32_t next_sibling = 0;
    std::uint32_t count = 0;
    char ch = 0;
  };

  std::uint32_t find_child(std::uint32_t parent, char ch) const;
  std::uint32_t child_or_insert(std::uint32_t parent, char ch);

  std::vector<Node> nodes_;
  std::uint64_t total_ = 0;
};

class TrieFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BackendMeasure {
  std::string name;
  double build_ms = 0;
  std::uint64_t store_bytes = 0;
  double load_ms = 0;
  double lookup_ns_median = 0;
  std::uint64_t halts = 0;
  std::uint64_t entries = 0;  // trie nodes, or block-table keys
  std::uint64_t est_memory_bytes = 0;
};

struct CorpusDescriptor {
  std::uint64_t files = 0;
  std::uint64_t predicates = 0;
  std::uint64_t distinct_signatures = 0;

  bool operator==(const CorpusDescriptor &) const = default;
};

struct BenchReport {
  CorpusDescriptor corpus;
  BackendMeasure block_table;
  BackendMeasure trie;
  std::vector<std::string> warnings;

  std::string to_json() const;
  std::string table() const;
};

struct BenchOptions {
  unsigned jobs = 1;
  std::size_t lookup_samples = 2001;  // queries timed, one batch each
  std::size_t lookup_batch = 64;      // repetitions per timed batch
};

/// Builds both backends from the predicates under `roots` and measures them.
/// The report is written as JSON to `out_path` unless it is empty.
BenchReport run_bench(const std::vector<std::filesystem::path> &roots,
                      const std::filesystem::path &out_path, const BenchOptions &options = {});

struct SyntheticCorpusSpec {
  std::size_t predicates = 100000;
  std::size_t templates = 50;
  std::size_t files = 100;
  std::uint64_t seed = 20260101;
};

/// Writes a C corpus of `predicates` if-conditions drawn from `templates`
/// fixed shapes with random identifiers. Returns the files written.
std::vector<std::filesystem::path> write_synthetic_corpus(const std::filesystem::path &dir,
                                                          const SyntheticCorpusSpec &spec = {});

/// The template shapes used by write_synthetic_corpus, with `$a`, `$b`, ...
/// as identifier slots.
const std::vector<std::string> &synthetic_templates();

}  // namespace mpcc

#endif  // MPCC_TRIE_BENCH_HPP
