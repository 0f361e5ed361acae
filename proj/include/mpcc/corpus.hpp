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

#ifndef MPCC_CORPUS_HPP
#define MPCC_CORPUS_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "mpcc/expr.hpp"
#include "mpcc/source_ingest.hpp"

namespace mpcc {

struct ParsedSite {
  ConditionSite site;
  Expr expr;
};

struct CorpusScan {
  std::vector<std::filesystem::path> files;  // sorted
  std::vector<ParsedSite> sites;             // file order, then offset
  IngestReport report;
};

struct IngestOptions {
  std::vector<std::string> extensions = default_extensions();
  unsigned jobs = 1;
};

/// Runs `work(i)` for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)> &work);

/// Walks, extracts and parses every predicate under `roots`. Predicates the
/// parser rejects move from sites_extracted to sites_skipped with a
/// diagnostic. Output order is independent of `jobs`.
CorpusScan ingest_corpus(const std::vector<std::filesystem::path> &roots,
                         const IngestOptions &options = {});

/// Parses the sites of one extraction, moving parse failures into the report.
std::vector<ParsedSite> parse_sites(Extraction &extraction);

}  // namespace mpcc

#endif  // MPCC_CORPUS_HPP
