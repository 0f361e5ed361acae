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

#include "mpcc/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace mpcc {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)> &work) {
  unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto &t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<ParsedSite> parse_sites(Extraction &extraction) {
  std::vector<ParsedSite> out;
  out.reserve(extraction.sites.size());
  for (auto &site : extraction.sites) {
    try {
      Expr e = parse_expr(site.raw_text);
      out.push_back({std::move(site), std::move(e)});
    } catch (const ParseError &err) {
      extraction.report.sites_extracted--;
      extraction.report.sites_skipped++;
      extraction.report.skip_diagnostics.push_back(
          {site.file_path, site.line, std::string("unsupported predicate: ") + err.what()});
    }
  }
  extraction.sites.clear();
  return out;
}

CorpusScan ingest_corpus(const std::vector<std::filesystem::path> &roots,
                         const IngestOptions &options) {
  CorpusScan scan;
  IngestReport walk_report;
  scan.files = walk_sources(roots, options.extensions, &walk_report);

  struct PerFile {
    std::vector<ParsedSite> sites;
    IngestReport report;
  };
  std::vector<PerFile> results(scan.files.size());
  parallel_for(scan.files.size(), options.jobs, [&](std::size_t i) {
    Extraction ex = extract_file(scan.files[i]);
    results[i].sites = parse_sites(ex);
    results[i].report = std::move(ex.report);
  });

  scan.report = std::move(walk_report);
  for (auto &r : results) {
    scan.report.absorb(r.report);
    for (auto &s : r.sites) scan.sites.push_back(std::move(s));
  }
  return scan;
}

}  // namespace mpcc
