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

#ifndef MPCC_SOURCE_INGEST_HPP
#define MPCC_SOURCE_INGEST_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpcc {

enum class Construct { If, While, DoWhile, ForCondition, Ternary, SwitchGuard };

std::string_view to_string(Construct c);

/// One control-structure predicate. `line` and `column` are 1-based (column
/// in bytes) and point at the opening parenthesis of the construct; for a
/// ternary they point at the first character of the condition.
struct ConditionSite {
  std::filesystem::path file_path;
  std::size_t line = 0;
  std::size_t column = 0;
  Construct construct = Construct::If;
  std::string raw_text;
  std::size_t offset = 0;  // byte offset of the located character

  bool operator==(const ConditionSite &) const = default;
};

struct Diagnostic {
  std::filesystem::path file;
  std::size_t line = 0;
  std::string reason;

  /// "file:line: reason"
  std::string format() const;
};

struct IngestReport {
  std::size_t files_seen = 0;
  std::size_t files_parsed = 0;
  std::size_t sites_extracted = 0;
  std::size_t sites_skipped = 0;
  std::vector<Diagnostic> skip_diagnostics;

  void absorb(const IngestReport &other);
};

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The default suffix set: .c .h .cc .cpp .hpp .cxx
const std::vector<std::string> &default_extensions();

/// Regular files under `roots` whose suffix is in `extensions`, sorted by
/// full path. Symbolic links are not followed. A root that is itself a
/// matching file is included. Throws IngestError for an unreadable root;
/// unreadable entries below it are recorded in `report` and skipped.
std::vector<std::filesystem::path> walk_sources(
    const std::vector<std::filesystem::path> &roots,
    const std::vector<std::string> &extensions = default_extensions(),
    IngestReport *report = nullptr);

struct Extraction {
  std::vector<ConditionSite> sites;
  IngestReport report;
};

/// Comments, string and character literals and preprocessor lines replaced
/// by spaces (newlines and literal quotes kept), same length as `text`.
std::string mask_source(std::string_view text);

bool is_valid_utf8(std::string_view text);

/// Finds every if / while / do-while / for-condition / ternary / switch
/// predicate in one translation unit. Pure: depends only on `text`.
/// `file` is only copied into sites and diagnostics.
Extraction extract_conditions(std::string_view text,
                              const std::filesystem::path &file = {});

/// Reads and extracts one file. Unreadable or non-UTF-8 files produce a
/// diagnostic and no sites. Never throws for per-file problems.
Extraction extract_file(const std::filesystem::path &file);

}  // namespace mpcc

#endif  // MPCC_SOURCE_INGEST_HPP
