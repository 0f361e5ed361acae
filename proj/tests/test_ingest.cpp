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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "mpcc/corpus.hpp"
#include "mpcc/source_ingest.hpp"
#include "support/tempdir.hpp"

using namespace mpcc;
using mpcc::testing::TempDir;

namespace {

std::vector<std::string> raw_texts(const Extraction &x) {
  std::vector<std::string> out;
  for (const auto &s : x.sites) out.push_back(s.raw_text);
  return out;
}

std::vector<std::string> names(const std::vector<std::filesystem::path> &files,
                               const std::filesystem::path &root) {
  std::vector<std::string> out;
  for (const auto &f : files) out.push_back(std::filesystem::relative(f, root).generic_string());
  return out;
}

// Byte offset of 1-based (line, column).
std::size_t offset_of(const std::string &text, std::size_t line, std::size_t column) {
  std::size_t pos = 0;
  for (std::size_t l = 1; l < line; ++l) pos = text.find('\n', pos) + 1;
  return pos + column - 1;
}

}  // namespace

TEST_CASE("walk_sources filters, sorts and recurses") {
  TempDir empty;
  CHECK(walk_sources({empty.path()}).empty());

  TempDir t;
  t.write("b.txt", "x");
  t.write("sub/c.hpp", "x");
  t.write("a.c", "x");
  CHECK(names(walk_sources({t.path()}), t.path()) == std::vector<std::string>{"a.c", "sub/c.hpp"});

  TempDir three;
  three.write("one.c", "x");
  three.write("two.h", "x");
  three.write("deep/three.c", "x");
  CHECK(names(walk_sources({three.path()}, {".c"}), three.path()) ==
        std::vector<std::string>{"deep/three.c", "one.c"});
}

TEST_CASE("walk_sources accepts file roots and rejects missing roots") {
  TempDir t;
  auto f = t.write("only.cpp", "x");
  CHECK(walk_sources({f}) == std::vector<std::filesystem::path>{f});
  CHECK_THROWS_AS(walk_sources({t.path() / "missing"}), IngestError);
}

TEST_CASE("walk_sources does not follow symbolic links") {
  TempDir t, outside;
  outside.write("hidden.c", "x");
  t.write("real.c", "x");
  std::error_code ec;
  std::filesystem::create_directory_symlink(outside.path(), t.path() / "link", ec);
  std::filesystem::create_symlink(outside.path() / "hidden.c", t.path() / "alias.c", ec);
  if (ec) return;  // filesystem without symlinks
  CHECK(names(walk_sources({t.path()}), t.path()) == std::vector<std::string>{"real.c"});
}

TEST_CASE("documented extraction examples") {
  auto a = extract_conditions("if (a && b) { }");
  REQUIRE(a.sites.size() == 1);
  CHECK(a.sites[0].construct == Construct::If);
  CHECK(a.sites[0].raw_text == "a && b");

  auto b = extract_conditions("if (NULL == x == NULL) { throw 1; }");
  CHECK(raw_texts(b) == std::vector<std::string>{"NULL == x == NULL"});

  auto c = extract_conditions("for (i = 0; i < n; i++) {}");
  REQUIRE(c.sites.size() == 1);
  CHECK(c.sites[0].construct == Construct::ForCondition);
  CHECK(c.sites[0].raw_text == "i < n");
}

TEST_CASE("every construct is found") {
  const std::string src =
      "int f(int x, int *p) {\n"
      "  while (x > 0) { x--; }\n"
      "  do { x++; } while (x < 10);\n"
      "  switch (x & 3) { case 0: break; }\n"
      "  int y = p != 0 ? *p : 0;\n"
      "  if (x) { if (y == 2) return 1; } else if (!p) return 2;\n"
      "  for (;;) {}\n"
      "  for (int v : vec) {}\n"
      "  return x;\n"
      "}\n";
  auto x = extract_conditions(src, "f.c");
  std::vector<std::pair<Construct, std::string>> got;
  for (const auto &s : x.sites) got.emplace_back(s.construct, s.raw_text);
  std::vector<std::pair<Construct, std::string>> want = {
      {Construct::While, "x > 0"},       {Construct::DoWhile, "x < 10"}, {Construct::SwitchGuard, "x & 3"},
      {Construct::Ternary, "p != 0"},    {Construct::If, "x"},           {Construct::If, "y == 2"},
      {Construct::If, "!p"},
  };
  CHECK(got == want);
  for (const auto &s : x.sites) CHECK(s.file_path == "f.c");
}

TEST_CASE("construct names") {
  CHECK(to_string(Construct::If) == "if");
  CHECK(to_string(Construct::While) == "while");
  CHECK(to_string(Construct::DoWhile) == "do_while");
  CHECK(to_string(Construct::ForCondition) == "for_condition");
  CHECK(to_string(Construct::Ternary) == "ternary");
  CHECK(to_string(Construct::SwitchGuard) == "switch_guard");
}

TEST_CASE("init statements and if constexpr") {
  auto x = extract_conditions("if (int r = g(); r < 0) {}\nif constexpr (N > 1) {}\nswitch (auto k = h(); k) {}");
  CHECK(raw_texts(x) == std::vector<std::string>{"r < 0", "N > 1", "k"});
}

TEST_CASE("comments, strings and preprocessor lines are masked") {
  const std::string src =
      "// if (commented) {}\n"
      "/* while (block) {} */\n"
      "#define CHECK(x) if (x) {}\n"
      "#if defined(FOO) && BAR\n"
      "#endif\n"
      "const char *s = \"if (in_string) {}\";\n"
      "char c = '(';\n"
      "void g() { if (real) {} }\n";
  CHECK(raw_texts(extract_conditions(src)) == std::vector<std::string>{"real"});

  std::string masked = mask_source(src);
  CHECK(masked.size() == src.size());
  CHECK(masked.find("commented") == std::string::npos);
  CHECK(masked.find("in_string") == std::string::npos);
  CHECK(std::count(masked.begin(), masked.end(), '\n') == std::count(src.begin(), src.end(), '\n'));
}

TEST_CASE("raw strings and line continuations are masked") {
  const std::string src =
      "auto r = R\"x(if (raw) {} )\" )x\";\n"
      "#define LONG \\\n  if (cont) {}\n"
      "void g() { while (ok) {} }\n";
  CHECK(raw_texts(extract_conditions(src)) == std::vector<std::string>{"ok"});
}

TEST_CASE("locations point at the opening parenthesis") {
  const std::string src = "void f() {\n  if (a == b) {}\n\twhile  ( c ) {}\n}\n";
  auto x = extract_conditions(src);
  REQUIRE(x.sites.size() == 2);
  for (const auto &s : x.sites) {
    std::size_t at = offset_of(src, s.line, s.column);
    CHECK(src[at] == '(');
    CHECK(src.find(s.raw_text, at) == at + 1 + (s.raw_text == "c" ? 1 : 0));
  }
  CHECK(x.sites[0].line == 2);
  CHECK(x.sites[0].column == 6);
  CHECK(x.sites[1].line == 3);
  CHECK(x.sites[1].raw_text == "c");
}

TEST_CASE("unbalanced parentheses skip the rest of the scope") {
  const std::string src =
      "void broken() {\n  if (a && (b) {\n  }\n  if (lost) {}\n}\n"
      "void fine() { if (kept) {} }\n";
  auto x = extract_conditions(src, "u.c");
  CHECK(raw_texts(x) == std::vector<std::string>{"kept"});
  REQUIRE_FALSE(x.report.skip_diagnostics.empty());
  CHECK(x.report.skip_diagnostics[0].format().rfind("u.c:2: ", 0) == 0);
}

TEST_CASE("masking soundness over generated files") {
  std::mt19937_64 rng(99);
  const char *decoys[] = {"if (decoy) {}", "while (decoy)", "for (;decoy;)", "switch (decoy)", "x ? y : z"};
  for (int round = 0; round < 300; ++round) {
    std::string src = "void f(void) {\n";
    int real = 0;
    for (int k = 0; k < 20; ++k) {
      const char *d = decoys[rng() % 5];
      switch (rng() % 5) {
        case 0: src += std::string("  // ") + d + "\n"; break;
        case 1: src += std::string("  /* ") + d + " */\n"; break;
        case 2: src += std::string("  s = \"") + d + "\";\n"; break;
        case 3: src += std::string("#define M") + std::to_string(k) + " " + d + "\n"; break;
        default:
          src += "  if (v" + std::to_string(k) + " > 0) { g(); }\n";
          ++real;
      }
    }
    src += "}\n";
    auto x = extract_conditions(src);
    REQUIRE(x.sites.size() == static_cast<std::size_t>(real));
    for (const auto &s : x.sites) CHECK(s.raw_text.find("decoy") == std::string::npos);
    CHECK(raw_texts(extract_conditions(src)) == raw_texts(x));  // pure
  }
}

TEST_CASE("invalid UTF-8 files are skipped with a diagnostic") {
  CHECK(is_valid_utf8("plain ascii"));
  CHECK(is_valid_utf8("caf\xc3\xa9"));
  CHECK_FALSE(is_valid_utf8("\xff\xfe"));
  CHECK_FALSE(is_valid_utf8("\xc3"));
  TempDir t;
  auto f = t.write("bad.c", "if (a) {}\n\xff\n");
  auto x = extract_file(f);
  CHECK(x.sites.empty());
  REQUIRE(x.report.skip_diagnostics.size() == 1);
  CHECK(x.report.skip_diagnostics[0].format().find("bad.c:") != std::string::npos);
}

TEST_CASE("ingest_corpus is independent of the job count") {
  TempDir t;
  for (int i = 0; i < 12; ++i)
    t.write("src/f" + std::to_string(i) + ".c",
            "void f" + std::to_string(i) + "() {\n  if (a" + std::to_string(i) + " < b) {}\n  if (x ? 1 : 0) {}\n"
            "  while (p != NULL && p->n > " + std::to_string(i) + ") {}\n}\n");
  IngestOptions one, many;
  many.jobs = 4;
  auto a = ingest_corpus({t.path()}, one);
  auto b = ingest_corpus({t.path()}, many);
  REQUIRE(a.sites.size() == b.sites.size());
  for (std::size_t i = 0; i < a.sites.size(); ++i) {
    CHECK(a.sites[i].site.raw_text == b.sites[i].site.raw_text);
    CHECK(a.sites[i].site.file_path == b.sites[i].site.file_path);
    CHECK(a.sites[i].expr == b.sites[i].expr);
  }
  CHECK(a.report.files_seen == 12);
  CHECK(a.report.files_parsed == 12);
  // The ternary inside each `if` cannot be parsed; its ternary condition can.
  CHECK(a.sites.size() == 36);
  CHECK(a.report.sites_skipped == 12);
  CHECK(a.report.sites_extracted == 36);
  for (const auto &d : a.report.skip_diagnostics) CHECK(d.format().find("unsupported predicate") != std::string::npos);
}
