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

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpcc/cli.hpp"
#include "support/tempdir.hpp"

using mpcc::testing::read_file;
using mpcc::testing::TempDir;

namespace {

const std::string kFixtures = MPCC_FIXTURES;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = mpcc::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string trained_model(const TempDir &t) {
  std::string model = (t.path() / "idioms.model").string();
  Run r = run({"train", "--corpus", kFixtures + "/idioms", "--out", model});
  REQUIRE(r.code == 0);
  return model;
}

}  // namespace

TEST_CASE("scan exit codes") {
  TempDir t;
  std::string model = trained_model(t);
  Run clean = run({"scan", "--model", model, kFixtures + "/clean"});
  CHECK(clean.code == 0);
  CHECK(clean.out.empty());

  Run dirty = run({"scan", "--model", model, kFixtures + "/target"});
  CHECK(dirty.code == 1);
  auto lines = lines_of(dirty.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].find("anomaly.c:4:6 score=2000 tags=pointer-check,potential-bug | NULL == x == NULL") !=
        std::string::npos);
  CHECK(dirty.err.find("1 finding(s)") != std::string::npos);

  Run missing = run({"scan", "--model", (t.path() / "nope.model").string(), kFixtures + "/target"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") != std::string::npos);
  CHECK(run({"scan", "--model", model, "--bogus", kFixtures}).code == 2);
  CHECK(run({"scan", "--model", model, "--format", "xml", kFixtures}).code == 2);
  CHECK(run({"scan", "--model", model, "--top", "0", kFixtures}).code == 2);
  CHECK(run({"scan", "--model", model, "--threshold", "-1", kFixtures}).code == 2);
}

TEST_CASE("usage errors") {
  Run r = run({"train", "--out", "x.model"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--corpus") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  Run help = run({"scan", "--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("--per-file") != std::string::npos);
}

TEST_CASE("json scan lines follow the schema") {
  TempDir t;
  std::string model = trained_model(t);
  Run a = run({"scan", "--model", model, "--format", "json", kFixtures + "/target"});
  Run b = run({"scan", "--model", model, "--format", "json", kFixtures + "/target"});
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  auto lines = lines_of(a.out);
  REQUIRE(lines.size() == 1);
  auto j = nlohmann::ordered_json::parse(lines[0]);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"file", "line", "col", "construct", "raw", "score", "matched",
                                         "unseen", "tags", "rank"});
  CHECK(j["score"] == 2000);
  CHECK(j["rank"] == 1);
  CHECK(j["line"] == 4);
}

TEST_CASE("explain shows the decision") {
  TempDir t;
  std::string model = trained_model(t);
  Run r = run({"explain", "--model", model, "--expr", "min < x && x < max"});
  CHECK(r.code == 0);
  CHECK(r.out.find("C:(V0<V1)&&(V1<V2)") != std::string::npos);
  CHECK(r.out.find("decision: not flagged") != std::string::npos);
  Run bad = run({"explain", "--model", model, "--expr", "NULL == x == NULL"});
  CHECK(bad.out.find("score: 2000") != std::string::npos);
  CHECK(bad.out.find("decision: flagged") != std::string::npos);
  CHECK(run({"explain", "--model", model, "--expr", "a +"}).code == 2);
}

TEST_CASE("inspect, merge and rules") {
  TempDir t;
  std::string model = trained_model(t);
  Run all = run({"inspect", "--model", model});
  CHECK(all.code == 0);
  Run e = run({"inspect", "--model", model, "--namespace", "E", "--limit", "3"});
  std::size_t entries = 0;
  for (const auto &line : lines_of(e.out)) {
    if (line.rfind("#", 0) == 0) continue;
    CHECK(line.rfind("E:", 0) == 0);
    ++entries;
  }
  CHECK(entries == 3);

  std::string a = (t.path() / "a.model").string(), b = (t.path() / "b.model").string();
  std::string merged = (t.path() / "merged.model").string();
  REQUIRE(run({"train", "--corpus", kFixtures + "/idioms/bounds.c", "--out", a}).code == 0);
  REQUIRE(run({"train", "--corpus", kFixtures + "/idioms/common.c", "--out", b}).code == 0);
  REQUIRE(run({"merge", "--out", merged, a, b}).code == 0);
  auto body = [](const std::string &text) { return text.substr(text.find('\n')); };
  CHECK(body(read_file(merged)) == body(read_file(model)));

  auto rules = t.write("r.rules", "nominal E:(NULL==V0)==NULL 1000\n");
  std::string ruled = (t.path() / "ruled.model").string();
  REQUIRE(run({"train", "--corpus", kFixtures + "/idioms", "--out", ruled, "--rules", rules.string()}).code == 0);
  CHECK(run({"scan", "--model", ruled, kFixtures + "/target"}).code == 0);
  auto bad_rules = t.write("bad.rules", "nominal E:V9 3\n");
  Run br = run({"train", "--corpus", kFixtures + "/idioms", "--out", ruled, "--rules", bad_rules.string()});
  CHECK(br.code == 2);
  CHECK(br.err.find("line 1") != std::string::npos);
}

TEST_CASE("train and bench write their outputs") {
  TempDir t;
  std::string m1 = (t.path() / "m1.model").string(), m2 = (t.path() / "m2.model").string();
  REQUIRE(run({"train", "--corpus", kFixtures + "/idioms", "--out", m1}).code == 0);
  REQUIRE(run({"train", "--corpus", kFixtures + "/idioms", "--out", m2, "--jobs", "3"}).code == 0);
  CHECK(read_file(m1) == read_file(m2));
  CHECK(run({"train", "--corpus", (t.path() / "missing").string(), "--out", m1}).code == 2);

  std::string report = (t.path() / "bench.json").string();
  Run b = run({"bench", "--corpus", kFixtures + "/idioms", "--out", report});
  CHECK(b.code == 0);
  CHECK(b.out.find("syntax_trie") != std::string::npos);
  auto j = nlohmann::json::parse(read_file(report));
  CHECK(j["corpus"]["predicates"] == 367);
}
