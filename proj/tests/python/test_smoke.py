# Copyright 2026 The mpcc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from pathlib import Path

import pytest

import mpcc

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="module")
def idioms():
    return mpcc.train([str(FIXTURES / "idioms")])


def test_expressions():
    assert mpcc.format_expr("(a) + ((b))") == "a + b"
    assert mpcc.normalize("x < max") == mpcc.normalize("max > x")
    assert mpcc.signatures("min < x && x < max") == [
        "B:V0<V1",
        "C:(V0<V1)&&(V1<V2)",
        "E:(V0<V1)&&(V1<V2)",
    ]
    with pytest.raises(ValueError):
        mpcc.format_expr("a +")


def test_extract():
    sites = mpcc.extract("void f() {\n  while (n > 0) { n--; }\n}\n", "w.c")
    assert len(sites) == 1
    assert sites[0]["raw"] == "n > 0"
    assert sites[0]["line"] == 2


def test_model_round_trip(idioms, tmp_path):
    assert idioms.total_sites > 0
    assert idioms.count("E:(V0<V1)&&(V1<V2)") >= 100
    path = tmp_path / "m.model"
    idioms.save(str(path))
    back = mpcc.Model.load(str(path))
    assert back == idioms
    assert back.serialize() == path.read_text()
    assert mpcc.Model.deserialize(idioms.serialize()) == idioms
    with pytest.raises(ValueError):
        mpcc.Model.deserialize("mpcc-model 1 1 0000000000000000\nB:V0\t0\n")


def test_merge_and_rules(idioms):
    shards = [mpcc.train([str(p)]) for p in sorted((FIXTURES / "idioms").iterdir())]
    merged = mpcc.merge(shards)
    assert merged.counts == idioms.counts
    assert merged.total_sites == idioms.total_sites
    rules = "suppress B:*\nnominal E:(NULL==V0)==NULL 1000\n"
    once = mpcc.apply_rules(idioms, rules)
    assert mpcc.apply_rules(once, rules) == once
    assert once.count("E:(NULL==V0)==NULL") == 1000
    assert all(not k.startswith("B:") for k in once.counts)


def test_score_and_scan(idioms):
    hit = mpcc.score("NULL == x == NULL", idioms)
    assert hit["score_text"] == "2000"
    assert hit["flagged"]
    assert set(hit["tags"]) == {"pointer-check", "potential-bug"}
    assert not mpcc.score("min < x && x < max", idioms)["flagged"]

    findings = mpcc.scan([str(FIXTURES / "target")], idioms)
    assert [f["line"] for f in findings] == [4]
    assert list(findings[0]) == [
        "file", "line", "col", "construct", "raw", "score", "matched", "unseen", "tags", "rank",
    ]
    assert mpcc.scan([str(FIXTURES / "clean")], idioms) == []


def test_trie_and_bench(tmp_path):
    t = mpcc.SyntaxTrie()
    for _ in range(3):
        t.insert("a<b")
    assert t.lookup("a<b") == 3
    assert t.lookup("a<c") == 0
    report = mpcc.bench([str(FIXTURES / "idioms")], str(tmp_path / "bench.json"))
    assert report["corpus"]["predicates"] > 0
    assert (tmp_path / "bench.json").exists()
