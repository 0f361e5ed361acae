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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "json.hpp"
#include "mpcc/anomaly_scorer.hpp"
#include "mpcc/pattern_model.hpp"
#include "mpcc/source_ingest.hpp"
#include "mpcc/trie_bench.hpp"

namespace py = pybind11;
using namespace mpcc;

namespace {

py::object json_to_py(const std::string &text) {
  return py::module_::import("json").attr("loads")(text);
}

py::dict site_dict(const ConditionSite &s) {
  py::dict d;
  d["file"] = s.file_path.generic_string();
  d["line"] = s.line;
  d["col"] = s.column;
  d["construct"] = std::string(to_string(s.construct));
  d["raw"] = s.raw_text;
  return d;
}

py::dict score_dict(const Expr &expr, const PatternModel &model, const ScorerConfig &cfg) {
  ScoreResult r = score_expr(expr, model, cfg);
  py::dict d;
  d["score"] = r.score.value();
  d["score_text"] = r.score.decimal();
  d["complexity"] = r.complexity;
  d["frequency"] = r.frequency;
  d["flagged"] = r.score.exceeds(cfg.threshold);
  py::list tags;
  for (Tag t : tag_finding(expr)) tags.append(std::string(to_string(t)));
  d["tags"] = tags;
  return d;
}

}  // namespace

PYBIND11_MODULE(_mpcc, m) {
  m.doc() = "Bindings for the mpcc predicate anomaly checker";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<IngestError>(m, "IngestError", PyExc_OSError);

  m.def("format_expr", [](const std::string &text) { return print_expr(parse_expr(text)); },
        py::arg("text"), "Parse a predicate and print it back with minimal parentheses.");
  m.def(
      "signatures",
      [](const std::string &text) {
        std::vector<std::string> keys;
        for (const auto &sig : signature_set(parse_expr(text))) keys.push_back(sig.key());
        return keys;
      },
      py::arg("text"));
  m.def("normalize", [](const std::string &text) { return normalize(parse_expr(text)); },
        py::arg("text"));
  m.def(
      "extract",
      [](const std::string &source, const std::string &file) {
        py::list out;
        for (const auto &s : extract_conditions(source, file).sites) out.append(site_dict(s));
        return out;
      },
      py::arg("source"), py::arg("file") = "<memory>");

  py::class_<PatternModel>(m, "Model")
      .def(py::init<>())
      .def_readonly("total_sites", &PatternModel::total_sites)
      .def_readonly("rules_applied", &PatternModel::rules_applied)
      .def_property_readonly("counts", [](const PatternModel &pm) { return pm.counts; })
      .def_property_readonly("fingerprint", [](const PatternModel &pm) { return to_hex(pm.corpus_fingerprint); })
      .def("count", [](const PatternModel &pm, const std::string &key) { return pm.count(key); })
      .def("serialize", [](const PatternModel &pm) { return serialize(pm); })
      .def("save", [](const PatternModel &pm, const std::filesystem::path &p) { save(pm, p); })
      .def_static("load", [](const std::filesystem::path &p) { return load(p); })
      .def_static("deserialize", [](const std::string &text) { return deserialize(text); })
      .def("__len__", [](const PatternModel &pm) { return pm.counts.size(); })
      .def("__eq__", [](const PatternModel &a, const PatternModel &b) { return a == b; });

  m.def(
      "train",
      [](const std::vector<std::filesystem::path> &roots, unsigned jobs, const std::string &rules) {
        TrainOptions opts;
        opts.ingest.jobs = jobs;
        if (!rules.empty()) opts.rules = parse_rules(rules);
        py::gil_scoped_release release;
        return train(roots, opts).model;
      },
      py::arg("roots"), py::arg("jobs") = 1, py::arg("rules") = "");
  m.def("merge", [](const std::vector<PatternModel> &models) { return merge(models); }, py::arg("models"));
  m.def(
      "apply_rules",
      [](const PatternModel &model, const std::string &rules) { return apply_rules(model, parse_rules(rules)); },
      py::arg("model"), py::arg("rules"));

  m.def(
      "score",
      [](const std::string &text, const PatternModel &model, double threshold) {
        ScorerConfig cfg;
        cfg.threshold = threshold;
        return score_dict(parse_expr(text), model, cfg);
      },
      py::arg("text"), py::arg("model"), py::arg("threshold") = 1000.0);
  m.def(
      "scan",
      [](const std::vector<std::filesystem::path> &roots, const PatternModel &model, double threshold,
         std::size_t top, bool per_file) {
        ScorerConfig cfg;
        cfg.threshold = threshold;
        cfg.top_n = top;
        cfg.per_file = per_file;
        ScanReport report;
        {
          py::gil_scoped_release release;
          report = scan(roots, model, cfg);
        }
        py::list out;
        for (const auto &f : report.findings) out.append(json_to_py(format_json(f)));
        return out;
      },
      py::arg("roots"), py::arg("model"), py::arg("threshold") = 1000.0, py::arg("top") = 20,
      py::arg("per_file") = false);

  m.def(
      "bench",
      [](const std::vector<std::filesystem::path> &roots, const std::filesystem::path &out) {
        std::string text;
        {
          py::gil_scoped_release release;
          text = run_bench(roots, out).to_json();
        }
        return json_to_py(text);
      },
      py::arg("roots"), py::arg("out") = std::filesystem::path());

  py::class_<SyntaxTrie>(m, "SyntaxTrie")
      .def(py::init<>())
      .def("insert", &SyntaxTrie::insert, py::arg("text"), py::arg("n") = 1)
      .def("lookup", &SyntaxTrie::lookup, py::arg("text"))
      .def_property_readonly("node_count", &SyntaxTrie::node_count);
}
