// Copyright 2026 The Procent Authors
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

#include "procent/corpus_io.hpp"
#include "procent/obligation.hpp"
#include "procent/oracle.hpp"
#include "procent/resolver.hpp"

namespace py = pybind11;

namespace {

using namespace procent;

Mode mode_of(bool prosody) { return prosody ? Mode::Prosodic : Mode::TextOnly; }

std::string resolve_jsonl(const std::string& text, bool prosody) {
  Document doc = io::parse_document_text(text);
  return io::emit_traces(resolve_document(doc, mode_of(prosody)),
                         io::TraceFormat::Json);
}

std::string oracle_jsonl(const std::string& text, bool prosody,
                         std::size_t max_search) {
  Document doc = io::parse_document_text(text);
  return io::emit_traces(
      oracle::oracle_resolve_document(doc, mode_of(prosody), max_search),
      io::TraceFormat::Json);
}

std::string check_jsonl(const std::string& text, bool prosody) {
  Document doc = io::parse_document_text(text);
  return io::emit_diagnostics(resolve_document(doc, mode_of(prosody)),
                              io::TraceFormat::Json);
}

std::string accents_jsonl(const std::string& text) {
  Document doc = io::parse_document_text(text);
  return obligation::emit_obligations(
      obligation::accent_obligation(doc).obligations, io::TraceFormat::Json);
}

std::string annotate_jsonl(const std::string& text) {
  Document doc = io::parse_document_text(text);
  return io::emit_document(obligation::accent_obligation(doc).annotated);
}

std::string eval_jsonl(const std::string& text) {
  Document doc = io::parse_document_text(text);
  return obligation::emit_eval(obligation::evaluate(doc),
                               io::TraceFormat::Json);
}

bool round_trip_jsonl(const std::string& text) {
  Document doc = io::parse_document_text(text);
  return obligation::round_trip(doc);
}

}  // namespace

PYBIND11_MODULE(_procent, m) {
  m.doc() = "centering-based pronoun resolution with pitch-accent semantics";

  py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MissingGoldError>(m, "MissingGoldError",
                                           PyExc_ValueError);
  py::register_exception<oracle::SearchSpaceTooLarge>(m, "SearchSpaceTooLarge",
                                                      PyExc_ValueError);

  m.def("resolve_jsonl", &resolve_jsonl, py::arg("text"),
        py::arg("prosody") = true,
        "Resolve a JSONL document; returns one JSON trace per line.");
  m.def("oracle_jsonl", &oracle_jsonl, py::arg("text"),
        py::arg("prosody") = true,
        py::arg("max_search") = oracle::kDefaultSearchBound,
        "Resolve by exhaustive search; same trace schema as resolve_jsonl.");
  m.def("check_jsonl", &check_jsonl, py::arg("text"),
        py::arg("prosody") = true,
        "Return the resolver's diagnostics, one JSON object per line.");
  m.def("accents_jsonl", &accents_jsonl, py::arg("text"),
        "Accent obligations for a gold-annotated document, one JSON object "
        "per pronoun.");
  m.def("annotate_jsonl", &annotate_jsonl, py::arg("text"),
        "The accent-annotated document for a gold-annotated input.");
  m.def("eval_jsonl", &eval_jsonl, py::arg("text"),
        "Resolution-vs-gold metrics as a single JSON object.");
  m.def("round_trip", &round_trip_jsonl, py::arg("text"),
        "True iff interpreting the annotated document recovers the gold "
        "resolutions.");

#ifdef VERSION_INFO
#define PROCENT_STR(x) #x
#define PROCENT_XSTR(x) PROCENT_STR(x)
  m.attr("__version__") = PROCENT_XSTR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
