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

#ifndef PROCENT_CORPUS_IO_HPP_
#define PROCENT_CORPUS_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "procent/types.hpp"

namespace procent::io {

enum class ParseErrorCode { SchemaError, DanglingEntityRef, DuplicateId };

const std::string& to_string(ParseErrorCode code);

// Thrown on any malformed input. line is 1-based; 0 means the error is not
// tied to a single line.
class ParseError : public Error {
 public:
  ParseError(ParseErrorCode code, int line, const std::string& message);

  ParseErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ParseErrorCode code_;
  int line_;
};

// Parses a JSON Lines document: one object per line, kind "entity" or
// "utterance". Blank lines are skipped. All referential invariants are
// enforced here so downstream code can assume a well-formed Document.
Document parse_document(std::istream& in, const std::string& id_hint = "");
Document parse_document_text(const std::string& text,
                             const std::string& id_hint = "");

// Serializes a Document back to the JSON Lines schema. Lossless:
// parse(emit(doc)) == doc (the document id is not part of the wire format).
std::string emit_document(const Document& doc);

enum class TraceFormat { Json, Text };

// Renders utterance traces. Json: one record per utterance with fields
// prior_cf, cb, cf, transition, resolutions, key, diagnostics. Text: an
// aligned table. Both are byte-deterministic for identical inputs.
std::string emit_traces(const std::vector<UtteranceTrace>& traces,
                        TraceFormat format);

// Renders just the diagnostics of the given traces, one per line.
std::string emit_diagnostics(const std::vector<UtteranceTrace>& traces,
                             TraceFormat format);

}  // namespace procent::io

#endif  // PROCENT_CORPUS_IO_HPP_
