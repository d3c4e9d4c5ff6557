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

#include "procent/corpus_io.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace procent::io {

using json = nlohmann::ordered_json;

const std::string& to_string(ParseErrorCode code) {
  static const std::string kSchema = "SchemaError";
  static const std::string kDangling = "DanglingEntityRef";
  static const std::string kDuplicate = "DuplicateId";
  switch (code) {
    case ParseErrorCode::SchemaError: return kSchema;
    case ParseErrorCode::DanglingEntityRef: return kDangling;
    case ParseErrorCode::DuplicateId: break;
  }
  return kDuplicate;
}

ParseError::ParseError(ParseErrorCode code, int line,
                       const std::string& message)
    : Error("line " + std::to_string(line) + ": " + to_string(code) + ": " +
            message),
      code_(code),
      line_(line) {}

namespace {

[[noreturn]] void fail(ParseErrorCode code, int line,
                       const std::string& message) {
  throw ParseError(code, line, message);
}

std::string require_string(const json& obj, const char* field, int line) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_string())
    fail(ParseErrorCode::SchemaError, line,
         std::string("missing or non-string field '") + field + "'");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* field,
                                           int line) {
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string())
    fail(ParseErrorCode::SchemaError, line,
         std::string("field '") + field + "' must be a string or null");
  return it->get<std::string>();
}

Agreement parse_agreement(const json& obj, int line) {
  Agreement a;
  if (auto g = optional_string(obj, "gender", line)) {
    if (*g == "masc") a.gender = Gender::Masc;
    else if (*g == "fem") a.gender = Gender::Fem;
    else if (*g == "neut") a.gender = Gender::Neut;
    else
      fail(ParseErrorCode::SchemaError, line,
           "gender must be one of masc, fem, neut");
  }
  if (auto n = optional_string(obj, "number", line)) {
    if (*n == "sg") a.number = NumberFeature::Sg;
    else if (*n == "pl") a.number = NumberFeature::Pl;
    else
      fail(ParseErrorCode::SchemaError, line, "number must be sg or pl");
  }
  auto it = obj.find("person");
  if (it != obj.end() && !it->is_null()) {
    if (!it->is_number_integer())
      fail(ParseErrorCode::SchemaError, line, "person must be an integer");
    int p = it->get<int>();
    if (p < 1 || p > 3)
      fail(ParseErrorCode::SchemaError, line, "person must be 1, 2 or 3");
    a.person = p;
  }
  return a;
}

Mention parse_mention(const json& obj, int line, int index) {
  if (!obj.is_object())
    fail(ParseErrorCode::SchemaError, line, "mention must be an object");
  Mention m;
  m.id = require_string(obj, "id", line);
  m.surface = require_string(obj, "surface", line);
  auto kind = parse_mention_kind(require_string(obj, "mkind", line));
  if (!kind)
    fail(ParseErrorCode::SchemaError, line,
         "mkind must be one of name, np, pron");
  m.kind = *kind;
  auto role = parse_role(require_string(obj, "role", line));
  if (!role)
    fail(ParseErrorCode::SchemaError, line,
         "role must be one of subj, dobj, iobj, other");
  m.role = *role;
  if (auto accent = optional_string(obj, "accent", line)) {
    auto label = parse_accent_label(*accent);
    if (!label) {
      std::string valid;
      for (const auto& s : accent_label_surfaces()) {
        if (!valid.empty()) valid += ", ";
        valid += s;
      }
      fail(ParseErrorCode::SchemaError, line,
           "invalid accent '" + *accent + "'; valid labels: " + valid);
    }
    m.accent = *label;
  }
  m.entity = optional_string(obj, "entity", line);
  if (m.kind != MentionKind::Pronoun && !m.entity)
    fail(ParseErrorCode::SchemaError, line,
         "non-pronoun mention '" + m.id + "' requires an entity");
  m.agreement = parse_agreement(obj, line);
  m.surface_index = index;
  return m;
}

json agreement_to_json(const Agreement& a) {
  json obj;
  if (a.gender) {
    switch (*a.gender) {
      case Gender::Masc: obj["gender"] = "masc"; break;
      case Gender::Fem: obj["gender"] = "fem"; break;
      case Gender::Neut: obj["gender"] = "neut"; break;
    }
  } else {
    obj["gender"] = nullptr;
  }
  if (a.number) {
    obj["number"] = *a.number == NumberFeature::Sg ? "sg" : "pl";
  } else {
    obj["number"] = nullptr;
  }
  if (a.person) {
    obj["person"] = *a.person;
  } else {
    obj["person"] = nullptr;
  }
  return obj;
}

json key_to_json(const RankKey& key) {
  json obj;
  obj["transition_cost"] = key.transition_cost;
  obj["cb_pref_violations"] = key.cb_pref_violations;
  obj["traversal_cost"] = key.traversal_cost;
  obj["tiebreak"] = key.tiebreak;
  obj["shift_waived"] = key.shift_waived;
  return obj;
}

json diagnostic_to_json(const Diagnostic& d) {
  json obj;
  obj["severity"] = to_string(d.severity);
  obj["code"] = d.code;
  obj["message"] = d.message;
  obj["utterance"] = d.utterance;
  if (d.mention) obj["mention"] = *d.mention;
  else obj["mention"] = nullptr;
  return obj;
}

json trace_to_json(const UtteranceTrace& trace) {
  json obj;
  obj["utterance"] = trace.utterance;
  obj["prior_cf"] = trace.prior_cf;
  if (trace.chosen.cb) obj["cb"] = *trace.chosen.cb;
  else obj["cb"] = nullptr;
  obj["cf"] = trace.chosen.cf;
  obj["transition"] = to_string(trace.chosen.transition);
  json res = json::object();
  for (const auto& [mention, entity] : trace.chosen.resolutions) {
    if (entity) res[mention] = *entity;
    else res[mention] = nullptr;
  }
  obj["resolutions"] = res;
  obj["key"] = key_to_json(trace.chosen.key);
  json diags = json::array();
  for (const Diagnostic& d : trace.diagnostics) diags.push_back(diagnostic_to_json(d));
  obj["diagnostics"] = diags;
  return obj;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// Pads every column to its widest cell.
std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

Document parse_document(std::istream& in, const std::string& id_hint) {
  Document doc;
  doc.id = id_hint;
  std::set<std::string> entity_ids;
  std::set<std::string> utterance_ids;
  std::set<std::string> mention_ids;
  // Line number of each record, for the reference checks below.
  std::vector<std::pair<int, const Utterance*>> utterance_lines;
  std::vector<int> entity_decl_lines;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      fail(ParseErrorCode::SchemaError, line_no,
           std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object())
      fail(ParseErrorCode::SchemaError, line_no, "record must be an object");
    std::string kind = require_string(obj, "kind", line_no);
    if (kind == "entity") {
      Entity e;
      e.id = require_string(obj, "id", line_no);
      if (!entity_ids.insert(e.id).second)
        fail(ParseErrorCode::DuplicateId, line_no,
             "entity '" + e.id + "' declared more than once");
      e.agreement = parse_agreement(obj, line_no);
      doc.entities.push_back(std::move(e));
      entity_decl_lines.push_back(line_no);
    } else if (kind == "utterance") {
      Utterance u;
      u.id = require_string(obj, "id", line_no);
      if (!utterance_ids.insert(u.id).second)
        fail(ParseErrorCode::DuplicateId, line_no,
             "utterance '" + u.id + "' declared more than once");
      auto mentions = obj.find("mentions");
      if (mentions == obj.end() || !mentions->is_array())
        fail(ParseErrorCode::SchemaError, line_no,
             "utterance requires a 'mentions' array");
      int index = 0;
      for (const json& mention_obj : *mentions) {
        Mention m = parse_mention(mention_obj, line_no, index++);
        if (!mention_ids.insert(m.id).second)
          fail(ParseErrorCode::DuplicateId, line_no,
               "mention '" + m.id + "' declared more than once");
        u.mentions.push_back(std::move(m));
      }
      auto deixis = obj.find("deixis");
      if (deixis != obj.end() && !deixis->is_null()) {
        if (!deixis->is_array())
          fail(ParseErrorCode::SchemaError, line_no, "deixis must be an array");
        for (const json& d : *deixis) {
          if (!d.is_string())
            fail(ParseErrorCode::SchemaError, line_no,
                 "deixis entries must be entity id strings");
          u.deixis.push_back(d.get<std::string>());
        }
      }
      doc.utterances.push_back(std::move(u));
      utterance_lines.emplace_back(line_no, &doc.utterances.back());
    } else {
      fail(ParseErrorCode::SchemaError, line_no,
           "kind must be 'entity' or 'utterance'");
    }
  }

  // Reference pass: every mention entity and deixis id must be declared.
  // Declarations may appear anywhere in the file.
  std::set<EntityId> deictic;
  for (const auto& [utt_line, utt] : utterance_lines) {
    for (const Mention& m : utt->mentions) {
      if (m.entity && !entity_ids.count(*m.entity))
        fail(ParseErrorCode::DanglingEntityRef, utt_line,
             "mention '" + m.id + "' references undeclared entity '" +
                 *m.entity + "'");
    }
    for (const EntityId& d : utt->deixis) {
      if (!entity_ids.count(d))
        fail(ParseErrorCode::DanglingEntityRef, utt_line,
             "deixis references undeclared entity '" + d + "'");
      deictic.insert(d);
    }
  }
  for (Entity& e : doc.entities) {
    if (deictic.count(e.id)) e.origin = EntityOrigin::Deictic;
  }
  return doc;
}

Document parse_document_text(const std::string& text,
                             const std::string& id_hint) {
  std::istringstream in(text);
  return parse_document(in, id_hint);
}

std::string emit_document(const Document& doc) {
  std::string out;
  for (const Entity& e : doc.entities) {
    json obj;
    obj["kind"] = "entity";
    obj["id"] = e.id;
    json agr = agreement_to_json(e.agreement);
    for (auto& [k, v] : agr.items()) obj[k] = v;
    out += obj.dump();
    out += '\n';
  }
  for (const Utterance& u : doc.utterances) {
    json obj;
    obj["kind"] = "utterance";
    obj["id"] = u.id;
    json mentions = json::array();
    for (const Mention& m : u.mentions) {
      json mo;
      mo["id"] = m.id;
      mo["surface"] = m.surface;
      mo["mkind"] = to_string(m.kind);
      mo["role"] = to_string(m.role);
      if (m.accent == AccentLabel::Unaccented) mo["accent"] = nullptr;
      else mo["accent"] = to_string(m.accent);
      if (m.entity) mo["entity"] = *m.entity;
      else mo["entity"] = nullptr;
      json agr = agreement_to_json(m.agreement);
      for (auto& [k, v] : agr.items()) mo[k] = v;
      mentions.push_back(std::move(mo));
    }
    obj["mentions"] = mentions;
    obj["deixis"] = u.deixis;
    out += obj.dump();
    out += '\n';
  }
  return out;
}

std::string emit_traces(const std::vector<UtteranceTrace>& traces,
                        TraceFormat format) {
  if (format == TraceFormat::Json) {
    std::string out;
    for (const UtteranceTrace& t : traces) {
      out += trace_to_json(t).dump();
      out += '\n';
    }
    return out;
  }
  if (traces.empty()) return "";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"utterance", "transition", "cb", "cf", "resolutions",
                  "diagnostics"});
  for (const UtteranceTrace& t : traces) {
    std::vector<std::string> res;
    for (const auto& [mention, entity] : t.chosen.resolutions)
      res.push_back(mention + "=" + (entity ? *entity : "-"));
    std::vector<std::string> diags;
    for (const Diagnostic& d : t.diagnostics) diags.push_back(d.code);
    rows.push_back({t.utterance, to_string(t.chosen.transition),
                    t.chosen.cb ? *t.chosen.cb : "-",
                    t.chosen.cf.empty() ? "-" : join(t.chosen.cf, " "),
                    res.empty() ? "-" : join(res, " "),
                    diags.empty() ? "-" : join(diags, " ")});
  }
  return format_table(rows);
}

std::string emit_diagnostics(const std::vector<UtteranceTrace>& traces,
                             TraceFormat format) {
  std::string out;
  for (const UtteranceTrace& t : traces) {
    for (const Diagnostic& d : t.diagnostics) {
      if (format == TraceFormat::Json) {
        out += diagnostic_to_json(d).dump();
      } else {
        out += to_string(d.severity) + " " + d.code + " " + d.utterance;
        if (d.mention) out += " " + *d.mention;
        out += ": " + d.message;
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace procent::io
