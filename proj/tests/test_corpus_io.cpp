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

#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "procent/corpus_io.hpp"
#include "procent/resolver.hpp"
#include "test_support.hpp"

using namespace procent;
using testsupport::load_fixture;

TEST_CASE("parses the introduction/insult document") {
  Document doc = load_fixture("intro_insult_accented.jsonl");
  REQUIRE(doc.entities.size() == 3);
  REQUIRE(doc.utterances.size() == 2);
  CHECK(doc.entities[0].id == "john");
  CHECK(doc.entities[0].agreement.gender == Gender::Masc);
  CHECK(doc.entities[2].agreement.gender == Gender::Neut);

  const Utterance& u1 = doc.utterances[0];
  REQUIRE(u1.mentions.size() == 3);
  CHECK(u1.mentions[0].kind == MentionKind::Name);
  CHECK(u1.mentions[0].role == GrammaticalRole::Subject);
  CHECK(u1.mentions[0].entity == "john");
  CHECK(u1.mentions[2].kind == MentionKind::NominalPhrase);
  CHECK(u1.mentions[2].surface_index == 2);

  const Utterance& u2 = doc.utterances[1];
  REQUIRE(u2.mentions.size() == 2);
  CHECK(u2.mentions[0].kind == MentionKind::Pronoun);
  CHECK(u2.mentions[0].accent == AccentLabel::LPlusHStar);
  CHECK(u2.mentions[0].entity == std::nullopt);
  CHECK(u2.mentions[1].agreement.person == 3);
}

TEST_CASE("deixis entities get the deictic origin") {
  Document doc = load_fixture("intro_insult_deictic.jsonl");
  for (const Entity& e : doc.entities) {
    if (e.id == "stranger") CHECK(e.origin == EntityOrigin::Deictic);
    else CHECK(e.origin == EntityOrigin::Textual);
  }
  CHECK(doc.utterances[1].deixis == std::vector<EntityId>{"stranger"});
}

TEST_CASE("rejects malformed input with located structured errors") {
  auto parse = [](const std::string& text) {
    return io::parse_document_text(text);
  };

  SUBCASE("unknown accent label") {
    try {
      parse(testsupport::read_file(testsupport::fixture_path("bad_accent.jsonl")));
      FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
      CHECK(e.code() == io::ParseErrorCode::SchemaError);
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("L+H*") != std::string::npos);
    }
  }
  SUBCASE("dangling entity reference") {
    try {
      parse(testsupport::read_file(
          testsupport::fixture_path("dangling_entity.jsonl")));
      FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
      CHECK(e.code() == io::ParseErrorCode::DanglingEntityRef);
      CHECK(std::string(e.what()).find("e9") != std::string::npos);
    }
  }
  SUBCASE("duplicate entity id") {
    try {
      parse(testsupport::read_file(
          testsupport::fixture_path("duplicate_id.jsonl")));
      FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
      CHECK(e.code() == io::ParseErrorCode::DuplicateId);
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("invalid JSON") {
    CHECK_THROWS_AS(parse("{\"kind\":"), io::ParseError);
  }
  SUBCASE("unknown kind") {
    CHECK_THROWS_AS(parse("{\"kind\":\"wat\"}"), io::ParseError);
  }
  SUBCASE("missing required field") {
    CHECK_THROWS_AS(parse("{\"kind\":\"entity\"}"), io::ParseError);
  }
  SUBCASE("bad person value") {
    CHECK_THROWS_AS(parse("{\"kind\":\"entity\",\"id\":\"x\",\"person\":7}"),
                    io::ParseError);
    CHECK_THROWS_AS(
        parse("{\"kind\":\"entity\",\"id\":\"x\",\"person\":\"three\"}"),
        io::ParseError);
  }
  SUBCASE("non-pronoun mention without entity") {
    CHECK_THROWS_AS(
        parse("{\"kind\":\"utterance\",\"id\":\"u\",\"mentions\":[{\"id\":"
              "\"m\",\"surface\":\"x\",\"mkind\":\"name\",\"role\":\"subj\"}]}"),
        io::ParseError);
  }
  SUBCASE("deixis entries must be strings") {
    CHECK_THROWS_AS(
        parse("{\"kind\":\"utterance\",\"id\":\"u\",\"mentions\":[],"
              "\"deixis\":[3]}"),
        io::ParseError);
  }
  SUBCASE("duplicate utterance and mention ids") {
    CHECK_THROWS_AS(
        parse("{\"kind\":\"utterance\",\"id\":\"u\",\"mentions\":[]}\n"
              "{\"kind\":\"utterance\",\"id\":\"u\",\"mentions\":[]}"),
        io::ParseError);
  }
  SUBCASE("empty input is a valid empty document") {
    Document doc = parse("");
    CHECK(doc.entities.empty());
    CHECK(doc.utterances.empty());
  }
  SUBCASE("blank lines are skipped") {
    Document doc = parse("\n\n{\"kind\":\"entity\",\"id\":\"x\"}\n\n");
    CHECK(doc.entities.size() == 1);
  }
}

TEST_CASE("document serialization is lossless") {
  std::mt19937 rng(23);
  testgen::GenOptions opt;
  opt.with_gold = true;
  for (int i = 0; i < 150; ++i) {
    Document doc = testgen::random_document(rng, opt);
    std::string text = io::emit_document(doc);
    Document back = io::parse_document_text(text);
    CHECK(back == doc);
    CHECK(io::emit_document(back) == text);
  }
}

TEST_CASE("trace emission is byte-deterministic") {
  Document doc = load_fixture("intro_insult_accented.jsonl");
  auto traces = resolve_document(doc, Mode::Prosodic);
  CHECK(io::emit_traces(traces, io::TraceFormat::Json) ==
        io::emit_traces(traces, io::TraceFormat::Json));
  CHECK(io::emit_traces(traces, io::TraceFormat::Text) ==
        io::emit_traces(traces, io::TraceFormat::Text));
  CHECK(io::emit_traces({}, io::TraceFormat::Json).empty());
  CHECK(io::emit_traces({}, io::TraceFormat::Text).empty());
}

TEST_CASE("text trace table shows the transition per utterance") {
  Document doc = load_fixture("intro_insult_accented.jsonl");
  auto traces = resolve_document(doc, Mode::Prosodic);
  std::string table = io::emit_traces(traces, io::TraceFormat::Text);
  CHECK(table.find("Shift") != std::string::npos);
  CHECK(table.find("u2_he=bill") != std::string::npos);
  CHECK(table.find("utterance") != std::string::npos);
}

namespace {

// Structured and unstructured corruptions of a valid serialized document.
std::string mutate(const std::string& text, std::mt19937& rng) {
  std::string out = text;
  switch (testgen::pick(rng, 0, 9)) {
    case 0:  // corrupt one byte
      if (!out.empty())
        out[static_cast<size_t>(testgen::pick(
            rng, 0, static_cast<int>(out.size()) - 1))] =
            static_cast<char>(testgen::pick(rng, 32, 126));
      break;
    case 1:  // truncate
      out = out.substr(0, static_cast<size_t>(testgen::pick(
                              rng, 0, static_cast<int>(out.size()))));
      break;
    case 2: {  // garbage line at the front
      static const char* kGarbage[] = {"not json", "[1,2", "{}",
                                       "{\"kind\":\"wat\"}", "null", "42"};
      out = std::string(kGarbage[testgen::pick(rng, 0, 5)]) + "\n" + out;
      break;
    }
    case 3: {  // swap a known token for a bad one
      static const std::pair<const char*, const char*> kSwaps[] = {
          {"masc", "dog"},      {"\"sg\"", "\"dual\""},
          {"L+H*", "X*"},       {"\"person\":3", "\"person\":9"},
          {"pron", "verb"},     {"subj", "subject"},
          {"\"kind\"", "\"knd\""}, {"\"id\"", "\"xd\""}};
      auto [from, to] = kSwaps[testgen::pick(rng, 0, 7)];
      auto at = out.find(from);
      if (at != std::string::npos) out.replace(at, std::string(from).size(), to);
      break;
    }
    case 4: {  // duplicate a line
      auto nl = out.find('\n');
      if (nl != std::string::npos) out = out.substr(0, nl + 1) + out;
      break;
    }
    case 5: {  // dangling reference
      auto at = out.find("\"entity\":\"");
      if (at != std::string::npos) out.replace(at, 10, "\"entity\":\"zz");
      break;
    }
    case 6:  // delete a random byte
      if (!out.empty())
        out.erase(static_cast<size_t>(testgen::pick(
                      rng, 0, static_cast<int>(out.size()) - 1)),
                  1);
      break;
    case 7: {  // insert a random byte
      size_t at = static_cast<size_t>(
          testgen::pick(rng, 0, static_cast<int>(out.size())));
      out.insert(at, 1, static_cast<char>(testgen::pick(rng, 32, 126)));
      break;
    }
    case 8: {  // wrong type for mentions
      auto at = out.find("\"mentions\":[");
      if (at != std::string::npos) out.replace(at, 12, "\"mentions\":3,[");
      break;
    }
    default:  // concatenate two documents (duplicate ids)
      out += out;
      break;
  }
  return out;
}

}  // namespace

TEST_CASE("fuzzed malformed inputs fail with structured errors, not crashes") {
  std::mt19937 rng(31);
  testgen::GenOptions opt;
  opt.with_gold = true;
  int rejected = 0;
  for (int i = 0; i < 2000; ++i) {
    Document doc = testgen::random_document(rng, opt);
    std::string mutated = mutate(io::emit_document(doc), rng);
    try {
      io::parse_document_text(mutated);
    } catch (const io::ParseError&) {
      ++rejected;  // structured rejection is the expected outcome
    }
  }
  CHECK(rejected > 500);
}
