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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "procent/corpus_io.hpp"
#include "procent/obligation.hpp"
#include "procent/oracle.hpp"
#include "procent/resolver.hpp"

namespace {

using namespace procent;

constexpr int kExitOk = 0;
constexpr int kExitStrictFailure = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::vector<std::string> files;
  bool no_prosody = false;
  bool strict = false;
  std::string format = "json";
  std::string emit_annotated;
  std::size_t max_search = oracle::kDefaultSearchBound;
};

io::TraceFormat format_of(const Options& opt) {
  return opt.format == "text" ? io::TraceFormat::Text : io::TraceFormat::Json;
}

Mode mode_of(const Options& opt) {
  return opt.no_prosody ? Mode::TextOnly : Mode::Prosodic;
}

Document load(const std::string& path) {
  if (path == "-") return io::parse_document(std::cin, "stdin");
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return io::parse_document(in, path);
}

bool has_infelicity(const std::vector<UtteranceTrace>& traces) {
  for (const UtteranceTrace& t : traces) {
    for (const Diagnostic& d : t.diagnostics) {
      if (d.severity == Severity::Infelicity) return true;
    }
  }
  return false;
}

int cmd_resolve(const Options& opt, bool use_oracle) {
  int status = kExitOk;
  for (const std::string& file : opt.files) {
    Document doc = load(file);
    std::vector<UtteranceTrace> traces =
        use_oracle
            ? oracle::oracle_resolve_document(doc, mode_of(opt), opt.max_search)
            : resolve_document(doc, mode_of(opt));
    std::cout << io::emit_traces(traces, format_of(opt));
    std::cerr << io::emit_diagnostics(traces, io::TraceFormat::Text);
    if (opt.strict && has_infelicity(traces)) status = kExitStrictFailure;
  }
  return status;
}

int cmd_check(const Options& opt) {
  int status = kExitOk;
  for (const std::string& file : opt.files) {
    Document doc = load(file);
    std::vector<UtteranceTrace> traces = resolve_document(doc, mode_of(opt));
    std::cout << io::emit_diagnostics(traces, format_of(opt));
    if (opt.strict && has_infelicity(traces)) status = kExitStrictFailure;
  }
  return status;
}

int cmd_accents(const Options& opt) {
  int status = kExitOk;
  for (const std::string& file : opt.files) {
    Document doc = load(file);
    obligation::ObligationResult result = obligation::accent_obligation(doc);
    std::cout << obligation::emit_obligations(result.obligations,
                                              format_of(opt));
    if (!opt.emit_annotated.empty()) {
      std::ofstream out(opt.emit_annotated);
      if (!out) throw Error("cannot write file: " + opt.emit_annotated);
      out << io::emit_document(result.annotated);
    }
    if (opt.strict && result.has_unsatisfiable()) status = kExitStrictFailure;
  }
  return status;
}

int cmd_eval(const Options& opt) {
  int status = kExitOk;
  for (const std::string& file : opt.files) {
    Document doc = load(file);
    obligation::EvalReport report = obligation::evaluate(doc);
    std::cout << obligation::emit_eval(report, format_of(opt));
    if (opt.strict && report.accuracy() < 1.0) status = kExitStrictFailure;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "procent: tracks discourse attentional state, resolves pronouns under "
      "centering constraints, and interprets or generates the pitch accents "
      "that modify those resolutions"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("PROCENT_FORMAT")) {
    if (std::string(env) == "text" || std::string(env) == "json")
      opt.format = env;
  }

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("files", opt.files, "input document files (JSON Lines)")
        ->required();
    cmd->add_flag("--no-prosody", opt.no_prosody,
                  "ignore accent labels (text-only resolution)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--strict", opt.strict,
                  "exit 1 on infelicity, unsatisfiable obligation, or "
                  "imperfect accuracy");
  };

  CLI::App* resolve = app.add_subcommand(
      "resolve", "resolve pronouns and print one trace per utterance");
  add_common(resolve);
  CLI::App* accents = app.add_subcommand(
      "accents", "decide which pronouns must carry an accent to convey the "
                 "gold cospecifiers");
  add_common(accents);
  accents->add_option("--emit-annotated", opt.emit_annotated,
                      "write the accent-annotated document to this path");
  CLI::App* check = app.add_subcommand(
      "check", "print only the diagnostics the resolver would emit");
  add_common(check);
  CLI::App* eval = app.add_subcommand(
      "eval", "score resolution against gold annotations");
  add_common(eval);
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "resolve by exhaustive search (reference implementation)");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--max-search", opt.max_search,
                         "candidate-space bound for the exhaustive search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (resolve->parsed()) return cmd_resolve(opt, /*use_oracle=*/false);
    if (oracle_cmd->parsed()) return cmd_resolve(opt, /*use_oracle=*/true);
    if (check->parsed()) return cmd_check(opt);
    if (accents->parsed()) return cmd_accents(opt);
    if (eval->parsed()) return cmd_eval(opt);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const oracle::SearchSpaceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const MissingGoldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
