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

#ifndef PROCENT_TESTS_TEST_SUPPORT_HPP_
#define PROCENT_TESTS_TEST_SUPPORT_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "procent/corpus_io.hpp"
#include "procent/types.hpp"

namespace procent::testsupport {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(PROCENT_FIXTURE_DIR) + "/" + name;
}

inline Document load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("cannot open fixture " + name);
  return io::parse_document(in);
}

inline const std::optional<EntityId>& resolution_of(const UtteranceTrace& trace,
                                                    const MentionId& mention) {
  return trace.chosen.resolutions.at(mention);
}

inline int count_code(const std::vector<UtteranceTrace>& traces,
                      const std::string& code) {
  int n = 0;
  for (const auto& t : traces) {
    for (const auto& d : t.diagnostics) {
      if (d.code == code) ++n;
    }
  }
  return n;
}

}  // namespace procent::testsupport

#endif  // PROCENT_TESTS_TEST_SUPPORT_HPP_
