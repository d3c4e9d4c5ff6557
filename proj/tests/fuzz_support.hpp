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

#ifndef PROCENT_TESTS_FUZZ_SUPPORT_HPP_
#define PROCENT_TESTS_FUZZ_SUPPORT_HPP_

#include <random>
#include <string>
#include <utility>

#include "generators.hpp"

namespace procent::testfuzz {

// Structured and unstructured corruptions of a valid serialized document.
inline std::string mutate(const std::string& text, std::mt19937& rng) {
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
          {"masc", "dog"},         {"\"sg\"", "\"dual\""},
          {"L+H*", "X*"},          {"\"person\":3", "\"person\":9"},
          {"pron", "verb"},        {"subj", "subject"},
          {"\"kind\"", "\"knd\""}, {"\"id\"", "\"xd\""}};
      auto [from, to] = kSwaps[testgen::pick(rng, 0, 7)];
      auto at = out.find(from);
      if (at != std::string::npos)
        out.replace(at, std::string(from).size(), to);
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

}  // namespace procent::testfuzz

#endif  // PROCENT_TESTS_FUZZ_SUPPORT_HPP_
