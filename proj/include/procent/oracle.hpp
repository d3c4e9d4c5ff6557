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

#ifndef PROCENT_ORACLE_HPP_
#define PROCENT_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "procent/types.hpp"

// Brute-force reference resolver. This is a deliberately naive, standalone
// reimplementation of the resolution semantics used for differential
// testing; it shares nothing with the engine beyond the domain types.

namespace procent::oracle {

inline constexpr std::size_t kDefaultSearchBound = 100000;

class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

// One enumerated assignment with its hard-filter verdicts and full key.
struct ScoredInterpretation {
  Interpretation interp;
  bool distinctness_ok = true;
  bool rule1_ok = true;
  bool exclusion_ok = true;
};

// Enumerates the full Cartesian product of agreement-compatible assignments
// for the utterance's pronouns (a pronoun with an empty domain contributes a
// single null assignment). Throws SearchSpaceTooLarge if the product exceeds
// the bound.
std::vector<ScoredInterpretation> enumerate_all(const CenteringState& prior,
                                                const Utterance& utterance,
                                                const EntityMap& registry,
                                                Mode mode,
                                                std::size_t bound =
                                                    kDefaultSearchBound);

UtteranceTrace oracle_resolve_utterance(const CenteringState& prior,
                                        const Utterance& utterance,
                                        const EntityMap& registry, Mode mode,
                                        std::size_t bound =
                                            kDefaultSearchBound);

std::vector<UtteranceTrace> oracle_resolve_document(
    const Document& doc, Mode mode, std::size_t bound = kDefaultSearchBound);

}  // namespace procent::oracle

#endif  // PROCENT_ORACLE_HPP_
