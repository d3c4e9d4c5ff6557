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

#ifndef PROCENT_RESOLVER_HPP_
#define PROCENT_RESOLVER_HPP_

#include <vector>

#include "procent/types.hpp"

namespace procent {

// Resolves one utterance against the prior attentional state.
UtteranceTrace resolve_utterance(const CenteringState& prior,
                                 const Utterance& utterance,
                                 const EntityMap& registry, Mode mode);

// Left fold of resolve_utterance starting from the empty state; each trace's
// prior_cf equals the previous trace's chosen cf.
std::vector<UtteranceTrace> resolve_document(const Document& doc, Mode mode);

}  // namespace procent

#endif  // PROCENT_RESOLVER_HPP_
