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

#include "procent/resolver.hpp"

#include "procent/centering.hpp"
#include "procent/prosody.hpp"

namespace procent {

UtteranceTrace resolve_utterance(const CenteringState& prior,
                                 const Utterance& utterance,
                                 const EntityMap& registry, Mode mode) {
  if (mode == Mode::Prosodic)
    return prosody::prosodic_resolve(prior, utterance, registry);
  return centering::resolve_utterance_textonly(prior, utterance, registry);
}

std::vector<UtteranceTrace> resolve_document(const Document& doc, Mode mode) {
  EntityMap registry = build_entity_map(doc);
  std::vector<UtteranceTrace> traces;
  CenteringState state;
  for (const Utterance& utt : doc.utterances) {
    UtteranceTrace trace = resolve_utterance(state, utt, registry, mode);
    state = centering::advance_state(trace);
    traces.push_back(std::move(trace));
  }
  return traces;
}

}  // namespace procent
