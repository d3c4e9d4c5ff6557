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

#ifndef PROCENT_CENTERING_HPP_
#define PROCENT_CENTERING_HPP_

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "procent/types.hpp"

namespace procent::centering {

using ResolutionMap = std::map<MentionId, std::optional<EntityId>>;

// Candidate interpretations of one utterance after hard filtering, together
// with the assignments the filters rejected and why.
struct CandidateSet {
  UtteranceId utterance;
  std::vector<Interpretation> interpretations;
  std::vector<std::pair<Interpretation, std::string>> rejected;
};

// Entities realized in the utterance (through any mention or pronoun
// resolution) plus deictic injections, ordered by grammatical role then
// surface position; deictic-only entities follow the textual ones.
// Duplicates collapse onto their best position. A null resolution is the
// unresolved marker and contributes nothing. Throws UnresolvedPronounError
// if a pronoun of the utterance is missing from the map.
std::vector<EntityId> build_cf(const Utterance& utterance,
                               const ResolutionMap& resolutions);

// Highest-ranked element of the prior center list realized in the current
// utterance, if any.
std::optional<EntityId> determine_cb(const CenteringState& prior,
                                     const std::set<EntityId>& realized);

// Initial when there is no prior center; Continue/Retain when the center is
// kept (at/off the head of the new list); Shift otherwise.
Transition classify_transition(const CenteringState& prior,
                               const std::optional<EntityId>& cb_new,
                               const std::vector<EntityId>& cf_new);

// Antecedent pool in canonical order: prior cf, then entities realized by
// non-pronoun mentions in surface order, then deixis. Duplicates dropped.
std::vector<EntityId> candidate_pool(const CenteringState& prior,
                                     const Utterance& utterance);

// The pool pronouns may actually draw from. Discourse-initial utterances
// (empty prior cf) restrict pronouns to deictic referents.
std::vector<EntityId> antecedent_pool(const CenteringState& prior,
                                      const Utterance& utterance);

// False iff two distinct pronoun mentions resolve to the same entity.
bool distinctness_filter(const Interpretation& interp,
                         const Utterance& utterance);

// Pronominalization constraint: vacuous without pronouns (or without a
// center); otherwise the center must be realized by at least one pronoun.
bool rule1_filter(const Interpretation& interp, const Utterance& utterance);

// Scoring adjustments supplied by the prosodic overlay.
struct ScoreAdjust {
  bool shift_waiver = false;
  int extra_violations = 0;
  std::set<MentionId> traversal_waived;
};

// Ranking key: transition cost (Initial/Continue 0, Retain 1, Shift 2 or 0
// under the shift waiver), violations, per-pronoun traversal cost over the
// prior cf (entities outside it cost its length), and a deterministic
// per-pronoun tiebreak.
RankKey score_candidate(const Interpretation& interp,
                        const CenteringState& prior,
                        const Utterance& utterance,
                        const ScoreAdjust& adjust = {});

// Cartesian enumeration over agreement-compatible antecedents with all hard
// filters applied (text-only materialization).
CandidateSet enumerate_candidates(const CenteringState& prior,
                                  const Utterance& utterance,
                                  const EntityMap& registry);

// Constraints injected by the prosodic overlay into the shared pipeline.
struct ProsodyPlan {
  ResolutionMap baseline;
  std::map<MentionId, EntityId> exclusions;
  std::vector<Diagnostic> pre_diagnostics;
  std::vector<Diagnostic> post_diagnostics;
  std::function<ScoreAdjust(const Interpretation&)> adjust;
  std::function<std::optional<EntityId>(const Interpretation&)> cb_override;
};

// The resolution pipeline. With a null plan this is text-only resolution:
// enumerate, filter, score, pick the minimal key. Rule 1 degrades to a +1
// violation penalty when it would eliminate every candidate; an utterance
// with no viable assignment at all resolves its pronouns to the null marker.
// Failures surface as trace diagnostics, never as errors.
UtteranceTrace resolve_utterance_core(const CenteringState& prior,
                                      const Utterance& utterance,
                                      const EntityMap& registry,
                                      const ProsodyPlan* plan);

UtteranceTrace resolve_utterance_textonly(const CenteringState& prior,
                                          const Utterance& utterance,
                                          const EntityMap& registry);

// State carried to the next utterance: the chosen center, defaulting to the
// head of the new center list when the utterance itself had none.
CenteringState advance_state(const UtteranceTrace& trace);

}  // namespace procent::centering

#endif  // PROCENT_CENTERING_HPP_
