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

#ifndef PROCENT_PROSODY_HPP_
#define PROCENT_PROSODY_HPP_

#include <map>
#include <optional>

#include "procent/centering.hpp"
#include "procent/types.hpp"

// Attentional interpretation of pitch accents on pronominals, layered over
// the text-only centering engine as exclusions, waivers and soft preferences
// on the candidate space. Accents on non-pronoun mentions are ignored.

namespace procent::prosody {

enum class AttentionalEffect {
  ForceShift,          // L+H*: the cospecifier must differ from the
                       // text-predicted one; its referent becomes the center
  LicenseShift,        // L*+H: a shift is supported but not compelled
  ReinforceCb,         // H*: the cospecifier is asserted to be the center
  WeakenCb,            // L*: fails to assert the cospecifier as the center
  LicenseTraversal,    // H*+L: reaching deep into the center list is licensed
  UncertainTraversal,  // H+L*: as above, with uncertainty (warns)
  Neutral,             // no accent
};

// The fixed, total mapping from accent label to attentional effect.
AttentionalEffect accent_effect(AccentLabel label);

// For each contrastively accented (L+H*) pronoun, the entity it may NOT
// resolve to: its text-predicted referent.
using ExclusionSet = std::map<MentionId, EntityId>;

// Runs text-only resolution on an accent-stripped copy of the utterance and
// records each L+H* pronoun's baseline referent as its exclusion.
ExclusionSet compute_exclusions(const CenteringState& prior,
                                const Utterance& utterance,
                                const EntityMap& registry);

// Checks that an L+H*-accented pronoun has somewhere else to go: an
// agreement-compatible entity in the antecedent pool that is neither its
// excluded baseline nor held by an unaccented co-utterance pronoun. Returns
// the NO_ALTERNATE_REFERENT infelicity when none exists.
std::optional<Diagnostic> availability_check(const Mention& pronoun,
                                             const CenteringState& prior,
                                             const Utterance& utterance,
                                             const EntityMap& registry,
                                             const ExclusionSet& exclusions);

// Per-interpretation ranking adjustments:
//  - any L+H* or L*+H pronoun waives the Shift transition cost;
//  - +1 violation per H* pronoun not resolving to the center, per L* pronoun
//    resolving to it, and per unaccented pronoun deviating from its
//    text-predicted referent;
//  - H*+L and H+L* waive the accented pronoun's own traversal cost.
centering::ScoreAdjust adjust_ranking(const Interpretation& interp,
                                      const Utterance& utterance,
                                      const centering::ResolutionMap& baseline);

// The center forced by contrastive accenting, if any: of the L+H* pronouns'
// referents, the most salient one in the new center list.
std::optional<EntityId> contrastive_cb(const Interpretation& interp,
                                       const Utterance& utterance);

// Full prosodic resolution: exclusions, availability (an infelicitous
// exclusion is dropped but keeps its diagnostic), filtered enumeration,
// adjusted scoring, minimal key.
UtteranceTrace prosodic_resolve(const CenteringState& prior,
                                const Utterance& utterance,
                                const EntityMap& registry);

}  // namespace procent::prosody

#endif  // PROCENT_PROSODY_HPP_
