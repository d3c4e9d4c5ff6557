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

#include "procent/prosody.hpp"

#include <algorithm>
#include <set>

namespace procent::prosody {

namespace {

std::vector<const Mention*> pronouns_of(const Utterance& utt) {
  std::vector<const Mention*> out;
  for (const Mention& m : utt.mentions) {
    if (m.kind == MentionKind::Pronoun) out.push_back(&m);
  }
  return out;
}

Utterance stripped_copy(const Utterance& utt) {
  Utterance copy = utt;
  for (Mention& m : copy.mentions) m.accent = AccentLabel::Unaccented;
  return copy;
}

// What the text alone predicts for each pronoun of this utterance.
centering::ResolutionMap baseline_resolutions(const CenteringState& prior,
                                              const Utterance& utt,
                                              const EntityMap& registry) {
  UtteranceTrace trace =
      centering::resolve_utterance_textonly(prior, stripped_copy(utt),
                                            registry);
  return trace.chosen.resolutions;
}

ExclusionSet exclusions_from_baseline(const Utterance& utt,
                                      const centering::ResolutionMap& baseline) {
  ExclusionSet exclusions;
  for (const Mention* p : pronouns_of(utt)) {
    if (p->accent != AccentLabel::LPlusHStar) continue;
    auto it = baseline.find(p->id);
    if (it != baseline.end() && it->second) exclusions[p->id] = *it->second;
  }
  return exclusions;
}

std::optional<Diagnostic> availability_with_baseline(
    const Mention& pronoun, const CenteringState& prior, const Utterance& utt,
    const EntityMap& registry, const ExclusionSet& exclusions,
    const centering::ResolutionMap& baseline) {
  auto excl = exclusions.find(pronoun.id);
  std::set<EntityId> claimed;
  for (const Mention* q : pronouns_of(utt)) {
    if (q->id == pronoun.id || q->accent == AccentLabel::LPlusHStar) continue;
    auto it = baseline.find(q->id);
    if (it != baseline.end() && it->second) claimed.insert(*it->second);
  }
  for (const EntityId& e : centering::antecedent_pool(prior, utt)) {
    if (excl != exclusions.end() && e == excl->second) continue;
    if (claimed.count(e)) continue;
    auto reg = registry.find(e);
    if (reg != registry.end() &&
        agreement_compatible(pronoun.agreement, reg->second.agreement)) {
      return std::nullopt;
    }
  }
  return Diagnostic{Severity::Infelicity, diag::kNoAlternateReferent,
                    diag::kNoAlternateReferentMsg, utt.id, pronoun.id};
}

}  // namespace

AttentionalEffect accent_effect(AccentLabel label) {
  switch (label) {
    case AccentLabel::LPlusHStar: return AttentionalEffect::ForceShift;
    case AccentLabel::LStarPlusH: return AttentionalEffect::LicenseShift;
    case AccentLabel::HStar: return AttentionalEffect::ReinforceCb;
    case AccentLabel::LStar: return AttentionalEffect::WeakenCb;
    case AccentLabel::HStarPlusL: return AttentionalEffect::LicenseTraversal;
    case AccentLabel::HPlusLStar: return AttentionalEffect::UncertainTraversal;
    case AccentLabel::Unaccented: break;
  }
  return AttentionalEffect::Neutral;
}

ExclusionSet compute_exclusions(const CenteringState& prior,
                                const Utterance& utterance,
                                const EntityMap& registry) {
  return exclusions_from_baseline(
      utterance, baseline_resolutions(prior, utterance, registry));
}

std::optional<Diagnostic> availability_check(const Mention& pronoun,
                                             const CenteringState& prior,
                                             const Utterance& utterance,
                                             const EntityMap& registry,
                                             const ExclusionSet& exclusions) {
  return availability_with_baseline(
      pronoun, prior, utterance, registry, exclusions,
      baseline_resolutions(prior, utterance, registry));
}

centering::ScoreAdjust adjust_ranking(
    const Interpretation& interp, const Utterance& utterance,
    const centering::ResolutionMap& baseline) {
  centering::ScoreAdjust adjust;
  for (const Mention* p : pronouns_of(utterance)) {
    if (p->accent == AccentLabel::LPlusHStar ||
        p->accent == AccentLabel::LStarPlusH) {
      adjust.shift_waiver = true;
    }
  }
  for (const Mention* p : pronouns_of(utterance)) {
    auto res = interp.resolutions.find(p->id);
    const std::optional<EntityId>& r =
        res != interp.resolutions.end() ? res->second : std::optional<EntityId>{};
    switch (p->accent) {
      case AccentLabel::HStar:
        if (!interp.cb || !r || *r != *interp.cb) adjust.extra_violations += 1;
        break;
      case AccentLabel::LStar:
        if (interp.cb && r && *r == *interp.cb) adjust.extra_violations += 1;
        break;
      case AccentLabel::Unaccented: {
        // Unaccented pronominals keep cospecifying with what the text
        // predicts; deviating is dispreferred, not forbidden.
        auto base = baseline.find(p->id);
        if (base != baseline.end() && base->second && r && *r != *base->second)
          adjust.extra_violations += 1;
        break;
      }
      case AccentLabel::HStarPlusL:
      case AccentLabel::HPlusLStar:
        adjust.traversal_waived.insert(p->id);
        break;
      default: break;
    }
  }
  return adjust;
}

std::optional<EntityId> contrastive_cb(const Interpretation& interp,
                                       const Utterance& utterance) {
  std::optional<EntityId> forced;
  size_t best = interp.cf.size();
  for (const Mention* p : pronouns_of(utterance)) {
    if (p->accent != AccentLabel::LPlusHStar) continue;
    auto res = interp.resolutions.find(p->id);
    if (res == interp.resolutions.end() || !res->second) continue;
    auto at = std::find(interp.cf.begin(), interp.cf.end(), *res->second);
    size_t idx = static_cast<size_t>(at - interp.cf.begin());
    if (idx < best) {
      best = idx;
      forced = *res->second;
    }
  }
  return forced;
}

UtteranceTrace prosodic_resolve(const CenteringState& prior,
                                const Utterance& utterance,
                                const EntityMap& registry) {
  centering::ProsodyPlan plan;
  plan.baseline = baseline_resolutions(prior, utterance, registry);
  plan.exclusions = exclusions_from_baseline(utterance, plan.baseline);

  for (const Mention* p : pronouns_of(utterance)) {
    if (!plan.exclusions.count(p->id)) continue;
    auto infelicity = availability_with_baseline(
        *p, prior, utterance, registry, plan.exclusions, plan.baseline);
    if (infelicity) {
      // No alternate referent: keep the diagnostic but let resolution fall
      // back to the text prediction.
      plan.pre_diagnostics.push_back(*infelicity);
      plan.exclusions.erase(p->id);
    }
  }
  for (const Mention* p : pronouns_of(utterance)) {
    if (p->accent == AccentLabel::HPlusLStar) {
      plan.post_diagnostics.push_back({Severity::Warning,
                                       diag::kLowConfidenceTraversal,
                                       diag::kLowConfidenceTraversalMsg,
                                       utterance.id, p->id});
    }
  }
  plan.adjust = [&utterance, &plan](const Interpretation& interp) {
    return adjust_ranking(interp, utterance, plan.baseline);
  };
  plan.cb_override = [&utterance](const Interpretation& interp) {
    return contrastive_cb(interp, utterance);
  };
  return centering::resolve_utterance_core(prior, utterance, registry, &plan);
}

}  // namespace procent::prosody
