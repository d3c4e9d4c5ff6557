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

#include "procent/centering.hpp"

#include <algorithm>

namespace procent::centering {

namespace {

std::vector<const Mention*> pronouns_of(const Utterance& utt) {
  std::vector<const Mention*> out;
  for (const Mention& m : utt.mentions) {
    if (m.kind == MentionKind::Pronoun) out.push_back(&m);
  }
  return out;
}

int prior_index_or_size(const CenteringState& prior, const EntityId& entity) {
  const auto& cf = prior.cf();
  auto it = std::find(cf.begin(), cf.end(), entity);
  return static_cast<int>(it - cf.begin());
}

std::vector<EntityId> sorted_pool(const CenteringState& prior,
                                  const Utterance& utt) {
  std::vector<EntityId> ids = candidate_pool(prior, utt);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

std::vector<EntityId> build_cf(const Utterance& utterance,
                               const ResolutionMap& resolutions) {
  struct Slot {
    int rank;
    int index;
  };
  std::map<EntityId, Slot> best;
  auto offer = [&best](const EntityId& e, int rank, int index) {
    auto it = best.find(e);
    if (it == best.end() || rank < it->second.rank ||
        (rank == it->second.rank && index < it->second.index)) {
      best[e] = {rank, index};
    }
  };
  for (const Mention& m : utterance.mentions) {
    if (m.kind == MentionKind::Pronoun) {
      auto it = resolutions.find(m.id);
      if (it == resolutions.end()) {
        throw UnresolvedPronounError("pronoun '" + m.id +
                                     "' missing from resolution map");
      }
      if (it->second) offer(*it->second, role_rank(m.role), m.surface_index);
    } else if (m.entity) {
      offer(*m.entity, role_rank(m.role), m.surface_index);
    }
  }
  std::vector<std::pair<Slot, EntityId>> ordered;
  for (const auto& [entity, slot] : best) ordered.push_back({slot, entity});
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) {
              if (a.first.rank != b.first.rank) return a.first.rank < b.first.rank;
              return a.first.index < b.first.index;
            });
  std::vector<EntityId> cf;
  for (const auto& [slot, entity] : ordered) cf.push_back(entity);
  for (const EntityId& e : utterance.deixis) {
    if (!best.count(e) && std::find(cf.begin(), cf.end(), e) == cf.end())
      cf.push_back(e);
  }
  return cf;
}

std::optional<EntityId> determine_cb(const CenteringState& prior,
                                     const std::set<EntityId>& realized) {
  for (const EntityId& e : prior.cf()) {
    if (realized.count(e)) return e;
  }
  return std::nullopt;
}

Transition classify_transition(const CenteringState& prior,
                               const std::optional<EntityId>& cb_new,
                               const std::vector<EntityId>& cf_new) {
  if (cb_new &&
      std::find(cf_new.begin(), cf_new.end(), *cb_new) == cf_new.end()) {
    throw std::invalid_argument("classify_transition: cb not in cf");
  }
  if (!prior.cb()) return Transition::Initial;
  if (cb_new && *cb_new == *prior.cb()) {
    return (!cf_new.empty() && cf_new.front() == *cb_new)
               ? Transition::Continue
               : Transition::Retain;
  }
  return Transition::Shift;
}

std::vector<EntityId> candidate_pool(const CenteringState& prior,
                                     const Utterance& utterance) {
  std::vector<EntityId> pool;
  std::set<EntityId> seen;
  for (const EntityId& e : prior.cf()) {
    if (seen.insert(e).second) pool.push_back(e);
  }
  for (const Mention& m : utterance.mentions) {
    if (m.kind != MentionKind::Pronoun && m.entity &&
        seen.insert(*m.entity).second) {
      pool.push_back(*m.entity);
    }
  }
  for (const EntityId& e : utterance.deixis) {
    if (seen.insert(e).second) pool.push_back(e);
  }
  return pool;
}

std::vector<EntityId> antecedent_pool(const CenteringState& prior,
                                      const Utterance& utterance) {
  if (!prior.cf().empty()) return candidate_pool(prior, utterance);
  std::vector<EntityId> pool;
  std::set<EntityId> seen;
  for (const EntityId& e : utterance.deixis) {
    if (seen.insert(e).second) pool.push_back(e);
  }
  return pool;
}

bool distinctness_filter(const Interpretation& interp,
                         const Utterance& utterance) {
  std::set<EntityId> taken;
  for (const Mention& m : utterance.mentions) {
    if (m.kind != MentionKind::Pronoun) continue;
    auto it = interp.resolutions.find(m.id);
    if (it == interp.resolutions.end() || !it->second) continue;
    if (!taken.insert(*it->second).second) return false;
  }
  return true;
}

bool rule1_filter(const Interpretation& interp, const Utterance& utterance) {
  std::vector<const Mention*> pronouns = pronouns_of(utterance);
  if (pronouns.empty()) return true;
  if (!interp.cb) return true;
  for (const Mention* p : pronouns) {
    auto it = interp.resolutions.find(p->id);
    if (it != interp.resolutions.end() && it->second &&
        *it->second == *interp.cb) {
      return true;
    }
  }
  return false;
}

RankKey score_candidate(const Interpretation& interp,
                        const CenteringState& prior,
                        const Utterance& utterance,
                        const ScoreAdjust& adjust) {
  RankKey key;
  switch (interp.transition) {
    case Transition::Initial:
    case Transition::Continue: key.transition_cost = 0; break;
    case Transition::Retain: key.transition_cost = 1; break;
    case Transition::Shift:
      key.transition_cost = adjust.shift_waiver ? 0 : 2;
      break;
  }
  key.shift_waived =
      interp.transition == Transition::Shift && adjust.shift_waiver;
  key.cb_pref_violations = adjust.extra_violations;

  const int cf_size = static_cast<int>(prior.cf().size());
  const std::vector<EntityId> pool = sorted_pool(prior, utterance);
  const int pool_size = static_cast<int>(pool.size());
  for (const Mention* p : pronouns_of(utterance)) {
    auto it = interp.resolutions.find(p->id);
    const bool waived = adjust.traversal_waived.count(p->id) > 0;
    if (it != interp.resolutions.end() && it->second) {
      const int idx = prior_index_or_size(prior, *it->second);
      if (!waived) key.traversal_cost += idx;
      auto at = std::find(pool.begin(), pool.end(), *it->second);
      key.tiebreak.push_back(idx);
      key.tiebreak.push_back(static_cast<int>(at - pool.begin()));
    } else {
      if (!waived) key.traversal_cost += cf_size;
      key.tiebreak.push_back(cf_size);
      key.tiebreak.push_back(pool_size);
    }
  }
  return key;
}

namespace {

struct Domains {
  std::vector<const Mention*> pronouns;
  std::vector<std::vector<std::optional<EntityId>>> values;
  std::vector<MentionId> unresolved;
};

// Per-pronoun antecedent domains. substitute_null keeps empty domains
// enumerable by replacing them with a single null assignment.
Domains build_domains(const CenteringState& prior, const Utterance& utt,
                      const EntityMap& registry,
                      const std::map<MentionId, EntityId>& exclusions,
                      bool substitute_null) {
  Domains d;
  d.pronouns = pronouns_of(utt);
  const std::vector<EntityId> pool = antecedent_pool(prior, utt);
  for (const Mention* p : d.pronouns) {
    std::vector<std::optional<EntityId>> domain;
    for (const EntityId& e : pool) {
      auto reg = registry.find(e);
      if (reg == registry.end()) continue;
      if (!agreement_compatible(p->agreement, reg->second.agreement)) continue;
      auto excl = exclusions.find(p->id);
      if (excl != exclusions.end() && excl->second == e) continue;
      domain.emplace_back(e);
    }
    if (domain.empty()) {
      d.unresolved.push_back(p->id);
      if (substitute_null) domain.emplace_back(std::nullopt);
    }
    d.values.push_back(std::move(domain));
  }
  return d;
}

Interpretation materialize(const CenteringState& prior, const Utterance& utt,
                           const Domains& d,
                           const std::vector<std::optional<EntityId>>& picks,
                           const ProsodyPlan* plan) {
  Interpretation interp;
  for (size_t i = 0; i < d.pronouns.size(); ++i)
    interp.resolutions[d.pronouns[i]->id] = picks[i];
  interp.cf = build_cf(utt, interp.resolutions);
  std::set<EntityId> realized;
  for (const Mention& m : utt.mentions) {
    if (m.kind == MentionKind::Pronoun) {
      const auto& r = interp.resolutions.at(m.id);
      if (r) realized.insert(*r);
    } else if (m.entity) {
      realized.insert(*m.entity);
    }
  }
  interp.cb = determine_cb(prior, realized);
  if (plan && plan->cb_override) {
    if (auto forced = plan->cb_override(interp)) interp.cb = forced;
  }
  interp.transition = classify_transition(prior, interp.cb, interp.cf);
  return interp;
}

// Walks the Cartesian product of domains, invoking fn on each pick vector.
void for_each_assignment(
    const Domains& d,
    const std::function<void(const std::vector<std::optional<EntityId>>&)>&
        fn) {
  for (const auto& domain : d.values) {
    if (domain.empty()) return;  // no assignments at all
  }
  std::vector<std::optional<EntityId>> picks(d.values.size());
  std::vector<size_t> odo(d.values.size(), 0);
  while (true) {
    for (size_t i = 0; i < d.values.size(); ++i) picks[i] = d.values[i][odo[i]];
    fn(picks);
    size_t pos = d.values.size();
    while (true) {
      if (pos == 0) return;
      --pos;
      if (++odo[pos] < d.values[pos].size()) break;
      odo[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace

CandidateSet enumerate_candidates(const CenteringState& prior,
                                  const Utterance& utterance,
                                  const EntityMap& registry) {
  CandidateSet set;
  set.utterance = utterance.id;
  Domains d = build_domains(prior, utterance, registry, {},
                            /*substitute_null=*/false);
  for (const MentionId& p : d.unresolved) {
    Interpretation null_interp;
    for (const Mention* pronoun : d.pronouns)
      null_interp.resolutions[pronoun->id] = std::nullopt;
    set.rejected.emplace_back(
        std::move(null_interp),
        "no agreement-compatible antecedent for pronoun '" + p + "'");
  }
  for_each_assignment(d, [&](const std::vector<std::optional<EntityId>>& picks) {
    Interpretation interp = materialize(prior, utterance, d, picks, nullptr);
    if (!distinctness_filter(interp, utterance)) {
      set.rejected.emplace_back(std::move(interp),
                                "two pronoun mentions resolve to the same "
                                "entity");
      return;
    }
    if (!rule1_filter(interp, utterance)) {
      set.rejected.emplace_back(std::move(interp),
                                "backward center not realized as a pronoun");
      return;
    }
    interp.key = score_candidate(interp, prior, utterance);
    set.interpretations.push_back(std::move(interp));
  });
  return set;
}

UtteranceTrace resolve_utterance_core(const CenteringState& prior,
                                      const Utterance& utterance,
                                      const EntityMap& registry,
                                      const ProsodyPlan* plan) {
  UtteranceTrace trace;
  trace.utterance = utterance.id;
  trace.prior_cf = prior.cf();
  if (plan) trace.diagnostics = plan->pre_diagnostics;

  Domains d = build_domains(prior, utterance, registry,
                            plan ? plan->exclusions
                                 : std::map<MentionId, EntityId>{},
                            /*substitute_null=*/true);

  struct Candidate {
    Interpretation interp;
    bool rule1;
  };
  std::vector<Candidate> candidates;
  for_each_assignment(d, [&](const std::vector<std::optional<EntityId>>& picks) {
    Interpretation interp = materialize(prior, utterance, d, picks, plan);
    if (!distinctness_filter(interp, utterance)) return;
    bool r1 = rule1_filter(interp, utterance);
    candidates.push_back({std::move(interp), r1});
  });

  bool any_rule1 = false;
  for (const Candidate& c : candidates) any_rule1 |= c.rule1;
  const bool relaxed = !candidates.empty() && !any_rule1;

  std::vector<MentionId> unresolved = d.unresolved;
  if (candidates.empty()) {
    // Nothing viable: null every pronoun and report each one.
    Interpretation fallback;
    std::vector<std::optional<EntityId>> nulls(d.pronouns.size());
    fallback = materialize(prior, utterance, d, nulls, plan);
    ScoreAdjust adjust;
    if (plan && plan->adjust) adjust = plan->adjust(fallback);
    fallback.key = score_candidate(fallback, prior, utterance, adjust);
    trace.chosen = std::move(fallback);
    unresolved.clear();
    for (const Mention* p : d.pronouns) unresolved.push_back(p->id);
  } else {
    const Candidate* best = nullptr;
    for (Candidate& c : candidates) {
      if (!relaxed && !c.rule1) continue;
      ScoreAdjust adjust;
      if (plan && plan->adjust) adjust = plan->adjust(c.interp);
      if (relaxed && !c.rule1) adjust.extra_violations += 1;
      c.interp.key = score_candidate(c.interp, prior, utterance, adjust);
      if (!best || rank_key_compare(c.interp.key, best->interp.key) < 0)
        best = &c;
    }
    trace.chosen = best->interp;
    if (relaxed) {
      trace.diagnostics.push_back({Severity::Warning, diag::kRule1Relaxed,
                                   diag::kRule1RelaxedMsg, utterance.id,
                                   std::nullopt});
    }
  }

  if (plan) {
    for (const Diagnostic& post : plan->post_diagnostics)
      trace.diagnostics.push_back(post);
  }
  for (const MentionId& p : unresolved) {
    trace.diagnostics.push_back({Severity::Error, diag::kUnresolvedPronoun,
                                 diag::kUnresolvedPronounMsg, utterance.id, p});
  }
  return trace;
}

UtteranceTrace resolve_utterance_textonly(const CenteringState& prior,
                                          const Utterance& utterance,
                                          const EntityMap& registry) {
  return resolve_utterance_core(prior, utterance, registry, nullptr);
}

CenteringState advance_state(const UtteranceTrace& trace) {
  std::optional<EntityId> cb = trace.chosen.cb;
  if (!cb && !trace.chosen.cf.empty()) cb = trace.chosen.cf.front();
  return CenteringState(cb, trace.chosen.cf);
}

}  // namespace procent::centering
