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

// Everything here is written as plainly as possible, with no pruning and no
// code shared with the engine, so that a bug in one implementation cannot
// hide in the other.

#include "procent/oracle.hpp"

#include <algorithm>
#include <set>

namespace procent::oracle {

namespace {

std::vector<const Mention*> pronouns_of(const Utterance& utt) {
  std::vector<const Mention*> out;
  for (const Mention& m : utt.mentions) {
    if (m.kind == MentionKind::Pronoun) out.push_back(&m);
  }
  return out;
}

// Antecedent pool in canonical order: prior cf, then entities realized by
// non-pronoun mentions in surface order, then deictic injections.
std::vector<EntityId> full_pool(const CenteringState& prior,
                                const Utterance& utt) {
  std::vector<EntityId> pool;
  std::set<EntityId> seen;
  for (const EntityId& e : prior.cf()) {
    if (seen.insert(e).second) pool.push_back(e);
  }
  for (const Mention& m : utt.mentions) {
    if (m.kind != MentionKind::Pronoun && m.entity && seen.insert(*m.entity).second)
      pool.push_back(*m.entity);
  }
  for (const EntityId& e : utt.deixis) {
    if (seen.insert(e).second) pool.push_back(e);
  }
  return pool;
}

// Discourse-initial pronouns can only pick up deictic referents.
std::vector<EntityId> domain_pool(const CenteringState& prior,
                                  const Utterance& utt) {
  if (!prior.cf().empty()) return full_pool(prior, utt);
  std::vector<EntityId> pool;
  std::set<EntityId> seen;
  for (const EntityId& e : utt.deixis) {
    if (seen.insert(e).second) pool.push_back(e);
  }
  return pool;
}

std::vector<EntityId> sorted_pool_ids(const CenteringState& prior,
                                      const Utterance& utt) {
  std::vector<EntityId> ids = full_pool(prior, utt);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool compatible(const Mention& pronoun, const EntityId& entity,
                const EntityMap& registry) {
  auto it = registry.find(entity);
  if (it == registry.end()) return false;
  return agreement_compatible(pronoun.agreement, it->second.agreement);
}

int prior_cf_index(const CenteringState& prior, const EntityId& entity) {
  for (size_t i = 0; i < prior.cf().size(); ++i) {
    if (prior.cf()[i] == entity) return static_cast<int>(i);
  }
  return static_cast<int>(prior.cf().size());
}

using Picks = std::vector<std::optional<EntityId>>;

Interpretation materialize(const CenteringState& prior, const Utterance& utt,
                           const std::vector<const Mention*>& pronouns,
                           const Picks& picks, Mode mode) {
  Interpretation interp;
  for (size_t i = 0; i < pronouns.size(); ++i)
    interp.resolutions[pronouns[i]->id] = picks[i];

  // Realized occurrences: (role rank, surface index, entity).
  struct Occurrence {
    int rank;
    int index;
    EntityId entity;
  };
  std::vector<Occurrence> occurrences;
  size_t pick_cursor = 0;
  for (const Mention& m : utt.mentions) {
    if (m.kind == MentionKind::Pronoun) {
      const std::optional<EntityId>& pick = picks[pick_cursor++];
      if (pick) occurrences.push_back({role_rank(m.role), m.surface_index, *pick});
    } else if (m.entity) {
      occurrences.push_back({role_rank(m.role), m.surface_index, *m.entity});
    }
  }
  std::stable_sort(occurrences.begin(), occurrences.end(),
                   [](const Occurrence& a, const Occurrence& b) {
                     if (a.rank != b.rank) return a.rank < b.rank;
                     return a.index < b.index;
                   });
  std::set<EntityId> in_cf;
  for (const Occurrence& o : occurrences) {
    if (in_cf.insert(o.entity).second) interp.cf.push_back(o.entity);
  }
  for (const EntityId& e : utt.deixis) {
    if (in_cf.insert(e).second) interp.cf.push_back(e);
  }

  std::set<EntityId> realized;
  for (const Occurrence& o : occurrences) realized.insert(o.entity);
  for (const EntityId& e : prior.cf()) {
    if (realized.count(e)) {
      interp.cb = e;
      break;
    }
  }
  if (mode == Mode::Prosodic) {
    // A contrastively accented pronominal instantiates its cospecifier as
    // the center; with several, the most salient one wins.
    int best_index = -1;
    for (size_t i = 0; i < pronouns.size(); ++i) {
      if (pronouns[i]->accent != AccentLabel::LPlusHStar || !picks[i]) continue;
      for (size_t j = 0; j < interp.cf.size(); ++j) {
        if (interp.cf[j] == *picks[i]) {
          if (best_index < 0 || static_cast<int>(j) < best_index) {
            best_index = static_cast<int>(j);
            interp.cb = *picks[i];
          }
          break;
        }
      }
    }
  }

  if (!prior.cb()) {
    interp.transition = Transition::Initial;
  } else if (interp.cb && *interp.cb == *prior.cb()) {
    interp.transition = (!interp.cf.empty() && interp.cf.front() == *interp.cb)
                            ? Transition::Continue
                            : Transition::Retain;
  } else {
    interp.transition = Transition::Shift;
  }
  return interp;
}

bool distinct_ok(const Picks& picks) {
  for (size_t i = 0; i < picks.size(); ++i) {
    for (size_t j = i + 1; j < picks.size(); ++j) {
      if (picks[i] && picks[j] && *picks[i] == *picks[j]) return false;
    }
  }
  return true;
}

bool rule1_ok(const Interpretation& interp,
              const std::vector<const Mention*>& pronouns,
              const Picks& picks) {
  if (pronouns.empty()) return true;
  if (!interp.cb) return true;
  for (size_t i = 0; i < pronouns.size(); ++i) {
    if (picks[i] && *picks[i] == *interp.cb) return true;
  }
  return false;
}

RankKey score(const CenteringState& prior, const Utterance& utt,
              const std::vector<const Mention*>& pronouns, const Picks& picks,
              const Interpretation& interp, Mode mode, const Picks& baseline,
              const std::vector<EntityId>& sorted_pool, bool rule1_penalty) {
  RankKey key;
  bool waiver = false;
  if (mode == Mode::Prosodic) {
    for (const Mention* p : pronouns) {
      if (p->accent == AccentLabel::LPlusHStar ||
          p->accent == AccentLabel::LStarPlusH)
        waiver = true;
    }
  }
  switch (interp.transition) {
    case Transition::Initial:
    case Transition::Continue: key.transition_cost = 0; break;
    case Transition::Retain: key.transition_cost = 1; break;
    case Transition::Shift: key.transition_cost = waiver ? 0 : 2; break;
  }
  key.shift_waived = interp.transition == Transition::Shift && waiver;

  int violations = rule1_penalty ? 1 : 0;
  if (mode == Mode::Prosodic) {
    for (size_t i = 0; i < pronouns.size(); ++i) {
      const AccentLabel accent = pronouns[i]->accent;
      const std::optional<EntityId>& pick = picks[i];
      if (accent == AccentLabel::HStar) {
        if (!interp.cb || !pick || *pick != *interp.cb) ++violations;
      } else if (accent == AccentLabel::LStar) {
        if (interp.cb && pick && *pick == *interp.cb) ++violations;
      } else if (accent == AccentLabel::Unaccented) {
        if (baseline[i] && pick && *pick != *baseline[i]) ++violations;
      }
    }
  }
  key.cb_pref_violations = violations;

  const int cf_size = static_cast<int>(prior.cf().size());
  const int pool_size = static_cast<int>(sorted_pool.size());
  for (size_t i = 0; i < pronouns.size(); ++i) {
    const std::optional<EntityId>& pick = picks[i];
    bool waived = mode == Mode::Prosodic &&
                  (pronouns[i]->accent == AccentLabel::HStarPlusL ||
                   pronouns[i]->accent == AccentLabel::HPlusLStar);
    if (pick) {
      int idx = prior_cf_index(prior, *pick);
      if (!waived) key.traversal_cost += idx;
      int rank = pool_size;
      for (int j = 0; j < pool_size; ++j) {
        if (sorted_pool[static_cast<size_t>(j)] == *pick) {
          rank = j;
          break;
        }
      }
      key.tiebreak.push_back(idx);
      key.tiebreak.push_back(rank);
    } else {
      if (!waived) key.traversal_cost += cf_size;
      key.tiebreak.push_back(cf_size);
      key.tiebreak.push_back(pool_size);
    }
  }
  return key;
}

Utterance stripped_copy(const Utterance& utt) {
  Utterance copy = utt;
  for (Mention& m : copy.mentions) m.accent = AccentLabel::Unaccented;
  return copy;
}

struct Enumeration {
  std::vector<const Mention*> pronouns;
  std::vector<std::vector<std::optional<EntityId>>> domains;
  std::vector<bool> unresolved;  // pronoun had no compatible antecedent
  std::size_t product = 1;
};

Enumeration build_domains(const CenteringState& prior, const Utterance& utt,
                          const EntityMap& registry,
                          const std::map<MentionId, EntityId>& exclusions) {
  Enumeration e;
  e.pronouns = pronouns_of(utt);
  std::vector<EntityId> pool = domain_pool(prior, utt);
  for (const Mention* p : e.pronouns) {
    std::vector<std::optional<EntityId>> domain;
    for (const EntityId& entity : pool) {
      if (!compatible(*p, entity, registry)) continue;
      auto excl = exclusions.find(p->id);
      if (excl != exclusions.end() && excl->second == entity) continue;
      domain.emplace_back(entity);
    }
    if (domain.empty()) {
      domain.emplace_back(std::nullopt);
      e.unresolved.push_back(true);
    } else {
      e.unresolved.push_back(false);
    }
    e.product *= domain.size();
    e.domains.push_back(std::move(domain));
  }
  return e;
}

std::size_t raw_product(const CenteringState& prior, const Utterance& utt,
                        const EntityMap& registry) {
  Enumeration e = build_domains(prior, utt, registry, {});
  return e.product;
}

std::vector<Picks> all_picks(const Enumeration& e) {
  std::vector<Picks> out;
  Picks current(e.domains.size());
  std::vector<size_t> odometer(e.domains.size(), 0);
  while (true) {
    for (size_t i = 0; i < e.domains.size(); ++i)
      current[i] = e.domains[i][odometer[i]];
    out.push_back(current);
    size_t pos = e.domains.size();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < e.domains[pos].size()) break;
      odometer[pos] = 0;
      if (pos == 0) return out;
    }
    if (e.domains.empty()) return out;
  }
}

// Baseline picks: what the text alone predicts for each pronoun. Computed by
// this oracle's own text-only resolution of the accent-stripped utterance.
Picks baseline_picks(const CenteringState& prior, const Utterance& utt,
                     const EntityMap& registry, std::size_t bound);

struct Resolution {
  Interpretation chosen;
  std::vector<Diagnostic> diagnostics;
};

Resolution resolve_one(const CenteringState& prior, const Utterance& utt,
                       const EntityMap& registry, Mode mode,
                       std::size_t bound) {
  std::vector<const Mention*> pronouns = pronouns_of(utt);
  if (raw_product(prior, utt, registry) > bound) {
    throw SearchSpaceTooLarge(
        "utterance '" + utt.id + "': candidate space exceeds bound of " +
        std::to_string(bound));
  }

  Picks baseline(pronouns.size());
  std::map<MentionId, EntityId> exclusions;
  std::vector<Diagnostic> infelicities;
  if (mode == Mode::Prosodic) {
    baseline = baseline_picks(prior, utt, registry, bound);
    for (size_t i = 0; i < pronouns.size(); ++i) {
      if (pronouns[i]->accent == AccentLabel::LPlusHStar && baseline[i])
        exclusions[pronouns[i]->id] = *baseline[i];
    }
    // Availability: an accented pronoun needs a compatible referent that is
    // neither its text-predicted one nor one held by an unaccented
    // co-utterance pronoun.
    std::vector<EntityId> pool = domain_pool(prior, utt);
    for (size_t i = 0; i < pronouns.size(); ++i) {
      auto excl = exclusions.find(pronouns[i]->id);
      if (excl == exclusions.end()) continue;
      std::set<EntityId> claimed;
      for (size_t j = 0; j < pronouns.size(); ++j) {
        if (j == i || pronouns[j]->accent == AccentLabel::LPlusHStar) continue;
        if (baseline[j]) claimed.insert(*baseline[j]);
      }
      bool found = false;
      for (const EntityId& entity : pool) {
        if (entity == excl->second) continue;
        if (claimed.count(entity)) continue;
        if (compatible(*pronouns[i], entity, registry)) {
          found = true;
          break;
        }
      }
      if (!found) {
        infelicities.push_back({Severity::Infelicity,
                                diag::kNoAlternateReferent,
                                diag::kNoAlternateReferentMsg, utt.id,
                                pronouns[i]->id});
        exclusions.erase(excl);
      }
    }
  }

  Enumeration e = build_domains(prior, utt, registry, exclusions);
  std::vector<EntityId> sorted_pool = sorted_pool_ids(prior, utt);

  struct Candidate {
    Picks picks;
    Interpretation interp;
    bool rule1;
  };
  std::vector<Candidate> candidates;
  for (const Picks& picks : all_picks(e)) {
    if (!distinct_ok(picks)) continue;
    Interpretation interp = materialize(prior, utt, e.pronouns, picks, mode);
    bool r1 = rule1_ok(interp, e.pronouns, picks);
    candidates.push_back({picks, std::move(interp), r1});
  }

  Resolution result;
  result.diagnostics = infelicities;
  bool relaxed = false;
  std::vector<Candidate*> survivors;
  for (Candidate& c : candidates) {
    if (c.rule1) survivors.push_back(&c);
  }
  if (survivors.empty() && !candidates.empty()) {
    relaxed = true;
    for (Candidate& c : candidates) survivors.push_back(&c);
  }

  std::vector<bool> unresolved = e.unresolved;
  if (survivors.empty()) {
    // No viable assignment at all: null every pronoun.
    Picks nulls(pronouns.size());
    Interpretation interp = materialize(prior, utt, pronouns, nulls, mode);
    interp.key = score(prior, utt, pronouns, nulls, interp, mode, baseline,
                       sorted_pool, false);
    result.chosen = std::move(interp);
    unresolved.assign(pronouns.size(), true);
  } else {
    Candidate* best = nullptr;
    for (Candidate* c : survivors) {
      c->interp.key = score(prior, utt, e.pronouns, c->picks, c->interp, mode,
                            baseline, sorted_pool, relaxed && !c->rule1);
      if (!best || rank_key_compare(c->interp.key, best->interp.key) < 0)
        best = c;
    }
    result.chosen = best->interp;
    if (relaxed) {
      result.diagnostics.push_back({Severity::Warning, diag::kRule1Relaxed,
                                    diag::kRule1RelaxedMsg, utt.id,
                                    std::nullopt});
    }
  }
  if (mode == Mode::Prosodic) {
    for (const Mention* p : pronouns) {
      if (p->accent == AccentLabel::HPlusLStar) {
        result.diagnostics.push_back({Severity::Warning,
                                      diag::kLowConfidenceTraversal,
                                      diag::kLowConfidenceTraversalMsg, utt.id,
                                      p->id});
      }
    }
  }
  for (size_t i = 0; i < pronouns.size(); ++i) {
    if (unresolved[i]) {
      result.diagnostics.push_back({Severity::Error, diag::kUnresolvedPronoun,
                                    diag::kUnresolvedPronounMsg, utt.id,
                                    pronouns[i]->id});
    }
  }
  return result;
}

Picks baseline_picks(const CenteringState& prior, const Utterance& utt,
                     const EntityMap& registry, std::size_t bound) {
  Utterance stripped = stripped_copy(utt);
  Resolution r = resolve_one(prior, stripped, registry, Mode::TextOnly, bound);
  std::vector<const Mention*> pronouns = pronouns_of(utt);
  Picks picks;
  for (const Mention* p : pronouns) picks.push_back(r.chosen.resolutions.at(p->id));
  return picks;
}

CenteringState advance(const CenteringState& prior,
                       const Interpretation& chosen) {
  (void)prior;
  std::optional<EntityId> cb = chosen.cb;
  if (!cb && !chosen.cf.empty()) cb = chosen.cf.front();
  return CenteringState(cb, chosen.cf);
}

}  // namespace

std::vector<ScoredInterpretation> enumerate_all(const CenteringState& prior,
                                                const Utterance& utterance,
                                                const EntityMap& registry,
                                                Mode mode, std::size_t bound) {
  if (raw_product(prior, utterance, registry) > bound) {
    throw SearchSpaceTooLarge("utterance '" + utterance.id +
                              "': candidate space exceeds bound of " +
                              std::to_string(bound));
  }
  std::vector<const Mention*> pronouns = pronouns_of(utterance);
  Picks baseline(pronouns.size());
  std::map<MentionId, EntityId> exclusions;
  if (mode == Mode::Prosodic) {
    baseline = baseline_picks(prior, utterance, registry, bound);
    for (size_t i = 0; i < pronouns.size(); ++i) {
      if (pronouns[i]->accent == AccentLabel::LPlusHStar && baseline[i])
        exclusions[pronouns[i]->id] = *baseline[i];
    }
  }
  Enumeration e = build_domains(prior, utterance, registry, {});
  std::vector<EntityId> sorted_pool = sorted_pool_ids(prior, utterance);
  std::vector<ScoredInterpretation> out;
  for (const Picks& picks : all_picks(e)) {
    ScoredInterpretation scored;
    scored.interp = materialize(prior, utterance, e.pronouns, picks, mode);
    scored.distinctness_ok = distinct_ok(picks);
    scored.rule1_ok = rule1_ok(scored.interp, e.pronouns, picks);
    scored.exclusion_ok = true;
    for (size_t i = 0; i < e.pronouns.size(); ++i) {
      auto excl = exclusions.find(e.pronouns[i]->id);
      if (excl != exclusions.end() && picks[i] && *picks[i] == excl->second)
        scored.exclusion_ok = false;
    }
    scored.interp.key = score(prior, utterance, e.pronouns, picks,
                              scored.interp, mode, baseline, sorted_pool,
                              false);
    out.push_back(std::move(scored));
  }
  return out;
}

UtteranceTrace oracle_resolve_utterance(const CenteringState& prior,
                                        const Utterance& utterance,
                                        const EntityMap& registry, Mode mode,
                                        std::size_t bound) {
  Resolution r = resolve_one(prior, utterance, registry, mode, bound);
  UtteranceTrace trace;
  trace.utterance = utterance.id;
  trace.chosen = std::move(r.chosen);
  trace.diagnostics = std::move(r.diagnostics);
  trace.prior_cf = prior.cf();
  return trace;
}

std::vector<UtteranceTrace> oracle_resolve_document(const Document& doc,
                                                    Mode mode,
                                                    std::size_t bound) {
  EntityMap registry = build_entity_map(doc);
  std::vector<UtteranceTrace> traces;
  CenteringState state;
  for (const Utterance& utt : doc.utterances) {
    UtteranceTrace trace =
        oracle_resolve_utterance(state, utt, registry, mode, bound);
    state = advance(state, trace.chosen);
    traces.push_back(std::move(trace));
  }
  return traces;
}

}  // namespace procent::oracle
