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

#ifndef PROCENT_TESTS_GENERATORS_HPP_
#define PROCENT_TESTS_GENERATORS_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "procent/types.hpp"

// Random-document generator shared by the property, differential and
// acceptance suites.

namespace procent::testgen {

struct GenOptions {
  int max_utterances = 3;
  int max_entities = 3;
  int max_pronouns_per_utterance = 2;
  bool with_gold = false;
  // Restrict accent sampling.
  bool no_accents = false;
  bool exclude_contrastive = false;  // drop L+H* and L*+H
};

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline Agreement random_agreement(std::mt19937& rng) {
  Agreement a;
  int g = pick(rng, 0, 3);
  if (g < 3) a.gender = static_cast<Gender>(g);
  if (chance(rng, 0.8))
    a.number = chance(rng, 0.85) ? NumberFeature::Sg : NumberFeature::Pl;
  if (chance(rng, 0.7)) a.person = chance(rng, 0.9) ? 3 : pick(rng, 1, 2);
  return a;
}

// Wildcard some fields so pronouns underspecify, as real ones do.
inline Agreement loosened(std::mt19937& rng, Agreement a) {
  if (chance(rng, 0.25)) a.number.reset();
  if (chance(rng, 0.4)) a.person.reset();
  return a;
}

inline AccentLabel random_accent(std::mt19937& rng, const GenOptions& opt) {
  if (opt.no_accents || chance(rng, 0.45)) return AccentLabel::Unaccented;
  if (opt.exclude_contrastive) {
    static const AccentLabel kSoft[] = {AccentLabel::HStar, AccentLabel::LStar,
                                        AccentLabel::HStarPlusL,
                                        AccentLabel::HPlusLStar};
    return kSoft[pick(rng, 0, 3)];
  }
  static const AccentLabel kAll[] = {AccentLabel::HStar,      AccentLabel::LStar,
                                     AccentLabel::LPlusHStar, AccentLabel::LStarPlusH,
                                     AccentLabel::HStarPlusL, AccentLabel::HPlusLStar};
  return kAll[pick(rng, 0, 5)];
}

inline GrammaticalRole random_role(std::mt19937& rng) {
  static const GrammaticalRole kRoles[] = {
      GrammaticalRole::Subject, GrammaticalRole::DirectObject,
      GrammaticalRole::IndirectObject, GrammaticalRole::Other};
  return kRoles[pick(rng, 0, 3)];
}

inline Document random_document(std::mt19937& rng, const GenOptions& opt = {}) {
  Document doc;
  const int n_entities = pick(rng, 1, opt.max_entities);
  for (int i = 0; i < n_entities; ++i) {
    Entity e;
    e.id = "e" + std::to_string(i);
    e.agreement = random_agreement(rng);
    doc.entities.push_back(e);
  }
  auto random_entity = [&]() -> const Entity& {
    return doc.entities[static_cast<size_t>(pick(rng, 0, n_entities - 1))];
  };

  const int n_utts = pick(rng, 1, opt.max_utterances);
  int mention_counter = 0;
  for (int ui = 0; ui < n_utts; ++ui) {
    Utterance utt;
    utt.id = "u" + std::to_string(ui);
    const int n_nonpron = ui == 0 ? pick(rng, 1, 3) : pick(rng, 0, 2);
    const int n_pron =
        ui == 0 ? (chance(rng, 0.25) ? 1 : 0)
                : pick(rng, 0, opt.max_pronouns_per_utterance);

    std::vector<Mention> mentions;
    for (int i = 0; i < n_nonpron; ++i) {
      Mention m;
      m.id = "m" + std::to_string(mention_counter++);
      m.surface = "w" + m.id;
      m.kind = chance(rng, 0.6) ? MentionKind::Name : MentionKind::NominalPhrase;
      m.role = random_role(rng);
      m.entity = random_entity().id;
      m.accent = random_accent(rng, opt);  // inert on non-pronouns
      mentions.push_back(std::move(m));
    }
    for (int i = 0; i < n_pron; ++i) {
      Mention m;
      m.id = "m" + std::to_string(mention_counter++);
      m.surface = "p" + m.id;
      m.kind = MentionKind::Pronoun;
      m.role = random_role(rng);
      m.accent = random_accent(rng, opt);
      if (opt.with_gold) {
        // Gold must be agreement-compatible: derive the pronoun from its
        // intended referent.
        const Entity& target = random_entity();
        m.agreement = loosened(rng, target.agreement);
        m.entity = target.id;
      } else if (chance(rng, 0.75)) {
        m.agreement = loosened(rng, random_entity().agreement);
      } else {
        m.agreement = random_agreement(rng);
      }
      mentions.push_back(std::move(m));
    }
    // Random utterance-internal order.
    std::shuffle(mentions.begin(), mentions.end(), rng);
    for (size_t i = 0; i < mentions.size(); ++i)
      mentions[i].surface_index = static_cast<int>(i);
    utt.mentions = std::move(mentions);

    if (chance(rng, 0.15)) utt.deixis.push_back(random_entity().id);
    doc.utterances.push_back(std::move(utt));
  }

  // Mirror the parser: deictically injected entities carry that origin.
  std::set<EntityId> deictic;
  for (const Utterance& u : doc.utterances)
    for (const EntityId& e : u.deixis) deictic.insert(e);
  for (Entity& e : doc.entities)
    if (deictic.count(e.id)) e.origin = EntityOrigin::Deictic;
  return doc;
}

}  // namespace procent::testgen

#endif  // PROCENT_TESTS_GENERATORS_HPP_
