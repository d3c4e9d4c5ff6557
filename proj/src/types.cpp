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

#include "procent/types.hpp"

#include <algorithm>
#include <set>

namespace procent {

const std::string& to_string(AccentLabel label) {
  static const std::string kUnaccented = "";
  static const std::string kHStar = "H*";
  static const std::string kLStar = "L*";
  static const std::string kLPlusHStar = "L+H*";
  static const std::string kLStarPlusH = "L*+H";
  static const std::string kHStarPlusL = "H*+L";
  static const std::string kHPlusLStar = "H+L*";
  switch (label) {
    case AccentLabel::HStar: return kHStar;
    case AccentLabel::LStar: return kLStar;
    case AccentLabel::LPlusHStar: return kLPlusHStar;
    case AccentLabel::LStarPlusH: return kLStarPlusH;
    case AccentLabel::HStarPlusL: return kHStarPlusL;
    case AccentLabel::HPlusLStar: return kHPlusLStar;
    case AccentLabel::Unaccented: break;
  }
  return kUnaccented;
}

std::optional<AccentLabel> parse_accent_label(const std::string& surface) {
  if (surface.empty()) return AccentLabel::Unaccented;
  if (surface == "H*") return AccentLabel::HStar;
  if (surface == "L*") return AccentLabel::LStar;
  if (surface == "L+H*") return AccentLabel::LPlusHStar;
  if (surface == "L*+H") return AccentLabel::LStarPlusH;
  if (surface == "H*+L") return AccentLabel::HStarPlusL;
  if (surface == "H+L*") return AccentLabel::HPlusLStar;
  return std::nullopt;
}

const std::vector<std::string>& accent_label_surfaces() {
  static const std::vector<std::string> kSurfaces = {"H*",   "L*",   "L+H*",
                                                     "L*+H", "H*+L", "H+L*"};
  return kSurfaces;
}

bool agreement_compatible(const Agreement& a, const Agreement& b) {
  if (a.gender && b.gender && *a.gender != *b.gender) return false;
  if (a.number && b.number && *a.number != *b.number) return false;
  if (a.person && b.person && *a.person != *b.person) return false;
  return true;
}

int role_rank(GrammaticalRole role) {
  switch (role) {
    case GrammaticalRole::Subject: return 0;
    case GrammaticalRole::DirectObject: return 1;
    case GrammaticalRole::IndirectObject: return 2;
    case GrammaticalRole::Other: break;
  }
  return 3;
}

const std::string& to_string(MentionKind kind) {
  static const std::string kName = "name";
  static const std::string kNp = "np";
  static const std::string kPron = "pron";
  switch (kind) {
    case MentionKind::Name: return kName;
    case MentionKind::NominalPhrase: return kNp;
    case MentionKind::Pronoun: break;
  }
  return kPron;
}

const std::string& to_string(GrammaticalRole role) {
  static const std::string kSubj = "subj";
  static const std::string kDobj = "dobj";
  static const std::string kIobj = "iobj";
  static const std::string kOther = "other";
  switch (role) {
    case GrammaticalRole::Subject: return kSubj;
    case GrammaticalRole::DirectObject: return kDobj;
    case GrammaticalRole::IndirectObject: return kIobj;
    case GrammaticalRole::Other: break;
  }
  return kOther;
}

std::optional<MentionKind> parse_mention_kind(const std::string& s) {
  if (s == "name") return MentionKind::Name;
  if (s == "np") return MentionKind::NominalPhrase;
  if (s == "pron") return MentionKind::Pronoun;
  return std::nullopt;
}

std::optional<GrammaticalRole> parse_role(const std::string& s) {
  if (s == "subj") return GrammaticalRole::Subject;
  if (s == "dobj") return GrammaticalRole::DirectObject;
  if (s == "iobj") return GrammaticalRole::IndirectObject;
  if (s == "other") return GrammaticalRole::Other;
  return std::nullopt;
}

EntityMap build_entity_map(const Document& doc) {
  EntityMap map;
  for (const Entity& e : doc.entities) map.emplace(e.id, e);
  return map;
}

CenteringState::CenteringState(std::optional<EntityId> cb,
                               std::vector<EntityId> cf)
    : cb_(std::move(cb)), cf_(std::move(cf)) {
  std::set<EntityId> seen;
  for (const EntityId& e : cf_) {
    if (!seen.insert(e).second) {
      throw std::invalid_argument("centering state: duplicate entity in cf: " +
                                  e);
    }
  }
  if (cb_ && !seen.count(*cb_)) {
    throw std::invalid_argument("centering state: cb not a member of cf: " +
                                *cb_);
  }
}

const std::string& to_string(Transition t) {
  static const std::string kInitial = "Initial";
  static const std::string kContinue = "Continue";
  static const std::string kRetain = "Retain";
  static const std::string kShift = "Shift";
  switch (t) {
    case Transition::Initial: return kInitial;
    case Transition::Continue: return kContinue;
    case Transition::Retain: return kRetain;
    case Transition::Shift: break;
  }
  return kShift;
}

int rank_key_compare(const RankKey& k1, const RankKey& k2) {
  if (k1.transition_cost != k2.transition_cost)
    return k1.transition_cost < k2.transition_cost ? -1 : 1;
  if (k1.cb_pref_violations != k2.cb_pref_violations)
    return k1.cb_pref_violations < k2.cb_pref_violations ? -1 : 1;
  if (k1.traversal_cost != k2.traversal_cost)
    return k1.traversal_cost < k2.traversal_cost ? -1 : 1;
  if (k1.tiebreak != k2.tiebreak)
    return std::lexicographical_compare(k1.tiebreak.begin(), k1.tiebreak.end(),
                                        k2.tiebreak.begin(), k2.tiebreak.end())
               ? -1
               : 1;
  return 0;
}

const std::string& to_string(Severity s) {
  static const std::string kInfo = "Info";
  static const std::string kWarning = "Warning";
  static const std::string kInfelicity = "Infelicity";
  static const std::string kError = "Error";
  switch (s) {
    case Severity::Info: return kInfo;
    case Severity::Warning: return kWarning;
    case Severity::Infelicity: return kInfelicity;
    case Severity::Error: break;
  }
  return kError;
}

}  // namespace procent
