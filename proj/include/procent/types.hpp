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

#ifndef PROCENT_TYPES_HPP_
#define PROCENT_TYPES_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace procent {

using EntityId = std::string;
using MentionId = std::string;
using UtteranceId = std::string;

// The six accent forms plus the absence of an accent. Labels enter the
// system as symbolic ToBI-style strings; no acoustic analysis happens here.
enum class AccentLabel {
  Unaccented,
  HStar,       // H*
  LStar,       // L*
  LPlusHStar,  // L+H*  (contrastive stress)
  LStarPlusH,  // L*+H
  HStarPlusL,  // H*+L
  HPlusLStar,  // H+L*
};

// Surface form, e.g. "L+H*". Unaccented maps to the empty string.
const std::string& to_string(AccentLabel label);

// Parses a surface label. Empty string means Unaccented; unknown labels
// yield nullopt. The accepted set is exactly the six forms above.
std::optional<AccentLabel> parse_accent_label(const std::string& surface);

// All valid non-empty surface labels, for error messages.
const std::vector<std::string>& accent_label_surfaces();

enum class Gender { Masc, Fem, Neut };
enum class NumberFeature { Sg, Pl };

// Agreement features with wildcard semantics: an unspecified field matches
// anything. person, when present, is 1, 2 or 3.
struct Agreement {
  std::optional<Gender> gender;
  std::optional<NumberFeature> number;
  std::optional<int> person;

  bool operator==(const Agreement&) const = default;
};

// True iff every field specified in both sides is equal.
bool agreement_compatible(const Agreement& a, const Agreement& b);

enum class EntityOrigin { Textual, Deictic };

// A discourse referent. ids are unique within a document.
struct Entity {
  EntityId id;
  Agreement agreement;
  EntityOrigin origin = EntityOrigin::Textual;

  bool operator==(const Entity&) const = default;
};

enum class MentionKind { Name, NominalPhrase, Pronoun };

enum class GrammaticalRole { Subject, DirectObject, IndirectObject, Other };

// Rank used for center-list ordering: Subject < DirectObject <
// IndirectObject < Other.
int role_rank(GrammaticalRole role);

const std::string& to_string(MentionKind kind);
const std::string& to_string(GrammaticalRole role);
std::optional<MentionKind> parse_mention_kind(const std::string& s);
std::optional<GrammaticalRole> parse_role(const std::string& s);

// One referring expression inside an utterance. Non-pronoun mentions carry
// the entity they realize; pronoun mentions carry it only as a gold
// annotation.
struct Mention {
  MentionId id;
  std::string surface;
  MentionKind kind = MentionKind::Name;
  GrammaticalRole role = GrammaticalRole::Other;
  Agreement agreement;
  AccentLabel accent = AccentLabel::Unaccented;
  std::optional<EntityId> entity;
  int surface_index = 0;

  bool operator==(const Mention&) const = default;
};

// An utterance: mentions in surface order plus entities injected by
// concurrent deictic gesture.
struct Utterance {
  UtteranceId id;
  std::vector<Mention> mentions;
  std::vector<EntityId> deixis;

  bool operator==(const Utterance&) const = default;
};

struct Document {
  std::string id;
  std::vector<Entity> entities;
  std::vector<Utterance> utterances;

  bool operator==(const Document&) const = default;
};

using EntityMap = std::map<EntityId, Entity>;

// Index of declared entities by id. Assumes ids are unique (the parser
// enforces that); later duplicates would be dropped.
EntityMap build_entity_map(const Document& doc);

// Attentional state after an utterance: the backward-looking center and the
// ordered forward-looking center list (head = index 0).
class CenteringState {
 public:
  CenteringState() = default;

  // Throws std::invalid_argument if cf contains duplicates or cb is not a
  // member of cf.
  CenteringState(std::optional<EntityId> cb, std::vector<EntityId> cf);

  const std::optional<EntityId>& cb() const { return cb_; }
  const std::vector<EntityId>& cf() const { return cf_; }

  bool operator==(const CenteringState&) const = default;

 private:
  std::optional<EntityId> cb_;
  std::vector<EntityId> cf_;
};

enum class Transition { Initial, Continue, Retain, Shift };

const std::string& to_string(Transition t);

// Lexicographic ranking key; smaller is better. tiebreak makes the order
// total over the interpretations of a single utterance. shift_waived is
// trace metadata, not part of the ordering.
struct RankKey {
  int transition_cost = 0;
  int cb_pref_violations = 0;
  int traversal_cost = 0;
  std::vector<int> tiebreak;
  bool shift_waived = false;

  bool operator==(const RankKey&) const = default;
};

// -1, 0 or 1. Compares (transition_cost, cb_pref_violations, traversal_cost,
// tiebreak) lexicographically.
int rank_key_compare(const RankKey& k1, const RankKey& k2);

inline bool rank_key_less(const RankKey& k1, const RankKey& k2) {
  return rank_key_compare(k1, k2) < 0;
}

// A candidate assignment of every pronoun of one utterance. A nullopt
// resolution is the null marker used when no compatible antecedent exists.
struct Interpretation {
  std::map<MentionId, std::optional<EntityId>> resolutions;
  std::optional<EntityId> cb;
  std::vector<EntityId> cf;
  Transition transition = Transition::Initial;
  RankKey key;

  bool operator==(const Interpretation&) const = default;
};

enum class Severity { Info, Warning, Infelicity, Error };

const std::string& to_string(Severity s);

namespace diag {
// The fixed diagnostic vocabulary. Codes are stable strings; messages are
// canonical so that independent resolvers emit identical diagnostics.
inline constexpr const char* kNoAlternateReferent = "NO_ALTERNATE_REFERENT";
inline constexpr const char* kRule1Relaxed = "RULE1_RELAXED";
inline constexpr const char* kLowConfidenceTraversal = "LOW_CONFIDENCE_TRAVERSAL";
inline constexpr const char* kUnresolvedPronoun = "UNRESOLVED_PRONOUN";

inline constexpr const char* kNoAlternateReferentMsg =
    "accented pronoun has no alternate referent available";
inline constexpr const char* kRule1RelaxedMsg =
    "pronominalization constraint relaxed: no candidate realizes the "
    "backward center as a pronoun";
inline constexpr const char* kLowConfidenceTraversalMsg =
    "accent conveys uncertainty about the traversal of the center list";
inline constexpr const char* kUnresolvedPronounMsg =
    "pronoun has no agreement-compatible antecedent";
}  // namespace diag

struct Diagnostic {
  Severity severity = Severity::Info;
  std::string code;
  std::string message;
  UtteranceId utterance;
  std::optional<MentionId> mention;

  bool operator==(const Diagnostic&) const = default;
};

// Full record of how one utterance was resolved.
struct UtteranceTrace {
  UtteranceId utterance;
  Interpretation chosen;
  std::vector<Diagnostic> diagnostics;
  std::vector<EntityId> prior_cf;

  bool operator==(const UtteranceTrace&) const = default;
};

// Resolution mode. TextOnly ignores accent labels entirely; Prosodic applies
// their attentional interpretation.
enum class Mode { TextOnly, Prosodic };

// Base class for the library's recoverable errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnresolvedPronounError : public Error {
 public:
  using Error::Error;
};

class MissingGoldError : public Error {
 public:
  using Error::Error;
};

}  // namespace procent

#endif  // PROCENT_TYPES_HPP_
