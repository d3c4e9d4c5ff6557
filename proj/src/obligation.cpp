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

#include "procent/obligation.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "procent/centering.hpp"
#include "procent/prosody.hpp"
#include "procent/resolver.hpp"

namespace procent::obligation {

using json = nlohmann::ordered_json;

const std::string& to_string(Verdict v) {
  static const std::string kRequired = "Required";
  static const std::string kNotRequired = "NotRequired";
  static const std::string kUnsatisfiable = "Unsatisfiable";
  switch (v) {
    case Verdict::Required: return kRequired;
    case Verdict::NotRequired: return kNotRequired;
    case Verdict::Unsatisfiable: break;
  }
  return kUnsatisfiable;
}

bool ObligationResult::has_unsatisfiable() const {
  return std::any_of(obligations.begin(), obligations.end(),
                     [](const AccentObligation& o) {
                       return o.verdict == Verdict::Unsatisfiable;
                     });
}

namespace {

std::vector<Mention*> pronouns_of(Utterance& utt) {
  std::vector<Mention*> out;
  for (Mention& m : utt.mentions) {
    if (m.kind == MentionKind::Pronoun) out.push_back(&m);
  }
  return out;
}

centering::ResolutionMap gold_resolutions(const Utterance& utt) {
  centering::ResolutionMap gold;
  for (const Mention& m : utt.mentions) {
    if (m.kind != MentionKind::Pronoun) continue;
    if (!m.entity) {
      throw MissingGoldError("pronoun '" + m.id +
                             "' lacks a gold entity annotation");
    }
    gold[m.id] = *m.entity;
  }
  return gold;
}

// The attentional state the speaker intends after this utterance: gold
// resolutions materialized under the utterance's accents, with the head of
// the center list standing in when no center was carried over.
CenteringState advance_gold(const CenteringState& prior, const Utterance& utt,
                            const centering::ResolutionMap& gold) {
  Interpretation interp;
  interp.resolutions = gold;
  interp.cf = centering::build_cf(utt, gold);
  std::set<EntityId> realized;
  for (const Mention& m : utt.mentions) {
    if (m.kind == MentionKind::Pronoun) {
      const auto& r = gold.at(m.id);
      if (r) realized.insert(*r);
    } else if (m.entity) {
      realized.insert(*m.entity);
    }
  }
  interp.cb = centering::determine_cb(prior, realized);
  if (auto forced = prosody::contrastive_cb(interp, utt)) interp.cb = forced;
  if (!interp.cb && !interp.cf.empty()) interp.cb = interp.cf.front();
  return CenteringState(interp.cb, interp.cf);
}

}  // namespace

ObligationResult accent_obligation(const Document& doc) {
  ObligationResult result;
  result.annotated = doc;
  EntityMap registry = build_entity_map(doc);
  CenteringState state;

  for (Utterance& utt : result.annotated.utterances) {
    centering::ResolutionMap gold = gold_resolutions(utt);
    std::vector<Mention*> pronouns = pronouns_of(utt);

    Utterance stripped = utt;
    for (Mention& m : stripped.mentions) m.accent = AccentLabel::Unaccented;
    UtteranceTrace baseline_trace =
        centering::resolve_utterance_textonly(state, stripped, registry);
    const centering::ResolutionMap& baseline = baseline_trace.chosen.resolutions;

    std::vector<EntityId> pool = centering::antecedent_pool(state, utt);
    std::vector<AccentObligation> local;
    for (Mention* p : pronouns) {
      const EntityId& intended = *gold.at(p->id);
      const std::optional<EntityId>& predicted = baseline.at(p->id);
      AccentObligation ob;
      ob.utterance = utt.id;
      ob.mention = p->id;
      if (predicted && *predicted == intended) {
        ob.verdict = Verdict::NotRequired;
        ob.accent = AccentLabel::Unaccented;
        ob.rationale = "text already selects the intended cospecifier";
      } else {
        bool reachable = false;
        auto reg = registry.find(intended);
        if (reg != registry.end() &&
            std::find(pool.begin(), pool.end(), intended) != pool.end() &&
            agreement_compatible(p->agreement, reg->second.agreement)) {
          reachable = true;
        }
        if (!reachable) {
          ob.verdict = Verdict::Unsatisfiable;
          ob.accent = AccentLabel::Unaccented;
          ob.rationale = "intended cospecifier '" + intended +
                         "' is outside the attentional state";
        } else {
          ob.verdict = Verdict::Required;
          ob.accent = AccentLabel::LPlusHStar;
          ob.rationale =
              (predicted ? "text predicts '" + *predicted + "'"
                         : std::string("text predicts no resolvable "
                                       "cospecifier")) +
              "; intended cospecifier is '" + intended + "'";
        }
      }
      p->accent = ob.accent;
      local.push_back(std::move(ob));
    }

    // Verify that interpreting the annotated utterance recovers the intent;
    // accents alone cannot always discharge the obligation.
    if (!pronouns.empty()) {
      UtteranceTrace recovered = prosody::prosodic_resolve(state, utt, registry);
      for (size_t i = 0; i < pronouns.size(); ++i) {
        if (local[i].verdict == Verdict::Unsatisfiable) continue;
        const auto& got = recovered.chosen.resolutions.at(pronouns[i]->id);
        const EntityId& intended = *gold.at(pronouns[i]->id);
        if (!got || *got != intended) {
          local[i].verdict = Verdict::Unsatisfiable;
          local[i].accent = AccentLabel::Unaccented;
          local[i].rationale = "no accent pattern recovers the intended "
                               "cospecifier '" +
                               intended + "'";
          pronouns[i]->accent = AccentLabel::Unaccented;
        }
      }
    }

    for (AccentObligation& ob : local)
      result.obligations.push_back(std::move(ob));
    state = advance_gold(state, utt, gold);
  }
  return result;
}

bool round_trip(const Document& doc) {
  ObligationResult result = accent_obligation(doc);
  if (result.has_unsatisfiable()) {
    throw std::invalid_argument(
        "round_trip: document has unsatisfiable accent obligations");
  }
  std::vector<UtteranceTrace> traces =
      resolve_document(result.annotated, Mode::Prosodic);
  for (size_t i = 0; i < doc.utterances.size(); ++i) {
    for (const Mention& m : doc.utterances[i].mentions) {
      if (m.kind != MentionKind::Pronoun) continue;
      const auto& got = traces[i].chosen.resolutions.at(m.id);
      if (!got || *got != *m.entity) return false;
    }
  }
  return true;
}

EvalReport evaluate(const Document& doc) {
  EvalReport report;
  std::vector<UtteranceTrace> traces = resolve_document(doc, Mode::Prosodic);
  CenteringState gold_state;
  for (size_t i = 0; i < doc.utterances.size(); ++i) {
    const Utterance& utt = doc.utterances[i];
    centering::ResolutionMap gold = gold_resolutions(utt);
    for (const auto& [mention, intended] : gold) {
      ++report.pronoun_total;
      const auto& got = traces[i].chosen.resolutions.at(mention);
      if (got && intended && *got == *intended) ++report.pronoun_correct;
    }
    for (const Diagnostic& d : traces[i].diagnostics) {
      if (d.code == diag::kNoAlternateReferent) ++report.infelicities;
    }
    // Gold transition comes from materializing the intended resolutions in
    // the same fold.
    Interpretation gold_interp;
    gold_interp.resolutions = gold;
    gold_interp.cf = centering::build_cf(utt, gold);
    std::set<EntityId> realized;
    for (const Mention& m : utt.mentions) {
      if (m.kind == MentionKind::Pronoun) {
        const auto& r = gold.at(m.id);
        if (r) realized.insert(*r);
      } else if (m.entity) {
        realized.insert(*m.entity);
      }
    }
    gold_interp.cb = centering::determine_cb(gold_state, realized);
    if (auto forced = prosody::contrastive_cb(gold_interp, utt))
      gold_interp.cb = forced;
    Transition gold_transition = centering::classify_transition(
        gold_state, gold_interp.cb, gold_interp.cf);
    report.confusion[static_cast<int>(gold_transition)]
                    [static_cast<int>(traces[i].chosen.transition)] += 1;
    if (!gold_interp.cb && !gold_interp.cf.empty())
      gold_interp.cb = gold_interp.cf.front();
    gold_state = CenteringState(gold_interp.cb, gold_interp.cf);
  }
  return report;
}

std::string emit_obligations(const std::vector<AccentObligation>& obligations,
                             io::TraceFormat format) {
  if (format == io::TraceFormat::Json) {
    std::string out;
    for (const AccentObligation& ob : obligations) {
      json obj;
      obj["utterance"] = ob.utterance;
      obj["mention"] = ob.mention;
      obj["verdict"] = to_string(ob.verdict);
      if (ob.accent == AccentLabel::Unaccented) obj["accent"] = nullptr;
      else obj["accent"] = to_string(ob.accent);
      obj["rationale"] = ob.rationale;
      out += obj.dump();
      out += '\n';
    }
    return out;
  }
  std::string out;
  for (const AccentObligation& ob : obligations) {
    out += ob.utterance + " " + ob.mention + " " + to_string(ob.verdict);
    if (ob.accent != AccentLabel::Unaccented) out += " " + to_string(ob.accent);
    out += ": " + ob.rationale + "\n";
  }
  return out;
}

std::string emit_eval(const EvalReport& report, io::TraceFormat format) {
  static const Transition kOrder[] = {Transition::Initial, Transition::Continue,
                                      Transition::Retain, Transition::Shift};
  if (format == io::TraceFormat::Json) {
    json obj;
    obj["pronoun_total"] = report.pronoun_total;
    obj["pronoun_correct"] = report.pronoun_correct;
    obj["accuracy"] = report.accuracy();
    obj["infelicities"] = report.infelicities;
    json confusion;
    for (Transition g : kOrder) {
      json row;
      for (Transition p : kOrder) {
        row[to_string(p)] =
            report.confusion[static_cast<int>(g)][static_cast<int>(p)];
      }
      confusion[to_string(g)] = row;
    }
    obj["transition_confusion"] = confusion;
    return obj.dump() + "\n";
  }
  std::string out;
  out += "pronouns: " + std::to_string(report.pronoun_correct) + "/" +
         std::to_string(report.pronoun_total) +
         " accuracy: " + std::to_string(report.accuracy()) + "\n";
  out += "infelicities: " + std::to_string(report.infelicities) + "\n";
  for (Transition g : kOrder) {
    for (Transition p : kOrder) {
      int count = report.confusion[static_cast<int>(g)][static_cast<int>(p)];
      if (count > 0) {
        out += "gold " + to_string(g) + " -> " + to_string(p) + ": " +
               std::to_string(count) + "\n";
      }
    }
  }
  return out;
}

}  // namespace procent::obligation
