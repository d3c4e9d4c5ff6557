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

#ifndef PROCENT_OBLIGATION_HPP_
#define PROCENT_OBLIGATION_HPP_

#include <string>
#include <vector>

#include "procent/corpus_io.hpp"
#include "procent/types.hpp"

// Generation direction: given the cospecifier the speaker intends for every
// pronoun, decide which pronouns must carry a contrastive accent for the
// hearer to recover that intent.

namespace procent::obligation {

enum class Verdict { Required, NotRequired, Unsatisfiable };

const std::string& to_string(Verdict v);

struct AccentObligation {
  UtteranceId utterance;
  MentionId mention;
  Verdict verdict = Verdict::NotRequired;
  // Accent carried by the annotated document: L+H* for Required, otherwise
  // none. An unsatisfiable obligation is left unaccented.
  AccentLabel accent = AccentLabel::Unaccented;
  std::string rationale;
};

struct ObligationResult {
  std::vector<AccentObligation> obligations;
  Document annotated;

  bool has_unsatisfiable() const;
};

// Folds through the document on the speaker's intended attentional state
// (gold resolutions). A pronoun whose intended cospecifier differs from the
// text prediction needs L+H*; one whose intent the text already conveys
// needs nothing; one whose intent no accent pattern can convey (the referent
// is outside the attentional state, or interpretation of the annotated
// utterance fails to recover the intent) is unsatisfiable. Throws
// MissingGoldError if any pronoun lacks a gold entity.
ObligationResult accent_obligation(const Document& doc);

// True iff prosodic interpretation of the annotated document reproduces the
// gold resolutions exactly. Precondition: accent_obligation reports no
// unsatisfiable verdict (throws std::invalid_argument otherwise).
bool round_trip(const Document& doc);

// Interpretation-vs-gold metrics for an annotated document.
struct EvalReport {
  int pronoun_total = 0;
  int pronoun_correct = 0;
  int infelicities = 0;
  // confusion[gold][predicted], indexed by Transition order
  // (Initial, Continue, Retain, Shift).
  int confusion[4][4] = {};

  double accuracy() const {
    return pronoun_total == 0
               ? 1.0
               : static_cast<double>(pronoun_correct) / pronoun_total;
  }
};

// Resolves the document in prosodic mode and scores it against the gold
// annotations. Throws MissingGoldError if any pronoun lacks gold.
EvalReport evaluate(const Document& doc);

std::string emit_obligations(const std::vector<AccentObligation>& obligations,
                             io::TraceFormat format);
std::string emit_eval(const EvalReport& report, io::TraceFormat format);

}  // namespace procent::obligation

#endif  // PROCENT_OBLIGATION_HPP_
