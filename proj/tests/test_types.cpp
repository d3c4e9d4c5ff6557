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

#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "procent/types.hpp"

using namespace procent;

namespace {

Agreement agr(std::optional<Gender> g, std::optional<NumberFeature> n,
              std::optional<int> p) {
  return Agreement{g, n, p};
}

}  // namespace

TEST_CASE("accent labels round-trip through their surface forms") {
  for (AccentLabel label :
       {AccentLabel::Unaccented, AccentLabel::HStar, AccentLabel::LStar,
        AccentLabel::LPlusHStar, AccentLabel::LStarPlusH,
        AccentLabel::HStarPlusL, AccentLabel::HPlusLStar}) {
    CHECK(parse_accent_label(to_string(label)) == label);
  }
  CHECK(parse_accent_label("") == AccentLabel::Unaccented);
  CHECK(parse_accent_label("X*") == std::nullopt);
  CHECK(parse_accent_label("l+h*") == std::nullopt);
  CHECK(accent_label_surfaces().size() == 6);
}

TEST_CASE("agreement compatibility") {
  auto masc_sg_3 = agr(Gender::Masc, NumberFeature::Sg, 3);
  CHECK(agreement_compatible(masc_sg_3, masc_sg_3));
  CHECK_FALSE(agreement_compatible(masc_sg_3, agr(Gender::Fem, NumberFeature::Sg, 3)));
  CHECK(agreement_compatible(agr(Gender::Masc, std::nullopt, 3), masc_sg_3));
  CHECK(agreement_compatible(Agreement{}, masc_sg_3));
  CHECK_FALSE(agreement_compatible(agr(std::nullopt, NumberFeature::Pl, std::nullopt),
                                   masc_sg_3));
}

TEST_CASE("agreement compatibility is symmetric and reflexive") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    Agreement a = testgen::random_agreement(rng);
    Agreement b = testgen::random_agreement(rng);
    CHECK(agreement_compatible(a, a));
    CHECK(agreement_compatible(a, b) == agreement_compatible(b, a));
  }
}

TEST_CASE("rank key comparison is lexicographic") {
  RankKey a{0, 0, 0, {}, false};
  RankKey b{1, 0, 0, {}, false};
  CHECK(rank_key_compare(a, b) < 0);

  RankKey c{1, 0, 2, {0}, false};
  RankKey d{1, 1, 0, {0}, false};
  CHECK(rank_key_compare(c, d) < 0);

  RankKey e{1, 0, 2, {0}, false};
  RankKey f{1, 0, 2, {1}, false};
  CHECK(rank_key_compare(e, f) < 0);

  CHECK(rank_key_compare(a, a) == 0);
}

TEST_CASE("rank key comparison is a total order") {
  std::mt19937 rng(11);
  auto random_key = [&rng]() {
    RankKey k;
    k.transition_cost = testgen::pick(rng, 0, 2);
    k.cb_pref_violations = testgen::pick(rng, 0, 2);
    k.traversal_cost = testgen::pick(rng, 0, 3);
    int n = testgen::pick(rng, 0, 3);
    for (int i = 0; i < n; ++i) k.tiebreak.push_back(testgen::pick(rng, 0, 2));
    return k;
  };
  for (int i = 0; i < 500; ++i) {
    RankKey a = random_key();
    RankKey b = random_key();
    RankKey c = random_key();
    // antisymmetry
    CHECK(rank_key_compare(a, b) == -rank_key_compare(b, a));
    // transitivity
    if (rank_key_compare(a, b) <= 0 && rank_key_compare(b, c) <= 0)
      CHECK(rank_key_compare(a, c) <= 0);
  }
}

TEST_CASE("centering state validates its invariants") {
  CHECK_NOTHROW(CenteringState(std::nullopt, {"a", "b"}));
  CHECK_NOTHROW(CenteringState(EntityId("a"), {"a", "b"}));
  CHECK_THROWS_AS(CenteringState(std::nullopt, {"a", "a"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CenteringState(EntityId("c"), {"a", "b"}),
                  std::invalid_argument);
  CenteringState empty;
  CHECK(empty.cf().empty());
  CHECK_FALSE(empty.cb());
}
