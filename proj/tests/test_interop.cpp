// Copyright 2026 The afra-toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "afra/interop.hpp"

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace afra {
namespace {

using testing::anomaly_eaf;

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::SyntaxError;
}

// ---------------------------------------------------------------------------
// EAF

TEST(EafTest, AnomalyTranslation) {
  const auto fw = eaf_to_afra(anomaly_eaf());
  EXPECT_EQ(fw.num_attacks(), 3u);
  EXPECT_EQ(trg(fw, "att_B_att_C_B"),
            (ElementRef{ElementKind::attack, "att_C_B"}));
  EXPECT_TRUE(isomorphic_up_to_attack_names(fw, testing::anomaly_afra()));
}

TEST(EafTest, NoDefeatersGivesPlainFramework) {
  const auto eaf = Eaf::build({"A", "B"}, {{"A", "B"}, {"B", "A"}}, {});
  EXPECT_TRUE(is_plain_af(eaf_to_afra(eaf)));
}

TEST(EafTest, WeatherForecastTranslation) {
  // A and B disagree on the forecast, C and Cp on the sources' reliability
  // and E prefers Cp's statistical argument.
  const auto eaf = Eaf::build(
      {"A", "B", "C", "Cp", "E"},
      {{"A", "B"}, {"B", "A"}, {"C", "Cp"}, {"Cp", "C"}},
      {{"Cp", {"A", "B"}}, {"C", {"B", "A"}}, {"E", {"C", "Cp"}}});
  const auto fw = eaf_to_afra(eaf);
  EXPECT_EQ(fw.num_attacks(), 7u);
  EXPECT_EQ(trg(fw, "att_E_att_C_Cp"),
            (ElementRef{ElementKind::attack, "att_C_Cp"}));
}

TEST(EafTest, TranslationAvoidsNameClashes) {
  const auto eaf = Eaf::build({"att_a_b", "a", "b"}, {{"a", "b"}}, {});
  const auto fw = eaf_to_afra(eaf);
  EXPECT_TRUE(fw.is_attack("att_a_b_2"));
}

TEST(EafTest, ValidationErrors) {
  EXPECT_EQ(error_of([] { Eaf::build({"A", "A"}, {}, {}); }),
            ErrorCode::InvalidEaf);
  EXPECT_EQ(error_of([] { Eaf::build({"A"}, {{"A", "B"}}, {}); }),
            ErrorCode::InvalidEaf);
  EXPECT_EQ(error_of([] { Eaf::build({"A", "B"}, {}, {{"A", {"A", "B"}}}); }),
            ErrorCode::InvalidEaf);
  EXPECT_EQ(error_of([] {
              Eaf::build(testing::defence_args(), testing::defence_r(),
                         testing::defence_d());
            }),
            ErrorCode::InvalidEaf);
}

TEST(EafTest, DefenceAcceptedOnceTheDefeatersAttackEachOther) {
  auto r = testing::defence_r();
  r.push_back({"C", "Cp"});
  r.push_back({"Cp", "C"});
  EXPECT_NO_THROW(Eaf::build(testing::defence_args(), r, testing::defence_d()));
}

TEST(EafTest, DefeatRelativeToSet) {
  const auto eaf = anomaly_eaf();
  EXPECT_TRUE(eaf_defeat_s(eaf, "C", "B", {}));
  EXPECT_FALSE(eaf_defeat_s(eaf, "C", "B", {"B"}));
  EXPECT_FALSE(eaf_defeat_s(eaf, "A", "B", {}));
  EXPECT_EQ(error_of([&] { eaf_defeat_s(eaf, "Z", "B", {}); }),
            ErrorCode::UnknownElement);
}

TEST(EafTest, LiteralConflictFreedom) {
  const auto eaf = Eaf::build({"A", "B", "C"}, {{"A", "B"}}, {{"C", {"A", "B"}}});
  EXPECT_TRUE(eaf_is_conflict_free(eaf, {"A", "B", "C"}));
  EXPECT_FALSE(eaf_is_conflict_free(eaf, {"A", "B"}));
  EXPECT_TRUE(eaf_is_conflict_free(eaf, {}));
  const auto reciprocated = Eaf::build({"A", "B", "C"}, {{"A", "B"}, {"B", "A"}},
                                       {{"C", {"A", "B"}}});
  EXPECT_FALSE(eaf_is_conflict_free(reciprocated, {"A", "B", "C"}));
}

TEST(EafTest, ReinstatementSets) {
  const auto eaf = anomaly_eaf();
  EXPECT_TRUE(eaf_reinstatement_exists(eaf, "B", "A", {"C", "B"}));
  EXPECT_TRUE(eaf_reinstatement_exists(eaf, "C", "B", {"C", "A"}));
  const ArgSet blocking{"B"};
  EXPECT_EQ(error_of([&] { eaf_reinstatement_exists(eaf, "C", "B", blocking); }),
            ErrorCode::PreconditionViolated);
}

// The support of a defeat is itself defeated, so no reinstatement set.
TEST(EafTest, ReinstatementFailsWithoutSupport) {
  // X attacks Y, Z attacks (X, Y) and nothing in s attacks Z.
  const auto eaf =
      Eaf::build({"X", "Y", "Z"}, {{"X", "Y"}}, {{"Z", {"X", "Y"}}});
  EXPECT_FALSE(eaf_reinstatement_exists(eaf, "X", "Y", {"X"}));
}

TEST(EafTest, AnomalySemantics) {
  const auto eaf = anomaly_eaf();
  EXPECT_EQ(eaf_characteristic_function(eaf, {}), (ArgSet{"C"}));
  EXPECT_EQ(eaf_characteristic_function(eaf, {"C"}), (ArgSet{"A", "C"}));
  EXPECT_EQ(eaf_semantics(eaf, SemanticsId::grounded).extensions(),
            (std::vector<ArgSet>{ArgSet{"A", "C"}}));
  EXPECT_EQ(eaf_semantics(eaf, SemanticsId::preferred).extensions(),
            (std::vector<ArgSet>{{"A", "C"}, {"B", "C"}}));
  const auto adm = eaf_semantics(eaf, SemanticsId::admissible);
  EXPECT_TRUE(adm.contains({"C"}));
  EXPECT_TRUE(adm.contains({"B", "C"}));
  EXPECT_TRUE(eaf_is_acceptable(eaf, "A", {"C"}));
  EXPECT_FALSE(eaf_is_acceptable(eaf, "B", {"C"}));
}

TEST(EafTest, AnomalyAfraDiverges) {
  const auto fw = eaf_to_afra(anomaly_eaf());
  EXPECT_EQ(grounded_extension(fw), (ElementSet{"C"}));
  EXPECT_EQ(preferred_extensions(fw).extensions(),
            (std::vector<ElementSet>{{"A", "C", "att_C_B"},
                                     {"B", "C", "att_B_A", "att_B_att_C_B"}}));
}

TEST(EafTest, UnsupportedSemantics) {
  EXPECT_EQ(error_of([] { eaf_semantics(anomaly_eaf(), SemanticsId::ideal); }),
            ErrorCode::PreconditionViolated);
}

// ---------------------------------------------------------------------------
// HOAF

TEST(HoafTest, BobSemantics) {
  const auto h = testing::bob_hoaf();
  for (auto which : kExtensionSemantics)
    EXPECT_EQ(hoaf_semantics(h, which).extensions(),
              std::vector<ElementSet>{testing::bob_hoaf_extension()})
        << to_string(which);
}

TEST(HoafTest, BobTranslatesToBob) {
  const auto fw = hoaf_to_afra(testing::bob_hoaf());
  EXPECT_EQ(fw.num_arguments(), 5u);
  EXPECT_EQ(fw.num_attacks(), 5u);
  EXPECT_TRUE(isomorphic_up_to_attack_names(fw, testing::bob()));
  EXPECT_FALSE(isomorphic_up_to_attack_names(fw, testing::hat()));
}

TEST(HoafTest, BobEncoding) {
  const auto h = afra_to_hoaf(testing::bob());
  EXPECT_EQ(h.a_c().size(), 5u);
  EXPECT_EQ(h.a_not().size(), 5u);
  EXPECT_EQ(h.a_hash().size(), 5u);
  EXPECT_EQ(h.hash().size(), 15u);
  EXPECT_EQ(h.not_map().at("G"), "not(G)");
}

TEST(HoafTest, SmallEncoding) {
  const auto fw = build_framework({"A", "B"}, {{"alpha", "A", "B"}});
  const auto h = afra_to_hoaf(fw);
  EXPECT_EQ(h.hash(), (std::vector<HoafPair>{{"A", "not(A)"},
                                             {"B", "not(B)"},
                                             {"alpha", "B"},
                                             {"not(A)", "alpha"}}));
}

TEST(HoafTest, EmptyCases) {
  const auto h = afra_to_hoaf(testing::empty_framework());
  EXPECT_TRUE(h.a_c().empty());
  EXPECT_TRUE(h.hash().empty());
  EXPECT_EQ(hoaf_semantics(h, SemanticsId::grounded).extensions(),
            std::vector<ElementSet>{ElementSet{}});
  const auto no_attacks = Hoaf::build({"A"}, {{"A", "not(A)"}}, {},
                                      {{"A", "not(A)"}});
  EXPECT_EQ(hoaf_to_afra(no_attacks).num_attacks(), 0u);
}

TEST(HoafTest, ValidationErrors) {
  const std::map<std::string, std::string> nm = {{"A", "nA"}, {"B", "nB"}};
  const std::vector<HoafPair> base = {{"A", "nA"}, {"B", "nB"}};
  auto with = [&](std::vector<HoafPair> extra) {
    auto pairs = base;
    pairs.insert(pairs.end(), extra.begin(), extra.end());
    return pairs;
  };
  // Missing (B, nB).
  EXPECT_EQ(error_of([&] { Hoaf::build({"A", "B"}, nm, {}, {{"A", "nA"}}); }),
            ErrorCode::InvalidHoaf);
  // A may only attack its own companion.
  EXPECT_EQ(error_of([&] { Hoaf::build({"A", "B"}, nm, {}, with({{"A", "nB"}})); }),
            ErrorCode::InvalidHoaf);
  // Pair kind outside the allowed products.
  EXPECT_EQ(error_of([&] { Hoaf::build({"A", "B"}, nm, {}, with({{"nA", "B"}})); }),
            ErrorCode::InvalidHoaf);
  // h needs exactly one companion predecessor and one target.
  EXPECT_EQ(error_of([&] {
              Hoaf::build({"A", "B"}, nm, {"h"}, with({{"h", "B"}}));
            }),
            ErrorCode::InvalidHoaf);
  EXPECT_EQ(error_of([&] {
              Hoaf::build({"A", "B"}, nm, {"h"},
                          with({{"nA", "h"}, {"nB", "h"}, {"h", "B"}}));
            }),
            ErrorCode::InvalidHoaf);
  // Names must be distinct across the three sets.
  EXPECT_EQ(error_of([&] {
              Hoaf::build({"A", "B"}, {{"A", "nA"}, {"B", "A"}}, {}, base);
            }),
            ErrorCode::InvalidHoaf);
  // Two encoded attacks targeting each other cannot be resolved.
  EXPECT_EQ(error_of([&] {
              auto h = Hoaf::build(
                  {"A", "B"}, nm, {"h1", "h2"},
                  with({{"nA", "h1"}, {"h1", "h2"}, {"nB", "h2"}, {"h2", "h1"}}));
              hoaf_to_afra(h);
            }),
            ErrorCode::InvalidHoaf);
}

TEST(HoafTest, IsomorphismDistinguishesParallelAttacks) {
  const auto a = build_framework(
      {"A", "B", "C"},
      {{"x", "A", "B"}, {"y", "A", "B"}, {"u", "C", "x"}, {"v", "C", "x"}});
  const auto b = build_framework(
      {"A", "B", "C"},
      {{"x", "A", "B"}, {"y", "A", "B"}, {"u", "C", "x"}, {"v", "C", "y"}});
  EXPECT_FALSE(isomorphic_up_to_attack_names(a, b));
  EXPECT_TRUE(isomorphic_up_to_attack_names(a, a));
}

}  // namespace
}  // namespace afra
