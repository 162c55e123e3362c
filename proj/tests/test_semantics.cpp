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

#include "afra/semantics.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "afra/oracle.hpp"
#include "support/fixtures.hpp"

namespace afra {
namespace {

using testing::bob;
using testing::bob_extension;
using testing::hat;

std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

SolveOptions native() {
  SolveOptions o;
  o.route = Route::native;
  return o;
}

TEST(SemanticsTest, ConflictFreedom) {
  const auto fw = bob();
  EXPECT_TRUE(is_conflict_free(fw, {"G", "C"}));
  EXPECT_FALSE(is_conflict_free(fw, {"alpha", "beta"}));
  EXPECT_TRUE(is_conflict_free(fw, {}));
  EXPECT_FALSE(is_conflict_free(testing::self_attack(), {"alpha"}));
}

TEST(SemanticsTest, Acceptability) {
  const auto fw = bob();
  EXPECT_TRUE(is_acceptable(fw, "G", {"gamma"}));
  EXPECT_FALSE(is_acceptable(fw, "G", {"P"}));
  EXPECT_TRUE(is_acceptable(fw, "gamma", {"epsilon"}));
  EXPECT_TRUE(is_acceptable(fw, "A", {}));
}

TEST(SemanticsTest, UnknownMembersAreRejected) {
  try {
    is_admissible(bob(), {"Z"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownElement);
  }
}

// alpha is indirectly defeated by beta, so it is not acceptable w.r.t. the
// empty set; values below were computed by the brute-force oracle.
TEST(SemanticsTest, CharacteristicFunctionIterates) {
  const auto fw = bob();
  const ElementSet f1{"A", "P", "epsilon"};
  const ElementSet f2{"A", "P", "epsilon", "gamma"};
  EXPECT_EQ(characteristic_function(fw, {}), f1);
  EXPECT_EQ(characteristic_function(fw, f1), f2);
  EXPECT_EQ(characteristic_function(fw, f2), bob_extension());
  EXPECT_EQ(characteristic_function(fw, bob_extension()), bob_extension());
}

TEST(SemanticsTest, Admissibility) {
  const auto fw = bob();
  EXPECT_TRUE(is_admissible(fw, {"epsilon", "gamma"}));
  EXPECT_FALSE(is_admissible(fw, {"G"}));
  EXPECT_TRUE(is_admissible(fw, {}));
}

TEST(SemanticsTest, BobHasFortyAdmissibleSets) {
  const auto expected = sorted(testing::bob_admissible());
  ASSERT_EQ(expected.size(), 40u);
  EXPECT_EQ(admissible_sets(bob()).extensions(), expected);
  EXPECT_EQ(admissible_sets(bob(), native()).extensions(), expected);
}

TEST(SemanticsTest, BobAllSemanticsAgree) {
  const auto fw = bob();
  const std::vector<ElementSet> one = {bob_extension()};
  EXPECT_EQ(grounded_extension(fw), bob_extension());
  EXPECT_EQ(complete_extensions(fw).extensions(), one);
  EXPECT_EQ(preferred_extensions(fw).extensions(), one);
  EXPECT_EQ(stable_extensions(fw).extensions(), one);
  EXPECT_EQ(semi_stable_extensions(fw).extensions(), one);
  EXPECT_EQ(ideal_extension(fw), bob_extension());
}

TEST(SemanticsTest, HatComplete) {
  const auto expected = sorted(
      {testing::hat_grounded(), testing::hat_s(), testing::hat_s_star()});
  EXPECT_EQ(complete_extensions(hat()).extensions(), expected);
  EXPECT_EQ(complete_extensions(hat(), native()).extensions(), expected);
  EXPECT_EQ(grounded_extension(hat()), testing::hat_grounded());
}

TEST(SemanticsTest, HatPreferredStableSemiStableIdeal) {
  const auto fw = hat();
  EXPECT_EQ(preferred_extensions(fw).extensions(),
            sorted({testing::hat_s(), testing::hat_s_star()}));
  EXPECT_TRUE(stable_extensions(fw).empty());
  EXPECT_EQ(semi_stable_extensions(fw).extensions(),
            std::vector<ElementSet>{testing::hat_s()});
  EXPECT_EQ(ideal_extension(fw), testing::hat_grounded());
}

TEST(SemanticsTest, HatRanges) {
  const auto fw = hat();
  EXPECT_EQ(range(fw, testing::hat_s()),
            testing::hat_s().united({"G", "A", "alpha", "zeta", "kappa"}));
  EXPECT_EQ(range(fw, testing::hat_s_star()),
            testing::hat_s_star().united({"F", "alpha", "theta", "iota"}));
  EXPECT_EQ(range(fw, {}), ElementSet{});
}

TEST(SemanticsTest, MutualAttackHasEmptyGroundedExtension) {
  const auto fw =
      build_framework({"A", "B"}, {{"alpha", "A", "B"}, {"beta", "B", "A"}});
  EXPECT_EQ(grounded_extension(fw), ElementSet{});
  EXPECT_EQ(preferred_extensions(fw).size(), 2u);
}

TEST(SemanticsTest, SelfAttackingArgument) {
  const auto fw = testing::self_attack();
  const std::vector<ElementSet> empty_only = {ElementSet{}};
  EXPECT_EQ(admissible_sets(fw).extensions(), empty_only);
  EXPECT_EQ(preferred_extensions(fw).extensions(), empty_only);
  EXPECT_TRUE(stable_extensions(fw).empty());
  EXPECT_TRUE(stable_extensions(fw, native()).empty());
}

TEST(SemanticsTest, EmptyFramework) {
  const auto fw = testing::empty_framework();
  const std::vector<ElementSet> empty_only = {ElementSet{}};
  for (auto which : kAllSemantics) {
    EXPECT_EQ(solve(fw, which).extensions(), empty_only) << to_string(which);
    EXPECT_EQ(solve(fw, which, native()).extensions(), empty_only);
  }
  EXPECT_EQ(ideal_extension(fw), ElementSet{});
}

TEST(SemanticsTest, RoutesAgreeOnFixtures) {
  for (const auto& fw : {bob(), hat(), testing::bar(), testing::defence_afra(),
                         testing::anomaly_afra()}) {
    for (auto which : kAllSemantics)
      EXPECT_EQ(solve(fw, which), solve(fw, which, native()))
          << to_string(which);
  }
}

TEST(SemanticsTest, EnumerationBound) {
  SolveOptions small;
  small.max_enum = 5;
  try {
    admissible_sets(bob(), small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLargeToEnumerate);
  }
  small.route = Route::native;
  EXPECT_THROW(complete_extensions(bob(), small), Error);
  // The labelling route is not bounded by max_enum.
  small.route = Route::flattened;
  EXPECT_EQ(complete_extensions(bob(), small).size(), 1u);
  // Grounded never enumerates.
  EXPECT_EQ(grounded_extension(bob()), bob_extension());
}

// A chain of 40 arguments is far beyond the subset bound but trivial for
// the labelling search.
TEST(SemanticsTest, LargeChainUsesLabellings) {
  std::vector<ElementId> args;
  std::vector<AttackDecl> attacks;
  for (int i = 0; i < 40; ++i) args.push_back("a" + std::to_string(i));
  for (int i = 0; i + 1 < 40; ++i)
    attacks.push_back({"t" + std::to_string(i), args[i], args[i + 1]});
  const auto fw = build_framework(args, attacks);
  const auto pref = preferred_extensions(fw);
  ASSERT_EQ(pref.size(), 1u);
  EXPECT_EQ(pref.extensions().front(), grounded_extension(fw));
}

TEST(SemanticsTest, ParseSemantics) {
  EXPECT_EQ(parse_semantics("semi-stable"), SemanticsId::semi_stable);
  EXPECT_EQ(parse_semantics("semi_stable"), SemanticsId::semi_stable);
  EXPECT_EQ(parse_semantics("conflict-free"), SemanticsId::conflict_free);
  EXPECT_EQ(parse_semantics("grounded"), SemanticsId::grounded);
  EXPECT_FALSE(parse_semantics("naive"));
}

TEST(SemanticsTest, ExtensionSetIsCanonical) {
  const ExtensionSet e(SemanticsId::complete,
                       {{"b"}, {"a"}, {"b"}, ElementSet{}});
  EXPECT_EQ(e.extensions(),
            (std::vector<ElementSet>{ElementSet{}, {"a"}, {"b"}}));
}

TEST(SemanticsTest, CompleteIsFixpointAndStableDefeatsOutsiders) {
  const auto fw = hat();
  EXPECT_TRUE(is_complete(fw, testing::hat_grounded()));
  EXPECT_FALSE(is_complete(fw, {"B", "C"}));
  EXPECT_TRUE(is_stable(bob(), bob_extension()));
  EXPECT_FALSE(is_stable(fw, testing::hat_s()));
}

}  // namespace
}  // namespace afra
