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

#include "afra/defeat.hpp"

#include <thread>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace afra {
namespace {

using testing::bob;

TEST(DefeatTest, DirectDefeat) {
  const auto fw = bob();
  EXPECT_TRUE(directly_defeats(fw, "alpha", "C"));
  EXPECT_FALSE(directly_defeats(fw, "alpha", "beta"));
  EXPECT_FALSE(directly_defeats(fw, "G", "C"));  // arguments never defeat
  const auto self = testing::self_attack();
  EXPECT_TRUE(directly_defeats(self, "alpha", "A"));
}

TEST(DefeatTest, IndirectDefeat) {
  const auto fw = bob();
  EXPECT_TRUE(indirectly_defeats(fw, "epsilon", "delta"));
  EXPECT_FALSE(indirectly_defeats(fw, "gamma", "beta"));
  EXPECT_TRUE(indirectly_defeats(testing::self_attack(), "alpha", "alpha"));
}

TEST(DefeatTest, IndirectDefeatNeedsAttacks) {
  try {
    indirectly_defeats(bob(), "alpha", "C");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnAttack);
  }
}

TEST(DefeatTest, UnknownElements) {
  try {
    defeats(bob(), "alpha", "Z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownElement);
  }
}

TEST(DefeatTest, Defeats) {
  const auto fw = bob();
  EXPECT_TRUE(defeats(fw, "beta", "alpha"));
  EXPECT_TRUE(defeats(fw, "delta", "gamma"));
  EXPECT_FALSE(defeats(fw, "epsilon", "gamma"));
}

TEST(DefeatTest, BobHasEightDefeats) {
  const std::vector<DefeatEdge> expected = {
      {"alpha", "C", true, false},      {"alpha", "beta", false, true},
      {"beta", "G", true, false},       {"beta", "alpha", false, true},
      {"delta", "gamma", true, false},  {"epsilon", "N", true, false},
      {"epsilon", "delta", false, true}, {"gamma", "beta", true, false},
  };
  EXPECT_EQ(defeat_relation(bob()), expected);
}

TEST(DefeatTest, EmptyFramework) {
  EXPECT_TRUE(defeat_relation(testing::empty_framework()).empty());
}

// Every pair checked against the definitions, written out from src and trg.
TEST(DefeatTest, HatMatchesDefinitions) {
  const auto fw = testing::hat();
  const auto attacks = fw.attacks();
  std::size_t count = 0;
  for (const auto& a : attacks) {
    for (const auto& v : fw.all_elements()) {
      const bool direct = a.target.id == v;
      bool indirect = false;
      if (fw.is_attack(v)) indirect = src(fw, v) == a.target.id;
      EXPECT_EQ(defeats(fw, a.id, v), direct || indirect) << a.id << " " << v;
      count += direct || indirect;
    }
  }
  EXPECT_EQ(defeat_relation(fw).size(), count);
  EXPECT_TRUE(indirectly_defeats(fw, "kappa", "kappa"));
  EXPECT_TRUE(directly_defeats(fw, "iota", "G"));
  EXPECT_TRUE(indirectly_defeats(fw, "iota", "kappa"));
}

TEST(DefeatTest, GraphIsIndexed) {
  const auto fw = bob();
  const auto& g = defeat_graph(fw);
  const auto c = *fw.index_of("C");
  const auto alpha = *fw.index_of("alpha");
  EXPECT_EQ(g.defeaters[c], std::vector<std::uint32_t>{alpha});
  EXPECT_EQ(g.victims[alpha].size(), 2u);
}

TEST(DefeatTest, CacheIsThreadSafe) {
  const auto fw = testing::hat();
  std::vector<const DefeatGraph*> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i)
    threads.emplace_back([&, i] { seen[i] = &defeat_graph(fw); });
  for (auto& t : threads) t.join();
  for (auto* p : seen) EXPECT_EQ(p, seen.front());
}

}  // namespace
}  // namespace afra
