// Copyright 2026 The pqlc Authors
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

#include "pqlc/cyclotomy.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pqlc/sequence.hpp"

namespace pqlc {
namespace {

using Members = std::vector<std::uint64_t>;

TEST(PartitionTest, PThreeWTwo) {
  const auto part = build_partition(QuotientSpec(3, 2));
  EXPECT_EQ(part.members(ClassKind::D, 0), (Members{1, 8}));
  EXPECT_EQ(part.members(ClassKind::D, 1), (Members{2, 7}));
  EXPECT_EQ(part.members(ClassKind::D, 2), (Members{4, 5}));
  EXPECT_EQ(part.multiples(), (Members{0, 3, 6}));
  EXPECT_TRUE(part.is_multiple_of_p(6));
  EXPECT_EQ(part.class_index(6), 2u);
  EXPECT_EQ(part.character(7), 1);
  EXPECT_EQ(part.character(8), -1);
  EXPECT_EQ(part.character(3), 0);
}

TEST(PartitionTest, ClassSizes) {
  const auto part = build_partition(QuotientSpec(5, 2));
  for (std::uint64_t l = 0; l < 5; ++l) {
    EXPECT_EQ(part.members(ClassKind::D, l).size(), 4u);
    EXPECT_EQ(part.members(ClassKind::Q, l).size(), 2u);
    EXPECT_EQ(part.members(ClassKind::N, l).size(), 2u);
  }
  EXPECT_THROW(part.members(ClassKind::D, 5), std::out_of_range);
}

TEST(PartitionTest, RejectsMultipleOfP) {
  EXPECT_THROW(build_partition(QuotientSpec(5, 5)), std::invalid_argument);
  EXPECT_THROW(build_partition(QuotientSpec(7, 21)), std::invalid_argument);
}

TEST(PartitionPropertyTest, CoversUnitsAndMatchesPrimitiveRootCoset) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    for (std::uint64_t w : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3}, p - 1, p + 2}) {
      if (w % p == 0) continue;
      const QuotientSpec spec(p, w);
      const auto part = build_partition(spec);
      std::set<std::uint64_t> seen(part.multiples().begin(), part.multiples().end());
      ASSERT_EQ(part.multiples().size(), p);
      for (std::uint64_t l = 0; l < p; ++l) {
        const auto& d = part.members(ClassKind::D, l);
        ASSERT_EQ(d.size(), p - 1);
        ASSERT_EQ(part.members(ClassKind::Q, l).size(), (p - 1) / 2);
        ASSERT_EQ(part.members(ClassKind::N, l).size(), (p - 1) / 2);
        for (auto u : d) ASSERT_TRUE(seen.insert(u).second) << "class overlap at " << u;
      }
      ASSERT_EQ(seen.size(), p * p);

      Members d0;
      const std::uint64_t g = spec.modulus().primitive_root();
      for (std::uint64_t k = 0; k < p; ++k) d0.push_back(mod_pow(g, k * p, p * p));
      std::sort(d0.begin(), d0.end());
      // g^p has order p - 1, so k = 0 and k = p - 1 coincide.
      d0.erase(std::unique(d0.begin(), d0.end()), d0.end());
      ASSERT_EQ(d0, part.members(ClassKind::D, 0)) << p << " " << w;
    }
  }
}

TEST(PartitionPropertyTest, RelabelingUnderChangeOfExponent) {
  // For w, w' coprime to p the class sets agree up to l -> c*l.
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const auto a = build_partition(QuotientSpec(p, 2));
    for (std::uint64_t w = 1; w < 2 * p; ++w) {
      if (w % p == 0) continue;
      const auto b = build_partition(QuotientSpec(p, w));
      // Pick c from where D_1 of `a` lands in `b`.
      const std::uint64_t c = b.class_index(a.members(ClassKind::D, 1).front());
      for (std::uint64_t l = 0; l < p; ++l) {
        ASSERT_EQ(a.members(ClassKind::D, l), b.members(ClassKind::D, c * l % p));
      }
    }
  }
}

TEST(ClassPolynomialTest, Examples) {
  const auto part3 = build_partition(QuotientSpec(3, 2));
  EXPECT_EQ(class_polynomial(part3, ClassKind::D, 0), BitPoly::from_exponents({1, 8}));
  const auto part5 = build_partition(QuotientSpec(5, 2));
  EXPECT_EQ(class_polynomial(part5, ClassKind::N, 0).term_count(), 2u);
  for (std::uint64_t l = 0; l < 5; ++l) {
    EXPECT_EQ(class_polynomial(part5, ClassKind::D, l),
              class_polynomial(part5, ClassKind::Q, l) + class_polynomial(part5, ClassKind::N, l));
  }
  EXPECT_THROW(class_polynomial(part5, ClassKind::Q, 7), std::out_of_range);
}

TEST(LambdaPolynomialTest, Examples) {
  const auto part3 = build_partition(QuotientSpec(3, 2));
  EXPECT_EQ(lambda_polynomial(part3, 0), BitPoly::from_exponents({4, 5}));
  for (std::uint64_t p : {5, 7, 11, 13}) {
    for (std::uint64_t w = 2; w < p; w += 2) {
      const auto part = build_partition(QuotientSpec(p, w));
      EXPECT_EQ(lambda_polynomial(part, 0), BitPoly::from_bits(generate_f(part.spec()).bits()));
      for (std::uint64_t shift = 0; shift < p; ++shift) {
        EXPECT_EQ(lambda_polynomial(part, shift).term_count(), (p - 1) * (p - 1) / 2);
      }
    }
  }
}

TEST(FactsTest, SmallPartitions) {
  const auto report = verify_facts(build_partition(QuotientSpec(5, 2)));
  EXPECT_TRUE(report.all_passed());
  EXPECT_TRUE(report.exhaustive);
  EXPECT_EQ(report.facts[0].name, "I");
  EXPECT_EQ(report.facts[5].name, "VI");

  const auto part3 = build_partition(QuotientSpec(3, 2));
  Members residues;
  for (auto u : part3.members(ClassKind::D, 1)) residues.push_back(u % 3);
  std::sort(residues.begin(), residues.end());
  EXPECT_EQ(residues, (Members{1, 2}));
  EXPECT_TRUE(verify_facts(part3).all_passed());
}

TEST(FactsTest, SampledAboveExhaustiveLimit) {
  const auto report = verify_facts(build_partition(QuotientSpec(37, 3)));
  EXPECT_FALSE(report.exhaustive);
  EXPECT_TRUE(report.all_passed());
}

TEST(QuadraticResidueTest, Sets) {
  EXPECT_EQ(quadratic_residues(7), (Members{1, 2, 4}));
  EXPECT_EQ(quadratic_nonresidues(7), (Members{3, 5, 6}));
  EXPECT_EQ(quadratic_nonresidues(3), (Members{2}));
}

}  // namespace
}  // namespace pqlc
