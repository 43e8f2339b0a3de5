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

#include "pqlc/linear_complexity.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pqlc/sequence.hpp"

namespace pqlc {
namespace {

BitVector random_bits(std::mt19937_64& rng, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
  return v;
}

std::vector<int> to_ints(const BitVector& v) {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

// sum_i m_i s_{n+deg m-i} == 0 for every n with n + deg m < 2T (convolution).
bool annihilates(const BitPoly& m, const BitVector& period) {
  const std::size_t t = period.size();
  const auto deg = static_cast<std::size_t>(m.degree());
  const auto exps = m.exponents();
  for (std::size_t n = 0; n + deg < 2 * t; ++n) {
    int acc = 0;
    for (std::size_t e : exps) acc ^= period[(n + deg - e) % t];
    if (acc) return false;
  }
  return true;
}

TEST(LinearComplexityTest, DegenerateSequences) {
  const BitVector zeros(25);
  EXPECT_EQ(lc_berlekamp_massey(zeros).result.lc, 0u);
  const auto g0 = lc_gcd_method(zeros);
  EXPECT_EQ(g0.result.lc, 0u);
  EXPECT_EQ(g0.minimal_poly, BitPoly::one());

  const auto ones = BitVector::from_string(std::string(25, '1'));
  EXPECT_EQ(lc_berlekamp_massey(ones).result.lc, 1u);
  EXPECT_EQ(lc_gcd_method(ones).result.lc, 1u);
  EXPECT_EQ(lc_gcd_method(BitVector::from_string("1111")).result.lc, 1u);

  BitVector impulse(49);
  impulse.set(0);
  EXPECT_EQ(lc_gcd_method(impulse).result.lc, 49u);
  EXPECT_EQ(lc_berlekamp_massey(impulse).result.lc, 49u);
}

TEST(LinearComplexityTest, KnownLfsr) {
  // x^4 + x + 1 is primitive: period 15, complexity 4.
  BitVector s(15);
  int state[4] = {1, 0, 0, 0};
  for (std::size_t i = 0; i < 15; ++i) {
    s.set(i, state[0]);
    const int next = state[0] ^ state[1];
    state[0] = state[1];
    state[1] = state[2];
    state[2] = state[3];
    state[3] = next;
  }
  EXPECT_EQ(lc_berlekamp_massey(s).result.lc, 4u);
  const auto g = lc_gcd_method(s);
  EXPECT_EQ(g.result.lc, 4u);
  // Convolution convention: the reciprocal of the characteristic polynomial.
  EXPECT_EQ(g.minimal_poly, BitPoly::from_exponents({4, 3, 0}));
  EXPECT_EQ(berlekamp_massey_prefix(s).result.lc, 4u);
}

TEST(LinearComplexityTest, TableValues) {
  const auto f11 = generate_f(QuotientSpec(11, 1));
  EXPECT_EQ(lc_berlekamp_massey(f11.bits()).result.lc, 111u);
  const auto f13 = generate_f(QuotientSpec(13, 2));
  EXPECT_EQ(lc_gcd_method(f13.bits()).result.lc, 156u);
}

TEST(LinearComplexityPropertyTest, MatchesLinearAlgebraOracle) {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t t = 1 + rng() % 40;
    const BitVector s = random_bits(rng, t);
    const std::size_t expected = oracle::lc_by_linear_algebra(to_ints(s));
    ASSERT_EQ(lc_berlekamp_massey(s).result.lc, expected) << s.to_string();
    ASSERT_EQ(lc_gcd_method(s).result.lc, expected) << s.to_string();
  }
}

TEST(LinearComplexityPropertyTest, RoutesAgreeAndMinimalPolynomialsAnnihilate) {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t t = 1 + rng() % 700;
    const BitVector s = random_bits(rng, t);
    const auto bm = lc_berlekamp_massey(s);
    const auto g = lc_gcd_method(s);
    ASSERT_EQ(bm.result.lc, g.result.lc) << t;
    ASSERT_EQ(g.result.minimal_poly_degree, g.result.lc);
    ASSERT_TRUE(annihilates(g.minimal_poly, s));
    // For a purely periodic sequence the connection polynomial has full degree.
    if (!s.none()) {
      ASSERT_EQ(bm.connection.degree(), static_cast<std::int64_t>(bm.result.lc));
    }
  }
}

TEST(CyclotomicFactorsTest, PThree) {
  const auto f = cyclotomic_factors(3);
  EXPECT_EQ(f.unit_root, BitPoly::from_exponents({1, 0}));
  EXPECT_EQ(f.order_p, BitPoly::from_exponents({2, 1, 0}));
  EXPECT_EQ(f.order_p2, BitPoly::from_exponents({6, 3, 0}));
}

TEST(CyclotomicFactorsTest, ProductIsXToPSquaredPlusOne) {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const auto f = cyclotomic_factors(p);
    EXPECT_EQ(f.unit_root * f.order_p * f.order_p2, BitPoly::x_pow_plus_one(p * p));
    EXPECT_EQ(f.order_p.degree(), static_cast<std::int64_t>(p - 1));
    EXPECT_EQ(f.order_p2.degree(), static_cast<std::int64_t>(p * p - p));
  }
}

TEST(RootSpectrumTest, PredictedCases) {
  const auto f13 = generate_f(QuotientSpec(13, 2));
  EXPECT_EQ(root_spectrum(BitPoly::from_bits(f13.bits()), 13), (RootSpectrum{1, 12, 0}));
  const auto f11 = generate_f(QuotientSpec(11, 2));
  EXPECT_EQ(root_spectrum(BitPoly::from_bits(f11.bits()), 11), (RootSpectrum{1, 0, 0}));
  for (std::uint64_t p : {3, 5, 7}) {
    const auto ones = BitVector::from_string(std::string(p * p, '1'));
    EXPECT_EQ(root_spectrum(BitPoly::from_bits(ones), p), (RootSpectrum{0, p - 1, p * p - p}));
  }
}

TEST(RootSpectrumPropertyTest, SpectrumPlusComplexityIsPeriod) {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const auto factors = cyclotomic_factors(p);
    for (int iter = 0; iter < 20; ++iter) {
      const BitVector s = random_bits(rng, p * p);
      const auto spectrum = root_spectrum(BitPoly::from_bits(s), factors);
      ASSERT_EQ(spectrum.total() + lc_gcd_method(s).result.lc, p * p);
    }
    EXPECT_EQ(root_spectrum(BitPoly(), factors).total(), p * p);
  }
}

}  // namespace
}  // namespace pqlc
