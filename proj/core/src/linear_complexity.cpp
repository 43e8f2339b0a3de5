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

#include <algorithm>
#include <bit>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bitops.hpp"

namespace pqlc {

namespace {

using detail::kWordBits;

// Core Berlekamp-Massey over a bit string given in reversed order, so that
// the discrepancy at step n is the parity of C AND (reversed >> (N-1-n)).
BerlekampMasseyOutcome berlekamp_massey_reversed(std::span<const std::uint64_t> reversed,
                                                 std::size_t n_bits) {
  const std::size_t cap = n_bits / kWordBits + 2;
  std::vector<std::uint64_t> c(cap, 0);
  std::vector<std::uint64_t> b(cap, 0);
  std::vector<std::uint64_t> scratch(cap, 0);
  c[0] = 1;
  b[0] = 1;
  std::size_t c_words = 1;
  std::size_t b_words = 1;
  std::size_t scratch_words = 0;
  std::size_t lc = 0;
  std::size_t shift = 1;

  for (std::size_t n = 0; n < n_bits; ++n) {
    const std::size_t offset = n_bits - 1 - n;
    const std::size_t active = lc / kWordBits + 1;
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < active; ++k) acc ^= c[k] & detail::extract_word(reversed, offset + k * kWordBits);
    if ((std::popcount(acc) & 1) == 0) {
      ++shift;
      continue;
    }
    const std::size_t new_words = std::min(cap, b_words + shift / kWordBits + 1);
    if (2 * lc <= n) {
      std::copy_n(c.begin(), c_words, scratch.begin());
      if (scratch_words > c_words) {
        std::fill(scratch.begin() + static_cast<std::ptrdiff_t>(c_words),
                  scratch.begin() + static_cast<std::ptrdiff_t>(scratch_words), 0);
      }
      const std::size_t old_c_words = c_words;
      detail::xor_shifted(std::span(c).first(new_words), std::span<const std::uint64_t>(b).first(b_words),
                          shift);
      c_words = std::max(c_words, new_words);
      lc = n + 1 - lc;
      std::swap(b, scratch);
      scratch_words = b_words;
      b_words = old_c_words;
      shift = 1;
    } else {
      detail::xor_shifted(std::span(c).first(new_words), std::span<const std::uint64_t>(b).first(b_words),
                          shift);
      c_words = std::max(c_words, new_words);
      ++shift;
    }
  }

  c.resize(c_words);
  BerlekampMasseyOutcome out;
  out.connection = BitPoly::from_words(std::move(c));
  out.result = {lc, lc, LcMethod::BerlekampMassey};
  return out;
}

std::vector<std::uint64_t> reversed_words(const BitVector& period, std::size_t n_bits) {
  std::vector<std::uint64_t> rev(n_bits / kWordBits + 2, 0);
  const std::size_t t = period.size();
  for (std::size_t j = 0; j < n_bits; ++j) {
    const std::size_t src = (n_bits - 1 - j) % t;
    if (period[src]) rev[j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
  }
  return rev;
}

}  // namespace

std::string_view to_string(LcMethod m) noexcept {
  return m == LcMethod::BerlekampMassey ? "bm" : "gcd";
}

BerlekampMasseyOutcome lc_berlekamp_massey(const BitVector& period) {
  if (period.empty()) return {{0, 0, LcMethod::BerlekampMassey}, BitPoly::one()};
  const std::size_t n_bits = 2 * period.size();
  const auto rev = reversed_words(period, n_bits);
  return berlekamp_massey_reversed(rev, n_bits);
}

BerlekampMasseyOutcome berlekamp_massey_prefix(const BitVector& prefix) {
  if (prefix.empty()) return {{0, 0, LcMethod::BerlekampMassey}, BitPoly::one()};
  const auto rev = reversed_words(prefix, prefix.size());
  return berlekamp_massey_reversed(rev, prefix.size());
}

GcdOutcome lc_gcd_method(const BitVector& period) {
  const BitPoly s = BitPoly::from_bits(period);
  if (s.is_zero()) return {{0, 0, LcMethod::Gcd}, BitPoly::one()};
  const BitPoly modulus = BitPoly::x_pow_plus_one(period.size());
  const BitPoly g = poly_gcd(modulus, s);
  auto [minimal, rem] = poly_divrem(modulus, g);
  if (!rem.is_zero()) throw std::logic_error("gcd does not divide x^T - 1");
  const auto lc = static_cast<std::uint64_t>(period.size()) - static_cast<std::uint64_t>(g.degree());
  return {{lc, static_cast<std::uint64_t>(minimal.degree()), LcMethod::Gcd}, std::move(minimal)};
}

CyclotomicFactors cyclotomic_factors(std::uint64_t p) {
  std::vector<std::size_t> low(p);
  std::vector<std::size_t> high(p);
  for (std::size_t k = 0; k < p; ++k) {
    low[k] = k;
    high[k] = k * p;
  }
  return {BitPoly::from_exponents({0, 1}), BitPoly::from_exponents(low), BitPoly::from_exponents(high)};
}

RootSpectrum root_spectrum(const BitPoly& s, std::uint64_t p) {
  return root_spectrum(s, cyclotomic_factors(p));
}

RootSpectrum root_spectrum(const BitPoly& s, const CyclotomicFactors& factors) {
  const auto deg_gcd = [&s](const BitPoly& f) {
    return static_cast<std::uint64_t>(poly_gcd(s, f).degree());
  };
  return {deg_gcd(factors.unit_root), deg_gcd(factors.order_p), deg_gcd(factors.order_p2)};
}

}  // namespace pqlc
