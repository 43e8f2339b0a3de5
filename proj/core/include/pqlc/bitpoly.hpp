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

#pragma once

// Dense polynomials over GF(2), packed 64 coefficients per word.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pqlc/bits.hpp"

namespace pqlc {

class BitPoly {
 public:
  static constexpr std::size_t kWordBits = 64;

  /// The zero polynomial.
  BitPoly() = default;

  static BitPoly one() { return monomial(0); }
  static BitPoly monomial(std::size_t exponent);
  /// x^n + 1.
  static BitPoly x_pow_plus_one(std::size_t n);
  /// Sum of x^e over the given exponents; repeated exponents cancel.
  static BitPoly from_exponents(std::span<const std::size_t> exponents);
  static BitPoly from_exponents(std::initializer_list<std::size_t> exponents) {
    return from_exponents(std::span<const std::size_t>(exponents.begin(), exponents.size()));
  }
  /// s_0 + s_1 x + ... + s_{n-1} x^{n-1}.
  static BitPoly from_bits(const BitVector& bits);
  static BitPoly from_words(std::vector<std::uint64_t> words);

  bool is_zero() const noexcept { return words_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return degree_; }
  bool coeff(std::size_t i) const noexcept {
    const std::size_t w = i / kWordBits;
    return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1U);
  }
  std::size_t term_count() const noexcept;
  std::vector<std::size_t> exponents() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  BitPoly& operator+=(const BitPoly& other);
  /// Adds x^shift * other in place.
  BitPoly& add_shifted(const BitPoly& other, std::size_t shift);

  friend BitPoly operator+(BitPoly a, const BitPoly& b) { return a += b; }
  friend BitPoly operator*(const BitPoly& a, const BitPoly& b);
  friend bool operator==(const BitPoly& a, const BitPoly& b) noexcept { return a.words_ == b.words_; }

  /// "x^3 + x + 1"; "0" for zero.
  std::string to_string() const;

 private:
  void normalize() noexcept;

  std::vector<std::uint64_t> words_;  // no trailing zero words
  std::int64_t degree_ = -1;
};

BitPoly poly_add(const BitPoly& a, const BitPoly& b);
BitPoly poly_mul(const BitPoly& a, const BitPoly& b);

struct DivRem {
  BitPoly quotient;
  BitPoly remainder;
};

/// Throws std::domain_error when divisor is zero.
DivRem poly_divrem(const BitPoly& dividend, const BitPoly& divisor);

/// Euclid's algorithm. Throws std::domain_error when both inputs are zero.
BitPoly poly_gcd(const BitPoly& a, const BitPoly& b);

}  // namespace pqlc
