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

// Modular arithmetic, Legendre symbols, Fermat and polynomial quotients
// modulo an odd prime p. All moduli used here fit in 64 bits and every
// product is taken at 128-bit width before reduction.

#include <cstdint>
#include <optional>
#include <string_view>

namespace pqlc {

/// Largest prime accepted as a sequence modulus (exclusive).
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 20;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus);

/// base^exponent mod modulus, for any modulus >= 2 below 2^64.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Inverse of a modulo a prime p; a must be a unit.
std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Legendre symbol (a/p) in {-1, 0, 1} via Euler's criterion.
int legendre(std::int64_t a, std::uint64_t p);

/// 2^(p-1) == 1 (mod p^2).
bool is_wieferich(std::uint64_t p);

/// Multiplicative order of a unit modulo `modulus`, whose group order is
/// `group_order`. Only the prime factors of group_order are probed.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t modulus,
                                   std::uint64_t group_order);

/// Smallest primitive root g mod p, lifted to g + p when g^(p-1) == 1 mod p^2.
std::uint64_t find_primitive_root_mod_p2(std::uint64_t p);

/// A validated odd prime together with the data every later stage needs.
class OddPrimeModulus {
 public:
  /// Throws std::invalid_argument unless p is an odd prime below kMaxPrime.
  explicit OddPrimeModulus(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t p_squared() const noexcept { return p_squared_; }
  std::uint64_t primitive_root() const noexcept { return primitive_root_; }
  bool wieferich() const noexcept { return wieferich_; }

  friend bool operator==(const OddPrimeModulus&, const OddPrimeModulus&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t p_squared_;
  std::uint64_t primitive_root_;
  bool wieferich_;
};

enum class ExponentClass { MultipleOfP, One, Even, OddAtLeast3, Large };

std::string_view to_string(ExponentClass c) noexcept;

/// Classification of w together with w = w1 + w2 (p - 1) and the multiplier
/// c = w1^-1 (w1 - w2) mod p, so that q_{p,w} == c * q_{p,w1} on units.
struct ExponentReduction {
  ExponentClass exponent_class;
  std::optional<std::uint64_t> reduced_w1;
  std::optional<std::uint64_t> multiplier_c;
};

ExponentReduction reduce_exponent(const OddPrimeModulus& m, std::uint64_t w);

/// Largest exponent accepted for sequence generation.
inline constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 20;

/// The pair (p, w) defining one polynomial quotient.
class QuotientSpec {
 public:
  /// Throws std::invalid_argument unless 1 <= w <= kMaxExponent.
  QuotientSpec(OddPrimeModulus modulus, std::uint64_t w);
  /// Convenience: validates p as well.
  QuotientSpec(std::uint64_t p, std::uint64_t w);

  const OddPrimeModulus& modulus() const noexcept { return modulus_; }
  std::uint64_t p() const noexcept { return modulus_.p(); }
  std::uint64_t p_squared() const noexcept { return modulus_.p_squared(); }
  std::uint64_t w() const noexcept { return w_; }
  ExponentClass exponent_class() const noexcept { return reduction_.exponent_class; }
  const std::optional<std::uint64_t>& reduced_w1() const noexcept { return reduction_.reduced_w1; }
  const std::optional<std::uint64_t>& multiplier_c() const noexcept {
    return reduction_.multiplier_c;
  }

 private:
  OddPrimeModulus modulus_;
  std::uint64_t w_;
  ExponentReduction reduction_;
};

/// q_p(u) = (u^(p-1) - 1)/p mod p, and 0 when p | u.
std::uint64_t fermat_quotient(const OddPrimeModulus& m, std::uint64_t u);

/// q_{p,w}(u) = (u^w - u^(wp))/p mod p for units; on multiples u = kp it is
/// k mod p when w = 1 and 0 otherwise.
std::uint64_t poly_quotient(const QuotientSpec& spec, std::uint64_t u);

/// H_w(u) = -w q_p(u) mod p. Throws std::invalid_argument when p | u.
std::uint64_t h_w(const QuotientSpec& spec, std::uint64_t u);

}  // namespace pqlc
