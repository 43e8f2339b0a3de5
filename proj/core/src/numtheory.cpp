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

#include "pqlc/numtheory.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqlc {

namespace {

__extension__ using u128 = unsigned __int128;

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

std::uint64_t reduce_signed(std::int64_t a, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = a % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % modulus);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent != 0) {
    if (exponent & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::invalid_argument("inverse of a non-unit");
  return mod_pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre(std::int64_t a, std::uint64_t p) {
  const std::uint64_t r = reduce_signed(a, p);
  if (r == 0) return 0;
  const std::uint64_t e = mod_pow(r, (p - 1) / 2, p);
  if (e == 1) return 1;
  if (e == p - 1) return -1;
  throw std::logic_error("Euler criterion produced " + std::to_string(e) + " modulo " +
                         std::to_string(p) + "; modulus is not prime");
}

bool is_wieferich(std::uint64_t p) {
  const u128 p2 = static_cast<u128>(p) * p;
  if (p2 >> 64) throw std::invalid_argument("p^2 exceeds 64 bits");
  return mod_pow(2, p - 1, static_cast<std::uint64_t>(p2)) == 1;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t modulus,
                                   std::uint64_t group_order) {
  std::uint64_t order = group_order;
  for (std::uint64_t q : distinct_prime_factors(group_order)) {
    while (order % q == 0 && mod_pow(a, order / q, modulus) == 1) order /= q;
  }
  return order;
}

std::uint64_t find_primitive_root_mod_p2(std::uint64_t p) {
  const auto factors = distinct_prime_factors(p - 1);
  std::uint64_t g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (std::uint64_t q : factors) {
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  if (mod_pow(g, p - 1, p * p) == 1) g += p;
  return g;
}

OddPrimeModulus::OddPrimeModulus(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= kMaxPrime || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime below 2^20, got " + std::to_string(p));
  }
  p_squared_ = p * p;
  primitive_root_ = find_primitive_root_mod_p2(p);
  wieferich_ = is_wieferich(p);
}

std::string_view to_string(ExponentClass c) noexcept {
  switch (c) {
    case ExponentClass::MultipleOfP:
      return "multiple_of_p";
    case ExponentClass::One:
      return "one";
    case ExponentClass::Even:
      return "even";
    case ExponentClass::OddAtLeast3:
      return "odd";
    case ExponentClass::Large:
      return "large";
  }
  return "?";
}

ExponentReduction reduce_exponent(const OddPrimeModulus& m, std::uint64_t w) {
  if (w == 0) throw std::invalid_argument("w must be >= 1");
  const std::uint64_t p = m.p();
  if (w % p == 0) return {ExponentClass::MultipleOfP, std::nullopt, std::nullopt};

  ExponentClass cls;
  if (w == 1) {
    cls = ExponentClass::One;
  } else if (w >= p) {
    cls = ExponentClass::Large;
  } else if (w % 2 == 0) {
    cls = ExponentClass::Even;
  } else {
    cls = ExponentClass::OddAtLeast3;
  }

  // w1 in [1, p-1] with w == w1 (mod p-1).
  std::uint64_t w1 = w % (p - 1);
  if (w1 == 0) w1 = p - 1;
  const std::uint64_t w2 = (w - w1) / (p - 1);
  const std::uint64_t diff = (w1 % p + p - w2 % p) % p;
  const std::uint64_t c = mul_mod(inverse_mod_prime(w1, p), diff, p);
  return {cls, w1, c};
}

QuotientSpec::QuotientSpec(OddPrimeModulus modulus, std::uint64_t w)
    : modulus_(modulus), w_(w), reduction_{} {
  if (w < 1 || w > kMaxExponent) {
    throw std::invalid_argument("w must lie in [1, 2^20], got " + std::to_string(w));
  }
  reduction_ = reduce_exponent(modulus_, w_);
}

QuotientSpec::QuotientSpec(std::uint64_t p, std::uint64_t w) : QuotientSpec(OddPrimeModulus(p), w) {}

std::uint64_t fermat_quotient(const OddPrimeModulus& m, std::uint64_t u) {
  const std::uint64_t p = m.p();
  if (u % p == 0) return 0;
  const std::uint64_t r = mod_pow(u, p - 1, m.p_squared());
  // r == 1 (mod p), so r - 1 is an exact multiple of p.
  return ((r + m.p_squared() - 1) % m.p_squared()) / p;
}

std::uint64_t poly_quotient(const QuotientSpec& spec, std::uint64_t u) {
  const std::uint64_t p = spec.p();
  const std::uint64_t p2 = spec.p_squared();
  if (u % p == 0) {
    if (spec.w() == 1) return (u % p2) / p;
    return 0;
  }
  const auto low = static_cast<std::int64_t>(mod_pow(u, spec.w(), p2));
  const auto high = static_cast<std::int64_t>(mod_pow(u, spec.w() * p, p2));
  const std::int64_t diff = low - high;
  if (diff % static_cast<std::int64_t>(p) != 0) {
    throw std::logic_error("u^w - u^(wp) not divisible by p for p=" + std::to_string(p) +
                           ", w=" + std::to_string(spec.w()) + ", u=" + std::to_string(u));
  }
  return reduce_signed(diff / static_cast<std::int64_t>(p), p);
}

std::uint64_t h_w(const QuotientSpec& spec, std::uint64_t u) {
  const std::uint64_t p = spec.p();
  if (u % p == 0) throw std::invalid_argument("H_w is defined on units only");
  const std::uint64_t q = fermat_quotient(spec.modulus(), u);
  const std::uint64_t wq = mul_mod(spec.w() % p, q, p);
  return (p - wq) % p;
}

}  // namespace pqlc
