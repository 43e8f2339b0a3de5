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

// Linear complexity of a periodic binary sequence, computed two ways:
// Berlekamp-Massey over two periods, and T - deg gcd(x^T - 1, s(x)).
// Also the split of x^{p^2} - 1 into its cyclotomic factors and the
// resulting count of common roots by root order.

#include <cstdint>
#include <string_view>

#include "pqlc/bitpoly.hpp"
#include "pqlc/bits.hpp"

namespace pqlc {

enum class LcMethod { BerlekampMassey, Gcd };

std::string_view to_string(LcMethod m) noexcept;

struct LcResult {
  std::uint64_t lc = 0;
  std::uint64_t minimal_poly_degree = 0;
  LcMethod method = LcMethod::BerlekampMassey;
};

struct BerlekampMasseyOutcome {
  LcResult result;
  /// C(x) = 1 + c_1 x + ... + c_L x^L with s_n = sum_{i>=1} c_i s_{n-i}.
  BitPoly connection;
};

struct GcdOutcome {
  LcResult result;
  /// (x^T - 1) / gcd(x^T - 1, s(x)); 1 for the zero sequence. It annihilates
  /// the sequence by convolution (sum_j m_j s_{n-j} = 0), so its reciprocal is
  /// the characteristic polynomial of the shortest recurrence.
  BitPoly minimal_poly;
};

/// Runs Berlekamp-Massey on 2T bits of the sequence whose period is `period`.
BerlekampMasseyOutcome lc_berlekamp_massey(const BitVector& period);

/// Berlekamp-Massey on an arbitrary finite prefix (no periodization).
BerlekampMasseyOutcome berlekamp_massey_prefix(const BitVector& prefix);

GcdOutcome lc_gcd_method(const BitVector& period);

/// x^{p^2} - 1 = unit_root * order_p * order_p2 over GF(2).
struct CyclotomicFactors {
  BitPoly unit_root;  // x + 1
  BitPoly order_p;    // 1 + x + ... + x^{p-1}
  BitPoly order_p2;   // 1 + x^p + ... + x^{(p-1)p}
};

CyclotomicFactors cyclotomic_factors(std::uint64_t p);

/// Common roots of s(x) and x^{p^2} - 1 by multiplicative order of the root:
/// order 1, order p, order p^2.
struct RootSpectrum {
  std::uint64_t n0 = 0;
  std::uint64_t np = 0;
  std::uint64_t nunits = 0;

  std::uint64_t total() const noexcept { return n0 + np + nunits; }
  friend bool operator==(const RootSpectrum&, const RootSpectrum&) = default;
};

RootSpectrum root_spectrum(const BitPoly& s, std::uint64_t p);
RootSpectrum root_spectrum(const BitPoly& s, const CyclotomicFactors& factors);

}  // namespace pqlc
