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

// Level sets of H_w on the units modulo p^2, refined by the quadratic
// character of u mod p:
//   D_l = { u unit : H_w(u) == l (mod p) },  Q_l / N_l = residues / non-residues in D_l,
//   P   = { kp : 0 <= k < p }.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pqlc/bitpoly.hpp"
#include "pqlc/numtheory.hpp"

namespace pqlc {

enum class ClassKind { D, Q, N };

class CyclotomicPartition {
 public:
  const QuotientSpec& spec() const noexcept { return spec_; }
  std::uint64_t p() const noexcept { return spec_.p(); }
  std::uint64_t p_squared() const noexcept { return spec_.p_squared(); }

  bool is_multiple_of_p(std::uint64_t u) const noexcept { return labels_[u] & kMultipleBit; }
  /// l for a unit in D_l, k for u = kp.
  std::uint64_t class_index(std::uint64_t u) const noexcept { return labels_[u] & kIndexMask; }
  /// (u/p) for units, 0 for multiples of p.
  int character(std::uint64_t u) const noexcept {
    if (is_multiple_of_p(u)) return 0;
    return (labels_[u] & kNonResidueBit) ? -1 : 1;
  }

  /// Members of D_l, Q_l or N_l in increasing order. Throws std::out_of_range for l >= p.
  const std::vector<std::uint64_t>& members(ClassKind kind, std::uint64_t l) const;
  const std::vector<std::uint64_t>& multiples() const noexcept { return multiples_; }

 private:
  friend CyclotomicPartition build_partition(const QuotientSpec& spec);
  explicit CyclotomicPartition(const QuotientSpec& spec) : spec_(spec) {}

  static constexpr std::uint32_t kMultipleBit = 1U << 31;
  static constexpr std::uint32_t kNonResidueBit = 1U << 30;
  static constexpr std::uint32_t kIndexMask = kNonResidueBit - 1;

  QuotientSpec spec_;
  std::vector<std::uint32_t> labels_;  // one per u in [0, p^2)
  std::array<std::vector<std::vector<std::uint64_t>>, 3> members_;  // indexed by ClassKind
  std::vector<std::uint64_t> multiples_;
};

/// Throws std::invalid_argument when p | w.
CyclotomicPartition build_partition(const QuotientSpec& spec);

/// sum_{u in class} x^u.
BitPoly class_polynomial(const CyclotomicPartition& part, ClassKind kind, std::uint64_t l);

/// sum over non-residues l of D_{l + shift mod p}(x).
BitPoly lambda_polynomial(const CyclotomicPartition& part, std::uint64_t shift);

struct FactCheck {
  std::string name;  // "I" .. "VI"
  bool passed = true;
  std::string detail;  // first counterexample, empty when passed
};

struct FactsReport {
  std::array<FactCheck, 6> facts;
  bool exhaustive = true;  // false when multipliers were sampled

  bool all_passed() const noexcept {
    for (const auto& f : facts) {
      if (!f.passed) return false;
    }
    return true;
  }
};

/// Largest p for which verify_facts tries every multiplier a.
inline constexpr std::uint64_t kExhaustiveFactsLimit = 31;
/// Multipliers drawn per class above that limit.
inline constexpr std::size_t kFactsSamplesPerClass = 8;

/// Checks the translation laws aD_l = D_{l+l'}, aQ_l = Q_{l+l'}, aN_l = N_{l+l'}
/// (a in Q_{l'}), aQ_l = N_{l+l'}, aN_l = Q_{l+l'} (a in N_{l'}) and that every
/// D_l reduces mod p onto {1, ..., p-1}.
FactsReport verify_facts(const CyclotomicPartition& part);

/// Quadratic residues / non-residues modulo p in increasing order.
std::vector<std::uint64_t> quadratic_residues(std::uint64_t p);
std::vector<std::uint64_t> quadratic_nonresidues(std::uint64_t p);

}  // namespace pqlc
