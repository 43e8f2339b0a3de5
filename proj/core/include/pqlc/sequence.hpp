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

// One period (length p^2) of the binary sequences built from q_{p,w}:
//   f_u = 0 iff q_{p,w}(u) is zero or a quadratic residue mod p,
//   e_u = 0 iff q_{p,w}(u) < p/2.

#include <cstdint>
#include <string>
#include <string_view>

#include "pqlc/bits.hpp"
#include "pqlc/cyclotomy.hpp"
#include "pqlc/numtheory.hpp"

namespace pqlc {

enum class SequenceKind { F, E };

std::string_view to_string(SequenceKind k) noexcept;
/// "f" or "e"; throws std::invalid_argument otherwise.
SequenceKind parse_sequence_kind(std::string_view s);

class BinarySequence {
 public:
  BinarySequence(BitVector bits, SequenceKind kind, QuotientSpec spec);

  const BitVector& bits() const noexcept { return bits_; }
  SequenceKind kind() const noexcept { return kind_; }
  const QuotientSpec& spec() const noexcept { return spec_; }
  std::size_t period() const noexcept { return bits_.size(); }
  std::size_t weight() const noexcept { return bits_.popcount(); }
  bool operator[](std::size_t u) const noexcept { return bits_[u % bits_.size()]; }

 private:
  BitVector bits_;
  SequenceKind kind_;
  QuotientSpec spec_;
};

/// Straight from the quotient values; every w >= 1 is accepted.
BinarySequence generate_f(const QuotientSpec& spec);

/// Same sequence assembled from the partition classes. Throws
/// std::invalid_argument when p | w.
BinarySequence generate_f_by_classes(const CyclotomicPartition& part);

BinarySequence generate_e(const QuotientSpec& spec);

BinarySequence generate(const QuotientSpec& spec, SequenceKind kind);

/// One line of '0'/'1', newline-terminated.
std::string format_bits(const BinarySequence& seq);
/// Lowercase hex, first bit (u = 0) is the most significant bit of the first
/// digit; the final digit is zero-padded on the right.
std::string format_hex(const BinarySequence& seq);
/// {"p":..,"w":..,"kind":"f"|"e","bits":"0101.."}, newline-terminated.
std::string format_json(const BinarySequence& seq);

}  // namespace pqlc
