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

// Word-level helpers shared by the polynomial and linear-complexity code.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pqlc::detail {

inline constexpr std::size_t kWordBits = 64;

/// Highest set bit over all words, or -1.
inline std::int64_t degree_of(std::span<const std::uint64_t> words) noexcept {
  for (std::size_t i = words.size(); i-- > 0;) {
    if (words[i] != 0) {
      return static_cast<std::int64_t>(i * kWordBits + kWordBits - 1 -
                                       static_cast<std::size_t>(std::countl_zero(words[i])));
    }
  }
  return -1;
}

/// dst ^= src << shift. dst must be large enough to hold the shifted src;
/// bits that would land past dst.size() words are dropped.
inline void xor_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                        std::size_t shift) noexcept {
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  if (bs == 0) {
    for (std::size_t k = 0; k < src.size() && k + ws < dst.size(); ++k) dst[k + ws] ^= src[k];
    return;
  }
  for (std::size_t k = 0; k < src.size() && k + ws < dst.size(); ++k) {
    dst[k + ws] ^= src[k] << bs;
    if (k + ws + 1 < dst.size()) dst[k + ws + 1] ^= src[k] >> (kWordBits - bs);
  }
}

/// 64 bits of `words` starting at bit `offset`; bits past the end read as 0.
inline std::uint64_t extract_word(std::span<const std::uint64_t> words, std::size_t offset) noexcept {
  const std::size_t wi = offset / kWordBits;
  const std::size_t bs = offset % kWordBits;
  const std::uint64_t lo = wi < words.size() ? words[wi] : 0;
  if (bs == 0) return lo;
  const std::uint64_t hi = wi + 1 < words.size() ? words[wi + 1] : 0;
  return (lo >> bs) | (hi << (kWordBits - bs));
}

/// rem <- rem mod divisor (divisor nonzero). When quotient is non-null it
/// accumulates the quotient bits and must be sized for them.
inline void reduce_in_place(std::vector<std::uint64_t>& rem, std::span<const std::uint64_t> divisor,
                            std::vector<std::uint64_t>* quotient) {
  const std::int64_t ddeg = degree_of(divisor);
  const std::size_t dwords = static_cast<std::size_t>(ddeg) / kWordBits + 1;
  divisor = divisor.first(dwords);
  std::int64_t rdeg = degree_of(rem);
  while (rdeg >= ddeg) {
    const auto shift = static_cast<std::size_t>(rdeg - ddeg);
    if (quotient != nullptr) (*quotient)[shift / kWordBits] ^= std::uint64_t{1} << (shift % kWordBits);
    const std::size_t top_word = static_cast<std::size_t>(rdeg) / kWordBits;
    xor_shifted(std::span<std::uint64_t>(rem).first(top_word + 1), divisor, shift);
    // The leading term cancelled; rescan downward from the old top word.
    rdeg = degree_of(std::span<const std::uint64_t>(rem).first(top_word + 1));
  }
  std::size_t used = rdeg < 0 ? 0 : static_cast<std::size_t>(rdeg) / kWordBits + 1;
  rem.resize(used);
}

}  // namespace pqlc::detail
