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

#include "pqlc/bitpoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bitops.hpp"

namespace pqlc {

BitPoly BitPoly::monomial(std::size_t exponent) {
  BitPoly p;
  p.words_.assign(exponent / kWordBits + 1, 0);
  p.words_.back() = std::uint64_t{1} << (exponent % kWordBits);
  p.degree_ = static_cast<std::int64_t>(exponent);
  return p;
}

BitPoly BitPoly::x_pow_plus_one(std::size_t n) {
  BitPoly p = monomial(n);
  p.words_[0] ^= 1;
  p.normalize();
  return p;
}

BitPoly BitPoly::from_exponents(std::span<const std::size_t> exponents) {
  BitPoly p;
  if (exponents.empty()) return p;
  const std::size_t top = *std::max_element(exponents.begin(), exponents.end());
  p.words_.assign(top / kWordBits + 1, 0);
  for (std::size_t e : exponents) p.words_[e / kWordBits] ^= std::uint64_t{1} << (e % kWordBits);
  p.normalize();
  return p;
}

BitPoly BitPoly::from_bits(const BitVector& bits) {
  return from_words({bits.words().begin(), bits.words().end()});
}

BitPoly BitPoly::from_words(std::vector<std::uint64_t> words) {
  BitPoly p;
  p.words_ = std::move(words);
  p.normalize();
  return p;
}

void BitPoly::normalize() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
  degree_ = detail::degree_of(words_);
}

std::size_t BitPoly::term_count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> BitPoly::exponents() const {
  std::vector<std::size_t> out;
  out.reserve(term_count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (std::uint64_t w = words_[wi]; w != 0; w &= w - 1) {
      out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

BitPoly& BitPoly::operator+=(const BitPoly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  normalize();
  return *this;
}

BitPoly& BitPoly::add_shifted(const BitPoly& other, std::size_t shift) {
  if (other.is_zero()) return *this;
  const std::size_t need = (static_cast<std::size_t>(other.degree_) + shift) / kWordBits + 1;
  if (need > words_.size()) words_.resize(need, 0);
  detail::xor_shifted(words_, other.words_, shift);
  normalize();
  return *this;
}

BitPoly operator*(const BitPoly& a, const BitPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Shift-and-add over the sparser operand.
  const BitPoly& sparse = a.term_count() <= b.term_count() ? a : b;
  const BitPoly& dense = &sparse == &a ? b : a;
  std::vector<std::uint64_t> out(static_cast<std::size_t>(a.degree_ + b.degree_) / BitPoly::kWordBits + 1,
                                 0);
  for (std::size_t e : sparse.exponents()) detail::xor_shifted(out, dense.words_, e);
  return BitPoly::from_words(std::move(out));
}

std::string BitPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const auto exps = exponents();
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (*it == 0) {
      out += "1";
    } else if (*it == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(*it);
    }
  }
  return out;
}

BitPoly poly_add(const BitPoly& a, const BitPoly& b) { return a + b; }

BitPoly poly_mul(const BitPoly& a, const BitPoly& b) { return a * b; }

DivRem poly_divrem(const BitPoly& dividend, const BitPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {BitPoly{}, dividend};
  std::vector<std::uint64_t> rem(dividend.words().begin(), dividend.words().end());
  const auto qdeg = static_cast<std::size_t>(dividend.degree() - divisor.degree());
  std::vector<std::uint64_t> quot(qdeg / BitPoly::kWordBits + 1, 0);
  detail::reduce_in_place(rem, divisor.words(), &quot);
  return {BitPoly::from_words(std::move(quot)), BitPoly::from_words(std::move(rem))};
}

BitPoly poly_gcd(const BitPoly& a, const BitPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  std::vector<std::uint64_t> x(a.words().begin(), a.words().end());
  std::vector<std::uint64_t> y(b.words().begin(), b.words().end());
  while (detail::degree_of(y) >= 0) {
    detail::reduce_in_place(x, y, nullptr);
    std::swap(x, y);
  }
  return BitPoly::from_words(std::move(x));
}

}  // namespace pqlc
