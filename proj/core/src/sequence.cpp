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

#include "pqlc/sequence.hpp"

#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace pqlc {

std::string_view to_string(SequenceKind k) noexcept { return k == SequenceKind::F ? "f" : "e"; }

SequenceKind parse_sequence_kind(std::string_view s) {
  if (s == "f") return SequenceKind::F;
  if (s == "e") return SequenceKind::E;
  throw std::invalid_argument("sequence kind must be 'f' or 'e'");
}

BinarySequence::BinarySequence(BitVector bits, SequenceKind kind, QuotientSpec spec)
    : bits_(std::move(bits)), kind_(kind), spec_(std::move(spec)) {
  if (bits_.size() != spec_.p_squared()) throw std::invalid_argument("sequence period must be p^2");
}

BinarySequence generate_f(const QuotientSpec& spec) {
  const std::uint64_t p = spec.p();
  BitVector bits(spec.p_squared());
  if (spec.exponent_class() != ExponentClass::MultipleOfP) {
    for (std::uint64_t u = 0; u < spec.p_squared(); ++u) {
      const std::uint64_t q = poly_quotient(spec, u);
      if (q != 0 && legendre(static_cast<std::int64_t>(q), p) == -1) bits.set(u);
    }
  }
  return {std::move(bits), SequenceKind::F, spec};
}

BinarySequence generate_f_by_classes(const CyclotomicPartition& part) {
  const QuotientSpec& spec = part.spec();
  const std::uint64_t p = spec.p();
  BitVector bits(spec.p_squared());
  const auto residues = quadratic_residues(p);
  const auto nonresidues = quadratic_nonresidues(p);
  const auto mark = [&bits](const std::vector<std::uint64_t>& us) {
    for (std::uint64_t u : us) bits.set(u);
  };

  // (q/p) = (u/p)^w (H_w(u)/p) on units, so only the parity of w matters.
  if (spec.w() % 2 == 0) {
    for (std::uint64_t l : nonresidues) mark(part.members(ClassKind::D, l));
  } else {
    for (std::uint64_t l : residues) mark(part.members(ClassKind::N, l));
    for (std::uint64_t l : nonresidues) mark(part.members(ClassKind::Q, l));
  }
  if (spec.w() == 1) {
    for (std::uint64_t l : nonresidues) bits.set(l * p);
  }
  return {std::move(bits), SequenceKind::F, spec};
}

BinarySequence generate_e(const QuotientSpec& spec) {
  const std::uint64_t half = (spec.p() - 1) / 2;
  BitVector bits(spec.p_squared());
  if (spec.exponent_class() != ExponentClass::MultipleOfP) {
    for (std::uint64_t u = 0; u < spec.p_squared(); ++u) {
      if (poly_quotient(spec, u) > half) bits.set(u);
    }
  }
  return {std::move(bits), SequenceKind::E, spec};
}

BinarySequence generate(const QuotientSpec& spec, SequenceKind kind) {
  return kind == SequenceKind::F ? generate_f(spec) : generate_e(spec);
}

std::string format_bits(const BinarySequence& seq) { return seq.bits().to_string() + "\n"; }

std::string format_hex(const BinarySequence& seq) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t n = seq.period();
  std::string out;
  out.reserve((n + 3) / 4 + 1);
  for (std::size_t i = 0; i < n; i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < n && seq.bits()[i + j]) nibble |= 1;
    }
    out.push_back(kDigits[nibble]);
  }
  out.push_back('\n');
  return out;
}

std::string format_json(const BinarySequence& seq) {
  nlohmann::ordered_json j;
  j["p"] = seq.spec().p();
  j["w"] = seq.spec().w();
  j["kind"] = std::string(to_string(seq.kind()));
  j["bits"] = seq.bits().to_string();
  return j.dump() + "\n";
}

}  // namespace pqlc
