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

#include "pqlc/cyclotomy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace pqlc {

namespace {

std::size_t kind_index(ClassKind kind) noexcept { return static_cast<std::size_t>(kind); }

ClassKind image_kind(ClassKind source, int multiplier_character) {
  if (source == ClassKind::D || multiplier_character == 1) return source;
  return source == ClassKind::Q ? ClassKind::N : ClassKind::Q;
}

std::string_view kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::D:
      return "D";
    case ClassKind::Q:
      return "Q";
    case ClassKind::N:
      return "N";
  }
  return "?";
}

// Multipliers a drawn from one class: all of them, or evenly spaced picks.
std::vector<std::uint64_t> pick_multipliers(const std::vector<std::uint64_t>& members, bool exhaustive) {
  if (exhaustive || members.size() <= kFactsSamplesPerClass) return members;
  std::vector<std::uint64_t> picked;
  picked.reserve(kFactsSamplesPerClass);
  for (std::size_t i = 0; i < kFactsSamplesPerClass; ++i) {
    picked.push_back(members[i * members.size() / kFactsSamplesPerClass]);
  }
  return picked;
}

// a * source_l == target_{l + l'} as sets, for every l.
void check_translation(const CyclotomicPartition& part, FactCheck& fact, ClassKind multiplier_kind,
                       ClassKind source, bool exhaustive) {
  const std::uint64_t p = part.p();
  const std::uint64_t p2 = part.p_squared();
  std::vector<std::uint64_t> image;
  for (std::uint64_t lp = 0; lp < p && fact.passed; ++lp) {
    for (std::uint64_t a : pick_multipliers(part.members(multiplier_kind, lp), exhaustive)) {
      const ClassKind target = image_kind(source, part.character(a));
      for (std::uint64_t l = 0; l < p; ++l) {
        const auto& src = part.members(source, l);
        image.clear();
        for (std::uint64_t b : src) image.push_back(mul_mod(a, b, p2));
        std::sort(image.begin(), image.end());
        const std::uint64_t shifted = (l + lp) % p;
        if (image != part.members(target, shifted)) {
          fact.passed = false;
          fact.detail = fmt::format("a={} in {}_{}: a*{}_{} != {}_{}", a, kind_name(multiplier_kind), lp,
                                    kind_name(source), l, kind_name(target), shifted);
          return;
        }
      }
    }
  }
}

}  // namespace

const std::vector<std::uint64_t>& CyclotomicPartition::members(ClassKind kind, std::uint64_t l) const {
  if (l >= p()) throw std::out_of_range(fmt::format("class index {} out of range for p={}", l, p()));
  return members_[kind_index(kind)][l];
}

CyclotomicPartition build_partition(const QuotientSpec& spec) {
  if (spec.exponent_class() == ExponentClass::MultipleOfP) {
    throw std::invalid_argument("H_w vanishes identically when p | w; no partition exists");
  }
  CyclotomicPartition part(spec);
  const std::uint64_t p = spec.p();
  const std::uint64_t p2 = spec.p_squared();
  part.labels_.assign(p2, 0);
  for (auto& per_kind : part.members_) per_kind.assign(p, {});

  for (std::uint64_t u = 0; u < p2; ++u) {
    if (u % p == 0) {
      part.labels_[u] = CyclotomicPartition::kMultipleBit | static_cast<std::uint32_t>(u / p);
      part.multiples_.push_back(u);
      continue;
    }
    const std::uint64_t l = h_w(spec, u);
    const bool residue = legendre(static_cast<std::int64_t>(u % p), p) == 1;
    part.labels_[u] = static_cast<std::uint32_t>(l) | (residue ? 0U : CyclotomicPartition::kNonResidueBit);
    part.members_[kind_index(ClassKind::D)][l].push_back(u);
    part.members_[kind_index(residue ? ClassKind::Q : ClassKind::N)][l].push_back(u);
  }
  return part;
}

BitPoly class_polynomial(const CyclotomicPartition& part, ClassKind kind, std::uint64_t l) {
  const auto& m = part.members(kind, l);
  std::vector<std::size_t> exps(m.begin(), m.end());
  return BitPoly::from_exponents(exps);
}

BitPoly lambda_polynomial(const CyclotomicPartition& part, std::uint64_t shift) {
  const std::uint64_t p = part.p();
  std::vector<std::size_t> exps;
  for (std::uint64_t l : quadratic_nonresidues(p)) {
    const auto& m = part.members(ClassKind::D, (l + shift) % p);
    exps.insert(exps.end(), m.begin(), m.end());
  }
  return BitPoly::from_exponents(exps);
}

FactsReport verify_facts(const CyclotomicPartition& part) {
  FactsReport report;
  const std::uint64_t p = part.p();
  report.exhaustive = p <= kExhaustiveFactsLimit;
  const std::array<const char*, 6> names{"I", "II", "III", "IV", "V", "VI"};
  for (std::size_t i = 0; i < names.size(); ++i) report.facts[i].name = names[i];

  check_translation(part, report.facts[0], ClassKind::D, ClassKind::D, report.exhaustive);
  check_translation(part, report.facts[1], ClassKind::Q, ClassKind::Q, report.exhaustive);
  check_translation(part, report.facts[2], ClassKind::Q, ClassKind::N, report.exhaustive);
  check_translation(part, report.facts[3], ClassKind::N, ClassKind::Q, report.exhaustive);
  check_translation(part, report.facts[4], ClassKind::N, ClassKind::N, report.exhaustive);

  auto& six = report.facts[5];
  std::vector<std::uint64_t> expected(p - 1);
  std::iota(expected.begin(), expected.end(), std::uint64_t{1});
  std::vector<std::uint64_t> residues;
  for (std::uint64_t l = 0; l < p; ++l) {
    residues.clear();
    for (std::uint64_t u : part.members(ClassKind::D, l)) residues.push_back(u % p);
    std::sort(residues.begin(), residues.end());
    if (residues != expected) {
      six.passed = false;
      six.detail = fmt::format("D_{} mod p is not {{1, ..., {}}}", l, p - 1);
      break;
    }
  }
  return report;
}

std::vector<std::uint64_t> quadratic_residues(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a < p; ++a) {
    if (legendre(static_cast<std::int64_t>(a), p) == 1) out.push_back(a);
  }
  return out;
}

std::vector<std::uint64_t> quadratic_nonresidues(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a < p; ++a) {
    if (legendre(static_cast<std::int64_t>(a), p) == -1) out.push_back(a);
  }
  return out;
}

}  // namespace pqlc
