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

// Predicted linear-complexity sets for (f_u), measurement of both sequence
// kinds, membership verification and the multi-prime scan harness.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqlc/linear_complexity.hpp"
#include "pqlc/numtheory.hpp"
#include "pqlc/sequence.hpp"

namespace pqlc {

struct AdmissibleValue {
  std::uint64_t value;
  std::string label;  // e.g. "(p^2+p)/2-1"

  friend bool operator==(const AdmissibleValue&, const AdmissibleValue&) = default;
};

struct LcPrediction {
  std::vector<AdmissibleValue> admissible;
  std::string case_label;
  /// True when the non-Wieferich hypothesis 2^(p-1) != 1 (mod p^2) was waived.
  bool hypothesis_waived = false;

  bool exact() const noexcept { return admissible.size() == 1; }
  bool contains(std::uint64_t lc) const noexcept;
  /// Label of the admissible value equal to lc, if any.
  std::optional<std::string> branch_of(std::uint64_t lc) const;
};

enum class RefusalReason { Wieferich, UnreducedExponent };

class PredictionRefused : public std::runtime_error {
 public:
  PredictionRefused(RefusalReason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  RefusalReason reason() const noexcept { return reason_; }

 private:
  RefusalReason reason_;
};

/// Admissible LC values of (f_u) for 1 <= w < p or p | w. Throws
/// PredictionRefused for Wieferich p (unless force) and for w >= p, p !| w.
LcPrediction predict_lc(const QuotientSpec& spec, bool force = false);

enum class MethodSelection { BerlekampMassey, Gcd, Both };

MethodSelection parse_method_selection(std::string_view s);

struct MeasureOptions {
  MethodSelection methods = MethodSelection::Both;
  /// Attach a prediction even for Wieferich p.
  bool force = false;
};

struct LcReport {
  std::uint64_t p = 0;
  std::uint64_t w = 0;
  ExponentClass exponent_class = ExponentClass::One;
  SequenceKind kind = SequenceKind::F;
  bool wieferich = false;

  std::optional<LcPrediction> prediction;
  std::optional<std::string> refusal;  // why no prediction is attached (kind F only)

  std::optional<std::uint64_t> lc_bm;
  std::optional<std::uint64_t> lc_gcd;
  std::optional<std::uint64_t> minimal_poly_degree;  // from the gcd route
  RootSpectrum spectrum;
  std::uint64_t weight = 0;

  std::optional<bool> in_set;
  std::optional<std::string> branch;

  /// The measured value, preferring Berlekamp-Massey.
  std::uint64_t lc() const noexcept { return lc_bm ? *lc_bm : lc_gcd.value_or(0); }
  bool methods_agree() const noexcept { return !lc_bm || !lc_gcd || *lc_bm == *lc_gcd; }
};

LcReport measure_lc(const QuotientSpec& spec, SequenceKind kind, const MeasureOptions& options = {});

/// measure_lc for (f_u) with a mandatory prediction; throws PredictionRefused.
LcReport verify(const QuotientSpec& spec, bool force = false);

enum class WSelector { Even, Odd, One, All };

WSelector parse_w_selector(std::string_view s);
std::string_view to_string(WSelector s) noexcept;

/// Exponents in [1, p) picked by the selector, ascending.
std::vector<std::uint64_t> select_exponents(std::uint64_t p, WSelector selector);

struct ScanOptions {
  std::uint64_t max_p = 0;  // primes p < max_p
  WSelector selector = WSelector::All;
  SequenceKind kind = SequenceKind::F;
  unsigned jobs = 1;  // 0 = hardware concurrency
};

struct BranchCount {
  ExponentClass exponent_class;
  std::uint64_t p_mod_8;
  std::string branch;
  std::size_t count;
};

struct ScanResult {
  std::vector<LcReport> rows;  // sorted by (p, w)
  std::vector<BranchCount> summary;
  std::vector<std::uint64_t> skipped_wieferich;

  /// False if any row has in_set == false or disagreeing methods.
  bool all_consistent() const noexcept;
};

ScanResult scan(const ScanOptions& options);

/// Odd primes p < limit with 2^(p-1) == 1 (mod p^2). limit <= 2^32.
std::vector<std::uint64_t> wieferich_scan(std::uint64_t limit);

/// Odd primes in [3, limit), ascending.
std::vector<std::uint64_t> odd_primes_below(std::uint64_t limit);

}  // namespace pqlc
