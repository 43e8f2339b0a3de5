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

#include "pqlc/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include <fmt/format.h>

namespace pqlc {

namespace {

std::vector<AdmissibleValue> values(std::initializer_list<AdmissibleValue> v) { return v; }

// Calls visit(p) for each odd prime p in [3, limit), in order.
void for_each_odd_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& visit) {
  if (limit <= 3) return;
  std::uint64_t root = 1;
  while (root * root < limit) ++root;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }
  constexpr std::uint64_t kSegment = std::uint64_t{1} << 20;
  std::vector<char> seg(kSegment);
  for (std::uint64_t lo = 3; lo < limit; lo += kSegment) {
    const std::uint64_t hi = std::min(limit, lo + kSegment);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint64_t q : base) {
      if (q * q >= hi) break;
      std::uint64_t start = std::max(q * q, (lo + q - 1) / q * q);
      for (std::uint64_t j = start; j < hi; j += q) seg[j - lo] = 0;
    }
    for (std::uint64_t n = lo | 1; n < hi; n += 2) {
      if (seg[n - lo]) visit(n);
    }
  }
}

std::string mod_label(std::uint64_t p, std::uint64_t modulus) {
  return fmt::format("p={} mod {}", p % modulus, modulus);
}

}  // namespace

bool LcPrediction::contains(std::uint64_t lc) const noexcept {
  return std::any_of(admissible.begin(), admissible.end(), [lc](const auto& a) { return a.value == lc; });
}

std::optional<std::string> LcPrediction::branch_of(std::uint64_t lc) const {
  for (const auto& a : admissible) {
    if (a.value == lc) return a.label;
  }
  return std::nullopt;
}

LcPrediction predict_lc(const QuotientSpec& spec, bool force) {
  const std::uint64_t p = spec.p();
  const std::uint64_t p2 = spec.p_squared();
  const ExponentClass cls = spec.exponent_class();

  if (cls == ExponentClass::MultipleOfP) return {values({{0, "0"}}), "p|w", false};
  if (cls == ExponentClass::Large) {
    throw PredictionRefused(
        RefusalReason::UnreducedExponent,
        fmt::format("w={} >= p={} is unreduced; reduce to w1={} (multiplier c={}) and measure empirically",
                    spec.w(), p, spec.reduced_w1().value_or(0), spec.multiplier_c().value_or(0)));
  }
  if (spec.modulus().wieferich() && !force) {
    throw PredictionRefused(RefusalReason::Wieferich,
                            fmt::format("p={} is a Wieferich prime (2^(p-1) == 1 mod p^2); the "
                                        "linear-complexity formulas assume otherwise",
                                        p));
  }

  const AdmissibleValue full{p2 - p, "p^2-p"};
  const AdmissibleValue half{(p2 - p) / 2, "(p^2-p)/2"};
  const AdmissibleValue minus_one{p2 - 1, "p^2-1"};
  LcPrediction out;
  out.hypothesis_waived = spec.modulus().wieferich();

  switch (cls) {
    case ExponentClass::Even:
      out.case_label = "even-w/" + mod_label(p, 4);
      out.admissible = p % 4 == 1 ? values({full}) : values({minus_one});
      break;
    case ExponentClass::OddAtLeast3:
      out.case_label = "odd-w/" + mod_label(p, 8);
      switch (p % 8) {
        case 1:
          out.admissible = values({full, half});
          break;
        case 7:
          out.admissible = values({minus_one, {(p2 + p) / 2 - 1, "(p^2+p)/2-1"}});
          break;
        case 5:
          out.admissible = values({full});
          break;
        default:  // 3
          out.admissible = values({minus_one});
          break;
      }
      break;
    case ExponentClass::One:
      out.case_label = "w=1/" + mod_label(p, 4);
      if (p % 4 == 1) {
        out.admissible = values({full, half});
      } else {
        out.admissible = values({{p2 - p + 1, "p^2-p+1"}, {(p2 - p) / 2 + 1, "(p^2-p)/2+1"}});
      }
      break;
    default:
      break;
  }
  return out;
}

MethodSelection parse_method_selection(std::string_view s) {
  if (s == "bm") return MethodSelection::BerlekampMassey;
  if (s == "gcd") return MethodSelection::Gcd;
  if (s == "both") return MethodSelection::Both;
  throw std::invalid_argument("method must be bm, gcd or both");
}

LcReport measure_lc(const QuotientSpec& spec, SequenceKind kind, const MeasureOptions& options) {
  const BinarySequence seq = generate(spec, kind);
  LcReport r;
  r.p = spec.p();
  r.w = spec.w();
  r.exponent_class = spec.exponent_class();
  r.kind = kind;
  r.wieferich = spec.modulus().wieferich();
  r.weight = seq.weight();

  if (options.methods != MethodSelection::Gcd) r.lc_bm = lc_berlekamp_massey(seq.bits()).result.lc;
  if (options.methods != MethodSelection::BerlekampMassey) {
    const auto g = lc_gcd_method(seq.bits());
    r.lc_gcd = g.result.lc;
    r.minimal_poly_degree = g.result.minimal_poly_degree;
  }
  r.spectrum = root_spectrum(BitPoly::from_bits(seq.bits()), spec.p());

  if (kind == SequenceKind::F) {
    try {
      r.prediction = predict_lc(spec, options.force);
    } catch (const PredictionRefused& e) {
      r.refusal = e.what();
    }
  } else {
    r.refusal = "no prediction for (e_u); empirical measurement only";
  }
  if (r.prediction) {
    r.in_set = r.prediction->contains(r.lc()) && r.methods_agree();
    r.branch = r.prediction->branch_of(r.lc());
  }
  return r;
}

LcReport verify(const QuotientSpec& spec, bool force) {
  // Surface refusals before doing any work.
  (void)predict_lc(spec, force);
  return measure_lc(spec, SequenceKind::F, {MethodSelection::Both, force});
}

WSelector parse_w_selector(std::string_view s) {
  if (s == "even") return WSelector::Even;
  if (s == "odd") return WSelector::Odd;
  if (s == "one") return WSelector::One;
  if (s == "all") return WSelector::All;
  throw std::invalid_argument("w selector must be even, odd, one or all");
}

std::string_view to_string(WSelector s) noexcept {
  switch (s) {
    case WSelector::Even:
      return "even";
    case WSelector::Odd:
      return "odd";
    case WSelector::One:
      return "one";
    case WSelector::All:
      return "all";
  }
  return "?";
}

std::vector<std::uint64_t> select_exponents(std::uint64_t p, WSelector selector) {
  std::vector<std::uint64_t> ws;
  for (std::uint64_t w = 1; w < p; ++w) {
    const bool keep = selector == WSelector::All || (selector == WSelector::One && w == 1) ||
                      (selector == WSelector::Even && w % 2 == 0) ||
                      (selector == WSelector::Odd && w % 2 == 1 && w >= 3);
    if (keep) ws.push_back(w);
  }
  return ws;
}

bool ScanResult::all_consistent() const noexcept {
  return std::all_of(rows.begin(), rows.end(),
                     [](const LcReport& r) { return r.in_set.value_or(true) && r.methods_agree(); });
}

ScanResult scan(const ScanOptions& options) {
  ScanResult result;
  std::vector<QuotientSpec> jobs;
  for (std::uint64_t p : odd_primes_below(options.max_p)) {
    const OddPrimeModulus m(p);
    if (m.wieferich()) {
      result.skipped_wieferich.push_back(p);
      continue;
    }
    for (std::uint64_t w : select_exponents(p, options.selector)) jobs.emplace_back(m, w);
  }

  // Largest jobs first keeps the pool busy; rows land at their fixed index.
  std::vector<std::size_t> order(jobs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;

  std::vector<std::optional<LcReport>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= order.size()) return;
      const std::size_t i = order[k];
      try {
        slots[i] = measure_lc(jobs[i], options.kind);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned n_workers = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;
  n_workers = static_cast<unsigned>(std::min<std::size_t>(n_workers, std::max<std::size_t>(jobs.size(), 1)));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  result.rows.reserve(slots.size());
  for (auto& s : slots) result.rows.push_back(std::move(*s));

  std::map<std::tuple<int, std::uint64_t, std::string>, std::size_t> counts;
  for (const auto& r : result.rows) {
    if (!r.branch) continue;
    ++counts[{static_cast<int>(r.exponent_class), r.p % 8, *r.branch}];
  }
  for (const auto& [key, n] : counts) {
    result.summary.push_back(
        {static_cast<ExponentClass>(std::get<0>(key)), std::get<1>(key), std::get<2>(key), n});
  }
  return result;
}

std::vector<std::uint64_t> odd_primes_below(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for_each_odd_prime(limit, [&out](std::uint64_t p) { out.push_back(p); });
  return out;
}

std::vector<std::uint64_t> wieferich_scan(std::uint64_t limit) {
  if (limit > (std::uint64_t{1} << 32)) throw std::invalid_argument("wieferich scan limit must be <= 2^32");
  std::vector<std::uint64_t> out;
  for_each_odd_prime(limit, [&out](std::uint64_t p) {
    if (is_wieferich(p)) out.push_back(p);
  });
  return out;
}

}  // namespace pqlc
