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

// Text, JSON, CSV and Markdown renderings of predictions, reports, scans and
// partitions. All output is deterministic for identical inputs.

#include <string>

#include "pqlc/analysis.hpp"
#include "pqlc/cyclotomy.hpp"

namespace pqlc {

inline constexpr const char* kScanCsvHeader =
    "p,w,class,p_mod_8,wieferich,lc,predicted,branch,in_set,weight,n0,np,nunits";

std::string prediction_text(const QuotientSpec& spec, const LcPrediction& prediction);
std::string prediction_json(const QuotientSpec& spec, const LcPrediction& prediction);

std::string report_text(const LcReport& report);
std::string report_json(const LcReport& report);

std::string scan_csv(const ScanResult& scan);
std::string scan_json(const ScanResult& scan);
/// Per-row table (p, w, signed p mod 8, "value=formula") followed by the
/// branch-frequency summary.
std::string scan_markdown(const ScanResult& scan);

std::string partition_json(const CyclotomicPartition& part, const FactsReport& facts);

/// p mod 8 as one of 1, 3, -3, -1.
int signed_mod8(std::uint64_t p) noexcept;

}  // namespace pqlc
