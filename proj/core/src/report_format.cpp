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

#include "pqlc/report_format.hpp"

#include <fmt/format.h>

#include "json.hpp"

namespace pqlc {

namespace {

using Json = nlohmann::ordered_json;

std::string joined_values(const LcPrediction& prediction, std::string_view sep) {
  std::string out;
  for (const auto& a : prediction.admissible) {
    if (!out.empty()) out += sep;
    out += std::to_string(a.value);
  }
  return out;
}

Json prediction_object(const LcPrediction& prediction) {
  Json admissible = Json::array();
  for (const auto& a : prediction.admissible) admissible.push_back({{"value", a.value}, {"formula", a.label}});
  return {{"case", prediction.case_label},
          {"admissible", admissible},
          {"exact", prediction.exact()},
          {"hypothesis_waived", prediction.hypothesis_waived}};
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json report_object(const LcReport& r) {
  Json j;
  j["p"] = r.p;
  j["w"] = r.w;
  j["class"] = std::string(to_string(r.exponent_class));
  j["kind"] = std::string(to_string(r.kind));
  j["p_mod_8"] = r.p % 8;
  j["wieferich"] = r.wieferich;
  j["lc_bm"] = optional_json(r.lc_bm);
  j["lc_gcd"] = optional_json(r.lc_gcd);
  j["minimal_poly_degree"] = optional_json(r.minimal_poly_degree);
  j["weight"] = r.weight;
  j["spectrum"] = {{"n0", r.spectrum.n0}, {"np", r.spectrum.np}, {"nunits", r.spectrum.nunits}};
  j["prediction"] = r.prediction ? prediction_object(*r.prediction) : Json(nullptr);
  j["refusal"] = optional_json(r.refusal);
  j["in_set"] = optional_json(r.in_set);
  j["branch"] = optional_json(r.branch);
  return j;
}

}  // namespace

int signed_mod8(std::uint64_t p) noexcept {
  const int r = static_cast<int>(p % 8);
  return r > 4 ? r - 8 : r;
}

std::string prediction_text(const QuotientSpec& spec, const LcPrediction& prediction) {
  std::string out = fmt::format("p={} w={} class={}\ncase: {}\nadmissible:", spec.p(), spec.w(),
                                to_string(spec.exponent_class()), prediction.case_label);
  for (const auto& a : prediction.admissible) out += fmt::format(" {}={}", a.value, a.label);
  out += fmt::format("\nexact: {}\n", prediction.exact() ? "yes" : "no");
  if (prediction.hypothesis_waived) out += "warning: Wieferich prime, hypothesis waived by --force\n";
  return out;
}

std::string prediction_json(const QuotientSpec& spec, const LcPrediction& prediction) {
  Json j;
  j["p"] = spec.p();
  j["w"] = spec.w();
  j["class"] = std::string(to_string(spec.exponent_class()));
  j.update(prediction_object(prediction));
  return j.dump(2) + "\n";
}

std::string report_text(const LcReport& r) {
  std::string out = fmt::format("p={} w={} class={} kind={} p_mod_8={} wieferich={}\n", r.p, r.w,
                                to_string(r.exponent_class), to_string(r.kind), r.p % 8, r.wieferich);
  if (r.lc_bm) out += fmt::format("lc (berlekamp-massey): {}\n", *r.lc_bm);
  if (r.lc_gcd) out += fmt::format("lc (gcd): {}\n", *r.lc_gcd);
  if (r.minimal_poly_degree) out += fmt::format("minimal polynomial degree: {}\n", *r.minimal_poly_degree);
  out += fmt::format("weight: {}\n", r.weight);
  out += fmt::format("spectrum: n0={} np={} nunits={}\n", r.spectrum.n0, r.spectrum.np, r.spectrum.nunits);
  if (r.prediction) {
    out += fmt::format("predicted: {{{}}} ({})\n", joined_values(*r.prediction, ", "), r.prediction->case_label);
  }
  if (r.refusal) out += fmt::format("prediction: none ({})\n", *r.refusal);
  if (r.in_set) out += fmt::format("in_set: {}\n", *r.in_set ? "true" : "false");
  if (r.branch) out += fmt::format("branch: {}\n", *r.branch);
  if (!r.methods_agree()) out += "ERROR: berlekamp-massey and gcd disagree\n";
  return out;
}

std::string report_json(const LcReport& r) { return report_object(r).dump(2) + "\n"; }

std::string scan_csv(const ScanResult& scan) {
  std::string out = std::string(kScanCsvHeader) + "\n";
  for (const auto& r : scan.rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.p, r.w, to_string(r.exponent_class), r.p % 8,
                       r.wieferich ? "true" : "false", r.lc(),
                       r.prediction ? joined_values(*r.prediction, "|") : "", r.branch.value_or(""),
                       r.in_set ? (*r.in_set ? "true" : "false") : "", r.weight, r.spectrum.n0,
                       r.spectrum.np, r.spectrum.nunits);
  }
  return out;
}

std::string scan_json(const ScanResult& scan) {
  Json rows = Json::array();
  for (const auto& r : scan.rows) rows.push_back(report_object(r));
  Json summary = Json::array();
  for (const auto& b : scan.summary) {
    summary.push_back({{"class", std::string(to_string(b.exponent_class))},
                       {"p_mod_8", b.p_mod_8},
                       {"branch", b.branch},
                       {"count", b.count}});
  }
  Json j;
  j["rows"] = rows;
  j["summary"] = summary;
  j["skipped_wieferich"] = scan.skipped_wieferich;
  j["all_consistent"] = scan.all_consistent();
  return j.dump(2) + "\n";
}

std::string scan_markdown(const ScanResult& scan) {
  std::string out = "| p | w | mod 8 | linear complexity |\n|---|---|---|---|\n";
  for (const auto& r : scan.rows) {
    std::string lc = std::to_string(r.lc());
    if (r.branch) lc += "=" + *r.branch;
    if (r.in_set && !*r.in_set) lc += " (outside predicted set)";
    out += fmt::format("| {} | {} | {} | {} |\n", r.p, r.w, signed_mod8(r.p), lc);
  }
  if (!scan.summary.empty()) {
    out += "\n| class | mod 8 | branch | count |\n|---|---|---|---|\n";
    for (const auto& b : scan.summary) {
      out += fmt::format("| {} | {} | {} | {} |\n", to_string(b.exponent_class),
                         signed_mod8(b.p_mod_8), b.branch, b.count);
    }
  }
  if (!scan.skipped_wieferich.empty()) {
    out += "\nskipped Wieferich primes:";
    for (auto p : scan.skipped_wieferich) out += fmt::format(" {}", p);
    out += "\n";
  }
  return out;
}

std::string partition_json(const CyclotomicPartition& part, const FactsReport& facts) {
  const std::uint64_t p = part.p();
  Json j;
  j["p"] = p;
  j["w"] = part.spec().w();
  for (const auto& [key, kind] : {std::pair{"D", ClassKind::D}, {"Q", ClassKind::Q}, {"N", ClassKind::N}}) {
    Json classes = Json::array();
    for (std::uint64_t l = 0; l < p; ++l) classes.push_back(part.members(kind, l));
    j[key] = classes;
  }
  j["P"] = part.multiples();
  Json verdicts = Json::object();
  for (const auto& f : facts.facts) {
    verdicts[f.name] = f.passed ? Json({{"passed", true}}) : Json({{"passed", false}, {"detail", f.detail}});
  }
  j["facts"] = verdicts;
  j["facts_exhaustive"] = facts.exhaustive;
  return j.dump() + "\n";
}

}  // namespace pqlc
