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

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "pqlc/analysis.hpp"
#include "pqlc/cyclotomy.hpp"
#include "pqlc/numtheory.hpp"
#include "pqlc/report_format.hpp"
#include "pqlc/sequence.hpp"

namespace pqlc::cli {

namespace {

struct Options {
  std::uint64_t p = 0;
  std::uint64_t w = 0;
  std::uint64_t u = 0;
  std::string kind = "f";
  std::string format;
  std::string method = "both";
  std::string selector;
  std::string out_format = "csv";
  std::uint64_t max_p = 0;
  std::uint64_t limit = 0;
  unsigned jobs = 1;
  bool force = false;
  std::string output_path;
};

void add_pw(CLI::App* sub, Options& o) {
  sub->add_option("p", o.p, "odd prime modulus")->required();
  sub->add_option("w", o.w, "exponent w >= 1")->required();
}

CLI::Option* add_kind(CLI::App* sub, Options& o) {
  return sub->add_option("--kind", o.kind, "sequence kind")->check(CLI::IsMember({"f", "e"}));
}

CLI::Option* add_text_json(CLI::App* sub, Options& o) {
  o.format = "text";
  return sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear complexity of Legendre symbols of polynomial quotients"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("-o,--output", o.output_path, "write output to a file instead of standard output");

  auto* quotient = app.add_subcommand("quotient", "print q_{p,w}(u)");
  add_pw(quotient, o);
  quotient->add_option("u", o.u, "argument u >= 0")->required();

  auto* generate = app.add_subcommand("generate", "print one period of the sequence");
  add_pw(generate, o);
  add_kind(generate, o);
  generate->add_option("--format", o.format, "bits, hex or json")
      ->check(CLI::IsMember({"bits", "hex", "json"}))
      ->default_str("bits");

  auto* lc = app.add_subcommand("lc", "linear complexity, minimal polynomial degree and root spectrum");
  add_pw(lc, o);
  add_kind(lc, o);
  lc->add_option("--method", o.method, "bm, gcd or both")->check(CLI::IsMember({"bm", "gcd", "both"}));
  add_text_json(lc, o);

  auto* predict = app.add_subcommand("predict", "admissible linear complexities for (f_u)");
  add_pw(predict, o);
  predict->add_flag("--force", o.force, "allow Wieferich primes");
  add_text_json(predict, o);

  auto* verify_cmd = app.add_subcommand("verify", "measure (f_u) and check it against the prediction");
  add_pw(verify_cmd, o);
  verify_cmd->add_flag("--force", o.force, "allow Wieferich primes");
  add_text_json(verify_cmd, o);

  auto* scan_cmd = app.add_subcommand("scan", "measure every selected (p, w) with p below a bound");
  scan_cmd->add_option("--max-p", o.max_p, "scan primes p < N")->required();
  scan_cmd->add_option("--w", o.selector, "exponent selection")
      ->required()
      ->check(CLI::IsMember({"even", "odd", "one", "all"}));
  add_kind(scan_cmd, o);
  scan_cmd->add_option("--out", o.out_format, "csv, json or md")->check(CLI::IsMember({"csv", "json", "md"}));
  scan_cmd->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");

  auto* wieferich = app.add_subcommand("wieferich", "list Wieferich primes below a bound");
  wieferich->add_option("--limit", o.limit, "upper bound (<= 2^32)")->required();

  auto* partition = app.add_subcommand("partition", "dump the D/Q/N/P classes and check their laws");
  add_pw(partition, o);

  auto* spectrum = app.add_subcommand("spectrum", "common roots with x^{p^2}-1 by root order");
  add_pw(spectrum, o);
  add_kind(spectrum, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (quotient->parsed()) {
      buffer << poly_quotient(QuotientSpec(o.p, o.w), o.u) << "\n";
    } else if (generate->parsed()) {
      const auto seq = pqlc::generate(QuotientSpec(o.p, o.w), parse_sequence_kind(o.kind));
      if (o.format == "hex") {
        buffer << format_hex(seq);
      } else if (o.format == "json") {
        buffer << format_json(seq);
      } else {
        buffer << format_bits(seq);
      }
    } else if (lc->parsed()) {
      const auto report = measure_lc(QuotientSpec(o.p, o.w), parse_sequence_kind(o.kind),
                                     {parse_method_selection(o.method), false});
      buffer << (o.format == "json" ? report_json(report) : report_text(report));
      if (!report.methods_agree()) status = kExitMismatch;
    } else if (predict->parsed()) {
      const QuotientSpec spec(o.p, o.w);
      const auto prediction = predict_lc(spec, o.force);
      buffer << (o.format == "json" ? prediction_json(spec, prediction) : prediction_text(spec, prediction));
    } else if (verify_cmd->parsed()) {
      const auto report = pqlc::verify(QuotientSpec(o.p, o.w), o.force);
      buffer << (o.format == "json" ? report_json(report) : report_text(report));
      if (!report.in_set.value_or(false)) status = kExitMismatch;
    } else if (scan_cmd->parsed()) {
      const auto result =
          pqlc::scan({o.max_p, parse_w_selector(o.selector), parse_sequence_kind(o.kind), o.jobs});
      if (o.out_format == "json") {
        buffer << scan_json(result);
      } else if (o.out_format == "md") {
        buffer << scan_markdown(result);
      } else {
        buffer << scan_csv(result);
      }
      if (!result.all_consistent()) status = kExitMismatch;
    } else if (wieferich->parsed()) {
      const auto primes = wieferich_scan(o.limit);
      buffer << fmt::format("{}\n", fmt::join(primes, " "));
    } else if (partition->parsed()) {
      const auto part = build_partition(QuotientSpec(o.p, o.w));
      const auto facts = verify_facts(part);
      buffer << partition_json(part, facts);
      if (!facts.all_passed()) status = kExitMismatch;
    } else if (spectrum->parsed()) {
      const auto seq = pqlc::generate(QuotientSpec(o.p, o.w), parse_sequence_kind(o.kind));
      const auto s = root_spectrum(BitPoly::from_bits(seq.bits()), o.p);
      buffer << fmt::format("n0={} np={} nunits={}\n", s.n0, s.np, s.nunits);
    }
  } catch (const PredictionRefused& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  if (o.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.output_path << "\n";
      return kExitInvalidInput;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace pqlc::cli
