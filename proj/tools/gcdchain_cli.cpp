// SPDX-License-Identifier: Apache-2.0
// gcdchain: command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "gcdchain/gcdchain.h"

namespace {

struct ProblemDeleter {
  void operator()(gc_problem* p) const { gc_problem_free(p); }
};
struct ChainDeleter {
  void operator()(gc_chain* c) const { gc_chain_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { gc_string_free(s); }
};
using ProblemPtr = std::unique_ptr<gc_problem, ProblemDeleter>;
using ChainPtr = std::unique_ptr<gc_chain, ChainDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report(gc_status st, const char* context) {
  if (st != GC_OK) std::cerr << "gcdchain " << context << ": " << gc_last_error() << '\n';
  return static_cast<int>(st);
}

int load_problem(const std::string& path, const std::string& field, ProblemPtr& out) {
  gc_problem* raw = nullptr;
  const gc_status st = gc_problem_load(path.c_str(), field.empty() ? nullptr : field.c_str(), &raw);
  out.reset(raw);
  return report(st, path.c_str());
}

bool write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int cmd_compute(const std::string& input, const std::string& output, const std::string& field,
                bool with_trace) {
  ProblemPtr problem;
  if (int rc = load_problem(input, field, problem)) return rc;
  gc_chain* raw = nullptr;
  char* trace = nullptr;
  const gc_status st = gc_compute(problem.get(), &raw, with_trace ? &trace : nullptr);
  ChainPtr chain(raw);
  StringPtr trace_text(trace);
  if (trace_text) std::cerr << trace_text.get();
  if (st != GC_OK) return report(st, "compute");
  char* json = nullptr;
  if (int rc = report(gc_chain_to_json(chain.get(), &json), "serialise")) return rc;
  StringPtr json_text(json);
  if (!write_output(output, json_text.get())) {
    std::cerr << "gcdchain: cannot write '" << output << "'\n";
    return GC_ERR_USAGE;
  }
  return GC_OK;
}

int cmd_trace(const std::string& input, const std::string& field) {
  ProblemPtr problem;
  if (int rc = load_problem(input, field, problem)) return rc;
  gc_chain* raw = nullptr;
  char* trace = nullptr;
  const gc_status st = gc_compute(problem.get(), &raw, &trace);
  ChainPtr chain(raw);
  StringPtr trace_text(trace);
  if (trace_text) std::fputs(trace_text.get(), stdout);
  return report(st, "trace");
}

int cmd_verify(const std::string& input, const std::string& chain_path, const std::string& field) {
  ProblemPtr problem;
  if (int rc = load_problem(input, field, problem)) return rc;
  gc_chain* raw = nullptr;
  const gc_status loaded = gc_chain_load(chain_path.c_str(), &raw);
  ChainPtr chain(raw);
  if (loaded != GC_OK) return report(loaded, chain_path.c_str());
  char* text = nullptr;
  const gc_status st = gc_verify(problem.get(), chain.get(), &text);
  StringPtr report_text(text);
  if (report_text) std::fputs(report_text.get(), stdout);
  if (st == GC_OK) std::puts("chain verified");
  return report(st, "verify");
}

struct SelftestArgs {
  std::uint64_t seed = 1;
  int count = 500;
  int max_deg_y = 5;
  int max_e = 4;
  int max_deg_p = 2;
  std::string primes = "5,7,101";
};

int cmd_selftest(const SelftestArgs& args) {
  char* summary = nullptr;
  char* timing = nullptr;
  const gc_status st = gc_selftest(args.seed, args.count, args.max_deg_y, args.max_e, args.max_deg_p,
                                   args.primes.c_str(), &summary, &timing);
  StringPtr summary_text(summary), timing_text(timing);
  if (summary_text) std::fputs(summary_text.get(), stdout);
  if (timing_text) std::fputs(timing_text.get(), stderr);
  return report(st, "selftest");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gcd chains of two monic polynomials over k[x]/<p^e>"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gc_version()));

  std::string input, output, chain_path, field;
  bool with_trace = false;

  auto* compute = app.add_subcommand("compute", "compute the gcd chain of a problem file");
  compute->add_option("problem", input, "problem file (JSON)")->required();
  compute->add_option("-o,--output", output, "chain file to write (default stdout)");
  compute->add_option("--field", field, "override the field: rationals or a prime");
  compute->add_flag("--trace", with_trace, "write the iteration log to stderr");

  auto* trace = app.add_subcommand("trace", "print the iteration log");
  trace->add_option("problem", input, "problem file (JSON)")->required();
  trace->add_option("--field", field, "override the field: rationals or a prime");

  auto* verify = app.add_subcommand("verify", "check a chain file against a problem file");
  verify->add_option("problem", input, "problem file (JSON)")->required();
  verify->add_option("chain", chain_path, "chain file (JSON)")->required();
  verify->add_option("--field", field, "override the field: rationals or a prime");

  SelftestArgs st;
  auto* selftest = app.add_subcommand(
      "selftest", "run the planted-instance campaign; summary on stdout, timing on stderr");
  selftest->add_option("--seed", st.seed, "campaign seed")->capture_default_str();
  selftest->add_option("--count", st.count, "number of instances")->capture_default_str()->check(CLI::NonNegativeNumber);
  selftest->add_option("--max-deg-y", st.max_deg_y, "largest deg_y of a")->capture_default_str()->check(CLI::PositiveNumber);
  selftest->add_option("--max-e", st.max_e, "largest exponent e")->capture_default_str()->check(CLI::PositiveNumber);
  selftest->add_option("--max-deg-p", st.max_deg_p, "largest deg p")->capture_default_str()->check(CLI::Range(1, 3));
  selftest->add_option("--field", st.primes, "comma separated primes")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : GC_ERR_USAGE;
  }

  if (*compute) return cmd_compute(input, output, field, with_trace);
  if (*trace) return cmd_trace(input, field);
  if (*verify) return cmd_verify(input, chain_path, field);
  return cmd_selftest(st);
}
