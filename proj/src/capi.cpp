// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/gcdchain.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "gcdchain/campaign.hpp"
#include "gcdchain/error.hpp"
#include "gcdchain/io.hpp"
#include "gcdchain/verify.hpp"

struct gc_problem {
  gcdchain::Problem value;
};

struct gc_chain {
  gcdchain::GcdChain value;
};

namespace {

thread_local std::string last_error;

gc_status status_of(gcdchain::ErrorKind kind) {
  using gcdchain::ErrorKind;
  switch (kind) {
    case ErrorKind::Parse:
      return GC_ERR_PARSE;
    case ErrorKind::Precondition:
    case ErrorKind::NonMonic:
    case ErrorKind::ModulusMismatch:
    case ErrorKind::FieldMismatch:
      return GC_ERR_PRECONDITION;
    default:
      return GC_ERR_INTERNAL;
  }
}

template <class Fn>
gc_status guard(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const gcdchain::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GC_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gc_status usage(const char* what) {
  last_error = what;
  return GC_ERR_USAGE;
}

std::optional<gcdchain::Field> override_of(const char* field) {
  if (!field || !*field) return std::nullopt;
  return gcdchain::parse_field_name(field);
}

}  // namespace

extern "C" {

const char* gc_version(void) { return "1.0.0"; }

const char* gc_last_error(void) { return last_error.c_str(); }

gc_status gc_problem_parse(const char* json, const char* field_override, gc_problem** out) {
  if (!json || !out) return usage("gc_problem_parse: null argument");
  return guard([&] {
    *out = new gc_problem{gcdchain::parse_problem(json, override_of(field_override))};
    return GC_OK;
  });
}

gc_status gc_problem_load(const char* path, const char* field_override, gc_problem** out) {
  if (!path || !out) return usage("gc_problem_load: null argument");
  return guard([&] {
    const std::string text = gcdchain::read_text_file(path);
    *out = new gc_problem{gcdchain::parse_problem(text, override_of(field_override))};
    return GC_OK;
  });
}

gc_status gc_problem_to_json(const gc_problem* problem, char** out) {
  if (!problem || !out) return usage("gc_problem_to_json: null argument");
  return guard([&] {
    *out = dup_string(gcdchain::problem_to_json(problem->value));
    return GC_OK;
  });
}

void gc_problem_free(gc_problem* problem) { delete problem; }

gc_status gc_compute(const gc_problem* problem, gc_chain** out, char** trace_out) {
  if (!problem || !out) return usage("gc_compute: null argument");
  gcdchain::Trace trace;
  gcdchain::Trace* tp = trace_out ? &trace : nullptr;
  gc_status st = guard([&] {
    *out = new gc_chain{gcdchain::gcd_chain(problem->value.a, problem->value.b, tp)};
    return GC_OK;
  });
  // The partial log is returned on failure too; it shows where things stopped.
  if (trace_out) {
    const gc_status dup = guard([&] {
      *trace_out = dup_string(trace.text());
      return GC_OK;
    });
    if (st == GC_OK) st = dup;
  }
  return st;
}

gc_status gc_chain_parse(const char* json, gc_chain** out) {
  if (!json || !out) return usage("gc_chain_parse: null argument");
  return guard([&] {
    *out = new gc_chain{gcdchain::parse_chain(json)};
    return GC_OK;
  });
}

gc_status gc_chain_load(const char* path, gc_chain** out) {
  if (!path || !out) return usage("gc_chain_load: null argument");
  return guard([&] {
    *out = new gc_chain{gcdchain::parse_chain(gcdchain::read_text_file(path))};
    return GC_OK;
  });
}

gc_status gc_chain_to_json(const gc_chain* chain, char** out) {
  if (!chain || !out) return usage("gc_chain_to_json: null argument");
  return guard([&] {
    *out = dup_string(gcdchain::chain_to_json(chain->value));
    return GC_OK;
  });
}

int gc_chain_length(const gc_chain* chain) {
  return chain ? static_cast<int>(chain->value.size()) : -1;
}

void gc_chain_free(gc_chain* chain) { delete chain; }

gc_status gc_verify(const gc_problem* problem, const gc_chain* chain, char** report_out) {
  if (!problem || !chain) return usage("gc_verify: null argument");
  return guard([&] {
    const auto report = gcdchain::verify_chain(chain->value, problem->value.a, problem->value.b);
    if (report_out) *report_out = dup_string(report.to_string());
    if (report.all_pass()) return GC_OK;
    for (const auto& c : report.checks) {
      if (!c.passed) {
        last_error = "check '" + c.name + "' failed" + (c.detail.empty() ? "" : ": " + c.detail);
        break;
      }
    }
    return GC_ERR_VERIFY;
  });
}

gc_status gc_selftest(uint64_t seed, int count, int max_deg_y, int max_e, int max_deg_p,
                      const char* primes, char** summary_out, char** timing_out) {
  if (count < 0 || max_deg_y < 1 || max_e < 1 || max_deg_p < 1 || max_deg_p > 3) {
    return usage("gc_selftest: count >= 0, max_deg_y >= 1, max_e >= 1, 1 <= max_deg_p <= 3");
  }
  return guard([&] {
    gcdchain::CampaignConfig config;
    config.seed = seed;
    config.count = count;
    config.limits.max_deg_y = max_deg_y;
    config.limits.max_e = max_e;
    config.limits.max_deg_p = max_deg_p;
    if (primes && *primes) {
      config.limits.primes.clear();
      std::stringstream ss(primes);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const gcdchain::Field f = gcdchain::parse_field_name(item);
        if (f.is_rational()) gcdchain::fail(gcdchain::ErrorKind::Parse, "selftest needs prime fields");
        config.limits.primes.push_back(f.prime);
      }
      if (config.limits.primes.empty()) gcdchain::fail(gcdchain::ErrorKind::Parse, "empty prime list");
    }
    const gcdchain::CampaignResult result = gcdchain::run_campaign(config);
    if (summary_out) *summary_out = dup_string(result.summary(config));
    if (timing_out) *timing_out = dup_string(result.timing());
    if (result.ok()) return GC_OK;
    last_error = std::to_string(result.failed) + " planted instance(s) failed";
    return GC_ERR_VERIFY;
  });
}

void gc_string_free(char* s) { std::free(s); }

}  // extern "C"
