// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gcdchain/campaign.hpp"
#include "gcdchain/chain.hpp"
#include "gcdchain/nilpotent.hpp"
#include "gcdchain/verify.hpp"
#include "gcdchain/weierstrass.hpp"
#include "prs_check.hpp"
#include "support.hpp"

using namespace gcdchain;
using testsupport::xp;
using testsupport::yp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& fn) {
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.passed) ++failures;
  std::printf("%s %d %s: %s\n", out.passed ? "PASS" : "FAIL", id, title, out.detail.c_str());
  std::fflush(stdout);
}

std::string ms(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f ms", 1000.0 * s);
  return buf;
}

// Lines of text with leading indentation removed.
std::vector<std::string> stripped_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    const auto at = line.find_first_not_of(' ');
    out.push_back(at == std::string::npos ? "" : line.substr(at));
  }
  return out;
}

bool contains_block(const std::vector<std::string>& lines, const std::vector<std::string>& block) {
  for (std::size_t i = 0; i + block.size() <= lines.size(); ++i) {
    bool all = true;
    for (std::size_t k = 0; k < block.size() && all; ++k) all = lines[i + k] == block[k];
    if (all) return true;
  }
  return false;
}

Outcome golden_x3() {
  const Modulus t(xp("x^3"));
  const YPoly a = yp("((y+1)^2 + x*(2*y+1) + x^2*(y+1))*(y+2*x+3*x^2)*(y-1-x-2*x^2)", t);
  const YPoly b = yp("(y+1+2*x+x^2)*(y+2*x+4*x^2)*(y-1-x-2*x^2)", t);
  const auto start = Clock::now();
  const GcdChain chain = gcd_chain(a, b);
  const double elapsed = seconds_since(start);
  const std::vector<XPoly> tree{xp("x"), xp("x^2"), xp("x^3")};
  const std::vector<YPoly> c{yp("(y-1)*y*(y+1)", Modulus(tree[0])), yp("(y-1-x)*(y+2*x)", Modulus(tree[1])),
                             yp("y-1-x-2*x^2", Modulus(tree[2]))};
  std::string got;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    got += (i ? ", (" : "(") + chain.C[i].to_string() + ", " + chain.tree[i].to_string() + ")";
  }
  const bool same = chain.tree == tree && chain.C == c;
  return {same && elapsed < 0.1, "[" + got + "] in " + ms(elapsed)};
}

Outcome golden_x7() {
  const Modulus t(xp("x^7"));
  const YPoly a = yp("(y+x+x^2+x^3+x^4+x^5+x^6)*(y+1+x^3+x^6)", t);
  const YPoly b = yp("(y+x+x^2+2*x^3+x^4+x^5+x^6)*(y+1+x^3+x^5)", t);
  const auto start = Clock::now();
  const GcdChain chain = gcd_chain(a, b);
  const double elapsed = seconds_since(start);
  Trace trace;
  gcd_chain(a, b, &trace);

  std::vector<std::string> problems;
  const Modulus t3(xp("x^3")), t5(xp("x^5"));
  if (chain.C != std::vector<YPoly>{b.reduce_to(t3), yp("y + x^3 + 1", t5)}) problems.push_back("C differs");
  if (chain.D != std::vector<YPoly>{yp("y + x^2 + x", t3)}) problems.push_back("D differs");
  if (chain.tree != std::vector<XPoly>{xp("x^3"), xp("x^5")}) problems.push_back("Tree differs");

  const auto lines = stripped_lines(trace.text());
  const std::vector<std::string> first{
      "S = [",
      "y^2 + (2*x^6 + x^5 + x^4 + 2*x^3 + x^2 + x + 1)*y + 2*x^6 + 2*x^5 + 2*x^4 + x^3 + x^2 + x,",
      "y^2 + (x^6 + 2*x^5 + x^4 + 3*x^3 + x^2 + x + 1)*y + 4*x^6 + 2*x^5 + 2*x^4 + 2*x^3 + x^2 + x,",
      "(-x^6 + x^5 + x^3)*y + 2*x^6 + x^3,",
      "0",
      "]"};
  const std::vector<std::string> second{"S = [",
                                        "y^2 + (3*x^3 + x^2 + x + 1)*y + 2*x^3 + x^2 + x,",
                                        "y + 3*x^3 - x^2 + 1,",
                                        "3*x^3 - x^2,",
                                        "0",
                                        "]"};
  if (!contains_block(lines, first)) problems.push_back("first sequence not in trace");
  if (!contains_block(lines, second)) problems.push_back("second sequence not in trace");
  const std::string text = trace.text();
  for (const char* step : {"G* = y + 2*x^3 + x^2 + x, g* = y + x^3 + 1",
                           "G* = y - 2*x^7 + x^6 + x^5 + x^4 + 2*x^3 + x^2 + x, g* = y + 2*x^7 + x^5 + x^3 + 1"}) {
    if (text.find(step) == std::string::npos) problems.push_back(std::string("missing '") + step + "'");
  }
  if (elapsed >= 0.1) problems.push_back("too slow");
  std::string detail = "C, D, Tree, both sequences and both lifting steps match in " + ms(elapsed);
  if (!problems.empty()) {
    detail.clear();
    for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
  }
  return {problems.empty(), detail};
}

Outcome golden_weierstrass() {
  const Modulus t(xp("x^2"));
  const YPoly f = yp("x*y^2 + y + 1", t);
  const YPoly h = weierstrass_monic(f, 1);
  const auto wf = weierstrass_factor(f, 1);
  const bool ok = h == yp("y + x + 1", t) && wf.q == h && wf.u == yp("1 + x*(y - 1)", t) &&
                  relem_is_invertible(wf.u.coeff(0), t) &&
                  relem_mul(wf.u.coeff(1), wf.u.coeff(1), t).is_zero() && wf.u * wf.q == f;
  return {ok, "h = " + h.to_string() + ", u = " + wf.u.to_string()};
}

CampaignResult campaign_result;
double campaign_seconds = 0.0;

Outcome campaign() {
  CampaignConfig config;
  config.seed = 1;
  config.count = 500;
  const auto start = Clock::now();
  campaign_result = run_campaign(config);
  campaign_seconds = seconds_since(start);
  std::string detail = std::to_string(campaign_result.passed) + "/" + std::to_string(campaign_result.cases.size()) +
                       " planted instances verified in " + std::to_string(campaign_seconds) + " s";
  for (const auto& c : campaign_result.cases) {
    if (!c.passed) {
      detail += "; first failure seed " + std::to_string(c.seed) + ": " + c.failure;
      break;
    }
  }
  return {campaign_result.ok() && campaign_result.cases.size() >= 500 && campaign_seconds < 60.0, detail};
}

Outcome sylvester() {
  PlantLimits limits;
  limits.max_deg_y = 4;
  int instances = 0, entries = 0;
  for (int k = 0; instances < 150; ++k) {
    const std::uint64_t seed = case_seed(5, k);
    const PlantedInstance inst = plant_instance(seed, random_shape(seed, limits));
    if (inst.b.is_zero()) continue;
    const auto cmp = testsupport::compare_with_sylvester(inst.a, inst.b);
    if (!cmp.mismatch.empty()) return {false, "seed " + std::to_string(seed) + ": " + cmp.mismatch};
    if (cmp.compared == 0) continue;
    ++instances;
    entries += cmp.compared;
  }
  return {true, std::to_string(instances) + " instances, " + std::to_string(entries) +
                    " sequence entries equal to determinants up to sign"};
}

Outcome hensel_contract() {
  // Every lift checks g_i == G* g* modulo the target and G*, g* == G, g
  // modulo T' before returning; a breach raises and fails the instance.
  const int lifts = campaign_result.hensel_lifts;
  return {campaign_result.ok() && lifts > 0 && !campaign_result.cases.empty(),
          std::to_string(lifts) + " lifts over " + std::to_string(campaign_result.cases.size()) +
              " instances, no contract violation"};
}

Outcome nilpotent_fuzz() {
  struct Ring {
    Field f;
    XPoly p;
    int e;
  };
  const Field f5 = Field::prime_field(5), f7 = Field::prime_field(7), f101 = Field::prime_field(101);
  const std::vector<Ring> rings{{Field::rationals(), xp("x"), 5},
                                {Field::rationals(), xp("x^2 + 1"), 3},
                                {f5, xp("x^2 + 2", f5), 4},
                                {f7, xp("x + 3", f7), 6},
                                {f101, xp("x^2 + 3", f101), 2}};
  std::mt19937_64 rng(2024);
  std::map<bool, int> seen;
  for (int n = 0; n < 10000; ++n) {
    const Ring& r = rings[static_cast<std::size_t>(n) % rings.size()];
    const Modulus t(r.p.pow(static_cast<unsigned>(r.e)));
    const long span = r.f.is_rational() ? 9 : static_cast<long>(r.f.prime);
    std::vector<XPoly> c;
    const int dy = static_cast<int>(rng() % 6);
    for (int j = 0; j <= dy; ++j) {
      std::vector<Scalar> s;
      for (int i = 0; i < t.degree(); ++i) {
        s.emplace_back(r.f, static_cast<long>(rng() % span) - (r.f.is_rational() ? 4 : 0));
      }
      XPoly coeff(r.f, std::move(s));
      if (rng() % 4 != 0) coeff = t.reduce(coeff * r.p.pow(1 + static_cast<unsigned>(rng() % r.e)));
      c.push_back(std::move(coeff));
    }
    const YPoly f(t, std::move(c));
    const auto nf = nilpotent_factor(f);
    const bool nil = f.pow(static_cast<unsigned>(t.degree())).is_zero();
    if ((nf.power.degree() > 0) != (nf.index == -1) || nil != (nf.index == -1)) {
      return {false, "violated by " + f.to_string() + " modulo " + t.poly().to_string()};
    }
    seen[nil] += 1;
  }
  return {seen[true] > 0 && seen[false] > 0,
          "10000 calls, " + std::to_string(seen[true]) + " nilpotent, " + std::to_string(seen[false]) +
              " with an invertible coefficient"};
}

Outcome scaling() {
  // Fixed block structure in y, growing e * deg p, over GF(101).
  std::string table = "e*deg(p) -> mean ms:";
  double previous = 0.0;
  std::string ratios;
  for (const auto& [deg_p, e] : std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {1, 8}, {2, 8}, {2, 16}}) {
    PlantShape shape;
    shape.field = Field::prime_field(101);
    shape.deg_p = deg_p;
    shape.e = e;
    shape.precisions = {1, shape.e};
    shape.block_degrees = {1, 1};
    shape.extra_a = 2;
    shape.extra_b = 1;
    const int rounds = 10;
    const auto start = Clock::now();
    for (int k = 0; k < rounds; ++k) {
      const PlantedInstance inst = plant_instance(static_cast<std::uint64_t>(k + 1), shape);
      gcd_chain(inst.a, inst.b);
    }
    const double mean = seconds_since(start) / rounds;
    const int size = shape.deg_p * shape.e;
    char buf[64];
    std::snprintf(buf, sizeof buf, " %d -> %.2f", size, 1000.0 * mean);
    table += buf;
    if (previous > 0.0) {
      std::snprintf(buf, sizeof buf, "%s%.2f", ratios.empty() ? "" : ", ", mean / previous);
      ratios += buf;
    }
    previous = mean;
  }
  return {true, table + "; successive ratios " + ratios + " (informational)"};
}

}  // namespace

int main() {
  report(1, "golden chain modulo x^3", golden_x3);
  report(2, "golden chain modulo x^7", golden_x7);
  report(3, "Weierstrass golden factor", golden_weierstrass);
  report(4, "planted campaign", campaign);
  report(5, "Sylvester determinant oracle", sylvester);
  report(6, "Hensel lifting contract", hensel_contract);
  report(7, "nilpotent dichotomy fuzz", nilpotent_fuzz);
  report(8, "scaling in e*deg p", scaling);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
