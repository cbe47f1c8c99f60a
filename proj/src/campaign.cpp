// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "gcdchain/chain.hpp"
#include "gcdchain/verify.hpp"

namespace gcdchain {

namespace {

CampaignCase run_case(std::uint64_t seed, const PlantLimits& limits) {
  CampaignCase out;
  out.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    const PlantShape shape = random_shape(seed, limits);
    out.shape = shape.describe();
    const PlantedInstance inst = plant_instance(seed, shape);
    out.deg_a = inst.a.degree();
    out.deg_t = inst.a.modulus().degree();
    const GcdChain chain = gcd_chain(inst.a, inst.b);
    out.hensel_lifts = chain.stats.hensel_lifts;
    const ChainReport report = verify_chain(chain, inst.a, inst.b);
    if (!report.all_pass()) {
      for (const auto& c : report.checks) {
        if (!c.passed) {
          out.failure = c.name + (c.detail.empty() ? "" : ": " + c.detail);
          break;
        }
      }
    } else if (chain.tree != inst.tree) {
      out.failure = "Tree differs from planted skeleton";
    } else if (chain.C != inst.C) {
      out.failure = "C differs from planted skeleton";
    } else {
      out.passed = true;
    }
  } catch (const std::exception& ex) {
    out.failure = std::string("exception: ") + ex.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, int k) {
  // splitmix64 step over (seed, k)
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k) + 1;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CampaignResult run_campaign(const CampaignConfig& config) {
  CampaignResult result;
  for (int k = 0; k < config.count; ++k) {
    CampaignCase c = run_case(case_seed(config.seed, k), config.limits);
    (c.passed ? result.passed : result.failed) += 1;
    result.hensel_lifts += c.hensel_lifts;
    result.total_seconds += c.seconds;
    result.cases.push_back(std::move(c));
  }
  return result;
}

std::string CampaignResult::summary(const CampaignConfig& config) const {
  std::ostringstream os;
  os << "selftest seed=" << config.seed << " count=" << config.count << " primes=";
  for (std::size_t i = 0; i < config.limits.primes.size(); ++i) {
    os << (i ? "," : "") << config.limits.primes[i];
  }
  os << " max-deg-p=" << config.limits.max_deg_p << " max-e=" << config.limits.max_e
     << " max-deg-y=" << config.limits.max_deg_y << '\n';
  if (cases.empty()) return os.str();
  std::map<std::string, int> by_field;
  for (const auto& c : cases) {
    by_field[c.shape.substr(0, c.shape.find(','))] += 1;
  }
  os << "fields:";
  for (const auto& [name, n] : by_field) os << ' ' << name << '=' << n;
  os << '\n';
  for (const auto& c : cases) {
    if (!c.passed) os << "FAIL seed=" << c.seed << " [" << c.shape << "] " << c.failure << '\n';
  }
  os << "hensel lifts " << hensel_lifts << '\n';
  os << "passed " << passed << '/' << cases.size() << ", failed " << failed << '\n';
  return os.str();
}

std::string CampaignResult::timing() const {
  std::ostringstream os;
  os << "total " << fixed(total_seconds, 3) << " s over " << cases.size() << " cases\n";
  if (cases.empty()) return os.str();
  std::vector<double> per_unit;
  std::map<long, std::pair<double, int>> by_cost;
  for (const auto& c : cases) {
    const long cost = static_cast<long>(c.deg_t) * c.deg_t * c.deg_a * c.deg_a;
    if (cost > 0) per_unit.push_back(c.seconds / static_cast<double>(cost));
    auto& slot = by_cost[cost];
    slot.first += c.seconds;
    slot.second += 1;
  }
  std::sort(per_unit.begin(), per_unit.end());
  if (!per_unit.empty()) {
    os << "seconds per (deg T)^2 (deg_y a)^2 unit: min " << per_unit.front() << ", median "
       << per_unit[per_unit.size() / 2] << ", max " << per_unit.back() << '\n';
  }
  os << "cost  cases  mean-ms\n";
  for (const auto& [cost, slot] : by_cost) {
    os << cost << "  " << slot.second << "  " << fixed(1000.0 * slot.first / slot.second, 3) << '\n';
  }
  return os.str();
}

}  // namespace gcdchain
