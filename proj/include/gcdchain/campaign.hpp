// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcdchain/plant.hpp"

namespace gcdchain {

struct CampaignConfig {
  std::uint64_t seed = 1;
  int count = 500;
  PlantLimits limits;
};

struct CampaignCase {
  std::uint64_t seed = 0;
  std::string shape;
  bool passed = false;
  std::string failure;  // first failing check or exception text
  int deg_a = 0;
  int deg_t = 0;
  int hensel_lifts = 0;
  double seconds = 0.0;
};

struct CampaignResult {
  std::vector<CampaignCase> cases;
  int passed = 0;
  int failed = 0;
  int hensel_lifts = 0;
  double total_seconds = 0.0;

  bool ok() const noexcept { return failed == 0; }
  /// Byte-identical for identical configs; contains no timings.
  std::string summary(const CampaignConfig& config) const;
  /// Wall-clock statistics against the (deg T)^2 (deg_y a)^2 cost model.
  std::string timing() const;
};

/// Each case plants an instance, runs gcd_chain, checks verify_chain and
/// compares Tree and C with the planted skeleton.
CampaignResult run_campaign(const CampaignConfig& config);

/// Seed of case k in a campaign seeded with seed.
std::uint64_t case_seed(std::uint64_t seed, int k);

}  // namespace gcdchain
