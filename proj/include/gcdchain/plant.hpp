// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcdchain/ypoly.hpp"

namespace gcdchain {

/// Planted block structure. Block i is a monic factor of degree
/// block_degrees[i] shared by a and b exactly at precision precisions[i].
/// extra_a / extra_b are degrees of cofactors private to a / b.
struct PlantShape {
  Field field = Field::prime_field(5);
  int deg_p = 1;
  int e = 1;
  std::vector<int> precisions;
  std::vector<int> block_degrees;
  int extra_a = 0;
  int extra_b = 0;

  std::string describe() const;
};

struct PlantedInstance {
  YPoly a;
  YPoly b;
  XPoly p;
  std::vector<XPoly> tree;  // expected Tree
  std::vector<YPoly> C;     // expected C, each modulo its Tree entry
};

struct PlantLimits {
  std::vector<std::uint64_t> primes{5, 7, 101};
  int max_deg_p = 2;
  int max_e = 4;
  int max_deg_y = 5;
};

/// Throws Precondition for inconsistent shapes: precisions not strictly
/// increasing or outside [1, e], mismatched lengths, non-positive degrees,
/// deg p outside [1, 3], or rationals with deg p > 2.
void validate_shape(const PlantShape& shape);

/// Deterministic in (seed, shape). Pieces are pairwise coprime modulo p, so
/// the gcd chain of (a, b) is fixed by the shape: Tree[i] = p^{precisions[i]}
/// and C[i] is the product of blocks i.. reduced modulo Tree[i]. With no
/// blocks the expected chain is [(1, T)].
PlantedInstance plant_instance(std::uint64_t seed, const PlantShape& shape);

/// A random shape within the limits, deterministic in seed.
PlantShape random_shape(std::uint64_t seed, const PlantLimits& limits);

}  // namespace gcdchain
