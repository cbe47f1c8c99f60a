// SPDX-License-Identifier: Apache-2.0
// JSON problem and chain files.
#pragma once

#include <optional>
#include <string>

#include "gcdchain/chain.hpp"

namespace gcdchain {

inline constexpr int kFormatVersion = 1;

struct Problem {
  YPoly a;
  YPoly b;

  const Modulus& modulus() const { return a.modulus(); }
  const Field& field() const { return a.field(); }
};

/// "rationals", "Q", a decimal prime, or "GF(q)".
Field parse_field_name(const std::string& text);

/// Parse errors raise ErrorKind::Parse; well-formed files that break the
/// input contract (T not monic, a or b not monic, deg a < deg b) raise
/// Precondition or NonMonic. field_override replaces the file's field.
Problem parse_problem(const std::string& json_text,
                      const std::optional<Field>& field_override = std::nullopt);
std::string problem_to_json(const Problem& problem);

/// The chain file carries both the raw C/D/Tree lists and the derived
/// blocks; on input the two must agree.
std::string chain_to_json(const GcdChain& chain);
GcdChain parse_chain(const std::string& json_text);

std::string read_text_file(const std::string& path);

}  // namespace gcdchain
