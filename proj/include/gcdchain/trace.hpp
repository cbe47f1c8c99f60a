// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace gcdchain {

/// Indented, human-readable log of one gcd-chain computation. Algorithms
/// take a nullable Trace* and write to it only when one is supplied.
class Trace {
 public:
  void line(const std::string& text) {
    lines_.push_back(std::string(static_cast<std::size_t>(2 * depth_), ' ') + text);
  }

  class Scope {
   public:
    explicit Scope(Trace* t) : t_(t) {
      if (t_) ++t_->depth_;
    }
    ~Scope() {
      if (t_) --t_->depth_;
    }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    Trace* t_;
  };

  const std::vector<std::string>& lines() const noexcept { return lines_; }

  std::string text() const {
    std::string out;
    for (const auto& l : lines_) out += l + "\n";
    return out;
  }

 private:
  std::vector<std::string> lines_;
  int depth_ = 0;
};

inline void trace_line(Trace* t, const std::string& text) {
  if (t) t->line(text);
}

}  // namespace gcdchain
