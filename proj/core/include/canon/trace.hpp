#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "canon/compare.hpp"

namespace canon {

using PresSet = std::set<int32_t>;

/// A finite derivation: states plus the steps between them, read as an
/// eventually constant infinite derivation (the last state persists).
struct Trace {
  struct Step {
    std::string kind;  // expand | contract | deduce | delete | critical | bulk | mass
    PresSet added;
    PresSet removed;
  };

  std::vector<PresSet> states;
  std::vector<Step> steps;
  bool terminated = true;  // false when max_steps ran out before a fixpoint

  const PresSet& limit() const { return states.back(); }
  PresSet union_of() const {
    PresSet u;
    for (const auto& s : states) u.insert(s.begin(), s.end());
    return u;
  }

  /// Each step must transform state i into state i+1 exactly as its payload
  /// says; throws CanonError otherwise.
  void validate() const;
};

std::string dump_trace(const Trace& trace,
                       const std::function<std::string(int32_t)>& show_formula);
Trace parse_trace(const std::string& json_text,
                  const std::function<int32_t(const std::string&)>& parse_formula);

}  // namespace canon
