#pragma once

#include "canon/formula.hpp"
#include "canon/term_order.hpp"
#include "canon/trace.hpp"

namespace canon {

/// Which reducible equation a ground-completion step picks first.
/// LargestFirst rewrites the largest reducible equation, which keeps every
/// step proof-improving; SmallestFirst is the naive alternative.
enum class GroundPolicy { LargestFirst, SmallestFirst };

GroundPolicy ground_policy_from_string(const std::string& s);

/// Ground completion: repeatedly rewrites an equation w = t[u] with another
/// equation u = v (u greater than v) and deletes trivial equations t = t.
/// The term ordering must be total on the terms involved. Terminates on all
/// finite inputs; the final state is the canonical Church-Rosser basis.
Trace ground_completion(FormulaPool& formulas, const Pres& equations,
                        const TermOrdering& order,
                        GroundPolicy policy = GroundPolicy::LargestFirst,
                        size_t max_steps = 100000);

}  // namespace canon
