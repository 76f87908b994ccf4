#pragma once

#include <map>
#include <vector>

#include "canon/bounds.hpp"
#include "canon/congruence.hpp"
#include "canon/ordering.hpp"
#include "canon/proof.hpp"

namespace canon {

/// Exhaustive enumeration of every valid proof with premises in `premises`,
/// depth and term sizes within bounds. Includes projection (P) nodes.
/// Deterministic order (depth, then syntactic). Throws CanonError when the
/// node budget is exceeded; intended as the small-bound test oracle.
std::vector<ProofId> enumerate_proofs(ProofPool& pool, const Pres& premises,
                                      const Bounds& bounds);

/// Minimal proofs of a justification: members not strictly above another.
std::vector<ProofId> minimal(ProofOrdering& ord, const std::vector<ProofId>& proofs);

/// Antichains of minimal proofs per conclusion.
struct MinProofs {
  std::map<FormulaId, std::vector<ProofId>> by_conclusion;

  bool contains(FormulaId c, ProofId p) const {
    auto it = by_conclusion.find(c);
    if (it == by_conclusion.end()) return false;
    for (ProofId q : it->second) {
      if (q == p) return true;
    }
    return false;
  }
  size_t total() const {
    size_t n = 0;
    for (auto& [c, v] : by_conclusion) n += v.size();
    return n;
  }
};

/// Minimal proofs over all proofs with premises among `leaves`, computed by
/// closing the rule set over per-conclusion antichains and pruning dominated
/// proofs as soon as a smaller same-conclusion proof exists. Projection
/// nodes are skipped: every P node is strictly above its own right branch,
/// so none is ever minimal. Exact once bounds exceed the fixture's
/// stabilization point (cross-checked against enumerate_proofs in tests).
MinProofs min_proofs(ProofOrdering& ord, const Pres& leaves, const Bounds& bounds);

}  // namespace canon
