#pragma once

#include <map>
#include <vector>

#include "canon/formula.hpp"

namespace canon {

/// Ground congruence closure over an explicit set of terms (kept closed
/// under subterms). The decision procedure for the equational theory.
class Congruence {
 public:
  explicit Congruence(TermPool& terms) : terms_(&terms) {}

  void add_term(TermId t);
  void merge(TermId a, TermId b);
  TermId find(TermId t) const;
  bool same(TermId a, TermId b) const { return find(a) == find(b); }
  const std::vector<TermId>& known_terms() const { return known_; }

 private:
  void propagate();

  TermPool* terms_;
  mutable std::map<TermId, TermId> parent_;
  std::vector<TermId> known_;
};

/// True iff some disequation of A has congruent sides.
bool is_inconsistent(FormulaPool& formulas, const Pres& pres);

/// Exact theory membership: f in Th(A). An inconsistent presentation proves
/// everything (F yields all equations, transitivity chains all disequations).
bool decide_membership(FormulaPool& formulas, const Pres& pres, FormulaId query);

/// Finest congruence containing A's equations, restricted to terms of size
/// <= max_term_size. Classes and their members are ordered structurally.
std::vector<std::vector<TermId>> congruence_classes(FormulaPool& formulas, const Pres& pres,
                                                    int max_term_size);

/// All formulas over the size-bounded universe that belong to Th(A).
Pres theorems_in_universe(FormulaPool& formulas, const Pres& pres, int max_term_size);

/// All formulas (equations and disequations) over the bounded universe.
std::vector<FormulaId> universe_formulas(FormulaPool& formulas, int max_term_size);

}  // namespace canon
