#pragma once

#include <memory>
#include <optional>

#include "canon/enumerate.hpp"

namespace canon {

/// Ground equational backend: terms, formulas, proof terms, the configured
/// proof ordering, the congruence-closure theory oracle and the bounded
/// minimal-proof engine, with per-presentation caches.
class EqBackend {
 public:
  using Formula = FormulaId;
  using Proof = ProofId;

  EqBackend(Signature sig, OrderingConfig cfg, Bounds bounds);

  TermPool& terms() { return *terms_; }
  FormulaPool& formulas() { return *formulas_; }
  ProofPool& proofs() { return *proofs_; }
  ProofOrdering& ordering() { return *ordering_; }
  const Bounds& bounds() const { return bounds_; }

  /// Th(A) restricted to the bounded universe (exact, via congruence closure).
  const Pres& theorems(const Pres& a);
  /// Minimal proofs over premises drawn from A.
  const MinProofs& min_proofs_of(const Pres& a);
  /// Normal-form proofs: minimal proofs over premises drawn from Th(A).
  const MinProofs& normal_forms(const Pres& a);

  Cmp compare(Proof p, Proof q) { return ordering_->compare(p, q); }
  Cmp compare_free(Proof p, Proof q) { return ordering_->rpo(p, q); }
  const std::vector<Formula>& premises(Proof p) const { return proofs_->premises(p); }
  Formula conclusion(Proof p) const { return proofs_->conclusion(p); }
  std::vector<Proof> proper_subproofs(Proof p) const { return proofs_->proper_subproofs(p); }
  Proof trivial(Formula f) { return proofs_->leaf(f); }
  bool is_trivial(Proof p) const { return proofs_->kind(p) == Comb::I; }

  /// Replacement witness for the Cut postulate: p with q replaced by r.
  std::optional<Proof> cut_witness(Proof p, Proof q, Proof r);

  /// Minimal proofs of one conclusion; errors when c is not a theorem of A.
  std::vector<Proof> minimal_proof(const Pres& a, Formula c);

  bool formula_less(Formula f, Formula g) const { return formulas_->less(f, g); }
  bool proof_less(Proof p, Proof q) const { return proofs_->structural_less(p, q); }
  std::string show_formula(Formula f, bool sugar = true) const {
    return formulas_->show(f, sugar);
  }
  std::string show_proof(Proof p, bool sugar = true) const { return proofs_->show(p, sugar); }
  Formula parse_formula(const std::string& text) { return formulas_->parse(text); }

  void clear_caches();

 private:
  Bounds bounds_;
  std::unique_ptr<TermPool> terms_;
  std::unique_ptr<FormulaPool> formulas_;
  std::unique_ptr<ProofPool> proofs_;
  std::unique_ptr<ProofOrdering> ordering_;

  std::map<std::vector<FormulaId>, Pres> theorems_cache_;
  std::map<std::vector<FormulaId>, MinProofs> min_cache_;  // keyed by leaf set
};

}  // namespace canon
