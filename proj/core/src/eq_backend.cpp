#include "canon/eq_backend.hpp"

namespace canon {

EqBackend::EqBackend(Signature sig, OrderingConfig cfg, Bounds bounds)
    : bounds_(bounds),
      terms_(std::make_unique<TermPool>(std::move(sig))),
      formulas_(std::make_unique<FormulaPool>(*terms_)),
      proofs_(std::make_unique<ProofPool>(*formulas_)),
      ordering_(std::make_unique<ProofOrdering>(std::move(cfg), *proofs_)) {}

namespace {
std::vector<FormulaId> key_of(const Pres& a) { return {a.begin(), a.end()}; }
}  // namespace

const Pres& EqBackend::theorems(const Pres& a) {
  auto key = key_of(a);
  auto it = theorems_cache_.find(key);
  if (it != theorems_cache_.end()) return it->second;
  Pres th = theorems_in_universe(*formulas_, a, bounds_.max_term_size);
  return theorems_cache_.emplace(std::move(key), std::move(th)).first->second;
}

const MinProofs& EqBackend::min_proofs_of(const Pres& a) {
  auto key = key_of(a);
  auto it = min_cache_.find(key);
  if (it != min_cache_.end()) return it->second;
  MinProofs mp = min_proofs(*ordering_, a, bounds_);
  return min_cache_.emplace(std::move(key), std::move(mp)).first->second;
}

const MinProofs& EqBackend::normal_forms(const Pres& a) {
  return min_proofs_of(theorems(a));
}

std::optional<ProofId> EqBackend::cut_witness(Proof p, Proof q, Proof r) {
  if (proofs_->conclusion(q) != proofs_->conclusion(r)) return std::nullopt;
  ProofId v = proofs_->replace_all(p, q, r);
  if (v == p) return std::nullopt;
  return v;
}

std::vector<ProofId> EqBackend::minimal_proof(const Pres& a, Formula c) {
  if (!decide_membership(*formulas_, a, c)) {
    throw CanonError("'" + formulas_->show(c) + "' is not a theorem of the presentation");
  }
  const MinProofs& mp = min_proofs_of(a);
  auto it = mp.by_conclusion.find(c);
  if (it == mp.by_conclusion.end()) {
    throw CanonError("no proof of '" + formulas_->show(c) +
                     "' within the bounds; raise max_proof_depth/max_term_size");
  }
  return it->second;
}

void EqBackend::clear_caches() {
  theorems_cache_.clear();
  min_cache_.clear();
}

}  // namespace canon
