#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "canon/formula.hpp"

namespace canon {

using ProofId = int32_t;

/// Proof combinators of the ground equational calculus.
///   Z        axiom: reflexivity of the least constant
///   I        introduces a premise (the trivial proof of it)
///   S        functional reflexivity: g(xs) = g(ys) from xs = ys
///   P        projection: keeps the right conclusion, both premise sets
///   T        transitivity (branches unordered); also eq + diseq -> diseq
///   F        any equation from a trivial disequation t != t
enum class Comb : uint8_t { Z, I, S, P, T, F };

const char* comb_name(Comb c);

struct CheckResult {
  bool ok = true;
  std::string path;  // node path of the first violation, empty when ok
};

/// Interned proof terms. Structurally equal proofs (after normalizing the
/// unordered T branches) share an id. Conclusion, premises, depth and the
/// largest term occurring in the proof are cached per node.
class ProofPool {
 public:
  explicit ProofPool(FormulaPool& formulas);

  FormulaPool& formulas() const { return *formulas_; }
  TermPool& terms() const { return formulas_->terms(); }

  // Validated constructors. The `all_*` variants enumerate every reading a
  // rule admits (orientation choices for S, shared-term choices for T).
  ProofId z();
  ProofId leaf(FormulaId f);  // trivial proof of f
  std::vector<ProofId> all_s(SymbolId g, std::span<const ProofId> kids);
  std::vector<ProofId> all_t(ProofId p, ProofId q);
  std::optional<ProofId> try_t(ProofId p, ProofId q, TermId shared);
  std::optional<ProofId> try_f(FormulaId concl_equation, ProofId child);
  ProofId proj(ProofId left, ProofId right);

  /// Unvalidated node, for exercising check() on broken proofs.
  ProofId make_unchecked(Comb kind, FormulaId concl, SymbolId sym, TermId shared,
                         std::vector<ProofId> kids);

  Comb kind(ProofId p) const { return nodes_[static_cast<size_t>(p)].kind; }
  FormulaId conclusion(ProofId p) const { return nodes_[static_cast<size_t>(p)].concl; }
  SymbolId sym(ProofId p) const { return nodes_[static_cast<size_t>(p)].sym; }
  TermId shared_term(ProofId p) const { return nodes_[static_cast<size_t>(p)].shared; }
  std::span<const ProofId> kids(ProofId p) const;
  int depth(ProofId p) const { return nodes_[static_cast<size_t>(p)].depth; }
  /// Size of the largest term occurring anywhere in the proof.
  int max_term_size(ProofId p) const { return nodes_[static_cast<size_t>(p)].max_term; }
  size_t count() const { return nodes_.size(); }

  const std::vector<FormulaId>& premises(ProofId p) const;
  std::vector<ProofId> subproofs(ProofId p) const;         // reflexive
  std::vector<ProofId> proper_subproofs(ProofId p) const;  // without p itself
  bool has_subproof(ProofId p, ProofId q) const;
  /// True when some proper subproof shares the root conclusion (such proofs
  /// are never minimal: the subproof itself is a smaller proof).
  bool repeats_conclusion(ProofId p) const;
  bool subproof_concludes(ProofId p, FormulaId f) const;

  /// Validates every node against its rule's side conditions.
  CheckResult check(ProofId p) const;

  /// Replaces every occurrence of subproof `q` by `r` (same conclusion).
  ProofId replace_all(ProofId p, ProofId q, ProofId r);

  /// Fixed total syntactic order on proofs (deterministic witness picking).
  Cmp structural_compare(ProofId a, ProofId b) const;
  bool structural_less(ProofId a, ProofId b) const {
    return structural_compare(a, b) == Cmp::Less;
  }

  std::string show(ProofId p, bool numeral_sugar = true) const;

 private:
  struct Node {
    Comb kind;
    FormulaId concl;
    SymbolId sym;
    TermId shared;
    std::vector<ProofId> kids;
    int depth;
    int max_term;
    int32_t ax;      // premise-set id
    int32_t concls;  // id of the set of conclusions in the subtree
  };

  ProofId intern(Comb kind, FormulaId concl, SymbolId sym, TermId shared,
                 std::vector<ProofId> kids);
  int32_t intern_premises(std::vector<FormulaId> v);
  bool node_ok(ProofId p) const;

  FormulaPool* formulas_;
  std::vector<Node> nodes_;
  std::map<std::tuple<Comb, FormulaId, SymbolId, TermId, std::vector<ProofId>>, ProofId>
      intern_;
  std::vector<std::vector<FormulaId>> premise_sets_;
  std::map<std::vector<FormulaId>, int32_t> premise_intern_;
};

/// Sides of a formula as an unordered pair.
inline std::pair<TermId, TermId> sides(const FormulaPool& fp, FormulaId f) {
  return {fp.lhs(f), fp.rhs(f)};
}

}  // namespace canon
