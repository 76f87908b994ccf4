#include "canon/term_order.hpp"

namespace canon {

void SymbolPrecedence::add_pair(SymbolId greater, SymbolId lesser) {
  if (greater == lesser) throw CanonError("precedence pair relates a symbol to itself");
  greater_.emplace(greater, lesser);
  close();
}

void SymbolPrecedence::add_chain(const std::vector<SymbolId>& descending) {
  for (size_t i = 0; i + 1 < descending.size(); ++i) {
    greater_.emplace(descending[i], descending[i + 1]);
  }
  close();
}

void SymbolPrecedence::close() {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<SymbolId, SymbolId>> add;
    for (const auto& [a, b] : greater_) {
      for (const auto& [c, d] : greater_) {
        if (b == c && !greater_.count({a, d})) add.emplace_back(a, d);
      }
    }
    for (auto& p : add) {
      greater_.insert(p);
      changed = true;
    }
  }
  for (const auto& [a, b] : greater_) {
    if (greater_.count({b, a})) throw CanonError("symbol precedence contains a cycle");
  }
}

Cmp SymbolPrecedence::compare(SymbolId a, SymbolId b) const {
  if (a == b) return Cmp::Equal;
  if (greater_.count({a, b})) return Cmp::Greater;
  if (greater_.count({b, a})) return Cmp::Less;
  return Cmp::Incomparable;
}

namespace {

bool lpo_greater(const TermPool& pool, const SymbolPrecedence& prec, TermId s, TermId t);

bool lpo_geq(const TermPool& pool, const SymbolPrecedence& prec, TermId s, TermId t) {
  return s == t || lpo_greater(pool, prec, s, t);
}

bool lpo_greater(const TermPool& pool, const SymbolPrecedence& prec, TermId s, TermId t) {
  if (s == t) return false;
  auto sargs = pool.args(s);
  // (1) some argument of s already covers t
  for (TermId si : sargs) {
    if (lpo_geq(pool, prec, si, t)) return true;
  }
  auto targs = pool.args(t);
  Cmp heads = prec.compare(pool.sym(s), pool.sym(t));
  if (heads == Cmp::Greater) {
    for (TermId tj : targs) {
      if (!lpo_greater(pool, prec, s, tj)) return false;
    }
    return true;
  }
  if (heads == Cmp::Equal) {
    // lexicographic status, left to right
    size_t n = std::min(sargs.size(), targs.size());
    for (size_t k = 0; k < n; ++k) {
      if (sargs[k] == targs[k]) continue;
      if (!lpo_greater(pool, prec, sargs[k], targs[k])) return false;
      for (size_t j = k + 1; j < targs.size(); ++j) {
        if (!lpo_greater(pool, prec, s, targs[j])) return false;
      }
      return true;
    }
    return false;  // equal prefixes and equal arity means equal terms
  }
  return false;
}

}  // namespace

Cmp TermOrdering::compare(const TermPool& pool, TermId a, TermId b) const {
  if (a == b) return Cmp::Equal;
  if (mode == Mode::Structural) return pool.structural_compare(a, b);
  bool gt = lpo_greater(pool, prec, a, b);
  bool lt = lpo_greater(pool, prec, b, a);
  if (gt && lt) throw CanonError("LPO produced a cycle (broken precedence)");
  if (gt) return Cmp::Greater;
  if (lt) return Cmp::Less;
  return Cmp::Incomparable;
}

}  // namespace canon
