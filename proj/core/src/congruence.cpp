#include "canon/congruence.hpp"

#include <algorithm>

namespace canon {

void Congruence::add_term(TermId t) {
  if (parent_.count(t)) return;
  parent_[t] = t;
  known_.push_back(t);
  for (TermId a : terms_->args(t)) add_term(a);
  propagate();
}

TermId Congruence::find(TermId t) const {
  auto it = parent_.find(t);
  if (it == parent_.end()) return t;
  if (it->second == t) return t;
  TermId root = find(it->second);
  it->second = root;
  return root;
}

void Congruence::merge(TermId a, TermId b) {
  add_term(a);
  add_term(b);
  TermId ra = find(a), rb = find(b);
  if (ra == rb) return;
  parent_[std::max(ra, rb)] = std::min(ra, rb);
  propagate();
}

void Congruence::propagate() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < known_.size(); ++i) {
      for (size_t j = i + 1; j < known_.size(); ++j) {
        TermId s = known_[i], t = known_[j];
        if (find(s) == find(t)) continue;
        if (terms_->sym(s) != terms_->sym(t)) continue;
        auto as = terms_->args(s), bs = terms_->args(t);
        bool congruent = true;
        for (size_t k = 0; k < as.size(); ++k) {
          if (find(as[k]) != find(bs[k])) {
            congruent = false;
            break;
          }
        }
        if (congruent) {
          TermId rs = find(s), rt = find(t);
          parent_[std::max(rs, rt)] = std::min(rs, rt);
          changed = true;
        }
      }
    }
  }
}

namespace {

Congruence closure_of(FormulaPool& formulas, const Pres& pres,
                      const std::vector<TermId>& extra) {
  Congruence cc(formulas.terms());
  for (FormulaId f : pres) {
    cc.add_term(formulas.lhs(f));
    cc.add_term(formulas.rhs(f));
  }
  for (TermId t : extra) cc.add_term(t);
  for (FormulaId f : pres) {
    if (!formulas.is_diseq(f)) cc.merge(formulas.lhs(f), formulas.rhs(f));
  }
  return cc;
}

bool inconsistent_in(FormulaPool& formulas, const Pres& pres, const Congruence& cc) {
  for (FormulaId f : pres) {
    if (formulas.is_diseq(f) && cc.same(formulas.lhs(f), formulas.rhs(f))) return true;
  }
  return false;
}

}  // namespace

bool is_inconsistent(FormulaPool& formulas, const Pres& pres) {
  Congruence cc = closure_of(formulas, pres, {});
  return inconsistent_in(formulas, pres, cc);
}

bool decide_membership(FormulaPool& formulas, const Pres& pres, FormulaId query) {
  Congruence cc = closure_of(formulas, pres, {formulas.lhs(query), formulas.rhs(query)});
  if (inconsistent_in(formulas, pres, cc)) return true;
  TermId l = formulas.lhs(query), r = formulas.rhs(query);
  if (!formulas.is_diseq(query)) return cc.same(l, r);
  for (FormulaId f : pres) {
    if (!formulas.is_diseq(f)) continue;
    TermId u = formulas.lhs(f), v = formulas.rhs(f);
    if ((cc.same(l, u) && cc.same(r, v)) || (cc.same(l, v) && cc.same(r, u))) return true;
  }
  return false;
}

std::vector<std::vector<TermId>> congruence_classes(FormulaPool& formulas, const Pres& pres,
                                                    int max_term_size) {
  std::vector<TermId> universe = formulas.terms().universe(max_term_size);
  Congruence cc = closure_of(formulas, pres, universe);
  std::map<TermId, std::vector<TermId>> groups;
  for (TermId t : universe) groups[cc.find(t)].push_back(t);
  auto& tp = formulas.terms();
  std::vector<std::vector<TermId>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end(),
              [&](TermId a, TermId b) { return tp.structural_less(a, b); });
    out.push_back(members);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return tp.structural_less(a.front(), b.front());
  });
  return out;
}

std::vector<FormulaId> universe_formulas(FormulaPool& formulas, int max_term_size) {
  std::vector<TermId> universe = formulas.terms().universe(max_term_size);
  std::vector<FormulaId> out;
  for (size_t i = 0; i < universe.size(); ++i) {
    for (size_t j = i; j < universe.size(); ++j) {
      out.push_back(formulas.equation(universe[i], universe[j]));
      out.push_back(formulas.disequation(universe[i], universe[j]));
    }
  }
  std::sort(out.begin(), out.end(),
            [&](FormulaId a, FormulaId b) { return formulas.less(a, b); });
  return out;
}

Pres theorems_in_universe(FormulaPool& formulas, const Pres& pres, int max_term_size) {
  std::vector<TermId> universe = formulas.terms().universe(max_term_size);
  Congruence cc = closure_of(formulas, pres, universe);
  bool incon = inconsistent_in(formulas, pres, cc);
  Pres out;
  for (size_t i = 0; i < universe.size(); ++i) {
    for (size_t j = i; j < universe.size(); ++j) {
      TermId a = universe[i], b = universe[j];
      if (incon) {
        out.insert(formulas.equation(a, b));
        out.insert(formulas.disequation(a, b));
        continue;
      }
      if (cc.same(a, b)) out.insert(formulas.equation(a, b));
      for (FormulaId f : pres) {
        if (!formulas.is_diseq(f)) continue;
        TermId u = formulas.lhs(f), v = formulas.rhs(f);
        if ((cc.same(a, u) && cc.same(b, v)) || (cc.same(a, v) && cc.same(b, u))) {
          out.insert(formulas.disequation(a, b));
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace canon
