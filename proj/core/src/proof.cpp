#include "canon/proof.hpp"

#include <algorithm>
#include <set>

namespace canon {

const char* comb_name(Comb c) {
  switch (c) {
    case Comb::Z: return "Z";
    case Comb::I: return "I";
    case Comb::S: return "S";
    case Comb::P: return "P";
    case Comb::T: return "T";
    case Comb::F: return "F";
  }
  return "?";
}

ProofPool::ProofPool(FormulaPool& formulas) : formulas_(&formulas) {}

int32_t ProofPool::intern_premises(std::vector<FormulaId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  auto it = premise_intern_.find(v);
  if (it != premise_intern_.end()) return it->second;
  int32_t id = static_cast<int32_t>(premise_sets_.size());
  premise_sets_.push_back(v);
  premise_intern_.emplace(std::move(v), id);
  return id;
}

ProofId ProofPool::intern(Comb kind, FormulaId concl, SymbolId sym, TermId shared,
                          std::vector<ProofId> kids) {
  if (kind == Comb::T) {
    std::sort(kids.begin(), kids.end(),
              [&](ProofId a, ProofId b) { return structural_less(a, b); });
  }
  auto key = std::make_tuple(kind, concl, sym, shared, kids);
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;

  Node n;
  n.kind = kind;
  n.concl = concl;
  n.sym = sym;
  n.shared = shared;
  n.kids = kids;
  n.depth = 1;
  auto [a, b] = sides(*formulas_, concl);
  n.max_term = std::max(terms().size(a), terms().size(b));
  std::vector<FormulaId> ax;
  std::vector<FormulaId> concls{concl};
  if (kind == Comb::I) ax.push_back(concl);
  for (ProofId k : kids) {
    const Node& kn = nodes_[static_cast<size_t>(k)];
    n.depth = std::max(n.depth, kn.depth + 1);
    n.max_term = std::max(n.max_term, kn.max_term);
    const auto& kax = premise_sets_[static_cast<size_t>(kn.ax)];
    ax.insert(ax.end(), kax.begin(), kax.end());
    const auto& kcl = premise_sets_[static_cast<size_t>(kn.concls)];
    concls.insert(concls.end(), kcl.begin(), kcl.end());
  }
  n.ax = intern_premises(std::move(ax));
  n.concls = intern_premises(std::move(concls));

  ProofId id = static_cast<ProofId>(nodes_.size());
  nodes_.push_back(std::move(n));
  intern_.emplace(std::move(key), id);
  return id;
}

ProofId ProofPool::z() {
  TermId zero = terms().constant(terms().sig().least_constant());
  return intern(Comb::Z, formulas_->equation(zero, zero), -1, -1, {});
}

ProofId ProofPool::leaf(FormulaId f) { return intern(Comb::I, f, -1, -1, {}); }

std::vector<ProofId> ProofPool::all_s(SymbolId g, std::span<const ProofId> ks) {
  std::vector<ProofId> out;
  int arity = terms().sig().at(g).arity;
  if (static_cast<int>(ks.size()) != arity) return out;
  for (ProofId k : ks) {
    if (formulas_->is_diseq(conclusion(k))) return out;
  }
  // Each child equation may be read in either orientation.
  std::set<FormulaId> seen;
  size_t combos = size_t{1} << ks.size();
  for (size_t mask = 0; mask < combos; ++mask) {
    std::vector<TermId> us, vs;
    for (size_t i = 0; i < ks.size(); ++i) {
      auto [u, v] = sides(*formulas_, conclusion(ks[i]));
      if (mask & (size_t{1} << i)) std::swap(u, v);
      us.push_back(u);
      vs.push_back(v);
    }
    FormulaId concl = formulas_->equation(terms().make(g, us), terms().make(g, vs));
    if (seen.insert(concl).second) {
      out.push_back(intern(Comb::S, concl, g, -1, {ks.begin(), ks.end()}));
    }
  }
  return out;
}

std::optional<ProofId> ProofPool::try_t(ProofId p, ProofId q, TermId shared) {
  FormulaId cp = conclusion(p), cq = conclusion(q);
  bool dp = formulas_->is_diseq(cp), dq = formulas_->is_diseq(cq);
  if (dp && dq) return std::nullopt;
  auto [pa, pb] = sides(*formulas_, cp);
  auto [qa, qb] = sides(*formulas_, cq);
  if (shared != pa && shared != pb) return std::nullopt;
  if (shared != qa && shared != qb) return std::nullopt;
  TermId po = (shared == pa) ? pb : pa;
  TermId qo = (shared == qa) ? qb : qa;
  FormulaId concl = formulas_->make(dp || dq, po, qo);
  return intern(Comb::T, concl, -1, shared, {p, q});
}

std::vector<ProofId> ProofPool::all_t(ProofId p, ProofId q) {
  std::vector<ProofId> out;
  auto [pa, pb] = sides(*formulas_, conclusion(p));
  std::set<TermId> cands{pa, pb};
  for (TermId x : cands) {
    if (auto t = try_t(p, q, x)) {
      if (std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
    }
  }
  return out;
}

std::optional<ProofId> ProofPool::try_f(FormulaId concl_equation, ProofId child) {
  if (formulas_->is_diseq(concl_equation)) return std::nullopt;
  FormulaId cc = conclusion(child);
  if (!formulas_->is_diseq(cc) || formulas_->lhs(cc) != formulas_->rhs(cc)) {
    return std::nullopt;
  }
  return intern(Comb::F, concl_equation, -1, -1, {child});
}

ProofId ProofPool::proj(ProofId left, ProofId right) {
  return intern(Comb::P, conclusion(right), -1, -1, {left, right});
}

ProofId ProofPool::make_unchecked(Comb kind, FormulaId concl, SymbolId sym, TermId shared,
                                  std::vector<ProofId> kids) {
  return intern(kind, concl, sym, shared, std::move(kids));
}

std::span<const ProofId> ProofPool::kids(ProofId p) const {
  const Node& n = nodes_[static_cast<size_t>(p)];
  return {n.kids.data(), n.kids.size()};
}

const std::vector<FormulaId>& ProofPool::premises(ProofId p) const {
  return premise_sets_[static_cast<size_t>(nodes_[static_cast<size_t>(p)].ax)];
}

std::vector<ProofId> ProofPool::subproofs(ProofId p) const {
  std::set<ProofId> acc;
  auto walk = [&](auto&& self, ProofId cur) -> void {
    if (!acc.insert(cur).second) return;
    for (ProofId k : kids(cur)) self(self, k);
  };
  walk(walk, p);
  return {acc.begin(), acc.end()};
}

std::vector<ProofId> ProofPool::proper_subproofs(ProofId p) const {
  auto all = subproofs(p);
  all.erase(std::remove(all.begin(), all.end(), p), all.end());
  return all;
}

bool ProofPool::has_subproof(ProofId p, ProofId q) const {
  if (p == q) return true;
  for (ProofId k : kids(p)) {
    if (has_subproof(k, q)) return true;
  }
  return false;
}

bool ProofPool::subproof_concludes(ProofId p, FormulaId f) const {
  const auto& set = premise_sets_[static_cast<size_t>(nodes_[static_cast<size_t>(p)].concls)];
  return std::binary_search(set.begin(), set.end(), f);
}

bool ProofPool::repeats_conclusion(ProofId p) const {
  FormulaId c = conclusion(p);
  for (ProofId k : kids(p)) {
    if (subproof_concludes(k, c)) return true;
  }
  return false;
}

bool ProofPool::node_ok(ProofId p) const {
  const Node& n = nodes_[static_cast<size_t>(p)];
  auto& fp = *formulas_;
  switch (n.kind) {
    case Comb::Z: {
      TermId zero = terms().constant(terms().sig().least_constant());
      return n.kids.empty() && !fp.is_diseq(n.concl) && fp.lhs(n.concl) == zero &&
             fp.rhs(n.concl) == zero;
    }
    case Comb::I:
      return n.kids.empty();
    case Comb::S: {
      if (n.sym < 0 || static_cast<int>(n.kids.size()) != terms().sig().at(n.sym).arity ||
          fp.is_diseq(n.concl)) {
        return false;
      }
      for (ProofId k : n.kids) {
        if (fp.is_diseq(conclusion(k))) return false;
      }
      size_t combos = size_t{1} << n.kids.size();
      for (size_t mask = 0; mask < combos; ++mask) {
        std::vector<TermId> us, vs;
        for (size_t i = 0; i < n.kids.size(); ++i) {
          auto [u, v] = sides(fp, conclusion(n.kids[i]));
          if (mask & (size_t{1} << i)) std::swap(u, v);
          us.push_back(u);
          vs.push_back(v);
        }
        TermPool& tp = terms();
        if (fp.make(false, tp.make(n.sym, us), tp.make(n.sym, vs)) == n.concl) return true;
      }
      return false;
    }
    case Comb::P:
      return n.kids.size() == 2 && conclusion(n.kids[1]) == n.concl;
    case Comb::T: {
      if (n.kids.size() != 2) return false;
      FormulaId cp = conclusion(n.kids[0]), cq = conclusion(n.kids[1]);
      bool dp = fp.is_diseq(cp), dq = fp.is_diseq(cq);
      if (dp && dq) return false;
      auto [pa, pb] = sides(fp, cp);
      auto [qa, qb] = sides(fp, cq);
      TermId x = n.shared;
      if ((x != pa && x != pb) || (x != qa && x != qb)) return false;
      TermId po = (x == pa) ? pb : pa;
      TermId qo = (x == qa) ? qb : qa;
      return fp.make(dp || dq, po, qo) == n.concl;
    }
    case Comb::F: {
      if (n.kids.size() != 1 || fp.is_diseq(n.concl)) return false;
      FormulaId cc = conclusion(n.kids[0]);
      return fp.is_diseq(cc) && fp.lhs(cc) == fp.rhs(cc);
    }
  }
  return false;
}

CheckResult ProofPool::check(ProofId p) const {
  if (!node_ok(p)) {
    return {false, comb_name(kind(p))};
  }
  auto ks = kids(p);
  for (size_t i = 0; i < ks.size(); ++i) {
    CheckResult r = check(ks[i]);
    if (!r.ok) {
      return {false, std::string(comb_name(kind(p))) + "." + std::to_string(i) + "/" + r.path};
    }
  }
  return {};
}

ProofId ProofPool::replace_all(ProofId p, ProofId q, ProofId r) {
  if (p == q) return r;
  const Node n = nodes_[static_cast<size_t>(p)];
  if (n.kids.empty()) return p;
  std::vector<ProofId> new_kids;
  bool changed = false;
  for (ProofId k : n.kids) {
    ProofId nk = replace_all(k, q, r);
    changed |= (nk != k);
    new_kids.push_back(nk);
  }
  if (!changed) return p;
  return intern(n.kind, n.concl, n.sym, n.shared, std::move(new_kids));
}

Cmp ProofPool::structural_compare(ProofId a, ProofId b) const {
  if (a == b) return Cmp::Equal;
  const Node& na = nodes_[static_cast<size_t>(a)];
  const Node& nb = nodes_[static_cast<size_t>(b)];
  if (na.kind != nb.kind) return na.kind < nb.kind ? Cmp::Less : Cmp::Greater;
  Cmp c = formulas_->compare(na.concl, nb.concl);
  if (c != Cmp::Equal) return c;
  if (na.sym != nb.sym) return na.sym < nb.sym ? Cmp::Less : Cmp::Greater;
  if (na.kids.size() != nb.kids.size()) {
    return na.kids.size() < nb.kids.size() ? Cmp::Less : Cmp::Greater;
  }
  for (size_t i = 0; i < na.kids.size(); ++i) {
    c = structural_compare(na.kids[i], nb.kids[i]);
    if (c != Cmp::Equal) return c;
  }
  return Cmp::Equal;
}

std::string ProofPool::show(ProofId p, bool sugar) const {
  const Node& n = nodes_[static_cast<size_t>(p)];
  auto show_formula_args = [&](FormulaId f) {
    return terms().show(formulas_->lhs(f), sugar) +
           (formulas_->is_diseq(f) ? "!=" : ",") + terms().show(formulas_->rhs(f), sugar);
  };
  switch (n.kind) {
    case Comb::Z: return "Z";
    case Comb::I: return "I(" + show_formula_args(n.concl) + ")";
    case Comb::F: {
      std::string out = "F[" + formulas_->show(n.concl, sugar) + "](";
      out += show(n.kids[0], sugar);
      return out + ")";
    }
    default: {
      std::string out = comb_name(n.kind);
      if (n.kind == Comb::S && !terms().sig().is_tally()) {
        out += "_" + terms().sig().at(n.sym).name;
      }
      out += '(';
      for (size_t i = 0; i < n.kids.size(); ++i) {
        if (i) out += ',';
        out += show(n.kids[i], sugar);
      }
      return out + ")";
    }
  }
}

}  // namespace canon
