#include "canon/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace canon {

size_t default_node_budget() {
  if (const char* env = std::getenv("CANON_MAX_NODES")) {
    long long v = std::atoll(env);
    if (v > 0) return static_cast<size_t>(v);
  }
  return 1000000;
}

size_t Bounds::node_budget() const { return max_nodes ? max_nodes : default_node_budget(); }

namespace {

struct BudgetGuard {
  size_t budget;
  size_t used = 0;
  void spend(size_t n = 1) {
    used += n;
    if (used > budget) {
      throw CanonError("proof enumeration exceeded the node budget (" +
                       std::to_string(budget) + " nodes); raise CANON_MAX_NODES or lower bounds");
    }
  }
};

}  // namespace

std::vector<ProofId> enumerate_proofs(ProofPool& pool, const Pres& premises,
                                      const Bounds& bounds) {
  BudgetGuard guard{bounds.node_budget()};
  auto& fp = pool.formulas();
  auto& tp = pool.terms();
  std::vector<FormulaId> universe_eqs;
  for (FormulaId f : universe_formulas(fp, bounds.max_term_size)) {
    if (!fp.is_diseq(f)) universe_eqs.push_back(f);
  }

  std::set<ProofId> seen;
  std::vector<ProofId> all;
  std::vector<ProofId> prev;  // proofs of depth == d-1

  auto admit = [&](ProofId p, int want_depth) {
    if (pool.depth(p) != want_depth) return;
    if (pool.max_term_size(p) > bounds.max_term_size) return;
    if (!seen.insert(p).second) return;
    guard.spend();
    all.push_back(p);
  };

  // depth 1: the axiom, nullary functional reflexivity, premise introductions
  {
    admit(pool.z(), 1);
    SymbolId least = tp.sig().least_constant();
    for (SymbolId g = 0; g < static_cast<SymbolId>(tp.sig().size()); ++g) {
      if (tp.sig().at(g).arity == 0 && g != least) {
        for (ProofId s : pool.all_s(g, {})) admit(s, 1);
      }
    }
    for (FormulaId f : premises) admit(pool.leaf(f), 1);
    prev = all;
  }

  for (int d = 2; d <= bounds.max_proof_depth; ++d) {
    size_t first_new = all.size();
    std::vector<ProofId> snapshot = all;  // everything of depth < d

    // S over tuples with at least one child of depth d-1
    for (SymbolId g = 0; g < static_cast<SymbolId>(tp.sig().size()); ++g) {
      int arity = tp.sig().at(g).arity;
      if (arity == 0) continue;
      std::vector<ProofId> tuple(static_cast<size_t>(arity));
      auto rec = [&](auto&& self, int slot, bool has_new) -> void {
        if (slot == arity) {
          if (!has_new) return;
          for (ProofId s : pool.all_s(g, tuple)) admit(s, d);
          return;
        }
        for (ProofId k : snapshot) {
          if (fp.is_diseq(pool.conclusion(k))) continue;
          tuple[static_cast<size_t>(slot)] = k;
          self(self, slot + 1, has_new || pool.depth(k) == d - 1);
        }
      };
      rec(rec, 0, false);
    }

    // T over pairs with at least one child of depth d-1
    for (ProofId p : prev) {
      for (ProofId q : snapshot) {
        for (ProofId t : pool.all_t(p, q)) admit(t, d);
        for (ProofId t : pool.all_t(q, p)) admit(t, d);
      }
    }

    // F over trivial-disequation children
    for (ProofId p : prev) {
      FormulaId c = pool.conclusion(p);
      if (fp.is_diseq(c) && fp.lhs(c) == fp.rhs(c)) {
        for (FormulaId e : universe_eqs) {
          if (auto f = pool.try_f(e, p)) admit(*f, d);
        }
      }
    }

    // P over ordered pairs with at least one child of depth d-1
    for (ProofId l : prev) {
      for (ProofId r : snapshot) admit(pool.proj(l, r), d);
    }
    for (ProofId l : snapshot) {
      if (pool.depth(l) == d - 1) continue;  // already paired above
      for (ProofId r : prev) admit(pool.proj(l, r), d);
    }

    prev.assign(all.begin() + static_cast<long>(first_new), all.end());
    if (prev.empty()) break;
  }

  std::stable_sort(all.begin(), all.end(), [&](ProofId a, ProofId b) {
    if (pool.depth(a) != pool.depth(b)) return pool.depth(a) < pool.depth(b);
    return pool.structural_less(a, b);
  });
  return all;
}

std::vector<ProofId> minimal(ProofOrdering& ord, const std::vector<ProofId>& proofs) {
  auto& pool = ord.pool();
  std::vector<ProofId> uniq = proofs;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<ProofId> out;
  for (ProofId p : uniq) {
    bool dominated = false;
    for (ProofId q : uniq) {
      if (p == q) continue;
      if (pool.conclusion(p) != pool.conclusion(q)) continue;
      if (ord.rpo(q, p) == Cmp::Less) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [&](ProofId a, ProofId b) { return pool.structural_less(a, b); });
  return out;
}

MinProofs min_proofs(ProofOrdering& ord, const Pres& leaves, const Bounds& bounds) {
  ProofPool& pool = ord.pool();
  auto& fp = pool.formulas();
  auto& tp = pool.terms();
  BudgetGuard guard{bounds.node_budget()};

  std::vector<FormulaId> universe_eqs;
  for (FormulaId f : universe_formulas(fp, bounds.max_term_size)) {
    if (!fp.is_diseq(f)) universe_eqs.push_back(f);
  }

  std::map<FormulaId, std::vector<ProofId>> kept;  // live antichains
  std::vector<ProofId> frontier;                   // kept proofs born this round

  auto insert = [&](ProofId p) -> bool {
    if (pool.max_term_size(p) > bounds.max_term_size) return false;
    if (pool.repeats_conclusion(p)) return false;  // its own subproof is smaller
    FormulaId c = pool.conclusion(p);
    auto& chain = kept[c];
    for (ProofId k : chain) {
      Cmp r = ord.rpo(k, p);
      if (r == Cmp::Less || r == Cmp::Equal) return false;  // dominated or duplicate
    }
    guard.spend();
    std::erase_if(chain, [&](ProofId k) { return ord.rpo(k, p) == Cmp::Greater; });
    chain.push_back(p);
    frontier.push_back(p);
    return true;
  };

  insert(pool.z());
  SymbolId least_const = tp.sig().least_constant();
  for (SymbolId g = 0; g < static_cast<SymbolId>(tp.sig().size()); ++g) {
    if (tp.sig().at(g).arity == 0 && g != least_const) {
      for (ProofId s : pool.all_s(g, {})) insert(s);
    }
  }
  for (FormulaId f : leaves) insert(pool.leaf(f));

  for (int d = 2; d <= bounds.max_proof_depth; ++d) {
    std::vector<ProofId> prev;
    prev.swap(frontier);
    if (prev.empty()) break;

    // Snapshot of the proofs alive at the start of the round. Generation
    // pairs only against this snapshot, so retirement takes effect at round
    // boundaries and the result matches the exhaustive enumeration's
    // minimal set (checked in tests).
    std::vector<ProofId> snapshot;
    std::vector<ProofId> snapshot_eq;
    std::map<TermId, std::vector<ProofId>> by_side;
    std::set<ProofId> in_prev(prev.begin(), prev.end());
    for (auto& [c, chain] : kept) {
      for (ProofId k : chain) {
        snapshot.push_back(k);
        if (!fp.is_diseq(c)) snapshot_eq.push_back(k);
        auto [a, b] = sides(fp, c);
        by_side[a].push_back(k);
        if (b != a) by_side[b].push_back(k);
      }
    }

    // S lifts
    for (SymbolId g = 0; g < static_cast<SymbolId>(tp.sig().size()); ++g) {
      int arity = tp.sig().at(g).arity;
      if (arity == 0) continue;  // nullary reflexivity is seeded at depth 1
      std::vector<ProofId> tuple(static_cast<size_t>(arity));
      auto rec = [&](auto&& self, int slot, bool has_new) -> void {
        if (slot == arity) {
          if (!has_new) return;
          for (ProofId s : pool.all_s(g, tuple)) insert(s);
          return;
        }
        for (ProofId k : snapshot_eq) {
          tuple[static_cast<size_t>(slot)] = k;
          self(self, slot + 1, has_new || in_prev.count(k) > 0);
        }
      };
      rec(rec, 0, false);
    }

    // T joins through shared side terms
    for (ProofId p : prev) {
      auto [a, b] = sides(fp, pool.conclusion(p));
      std::set<TermId> own{a, b};
      for (TermId x : own) {
        auto it = by_side.find(x);
        if (it == by_side.end()) continue;
        for (ProofId q : it->second) {
          if (auto t = pool.try_t(p, q, x)) insert(*t);
        }
      }
    }

    // F from trivial disequations
    for (ProofId p : prev) {
      FormulaId c = pool.conclusion(p);
      if (fp.is_diseq(c) && fp.lhs(c) == fp.rhs(c)) {
        for (FormulaId e : universe_eqs) {
          if (auto f = pool.try_f(e, p)) insert(*f);
        }
      }
    }
  }

  MinProofs out;
  for (auto& [c, chain] : kept) {
    if (chain.empty()) continue;
    std::vector<ProofId> live = chain;
    std::sort(live.begin(), live.end(),
              [&](ProofId x, ProofId y) { return pool.structural_less(x, y); });
    out.by_conclusion.emplace(c, std::move(live));
  }
  return out;
}

}  // namespace canon
