#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canon/enumerate.hpp"

namespace canon {

// Generic canonicity core, parameterized by a proof-system backend (the
// equational backend or a loaded abstract system). A backend provides:
//   Formula/Proof ids, premises, conclusion, proper_subproofs, trivial,
//   compare (proof ordering, same conclusion), theorems(A),
//   min_proofs_of(A), normal_forms(A), cut_witness, show/less helpers.

enum class JustMode { BetterEq, MuchBetter, Similar };

/// Minimal members of an explicit set of proofs.
template <class B>
std::vector<typename B::Proof> minimal_just(B& b, std::vector<typename B::Proof> ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::vector<typename B::Proof> out;
  for (auto p : ps) {
    bool dominated = false;
    for (auto q : ps) {
      if (q == p || b.conclusion(q) != b.conclusion(p)) continue;
      if (b.compare(q, p) == Cmp::Less) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [&](auto x, auto y) { return b.proof_less(x, y); });
  return out;
}

namespace detail {
/// Is there a proof of `p`'s conclusion in `mp` at or below `p` (strictly
/// below for `strict`)?
template <class B>
bool beaten_in(B& b, const MinProofs& mp, typename B::Proof p, bool strict) {
  auto it = mp.by_conclusion.find(b.conclusion(p));
  if (it == mp.by_conclusion.end()) return false;
  for (auto q : it->second) {
    Cmp r = b.compare(p, q);
    if (r == Cmp::Greater) return true;
    if (!strict && r == Cmp::Equal) return true;
  }
  return false;
}
}  // namespace detail

/// better_eq: every proof of P has one at or below it in Q.
/// much_better: every proof of P has one strictly below it in Q.
/// similar: better_eq both ways.
template <class B>
bool compare_justifications(B& b, const std::vector<typename B::Proof>& P,
                            const std::vector<typename B::Proof>& Q, JustMode mode) {
  auto covers = [&](const std::vector<typename B::Proof>& xs,
                    const std::vector<typename B::Proof>& ys, bool strict) {
    for (auto p : xs) {
      bool found = false;
      for (auto q : ys) {
        if (b.conclusion(p) != b.conclusion(q)) continue;
        Cmp r = b.compare(p, q);
        if (r == Cmp::Greater || (!strict && r == Cmp::Equal)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  switch (mode) {
    case JustMode::BetterEq: return covers(P, Q, false);
    case JustMode::MuchBetter: return covers(P, Q, true);
    case JustMode::Similar: return covers(P, Q, false) && covers(Q, P, false);
  }
  return false;
}

/// Premises appearing in the normal-form proofs: the canonical presentation
/// (exact for abstract systems, truncated to the bounds for equational ones).
template <class B>
Pres sharp(B& b, const Pres& a) {
  Pres out;
  for (const auto& [c, proofs] : b.normal_forms(a).by_conclusion) {
    for (auto p : proofs) {
      for (auto f : b.premises(p)) out.insert(f);
    }
  }
  return out;
}

/// A is simpler-or-equal than ("provides proofs at least as good as") B
/// requires equal theories plus Pf(A) covered by Pf(B).
template <class B>
bool simpler(B& b, const Pres& a, const Pres& c) {
  if (b.theorems(a) != b.theorems(c)) return false;
  const MinProofs& ma = b.min_proofs_of(a);
  const MinProofs& mc = b.min_proofs_of(c);
  for (const auto& [concl, proofs] : ma.by_conclusion) {
    for (auto p : proofs) {
      if (!detail::beaten_in(b, mc, p, false)) return false;
    }
  }
  return true;
}

/// Presentations similar: simpler both ways.
template <class B>
bool similar_pres(B& b, const Pres& a, const Pres& c) {
  return simpler(b, a, c) && simpler(b, c, a);
}

/// Formulas whose removal keeps all proofs as good: Red(A).
template <class B>
Pres redundant(B& b, const Pres& a) {
  Pres out;
  for (auto r : a) {
    Pres rest = a;
    rest.erase(r);
    if (simpler(b, a, rest)) out.insert(r);
  }
  return out;
}

/// Contraction: A minus its redundant formulas.
template <class B>
Pres contract(B& b, const Pres& a) {
  Pres red = redundant(b, a);
  Pres out;
  for (auto f : a) {
    if (!red.count(f)) out.insert(f);
  }
  return out;
}

struct Verdict {
  bool contracted = false;
  bool saturated = false;
  bool complete = false;
  bool canonical = false;
  std::optional<int32_t> contracted_witness;  // formula of A unused by minimal proofs
  std::optional<int32_t> saturated_witness;   // normal-form proof outside Pf(A)
  std::optional<int32_t> complete_witness;    // theorem with no in-A normal form
};

/// contracted: A is exactly the premises of its minimal proofs.
/// saturated: every normal-form proof draws its premises from A.
/// complete: every theorem has a normal-form proof drawing premises from A.
/// canonical: saturated and contracted.
template <class B>
Verdict classify(B& b, const Pres& a) {
  Verdict v;
  const MinProofs& mp = b.min_proofs_of(a);
  const MinProofs& nf = b.normal_forms(a);

  Pres used;
  for (const auto& [c, proofs] : mp.by_conclusion) {
    for (auto p : proofs) {
      for (auto f : b.premises(p)) used.insert(f);
    }
  }
  std::vector<int32_t> unused;
  for (auto f : a) {
    if (!used.count(f)) unused.push_back(f);
  }
  v.contracted = unused.empty();
  if (!unused.empty()) {
    v.contracted_witness = *std::min_element(
        unused.begin(), unused.end(),
        [&](int32_t x, int32_t y) { return b.formula_less(x, y); });
  }

  std::vector<int32_t> escapees;
  for (const auto& [c, proofs] : nf.by_conclusion) {
    for (auto p : proofs) {
      bool inside = true;
      for (auto f : b.premises(p)) {
        if (!a.count(f)) {
          inside = false;
          break;
        }
      }
      if (!inside) escapees.push_back(p);
    }
  }
  v.saturated = escapees.empty();
  if (!escapees.empty()) {
    v.saturated_witness = *std::min_element(
        escapees.begin(), escapees.end(),
        [&](int32_t x, int32_t y) { return b.proof_less(x, y); });
  }

  std::vector<int32_t> missing;
  for (auto c : b.theorems(a)) {
    bool has = false;
    auto it = nf.by_conclusion.find(c);
    if (it != nf.by_conclusion.end()) {
      for (auto p : it->second) {
        bool inside = true;
        for (auto f : b.premises(p)) {
          if (!a.count(f)) {
            inside = false;
            break;
          }
        }
        if (inside) {
          has = true;
          break;
        }
      }
    }
    if (!has) missing.push_back(c);
  }
  v.complete = missing.empty();
  if (!missing.empty()) {
    v.complete_witness = *std::min_element(
        missing.begin(), missing.end(),
        [&](int32_t x, int32_t y) { return b.formula_less(x, y); });
  }

  v.canonical = v.saturated && v.contracted;
  return v;
}

enum class Postulate { Triv, Sub, Cut };

struct PostulateViolation {
  Postulate kind;
  int32_t p = -1, q = -1, r = -1;
  std::string detail;
};

struct PostulateReport {
  std::vector<PostulateViolation> violations;
  size_t proofs_checked = 0;
  size_t cut_pairs_checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Checks the three structural postulates on a sample of proofs:
/// premises appear as trivial subproofs, subproofs never add premises, and
/// replacing a subproof by a smaller proof yields a smaller proof.
template <class B>
PostulateReport check_postulates(B& b, const std::vector<typename B::Proof>& sample) {
  PostulateReport rep;
  std::set<int32_t> closure;
  for (auto p : sample) {
    closure.insert(p);
    for (auto q : b.proper_subproofs(p)) closure.insert(q);
  }

  for (auto p : closure) {
    ++rep.proofs_checked;
    auto subs = b.proper_subproofs(p);
    std::set<int32_t> subset(subs.begin(), subs.end());
    subset.insert(p);

    for (auto f : b.premises(p)) {
      if (!subset.count(b.trivial(f))) {
        rep.violations.push_back({Postulate::Triv, p, b.trivial(f), -1,
                                  "premise " + b.show_formula(f) +
                                      " has no trivial subproof in " + b.show_proof(p)});
      }
    }

    std::set<int32_t> prem(b.premises(p).begin(), b.premises(p).end());
    for (auto q : subs) {
      for (auto f : b.premises(q)) {
        if (!prem.count(f)) {
          rep.violations.push_back({Postulate::Sub, p, q, -1,
                                    "subproof " + b.show_proof(q) + " uses premise " +
                                        b.show_formula(f) + " outside " + b.show_proof(p)});
          break;
        }
      }
    }
  }

  // Cut: for p with proper subproof q and any sampled r < q, some v with
  // p > v, v above r, and premises within those of p and r must exist.
  for (auto p : closure) {
    for (auto q : b.proper_subproofs(p)) {
      for (auto r : closure) {
        if (r == q || b.conclusion(r) != b.conclusion(q)) continue;
        if (b.compare(q, r) != Cmp::Greater) continue;
        ++rep.cut_pairs_checked;
        auto v = b.cut_witness(p, q, r);
        bool ok = v.has_value() && b.compare(p, *v) == Cmp::Greater;
        if (!ok) {
          rep.violations.push_back({Postulate::Cut, p, q, r,
                                    "no proof below " + b.show_proof(p) + " replacing " +
                                        b.show_proof(q) + " by " + b.show_proof(r)});
        }
      }
    }
  }
  return rep;
}

inline const char* to_string(Postulate p) {
  switch (p) {
    case Postulate::Triv: return "Triv";
    case Postulate::Sub: return "Sub";
    case Postulate::Cut: return "Cut";
  }
  return "?";
}

}  // namespace canon
