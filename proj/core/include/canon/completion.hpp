#pragma once

#include "canon/framework.hpp"
#include "canon/trace.hpp"

namespace canon {

/// Critical proofs of A: minimal proofs that are not in normal form while
/// all their proper subproofs are.
template <class B>
std::vector<typename B::Proof> critical_proofs(B& b, const Pres& a) {
  std::vector<typename B::Proof> out;
  const MinProofs& mp = b.min_proofs_of(a);
  const MinProofs& nf = b.normal_forms(a);
  for (const auto& [c, proofs] : mp.by_conclusion) {
    for (auto p : proofs) {
      if (nf.contains(c, p)) continue;
      bool subs_normal = true;
      for (auto q : b.proper_subproofs(p)) {
        if (!nf.contains(b.conclusion(q), q)) {
          subs_normal = false;
          break;
        }
      }
      if (subs_normal) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [&](auto x, auto y) { return b.proof_less(x, y); });
  return out;
}

/// One critical-completion step: add all critical theorems, then contract.
template <class B>
Pres critical_step(B& b, const Pres& a) {
  Pres next = a;
  for (auto p : critical_proofs(b, a)) next.insert(b.conclusion(p));
  return contract(b, next);
}

/// One bulk-completion step: for every critical proof pick the canonically
/// least strictly smaller theory proof, add the premises of those witnesses,
/// then contract. Throws when some critical proof has no smaller proof
/// within bounds.
template <class B>
Pres bulk_step(B& b, const Pres& a) {
  auto crits = critical_proofs(b, a);
  const MinProofs& nf = b.normal_forms(a);
  Pres next = a;
  for (auto p : crits) {
    auto it = nf.by_conclusion.find(b.conclusion(p));
    std::optional<typename B::Proof> witness;
    if (it != nf.by_conclusion.end()) {
      for (auto q : it->second) {
        if (b.compare(q, p) != Cmp::Less) continue;
        if (!witness || b.proof_less(q, *witness)) witness = q;
      }
    }
    if (!witness) {
      throw CanonError("bulk completion found no proof below the critical proof " +
                       b.show_proof(p) + " within the bounds");
    }
    for (auto f : b.premises(*witness)) next.insert(f);
  }
  return contract(b, next);
}

/// One mass-completion step: add conclusions of minimal proofs that sit
/// strictly above their own trivial proof while no proper subproof does,
/// then contract.
template <class B>
Pres mass_step(B& b, const Pres& a) {
  const MinProofs& mp = b.min_proofs_of(a);
  Pres next = a;
  for (const auto& [c, proofs] : mp.by_conclusion) {
    for (auto p : proofs) {
      if (b.compare(b.trivial(c), p) != Cmp::Less) continue;
      bool innermost = true;
      for (auto q : b.proper_subproofs(p)) {
        if (b.compare(b.trivial(b.conclusion(q)), q) == Cmp::Less) {
          innermost = false;
          break;
        }
      }
      if (innermost) next.insert(c);
    }
  }
  return contract(b, next);
}

enum class Mechanism { Critical, Bulk, Mass };

inline const char* to_string(Mechanism m) {
  switch (m) {
    case Mechanism::Critical: return "critical";
    case Mechanism::Bulk: return "bulk";
    case Mechanism::Mass: return "mass";
  }
  return "?";
}

inline Mechanism mechanism_from_string(const std::string& s) {
  if (s == "critical") return Mechanism::Critical;
  if (s == "bulk") return Mechanism::Bulk;
  if (s == "mass") return Mechanism::Mass;
  throw CanonError("unknown completion mechanism '" + s + "' (critical|bulk|mass)");
}

/// Iterates the chosen step operator to a fixpoint (recorded as one final
/// identity step) or until max_steps runs out (trace flagged non-terminated).
template <class B>
Trace run_completion(B& b, const Pres& a0, Mechanism mech, size_t max_steps = 1000) {
  Trace t;
  t.states.push_back(a0);
  Pres cur = a0;
  for (size_t i = 0; i < max_steps; ++i) {
    Pres next;
    switch (mech) {
      case Mechanism::Critical: next = critical_step(b, cur); break;
      case Mechanism::Bulk: next = bulk_step(b, cur); break;
      case Mechanism::Mass: next = mass_step(b, cur); break;
    }
    Trace::Step step;
    step.kind = to_string(mech);
    for (auto f : next) {
      if (!cur.count(f)) step.added.insert(f);
    }
    for (auto f : cur) {
      if (!next.count(f)) step.removed.insert(f);
    }
    t.steps.push_back(std::move(step));
    t.states.push_back(next);
    if (next == cur) return t;
    cur = next;
  }
  t.terminated = false;
  return t;
}

struct DerivationVerdict {
  bool good = false;
  bool fair = false;
  bool uniformly_fair = false;
  bool contracting = false;
  bool saturating = false;
  bool completing = false;
  bool canonical = false;
  std::string witness;  // one line about the first failing flag
};

/// Validates a derivation:
///   good            every step keeps proofs at least as good
///   fair            persistent critical proofs are beaten within the union
///   uniformly_fair  persistent non-canonical trivial proofs are beaten
///   contracting     nothing persistently redundant survives to the limit
///   saturating      all normal-form proofs of the start emerge in the limit
///   completing      every starting theorem keeps a normal-form proof
///   canonical       saturating and contracting
template <class B>
DerivationVerdict check_derivation(B& b, const Trace& t) {
  t.validate();
  DerivationVerdict v;
  const Pres& a0 = t.states.front();
  const Pres& limit = t.limit();
  Pres all = t.union_of();
  auto note = [&](const std::string& msg) {
    if (v.witness.empty()) v.witness = msg;
  };

  v.good = true;
  for (size_t i = 0; i + 1 < t.states.size(); ++i) {
    if (!simpler(b, t.states[i], t.states[i + 1])) {
      v.good = false;
      note("step " + std::to_string(i) + " is not proof-improving");
      break;
    }
  }

  const MinProofs& mu_all = b.min_proofs_of(all);
  v.fair = true;
  for (auto p : critical_proofs(b, limit)) {
    if (!detail::beaten_in(b, mu_all, p, true)) {
      v.fair = false;
      note("critical proof " + b.show_proof(p) + " is never beaten");
      break;
    }
  }

  Pres sharp0 = sharp(b, a0);
  v.uniformly_fair = true;
  for (auto f : limit) {
    if (sharp0.count(f)) continue;
    if (!detail::beaten_in(b, mu_all, b.trivial(f), true)) {
      v.uniformly_fair = false;
      note("trivial proof of " + b.show_formula(f) + " is never beaten");
      break;
    }
  }

  Pres red_all = redundant(b, all);
  v.contracting = true;
  for (auto f : limit) {
    if (red_all.count(f)) {
      v.contracting = false;
      note("formula " + b.show_formula(f) + " persists although redundant");
      break;
    }
  }

  const MinProofs& nf0 = b.normal_forms(a0);
  v.saturating = true;
  for (const auto& [c, proofs] : nf0.by_conclusion) {
    for (auto p : proofs) {
      for (auto f : b.premises(p)) {
        if (!limit.count(f)) {
          v.saturating = false;
          note("normal-form proof " + b.show_proof(p) + " never becomes available");
          break;
        }
      }
      if (!v.saturating) break;
    }
    if (!v.saturating) break;
  }

  v.completing = true;
  for (auto c : b.theorems(a0)) {
    bool has = false;
    auto it = nf0.by_conclusion.find(c);
    if (it != nf0.by_conclusion.end()) {
      for (auto p : it->second) {
        bool inside = true;
        for (auto f : b.premises(p)) {
          if (!limit.count(f)) {
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
    if (!has) {
      v.completing = false;
      note("theorem " + b.show_formula(c) + " has no persistent normal-form proof");
      break;
    }
  }

  v.canonical = v.saturating && v.contracting;
  return v;
}

}  // namespace canon
