#include "canon/ground_completion.hpp"

#include <algorithm>
#include <optional>

namespace canon {

GroundPolicy ground_policy_from_string(const std::string& s) {
  if (s == "largest") return GroundPolicy::LargestFirst;
  if (s == "smallest") return GroundPolicy::SmallestFirst;
  throw CanonError("unknown ground completion policy '" + s + "' (largest|smallest)");
}

namespace {

Cmp equation_compare(FormulaPool& fp, const TermOrdering& ord, FormulaId a, FormulaId b) {
  std::vector<TermId> xs{fp.lhs(a), fp.rhs(a)};
  std::vector<TermId> ys{fp.lhs(b), fp.rhs(b)};
  return multiset_extension(xs, ys,
                            [&](TermId s, TermId t) { return ord.compare(fp.terms(), s, t); });
}

struct Rule {
  TermId big, small;
};

std::optional<Rule> orient(FormulaPool& fp, const TermOrdering& ord, FormulaId e) {
  TermId l = fp.lhs(e), r = fp.rhs(e);
  if (l == r) return std::nullopt;
  Cmp c = ord.compare(fp.terms(), l, r);
  if (c == Cmp::Greater) return Rule{l, r};
  if (c == Cmp::Less) return Rule{r, l};
  throw CanonError("ground completion needs a total term ordering; '" + fp.show(e) +
                   "' cannot be oriented");
}

}  // namespace

Trace ground_completion(FormulaPool& fp, const Pres& equations, const TermOrdering& order,
                        GroundPolicy policy, size_t max_steps) {
  for (FormulaId f : equations) {
    if (fp.is_diseq(f)) {
      throw CanonError("ground completion handles equations only, got '" + fp.show(f) + "'");
    }
  }
  Trace trace;
  trace.states.push_back(equations);
  Pres cur = equations;

  for (size_t iter = 0; iter < max_steps; ++iter) {
    // Delete applies eagerly.
    std::optional<FormulaId> trivial;
    for (FormulaId e : cur) {
      if (fp.lhs(e) == fp.rhs(e) && (!trivial || fp.less(e, *trivial))) trivial = e;
    }
    if (trivial) {
      Trace::Step step;
      step.kind = "delete";
      step.removed.insert(*trivial);
      trace.steps.push_back(std::move(step));
      cur.erase(*trivial);
      trace.states.push_back(cur);
      continue;
    }

    // Collect the reducible equations.
    std::vector<FormulaId> reducible;
    for (FormulaId target : cur) {
      bool found = false;
      for (FormulaId by : cur) {
        if (by == target) continue;
        Rule rule = *orient(fp, order, by);
        if (fp.terms().occurs(rule.big, fp.lhs(target)) ||
            fp.terms().occurs(rule.big, fp.rhs(target))) {
          found = true;
          break;
        }
      }
      if (found) reducible.push_back(target);
    }
    if (reducible.empty()) return trace;  // fixpoint: canonical basis

    FormulaId target = reducible.front();
    for (FormulaId e : reducible) {
      Cmp c = equation_compare(fp, order, e, target);
      if ((policy == GroundPolicy::LargestFirst && c == Cmp::Greater) ||
          (policy == GroundPolicy::SmallestFirst && c == Cmp::Less)) {
        target = e;
      }
    }

    // Leftmost-innermost redex within the target, smallest applicable rule.
    std::optional<FormulaId> result;
    for (int side = 0; side < 2 && !result; ++side) {
      TermId s = side == 0 ? fp.lhs(target) : fp.rhs(target);
      TermId other = side == 0 ? fp.rhs(target) : fp.lhs(target);
      for (const auto& pos : fp.terms().positions(s)) {
        TermId redex = fp.terms().subterm_at(s, pos);
        std::optional<Rule> best;
        std::optional<FormulaId> best_eq;
        for (FormulaId by : cur) {
          if (by == target) continue;
          Rule rule = *orient(fp, order, by);
          if (rule.big != redex) continue;
          if (!best_eq || fp.less(by, *best_eq)) {
            best_eq = by;
            best = rule;
          }
        }
        if (best) {
          TermId rewritten = fp.terms().replace_at(s, pos, best->small);
          result = fp.equation(side == 0 ? rewritten : other, side == 0 ? other : rewritten);
          break;
        }
      }
    }

    Trace::Step step;
    step.kind = "deduce";
    step.removed.insert(target);
    if (!cur.count(*result)) step.added.insert(*result);
    trace.steps.push_back(std::move(step));
    cur.erase(target);
    cur.insert(*result);
    trace.states.push_back(cur);
  }
  trace.terminated = false;
  return trace;
}

}  // namespace canon
