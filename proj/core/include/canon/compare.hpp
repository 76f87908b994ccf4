#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace canon {

/// Outcome of comparing two elements under a (possibly partial) strict order.
enum class Cmp : uint8_t { Less, Equal, Greater, Incomparable };

inline Cmp flip(Cmp c) {
  switch (c) {
    case Cmp::Less: return Cmp::Greater;
    case Cmp::Greater: return Cmp::Less;
    default: return c;
  }
}

inline const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "less";
    case Cmp::Equal: return "equal";
    case Cmp::Greater: return "greater";
    default: return "incomparable";
  }
}

/// Dershowitz-Manna multiset extension of a partial strict order.
/// X > Y iff, after removing pairwise equal elements, every leftover y in Y
/// is dominated by some leftover x in X (and the leftovers are not both empty).
template <class T, class CmpFn>
Cmp multiset_extension(std::vector<T> xs, std::vector<T> ys, CmpFn&& cmp) {
  // Strip pairwise equal elements.
  for (size_t i = 0; i < xs.size();) {
    bool removed = false;
    for (size_t j = 0; j < ys.size(); ++j) {
      if (cmp(xs[i], ys[j]) == Cmp::Equal) {
        xs.erase(xs.begin() + static_cast<long>(i));
        ys.erase(ys.begin() + static_cast<long>(j));
        removed = true;
        break;
      }
    }
    if (!removed) ++i;
  }
  if (xs.empty() && ys.empty()) return Cmp::Equal;
  if (ys.empty()) return Cmp::Greater;
  if (xs.empty()) return Cmp::Less;

  auto dominates = [&](const std::vector<T>& big, const std::vector<T>& small) {
    for (const T& s : small) {
      bool covered = false;
      for (const T& b : big) {
        if (cmp(b, s) == Cmp::Greater) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  };

  bool gt = dominates(xs, ys);
  bool lt = dominates(ys, xs);
  if (gt && lt) return Cmp::Incomparable;  // cannot happen for a strict order
  if (gt) return Cmp::Greater;
  if (lt) return Cmp::Less;
  return Cmp::Incomparable;
}

/// Shared error type for user-facing failures (parsing, validation, budgets).
class CanonError : public std::runtime_error {
 public:
  explicit CanonError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace canon
