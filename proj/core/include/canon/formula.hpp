#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "canon/term.hpp"

namespace canon {

using FormulaId = int32_t;

/// Interned unordered ground equations and disequations. Sides are stored
/// orientation-normalized (left side structurally largest), so `i = j` and
/// `j = i` intern to the same id.
class FormulaPool {
 public:
  explicit FormulaPool(TermPool& terms) : terms_(&terms) {}

  FormulaId make(bool diseq, TermId a, TermId b);
  FormulaId equation(TermId a, TermId b) { return make(false, a, b); }
  FormulaId disequation(TermId a, TermId b) { return make(true, a, b); }

  bool is_diseq(FormulaId f) const { return data_[static_cast<size_t>(f)].diseq; }
  TermId lhs(FormulaId f) const { return data_[static_cast<size_t>(f)].lhs; }
  TermId rhs(FormulaId f) const { return data_[static_cast<size_t>(f)].rhs; }
  size_t count() const { return data_.size(); }

  TermPool& terms() const { return *terms_; }

  /// Fixed total order: equations before disequations, then sides
  /// structurally. Used for witness selection and printed output.
  Cmp compare(FormulaId f, FormulaId g) const;
  bool less(FormulaId f, FormulaId g) const { return compare(f, g) == Cmp::Less; }

  std::string show(FormulaId f, bool numeral_sugar = true) const;

  /// Parses `lhs = rhs` or `lhs != rhs`.
  FormulaId parse(std::string_view line);

 private:
  struct Data {
    bool diseq;
    TermId lhs, rhs;
  };
  TermPool* terms_;
  std::vector<Data> data_;
  std::map<std::tuple<bool, TermId, TermId>, FormulaId> intern_;
};

using Pres = std::set<FormulaId>;

/// Parses a presentation file: one formula per line, `#` comments, optional
/// `sig name/arity ...` header lines declaring the signature.
Pres parse_presentation(FormulaPool& formulas, std::string_view text);

std::string show_presentation(const FormulaPool& formulas, const Pres& pres,
                              bool numeral_sugar = true);

/// Sorted by the fixed formula order (for deterministic output).
std::vector<FormulaId> sorted_formulas(const FormulaPool& formulas, const Pres& pres);

}  // namespace canon
