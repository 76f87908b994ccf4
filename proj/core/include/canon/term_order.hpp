#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "canon/compare.hpp"
#include "canon/term.hpp"

namespace canon {

/// Strict partial precedence over symbols, built from user chains and closed
/// transitively. Declaring a cycle is an error.
class SymbolPrecedence {
 public:
  void add_pair(SymbolId greater, SymbolId lesser);
  void add_chain(const std::vector<SymbolId>& descending);
  Cmp compare(SymbolId a, SymbolId b) const;
  bool empty() const { return greater_.empty(); }

 private:
  void close();
  std::set<std::pair<SymbolId, SymbolId>> greater_;
};

/// Simplification ordering on ground terms.
///
/// `Structural` is the total (size, symbol, args) order; on the tally
/// signature it coincides with comparing numerals by value. `Lpo` is the
/// lexicographic path order over the configured symbol precedence and is
/// total on ground terms whenever the precedence is total.
struct TermOrdering {
  enum class Mode { Structural, Lpo };
  Mode mode = Mode::Structural;
  SymbolPrecedence prec;

  Cmp compare(const TermPool& pool, TermId a, TermId b) const;
  bool greater(const TermPool& pool, TermId a, TermId b) const {
    return compare(pool, a, b) == Cmp::Greater;
  }
};

}  // namespace canon
