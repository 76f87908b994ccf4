#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "canon/compare.hpp"

namespace canon {

using SymbolId = int32_t;
using TermId = int32_t;

struct Symbol {
  std::string name;
  int arity = 0;
};

/// A ground first-order vocabulary. Symbols keep declaration order, which
/// fixes the structural tie-break order used everywhere for determinism.
class Signature {
 public:
  SymbolId add(std::string_view name, int arity);
  std::optional<SymbolId> find(std::string_view name) const;
  const Symbol& at(SymbolId id) const { return syms_.at(static_cast<size_t>(id)); }
  size_t size() const { return syms_.size(); }

  /// True when the vocabulary is exactly one constant `0` and one unary `s`.
  bool is_tally() const;
  /// The designated least constant (first constant in declaration order).
  SymbolId least_constant() const;

  static Signature tally();

 private:
  std::vector<Symbol> syms_;
  std::unordered_map<std::string, SymbolId> by_name_;
};

/// Interned ground terms over a signature. Ids are dense and stable; equal
/// ids mean structurally equal terms.
class TermPool {
 public:
  explicit TermPool(Signature sig) : sig_(std::move(sig)) {}

  const Signature& sig() const { return sig_; }
  Signature& sig_mut() { return sig_; }

  TermId make(SymbolId sym, std::span<const TermId> args);
  TermId constant(SymbolId sym) { return make(sym, {}); }
  TermId app1(SymbolId sym, TermId arg) { return make(sym, std::span<const TermId>(&arg, 1)); }

  /// Numeral n as s^n(0); requires the tally constructors to exist.
  TermId numeral(int n);
  /// Value k when the term is s^k(0), otherwise nullopt.
  std::optional<int> numeral_value(TermId t) const;

  SymbolId sym(TermId t) const { return nodes_[static_cast<size_t>(t)].sym; }
  std::span<const TermId> args(TermId t) const;
  int size(TermId t) const { return nodes_[static_cast<size_t>(t)].size; }
  size_t count() const { return nodes_.size(); }

  /// Total structural order: by size, then head symbol, then arguments.
  Cmp structural_compare(TermId a, TermId b) const;
  bool structural_less(TermId a, TermId b) const {
    return structural_compare(a, b) == Cmp::Less;
  }

  bool occurs(TermId needle, TermId haystack) const;

  /// Positions are root-to-node index paths; all() lists them innermost-first
  /// (post-order, arguments left to right, root last).
  std::vector<std::vector<int>> positions(TermId t) const;
  TermId subterm_at(TermId t, std::span<const int> pos) const;
  TermId replace_at(TermId t, std::span<const int> pos, TermId repl);

  /// All terms of size <= max_size, ordered structurally.
  std::vector<TermId> universe(int max_size);

  std::string show(TermId t, bool numeral_sugar = true) const;

  /// Parses a prefix term such as `s(s(0))`, `f(a,b)`, `s^3(0)` or `4`.
  /// Unknown symbols are added to the signature with the arity seen
  /// (bare digits imply the tally constructors); inconsistent arity is an error.
  TermId parse(std::string_view text);

 private:
  struct Node {
    SymbolId sym;
    int32_t size;
    std::vector<TermId> args;
  };

  TermId parse_expr(std::string_view text, size_t& pos);

  Signature sig_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, TermId> intern_;
};

}  // namespace canon
