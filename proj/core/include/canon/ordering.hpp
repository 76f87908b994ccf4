#pragma once

#include <array>
#include <string>
#include <unordered_map>

#include "canon/proof.hpp"
#include "canon/term_order.hpp"

namespace canon {

/// How two premise leaves I(f), I(g) compare.
enum class LeafMode : uint8_t {
  Incomparable,      // distinct leaves never compare
  ContextEmbedding,  // I(u,t) < I(c[u],c[t]) for a proper context c
  TermMultiset,      // multiset {lhs,rhs} in the term ordering
  ValueMeasure,      // multiset of side measures (numeral value, else size)
};

LeafMode leaf_mode_from_string(const std::string& s);
const char* to_string(LeafMode m);

/// Strict partial precedence over the six combinators.
class CombPrecedence {
 public:
  CombPrecedence();
  void add_pair(Comb greater, Comb lesser);
  void add_chain(const std::vector<Comb>& descending);
  Cmp compare(Comb a, Comb b) const;

 private:
  void close();
  std::array<std::array<Cmp, 6>, 6> m_;
};

/// A well-founded proof-ordering specification: combinator precedence, leaf
/// comparison mode, term ordering, and the optional shared-term weight rule
/// that decides T-vs-I precedence per node.
struct OrderingConfig {
  std::string name = "custom";
  CombPrecedence precedence;
  LeafMode leaf_mode = LeafMode::TermMultiset;
  TermOrdering term_order;
  bool t_weight_rule = false;
};

/// Named presets.
///   deductive_closure       trivial proofs are the best proofs
///   congruence_closure      S below I, leaves ordered by context embedding
///   completion              S < T < I, leaves by term multisets
///   refutation              F smallest, leaves by side values
///   superposition           T-vs-I decided by the shared term's weight
///   ground_completion_total P > I > T > S > Z, total on same-conclusion proofs
///   example_rpo             Z < S < T < I < P with numeral-valued leaves
OrderingConfig preset(const std::string& name);

/// Parses a custom ordering config:
///   precedence Z < S < T < I < P
///   leaf_mode term_multiset
///   term_order numeral_value     (or symbol chains: `term_order s > a > b`)
///   t_weight_rule false
OrderingConfig parse_ordering_config(const std::string& text, const Signature& sig);

/// Builds a descending term-order chain like "s > a > b > c" into a config.
void add_term_order_chain(OrderingConfig& cfg, const std::string& chain,
                          const Signature& sig);

/// Comparison engine binding a config to a proof pool. Comparisons are
/// memoized; the pool may keep growing.
class ProofOrdering {
 public:
  ProofOrdering(OrderingConfig cfg, ProofPool& pool);

  const OrderingConfig& config() const { return cfg_; }
  ProofPool& pool() const { return *pool_; }

  /// The proof ordering proper: only proofs with equal conclusions compare.
  Cmp compare(ProofId p, ProofId q);

  /// The underlying recursive path comparison on proof terms (used inside
  /// multiset recursions, where subproofs of different conclusions meet).
  Cmp rpo(ProofId p, ProofId q);

  Cmp term_compare(TermId a, TermId b) const {
    return cfg_.term_order.compare(pool_->terms(), a, b);
  }
  Cmp leaf_compare(FormulaId f, FormulaId g);

 private:
  bool rpo_greater(ProofId p, ProofId q);
  Cmp head_compare(ProofId p, ProofId q) const;
  bool shared_term_maximal(ProofId t_node) const;

  OrderingConfig cfg_;
  ProofPool* pool_;
  std::unordered_map<uint64_t, Cmp> memo_;
};

}  // namespace canon
