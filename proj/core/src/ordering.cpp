#include "canon/ordering.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace canon {

LeafMode leaf_mode_from_string(const std::string& s) {
  if (s == "incomparable") return LeafMode::Incomparable;
  if (s == "context_embedding") return LeafMode::ContextEmbedding;
  if (s == "term_multiset") return LeafMode::TermMultiset;
  if (s == "value_measure") return LeafMode::ValueMeasure;
  throw CanonError("unknown leaf_mode '" + s + "'");
}

const char* to_string(LeafMode m) {
  switch (m) {
    case LeafMode::Incomparable: return "incomparable";
    case LeafMode::ContextEmbedding: return "context_embedding";
    case LeafMode::TermMultiset: return "term_multiset";
    case LeafMode::ValueMeasure: return "value_measure";
  }
  return "?";
}

CombPrecedence::CombPrecedence() {
  for (auto& row : m_) row.fill(Cmp::Incomparable);
  for (int i = 0; i < 6; ++i) m_[static_cast<size_t>(i)][static_cast<size_t>(i)] = Cmp::Equal;
}

void CombPrecedence::add_pair(Comb greater, Comb lesser) {
  if (greater == lesser) throw CanonError("combinator precedence pair is reflexive");
  if (m_[static_cast<size_t>(greater)][static_cast<size_t>(lesser)] == Cmp::Less) {
    throw CanonError("combinator precedence contains a cycle");
  }
  m_[static_cast<size_t>(greater)][static_cast<size_t>(lesser)] = Cmp::Greater;
  m_[static_cast<size_t>(lesser)][static_cast<size_t>(greater)] = Cmp::Less;
  close();
}

void CombPrecedence::add_chain(const std::vector<Comb>& descending) {
  for (size_t i = 0; i + 1 < descending.size(); ++i) {
    add_pair(descending[i], descending[i + 1]);
  }
}

void CombPrecedence::close() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < 6; ++a) {
      for (size_t b = 0; b < 6; ++b) {
        if (m_[a][b] != Cmp::Greater) continue;
        for (size_t c = 0; c < 6; ++c) {
          if (m_[b][c] == Cmp::Greater && m_[a][c] != Cmp::Greater) {
            if (m_[a][c] == Cmp::Less || a == c) {
              throw CanonError("combinator precedence contains a cycle");
            }
            m_[a][c] = Cmp::Greater;
            m_[c][a] = Cmp::Less;
            changed = true;
          }
        }
      }
    }
  }
}

Cmp CombPrecedence::compare(Comb a, Comb b) const {
  return m_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

namespace {
Comb comb_from_string(const std::string& s) {
  if (s == "Z") return Comb::Z;
  if (s == "I") return Comb::I;
  if (s == "S") return Comb::S;
  if (s == "P") return Comb::P;
  if (s == "T") return Comb::T;
  if (s == "F") return Comb::F;
  throw CanonError("unknown proof combinator '" + s + "'");
}
}  // namespace

OrderingConfig preset(const std::string& name) {
  using C = Comb;
  OrderingConfig cfg;
  cfg.name = name;
  if (name == "deductive_closure") {
    cfg.precedence.add_chain({C::P, C::T, C::S, C::F, C::Z, C::I});
    cfg.leaf_mode = LeafMode::Incomparable;
  } else if (name == "congruence_closure") {
    cfg.precedence.add_chain({C::P, C::I, C::T, C::S, C::F, C::Z});
    cfg.leaf_mode = LeafMode::ContextEmbedding;
  } else if (name == "completion") {
    cfg.precedence.add_chain({C::P, C::I, C::T, C::S, C::F, C::Z});
    cfg.leaf_mode = LeafMode::TermMultiset;
  } else if (name == "refutation") {
    cfg.precedence.add_chain({C::P, C::I, C::T, C::S, C::Z, C::F});
    cfg.leaf_mode = LeafMode::ValueMeasure;
  } else if (name == "superposition") {
    // T-vs-I is decided per node by the shared term's weight.
    cfg.precedence.add_chain({C::P, C::T, C::S, C::F, C::Z});
    cfg.precedence.add_pair(C::P, C::I);
    cfg.precedence.add_pair(C::I, C::S);
    cfg.leaf_mode = LeafMode::TermMultiset;
    cfg.t_weight_rule = true;
  } else if (name == "ground_completion_total") {
    cfg.precedence.add_chain({C::P, C::I, C::T, C::S, C::Z, C::F});
    cfg.leaf_mode = LeafMode::TermMultiset;
  } else if (name == "example_rpo") {
    cfg.precedence.add_chain({C::P, C::I, C::T, C::S, C::Z, C::F});
    cfg.leaf_mode = LeafMode::TermMultiset;
  } else {
    throw CanonError("unknown ordering preset '" + name + "'");
  }
  return cfg;
}

void add_term_order_chain(OrderingConfig& cfg, const std::string& chain,
                          const Signature& sig) {
  std::vector<SymbolId> syms;
  std::string buf;
  std::vector<std::string> names;
  for (char c : chain) {
    if (c == '>') {
      names.push_back(buf);
      buf.clear();
    } else {
      buf += c;
    }
  }
  names.push_back(buf);
  for (std::string n : names) {
    n.erase(std::remove_if(n.begin(), n.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
            n.end());
    if (n.empty()) throw CanonError("empty symbol in term_order chain");
    auto id = sig.find(n);
    if (!id) throw CanonError("term_order mentions unknown symbol '" + n + "'");
    syms.push_back(*id);
  }
  cfg.term_order.mode = TermOrdering::Mode::Lpo;
  cfg.term_order.prec.add_chain(syms);
}

OrderingConfig parse_ordering_config(const std::string& text, const Signature& sig) {
  OrderingConfig cfg;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "precedence") {
      std::string rest;
      std::getline(ls, rest);
      std::vector<Comb> chain;
      std::string buf;
      auto flush = [&] {
        if (!buf.empty()) {
          chain.push_back(comb_from_string(buf));
          buf.clear();
        }
      };
      for (char c : rest) {
        if (c == '<' || std::isspace(static_cast<unsigned char>(c))) {
          flush();
        } else {
          buf += c;
        }
      }
      flush();
      std::reverse(chain.begin(), chain.end());  // written ascending, stored descending
      cfg.precedence.add_chain(chain);
    } else if (key == "leaf_mode") {
      std::string mode;
      ls >> mode;
      cfg.leaf_mode = leaf_mode_from_string(mode);
    } else if (key == "term_order") {
      std::string rest;
      std::getline(ls, rest);
      size_t first = rest.find_first_not_of(" \t");
      if (first == std::string::npos) throw CanonError("term_order needs a value");
      rest = rest.substr(first);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.pop_back();
      if (rest == "numeral_value" || rest == "structural") {
        cfg.term_order.mode = TermOrdering::Mode::Structural;
      } else {
        add_term_order_chain(cfg, rest, sig);
      }
    } else if (key == "t_weight_rule") {
      std::string v;
      ls >> v;
      cfg.t_weight_rule = (v == "true" || v == "1" || v == "on");
    } else if (key == "preset") {
      std::string v;
      ls >> v;
      cfg = preset(v);
    } else {
      throw CanonError("unknown ordering config key '" + key + "'");
    }
  }
  return cfg;
}

ProofOrdering::ProofOrdering(OrderingConfig cfg, ProofPool& pool)
    : cfg_(std::move(cfg)), pool_(&pool) {}

Cmp ProofOrdering::compare(ProofId p, ProofId q) {
  if (pool_->conclusion(p) != pool_->conclusion(q)) {
    throw CanonError("proof ordering compares only proofs with the same conclusion");
  }
  return rpo(p, q);
}

bool ProofOrdering::shared_term_maximal(ProofId t_node) const {
  TermId x = pool_->shared_term(t_node);
  FormulaId c = pool_->conclusion(t_node);
  auto [i, k] = sides(pool_->formulas(), c);
  for (TermId y : {i, k}) {
    Cmp r = cfg_.term_order.compare(pool_->terms(), x, y);
    if (r != Cmp::Greater && r != Cmp::Equal) return false;
  }
  return true;
}

Cmp ProofOrdering::head_compare(ProofId p, ProofId q) const {
  Comb kp = pool_->kind(p), kq = pool_->kind(q);
  if (kp == Comb::S && kq == Comb::S) {
    if (pool_->sym(p) == pool_->sym(q)) return Cmp::Equal;
    return cfg_.term_order.prec.compare(pool_->sym(p), pool_->sym(q));
  }
  if (cfg_.t_weight_rule) {
    if (kp == Comb::T && kq == Comb::I) {
      return shared_term_maximal(p) ? Cmp::Greater : Cmp::Less;
    }
    if (kp == Comb::I && kq == Comb::T) {
      return shared_term_maximal(q) ? Cmp::Less : Cmp::Greater;
    }
  }
  return cfg_.precedence.compare(kp, kq);
}

Cmp ProofOrdering::leaf_compare(FormulaId f, FormulaId g) {
  if (f == g) return Cmp::Equal;
  auto& fp = pool_->formulas();
  auto& tp = pool_->terms();
  switch (cfg_.leaf_mode) {
    case LeafMode::Incomparable:
      return Cmp::Incomparable;
    case LeafMode::ContextEmbedding: {
      // Does g embed f under a single proper context, in either orientation?
      auto embeds = [&](FormulaId small, FormulaId big) {
        if (fp.is_diseq(small) != fp.is_diseq(big)) return false;
        TermId u = fp.lhs(small), t = fp.rhs(small);
        TermId bu = fp.lhs(big), bt = fp.rhs(big);
        if (u == t) {  // reflexivity leaf: any occurrence works
          return bu == bt && u != bu && tp.occurs(u, bu);
        }
        // Walk the common spine of (bu, bt); the hole must cover all
        // disagreements, so it lies where exactly one child pair differs.
        TermId a = bu, b = bt;
        while (true) {
          if ((a == u && b == t) || (a == t && b == u)) {
            return !(a == bu && b == bt);  // proper context only
          }
          if (a == b) return false;
          if (tp.sym(a) != tp.sym(b)) return false;
          auto as = tp.args(a), bs = tp.args(b);
          int diff = -1;
          for (size_t i = 0; i < as.size(); ++i) {
            if (as[i] != bs[i]) {
              if (diff >= 0) return false;
              diff = static_cast<int>(i);
            }
          }
          if (diff < 0) return false;
          a = as[static_cast<size_t>(diff)];
          b = bs[static_cast<size_t>(diff)];
        }
      };
      if (embeds(f, g)) return Cmp::Less;
      if (embeds(g, f)) return Cmp::Greater;
      return Cmp::Incomparable;
    }
    case LeafMode::TermMultiset: {
      std::vector<TermId> xs{fp.lhs(f), fp.rhs(f)};
      std::vector<TermId> ys{fp.lhs(g), fp.rhs(g)};
      Cmp r = multiset_extension(xs, ys, [&](TermId a, TermId b) {
        return cfg_.term_order.compare(tp, a, b);
      });
      if (r == Cmp::Equal) {
        // same side multisets, so the kinds differ; equations come first
        return fp.is_diseq(f) ? Cmp::Greater : Cmp::Less;
      }
      return r;
    }
    case LeafMode::ValueMeasure: {
      auto measure = [&](TermId t) {
        if (auto v = tp.numeral_value(t)) return *v;
        return tp.size(t);
      };
      std::vector<int> xs{measure(fp.lhs(f)), measure(fp.rhs(f))};
      std::vector<int> ys{measure(fp.lhs(g)), measure(fp.rhs(g))};
      Cmp r = multiset_extension(xs, ys, [](int a, int b) {
        return a == b ? Cmp::Equal : (a > b ? Cmp::Greater : Cmp::Less);
      });
      if (r == Cmp::Equal) {
        if (fp.is_diseq(f) != fp.is_diseq(g)) return fp.is_diseq(f) ? Cmp::Greater : Cmp::Less;
        return Cmp::Incomparable;  // equal measures, different terms
      }
      return r;
    }
  }
  return Cmp::Incomparable;
}

Cmp ProofOrdering::rpo(ProofId p, ProofId q) {
  if (p == q) return Cmp::Equal;
  uint64_t key = (static_cast<uint64_t>(static_cast<uint32_t>(p)) << 32) |
                 static_cast<uint32_t>(q);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  Cmp result;
  if (pool_->kind(p) == Comb::I && pool_->kind(q) == Comb::I) {
    result = leaf_compare(pool_->conclusion(p), pool_->conclusion(q));
  } else {
    bool gt = rpo_greater(p, q);
    bool lt = rpo_greater(q, p);
    if (gt && lt) throw CanonError("proof ordering produced a cycle");
    result = gt ? Cmp::Greater : lt ? Cmp::Less : Cmp::Incomparable;
  }
  memo_.emplace(key, result);
  uint64_t rkey = (static_cast<uint64_t>(static_cast<uint32_t>(q)) << 32) |
                  static_cast<uint32_t>(p);
  memo_.emplace(rkey, flip(result));
  return result;
}

bool ProofOrdering::rpo_greater(ProofId p, ProofId q) {
  // (i) some subproof of p already covers q
  for (ProofId k : pool_->kids(p)) {
    Cmp r = rpo(k, q);
    if (r == Cmp::Greater || r == Cmp::Equal) return true;
  }
  Cmp heads = head_compare(p, q);
  if (heads == Cmp::Greater) {
    for (ProofId d : pool_->kids(q)) {
      if (rpo(p, d) != Cmp::Greater) return false;
    }
    return true;
  }
  if (heads == Cmp::Equal) {
    std::vector<ProofId> xs(pool_->kids(p).begin(), pool_->kids(p).end());
    std::vector<ProofId> ys(pool_->kids(q).begin(), pool_->kids(q).end());
    Cmp ms = multiset_extension(xs, ys, [&](ProofId a, ProofId b) { return rpo(a, b); });
    if (ms == Cmp::Greater) return true;
    if (ms == Cmp::Equal) {
      // identical children: distinct nodes differ in conclusion (T shared-term
      // readings, S orientations, F indices); fall back to the leaf order
      return leaf_compare(pool_->conclusion(p), pool_->conclusion(q)) == Cmp::Greater;
    }
    return false;
  }
  return false;
}

}  // namespace canon
