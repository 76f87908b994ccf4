#include "canon/term.hpp"

#include <algorithm>
#include <cctype>

namespace canon {

SymbolId Signature::add(std::string_view name, int arity) {
  auto it = by_name_.find(std::string(name));
  if (it != by_name_.end()) {
    if (syms_[static_cast<size_t>(it->second)].arity != arity) {
      throw CanonError("symbol '" + std::string(name) + "' redeclared with arity " +
                       std::to_string(arity) + " (was " +
                       std::to_string(syms_[static_cast<size_t>(it->second)].arity) + ")");
    }
    return it->second;
  }
  SymbolId id = static_cast<SymbolId>(syms_.size());
  syms_.push_back(Symbol{std::string(name), arity});
  by_name_.emplace(std::string(name), id);
  return id;
}

std::optional<SymbolId> Signature::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool Signature::is_tally() const {
  if (syms_.size() != 2) return false;
  auto zero = find("0");
  auto succ = find("s");
  return zero && succ && at(*zero).arity == 0 && at(*succ).arity == 1;
}

SymbolId Signature::least_constant() const {
  for (size_t i = 0; i < syms_.size(); ++i) {
    if (syms_[i].arity == 0) return static_cast<SymbolId>(i);
  }
  throw CanonError("signature has no constant");
}

Signature Signature::tally() {
  Signature sig;
  sig.add("0", 0);
  sig.add("s", 1);
  return sig;
}

TermId TermPool::make(SymbolId sym, std::span<const TermId> args) {
  const Symbol& s = sig_.at(sym);
  if (static_cast<int>(args.size()) != s.arity) {
    throw CanonError("arity mismatch for '" + s.name + "'");
  }
  std::string key = std::to_string(sym);
  int32_t size = 1;
  for (TermId a : args) {
    key += ',';
    key += std::to_string(a);
    size += nodes_[static_cast<size_t>(a)].size;
  }
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;
  TermId id = static_cast<TermId>(nodes_.size());
  nodes_.push_back(Node{sym, size, std::vector<TermId>(args.begin(), args.end())});
  intern_.emplace(std::move(key), id);
  return id;
}

TermId TermPool::numeral(int n) {
  auto zero = sig_.find("0");
  auto succ = sig_.find("s");
  if (!zero) zero = sig_.add("0", 0);
  if (!succ && n > 0) succ = sig_.add("s", 1);
  TermId t = constant(*zero);
  for (int i = 0; i < n; ++i) t = app1(*succ, t);
  return t;
}

std::optional<int> TermPool::numeral_value(TermId t) const {
  auto zero = sig_.find("0");
  auto succ = sig_.find("s");
  if (!zero) return std::nullopt;
  int k = 0;
  TermId cur = t;
  while (succ && sym(cur) == *succ) {
    cur = args(cur)[0];
    ++k;
  }
  if (sym(cur) != *zero) return std::nullopt;
  return k;
}

std::span<const TermId> TermPool::args(TermId t) const {
  const Node& n = nodes_[static_cast<size_t>(t)];
  return {n.args.data(), n.args.size()};
}

Cmp TermPool::structural_compare(TermId a, TermId b) const {
  if (a == b) return Cmp::Equal;
  if (size(a) != size(b)) return size(a) < size(b) ? Cmp::Less : Cmp::Greater;
  if (sym(a) != sym(b)) return sym(a) < sym(b) ? Cmp::Less : Cmp::Greater;
  auto as = args(a), bs = args(b);
  for (size_t i = 0; i < as.size(); ++i) {
    Cmp c = structural_compare(as[i], bs[i]);
    if (c != Cmp::Equal) return c;
  }
  return Cmp::Equal;
}

bool TermPool::occurs(TermId needle, TermId haystack) const {
  if (needle == haystack) return true;
  for (TermId a : args(haystack)) {
    if (occurs(needle, a)) return true;
  }
  return false;
}

std::vector<std::vector<int>> TermPool::positions(TermId t) const {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto walk = [&](auto&& self, TermId cur) -> void {
    auto as = args(cur);
    for (size_t i = 0; i < as.size(); ++i) {
      path.push_back(static_cast<int>(i));
      self(self, as[i]);
      path.pop_back();
    }
    out.push_back(path);
  };
  walk(walk, t);
  return out;
}

TermId TermPool::subterm_at(TermId t, std::span<const int> pos) const {
  TermId cur = t;
  for (int i : pos) cur = args(cur)[static_cast<size_t>(i)];
  return cur;
}

TermId TermPool::replace_at(TermId t, std::span<const int> pos, TermId repl) {
  if (pos.empty()) return repl;
  auto as = args(t);
  std::vector<TermId> copy(as.begin(), as.end());
  size_t idx = static_cast<size_t>(pos[0]);
  copy[idx] = replace_at(copy[idx], pos.subspan(1), repl);
  return make(sym(t), copy);
}

std::vector<TermId> TermPool::universe(int max_size) {
  std::vector<std::vector<TermId>> by_size(static_cast<size_t>(max_size) + 1);
  for (int sz = 1; sz <= max_size; ++sz) {
    for (SymbolId f = 0; f < static_cast<SymbolId>(sig_.size()); ++f) {
      int arity = sig_.at(f).arity;
      if (arity == 0) {
        if (sz == 1) by_size[static_cast<size_t>(sz)].push_back(constant(f));
        continue;
      }
      // Enumerate arity-tuples of smaller terms whose sizes add to sz-1.
      std::vector<TermId> tuple(static_cast<size_t>(arity));
      auto rec = [&](auto&& self, int slot, int budget) -> void {
        if (slot == arity) {
          if (budget == 0) by_size[static_cast<size_t>(sz)].push_back(make(f, tuple));
          return;
        }
        int remaining_slots = arity - slot - 1;
        for (int s = 1; s + remaining_slots <= budget; ++s) {
          for (TermId cand : by_size[static_cast<size_t>(s)]) {
            tuple[static_cast<size_t>(slot)] = cand;
            self(self, slot + 1, budget - s);
          }
        }
      };
      rec(rec, 0, sz - 1);
    }
  }
  std::vector<TermId> all;
  for (auto& v : by_size) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end(), [&](TermId a, TermId b) { return structural_less(a, b); });
  return all;
}

std::string TermPool::show(TermId t, bool numeral_sugar) const {
  if (numeral_sugar && sig_.is_tally()) {
    if (auto v = numeral_value(t)) return std::to_string(*v);
  }
  std::string out = sig_.at(sym(t)).name;
  auto as = args(t);
  if (!as.empty()) {
    out += '(';
    for (size_t i = 0; i < as.size(); ++i) {
      if (i) out += ',';
      out += show(as[i], numeral_sugar);
    }
    out += ')';
  }
  return out;
}

namespace {
void skip_ws(std::string_view s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}
}  // namespace

TermId TermPool::parse_expr(std::string_view s, size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw CanonError("unexpected end of term");

  if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
    int n = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      n = n * 10 + (s[pos] - '0');
      ++pos;
    }
    return numeral(n);
  }

  size_t start = pos;
  while (pos < s.size() &&
         (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
    ++pos;
  }
  if (pos == start) throw CanonError("expected symbol in term at '" + std::string(s.substr(pos)) + "'");
  std::string name(s.substr(start, pos - start));

  int power = 1;
  skip_ws(s, pos);
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    skip_ws(s, pos);
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
      throw CanonError("expected exponent after '^'");
    }
    power = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      power = power * 10 + (s[pos] - '0');
      ++pos;
    }
    skip_ws(s, pos);
  }

  std::vector<TermId> kids;
  if (pos < s.size() && s[pos] == '(') {
    ++pos;
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == ')') {
      ++pos;
    } else {
      while (true) {
        kids.push_back(parse_expr(s, pos));
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < s.size() && s[pos] == ')') {
          ++pos;
          break;
        }
        throw CanonError("expected ',' or ')' in term");
      }
    }
  }

  SymbolId sym_id;
  if (auto found = sig_.find(name)) {
    sym_id = *found;
  } else {
    sym_id = sig_.add(name, static_cast<int>(kids.size()));
  }
  if (power != 1 && sig_.at(sym_id).arity != 1) {
    throw CanonError("'^' power notation requires a unary symbol");
  }
  if (power == 0) {
    if (kids.size() != 1) throw CanonError("'^0' requires exactly one argument");
    return kids[0];
  }
  TermId t = make(sym_id, kids);
  for (int i = 1; i < power; ++i) t = app1(sym_id, t);
  return t;
}

TermId TermPool::parse(std::string_view text) {
  size_t pos = 0;
  TermId t = parse_expr(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) {
    throw CanonError("trailing characters in term: '" + std::string(text.substr(pos)) + "'");
  }
  return t;
}

}  // namespace canon
