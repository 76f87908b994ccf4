#include "canon/formula.hpp"

#include <algorithm>
#include <sstream>

namespace canon {

FormulaId FormulaPool::make(bool diseq, TermId a, TermId b) {
  if (terms_->structural_less(a, b)) std::swap(a, b);
  auto key = std::make_tuple(diseq, a, b);
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;
  FormulaId id = static_cast<FormulaId>(data_.size());
  data_.push_back(Data{diseq, a, b});
  intern_.emplace(key, id);
  return id;
}

Cmp FormulaPool::compare(FormulaId f, FormulaId g) const {
  if (f == g) return Cmp::Equal;
  if (is_diseq(f) != is_diseq(g)) return is_diseq(f) ? Cmp::Greater : Cmp::Less;
  Cmp c = terms_->structural_compare(lhs(f), lhs(g));
  if (c != Cmp::Equal) return c;
  return terms_->structural_compare(rhs(f), rhs(g));
}

std::string FormulaPool::show(FormulaId f, bool numeral_sugar) const {
  return terms_->show(lhs(f), numeral_sugar) + (is_diseq(f) ? " != " : " = ") +
         terms_->show(rhs(f), numeral_sugar);
}

FormulaId FormulaPool::parse(std::string_view line) {
  size_t neq = line.find("!=");
  bool diseq = neq != std::string_view::npos;
  size_t split = diseq ? neq : line.find('=');
  if (split == std::string_view::npos) {
    throw CanonError("expected '=' or '!=' in formula: '" + std::string(line) + "'");
  }
  std::string_view left = line.substr(0, split);
  std::string_view right = line.substr(split + (diseq ? 2 : 1));
  TermId a = terms_->parse(left);
  TermId b = terms_->parse(right);
  return make(diseq, a, b);
}

Pres parse_presentation(FormulaPool& formulas, std::string_view text) {
  Pres pres;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = raw.substr(0, raw.find('#'));
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.rfind("sig ", 0) == 0 || line == "sig") {
      std::istringstream decl(line.substr(3));
      std::string item;
      while (decl >> item) {
        size_t slash = item.find('/');
        if (slash == std::string::npos) {
          throw CanonError("signature entries look like name/arity, got '" + item + "'");
        }
        formulas.terms().sig_mut().add(item.substr(0, slash),
                                       std::stoi(item.substr(slash + 1)));
      }
      continue;
    }
    pres.insert(formulas.parse(line));
  }
  return pres;
}

std::vector<FormulaId> sorted_formulas(const FormulaPool& formulas, const Pres& pres) {
  std::vector<FormulaId> out(pres.begin(), pres.end());
  std::sort(out.begin(), out.end(),
            [&](FormulaId a, FormulaId b) { return formulas.less(a, b); });
  return out;
}

std::string show_presentation(const FormulaPool& formulas, const Pres& pres,
                              bool numeral_sugar) {
  std::string out;
  for (FormulaId f : sorted_formulas(formulas, pres)) {
    out += formulas.show(f, numeral_sugar);
    out += '\n';
  }
  return out;
}

}  // namespace canon
