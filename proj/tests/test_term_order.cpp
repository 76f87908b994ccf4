#include "doctest.h"

#include "canon/term_order.hpp"

using namespace canon;

TEST_CASE("structural mode compares numerals by value") {
  TermPool tp(Signature::tally());
  TermOrdering ord;  // Structural
  CHECK(ord.compare(tp, tp.parse("4"), tp.parse("2")) == Cmp::Greater);
  CHECK(ord.compare(tp, tp.parse("0"), tp.parse("3")) == Cmp::Less);
  CHECK(ord.compare(tp, tp.parse("3"), tp.parse("3")) == Cmp::Equal);
}

TEST_CASE("LPO reproduces the declared constant chain") {
  TermPool tp{Signature{}};
  SymbolId s = tp.sig_mut().add("s", 1);
  SymbolId a = tp.sig_mut().add("a", 0);
  SymbolId b = tp.sig_mut().add("b", 0);
  SymbolId c = tp.sig_mut().add("c", 0);
  TermOrdering ord;
  ord.mode = TermOrdering::Mode::Lpo;
  ord.prec.add_chain({s, a, b, c});

  TermId ta = tp.parse("a"), tb = tp.parse("b"), tc = tp.parse("c");
  TermId sa = tp.parse("s(a)"), sb = tp.parse("s(b)"), sc = tp.parse("s(c)");
  // sa >> sb >> sc >> a >> b >> c
  std::vector<TermId> chain{sa, sb, sc, ta, tb, tc};
  for (size_t i = 0; i < chain.size(); ++i) {
    for (size_t j = 0; j < chain.size(); ++j) {
      Cmp want = i == j ? Cmp::Equal : (i < j ? Cmp::Greater : Cmp::Less);
      CHECK(ord.compare(tp, chain[i], chain[j]) == want);
    }
  }
}

TEST_CASE("LPO has the subterm property") {
  TermPool tp(Signature::tally());
  TermOrdering ord;
  ord.mode = TermOrdering::Mode::Lpo;
  auto s = tp.sig().find("s");
  auto z = tp.sig().find("0");
  ord.prec.add_chain({*s, *z});
  for (int n = 1; n <= 6; ++n) {
    CHECK(ord.compare(tp, tp.numeral(n), tp.numeral(n - 1)) == Cmp::Greater);
  }
  CHECK(ord.compare(tp, tp.parse("s(s(0))"), tp.parse("0")) == Cmp::Greater);
}

TEST_CASE("partial precedence leaves symbols incomparable") {
  TermPool tp{Signature{}};
  tp.sig_mut().add("a", 0);
  tp.sig_mut().add("b", 0);
  TermOrdering ord;
  ord.mode = TermOrdering::Mode::Lpo;
  CHECK(ord.compare(tp, tp.parse("a"), tp.parse("b")) == Cmp::Incomparable);
}

TEST_CASE("precedence cycles are rejected") {
  SymbolPrecedence prec;
  prec.add_pair(0, 1);
  CHECK_THROWS_AS(prec.add_pair(1, 0), CanonError);
}
