#include "doctest.h"

#include <random>

#include "canon/term.hpp"

using namespace canon;

TEST_CASE("tally parsing, numerals and power sugar") {
  TermPool tp(Signature::tally());
  TermId four = tp.parse("4");
  CHECK(four == tp.parse("s(s(s(s(0))))"));
  CHECK(four == tp.parse("s^4(0)"));
  CHECK(tp.parse("s^0(0)") == tp.parse("0"));
  CHECK(tp.numeral_value(four) == 4);
  CHECK(tp.size(four) == 5);
  CHECK(tp.show(four) == "4");
  CHECK(tp.show(four, false) == "s(s(s(s(0))))");
}

TEST_CASE("general signatures parse with inferred arities") {
  TermPool tp{Signature{}};
  TermId t = tp.parse("f(g(a),b)");
  CHECK(tp.sig().at(tp.sym(t)).name == "f");
  CHECK(tp.sig().at(tp.sym(t)).arity == 2);
  CHECK(tp.size(t) == 4);
  CHECK(tp.show(t) == "f(g(a),b)");
  CHECK_THROWS_AS(tp.parse("f(a)"), CanonError);  // arity conflict
}

TEST_CASE("structural order is total and size-first") {
  TermPool tp(Signature::tally());
  TermId a = tp.parse("2"), b = tp.parse("5"), c = tp.parse("2");
  CHECK(tp.structural_compare(a, b) == Cmp::Less);
  CHECK(tp.structural_compare(b, a) == Cmp::Greater);
  CHECK(tp.structural_compare(a, c) == Cmp::Equal);
}

TEST_CASE("positions, subterms and replacement") {
  TermPool tp{Signature{}};
  TermId t = tp.parse("f(g(a),b)");
  auto pos = tp.positions(t);
  CHECK(pos.size() == 4);        // a, g(a), b, f(g(a),b) in post-order
  CHECK(pos.back().empty());     // root last
  TermId a = tp.parse("a");
  CHECK(tp.subterm_at(t, pos[0]) == a);
  TermId swapped = tp.replace_at(t, pos[0], tp.parse("b"));
  CHECK(tp.show(swapped) == "f(g(b),b)");
  CHECK(tp.occurs(a, t));
  CHECK_FALSE(tp.occurs(a, swapped));
}

TEST_CASE("universe enumerates exactly the size-bounded terms") {
  TermPool tp(Signature::tally());
  auto u = tp.universe(5);
  CHECK(u.size() == 5);  // numerals 0..4
  for (int i = 0; i < 5; ++i) CHECK(tp.numeral_value(u[static_cast<size_t>(i)]) == i);

  TermPool tp2{Signature{}};
  tp2.parse("f(a,b)");  // declares f/2, a/0, b/0
  auto u2 = tp2.universe(3);
  // size 1: a, b; size 3: f over four pairs
  CHECK(u2.size() == 6);
}

TEST_CASE("parse/show round trip on random tally terms") {
  TermPool tp(Signature::tally());
  std::mt19937 rng(0);
  for (int i = 0; i < 50; ++i) {
    int n = static_cast<int>(rng() % 12);
    TermId t = tp.numeral(n);
    CHECK(tp.parse(tp.show(t)) == t);
    CHECK(tp.parse(tp.show(t, false)) == t);
  }
}
