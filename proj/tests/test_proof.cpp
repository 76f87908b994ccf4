#include "doctest.h"

#include "canon/proof.hpp"

using namespace canon;

namespace {
struct Fix {
  TermPool tp{Signature::tally()};
  FormulaPool fp{tp};
  ProofPool pp{fp};

  FormulaId eq(int i, int j) { return fp.equation(tp.numeral(i), tp.numeral(j)); }
  FormulaId neq(int i, int j) { return fp.disequation(tp.numeral(i), tp.numeral(j)); }
};
}  // namespace

TEST_CASE("trivial proofs and the axiom") {
  Fix x;
  ProofId e40 = x.pp.leaf(x.eq(4, 0));
  CHECK(x.pp.premises(e40) == std::vector<FormulaId>{x.eq(4, 0)});
  CHECK(x.pp.conclusion(e40) == x.eq(4, 0));
  CHECK(x.pp.subproofs(e40) == std::vector<ProofId>{e40});

  ProofId i00 = x.pp.leaf(x.eq(0, 0));
  CHECK(i00 != x.pp.z());
  CHECK(x.pp.conclusion(i00) == x.pp.conclusion(x.pp.z()));
  CHECK(x.pp.premises(x.pp.z()).empty());

  CHECK(x.pp.show(x.pp.leaf(x.neq(1, 0))) == "I(1!=0)");
}

TEST_CASE("S towers lift premises") {
  Fix x;
  auto s = *x.tp.sig().find("s");
  ProofId p = x.pp.leaf(x.eq(4, 2));
  for (int i = 1; i <= 3; ++i) {
    auto lifted = x.pp.all_s(s, std::vector<ProofId>{p});
    REQUIRE(lifted.size() == 1);
    p = lifted[0];
    CHECK(x.pp.conclusion(p) == x.eq(4 + i, 2 + i));
    CHECK(x.pp.premises(p) == std::vector<FormulaId>{x.eq(4, 2)});
  }
  CHECK(x.pp.subproofs(p).size() == 4);  // all suffixes
  CHECK(x.pp.check(p).ok);
}

TEST_CASE("transitivity readings and branch symmetry") {
  Fix x;
  ProofId i40 = x.pp.leaf(x.eq(4, 0));
  ProofId i42 = x.pp.leaf(x.eq(4, 2));
  auto ts = x.pp.all_t(i40, i42);
  REQUIRE(ts.size() == 1);
  CHECK(x.pp.conclusion(ts[0]) == x.eq(2, 0));
  CHECK(x.pp.check(ts[0]).ok);

  // branches are unordered
  auto ts2 = x.pp.all_t(i42, i40);
  CHECK(ts == ts2);

  // both readings when the premises coincide
  auto both = x.pp.all_t(i42, i42);
  REQUIRE(both.size() == 2);
  std::set<FormulaId> concls{x.pp.conclusion(both[0]), x.pp.conclusion(both[1])};
  CHECK(concls == std::set<FormulaId>{x.eq(4, 4), x.eq(2, 2)});

  // no shared term
  CHECK_FALSE(x.pp.try_t(x.pp.leaf(x.eq(1, 0)), x.pp.leaf(x.eq(3, 2)), x.tp.numeral(1)));
  ProofId bad = x.pp.make_unchecked(Comb::T, x.eq(3, 0), -1, x.tp.numeral(1),
                                    {x.pp.leaf(x.eq(1, 0)), x.pp.leaf(x.eq(3, 2))});
  CHECK_FALSE(x.pp.check(bad).ok);
}

TEST_CASE("disequality rules: deriving 0 != 0 from 1 != 1 and 1 != 0") {
  Fix x;
  ProofId i11 = x.pp.leaf(x.neq(1, 1));
  auto f01 = x.pp.try_f(x.eq(0, 1), i11);
  REQUIRE(f01);
  CHECK(x.pp.conclusion(*f01) == x.eq(1, 0));  // normalized orientation
  ProofId i10 = x.pp.leaf(x.neq(1, 0));
  auto t = x.pp.try_t(*f01, i10, x.tp.numeral(1));
  REQUIRE(t);
  CHECK(x.pp.conclusion(*t) == x.neq(0, 0));
  CHECK(x.pp.check(*t).ok);
  const auto& prem = x.pp.premises(*t);
  CHECK(std::set<FormulaId>(prem.begin(), prem.end()) ==
        std::set<FormulaId>{x.neq(1, 0), x.neq(1, 1)});

  // F needs a trivial disequation below it
  CHECK_FALSE(x.pp.try_f(x.eq(2, 2), i10));
}

TEST_CASE("projection keeps the right conclusion and both premise sets") {
  Fix x;
  ProofId l = x.pp.leaf(x.eq(4, 0));
  ProofId r = x.pp.leaf(x.eq(4, 2));
  ProofId p = x.pp.proj(l, r);
  CHECK(x.pp.conclusion(p) == x.eq(4, 2));
  const auto& prem = x.pp.premises(p);
  CHECK(std::set<FormulaId>(prem.begin(), prem.end()) ==
        std::set<FormulaId>{x.eq(4, 2), x.eq(4, 0)});
  CHECK(x.pp.check(p).ok);
}

TEST_CASE("orientation of equations is normalized everywhere") {
  Fix x;
  CHECK(x.eq(2, 4) == x.eq(4, 2));
  CHECK(x.neq(0, 1) == x.neq(1, 0));
  CHECK(x.pp.leaf(x.eq(2, 4)) == x.pp.leaf(x.eq(4, 2)));
}

TEST_CASE("same-conclusion subproofs are detected") {
  Fix x;
  ProofId z = x.pp.z();
  auto tz = x.pp.try_t(z, z, x.tp.numeral(0));
  REQUIRE(tz);
  CHECK(x.pp.repeats_conclusion(*tz));
  ProofId i40 = x.pp.leaf(x.eq(4, 0));
  ProofId i42 = x.pp.leaf(x.eq(4, 2));
  CHECK_FALSE(x.pp.repeats_conclusion(x.pp.all_t(i40, i42)[0]));
}

TEST_CASE("subproof replacement rebuilds the context") {
  Fix x;
  auto s = *x.tp.sig().find("s");
  ProofId i40 = x.pp.leaf(x.eq(4, 0));
  ProofId i42 = x.pp.leaf(x.eq(4, 2));
  ProofId t = x.pp.all_t(i40, i42)[0];  // 2 = 0
  ProofId lift = x.pp.all_s(s, std::vector<ProofId>{t})[0];

  // replace the 2=0 subproof by the direct premise leaf
  ProofId leaf20 = x.pp.leaf(x.eq(2, 0));
  ProofId swapped = x.pp.replace_all(lift, t, leaf20);
  CHECK(x.pp.conclusion(swapped) == x.pp.conclusion(lift));
  CHECK(x.pp.check(swapped).ok);
  CHECK(x.pp.premises(swapped) == std::vector<FormulaId>{x.eq(2, 0)});
}
