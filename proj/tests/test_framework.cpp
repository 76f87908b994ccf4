#include "doctest.h"

#include <random>

#include "canon/completion.hpp"
#include "canon/eq_backend.hpp"
#include "canon/framework.hpp"

using namespace canon;

namespace {
EqBackend make_backend(const std::string& preset_name, int term_size, int depth) {
  return EqBackend(Signature::tally(), preset(preset_name), Bounds{term_size, depth});
}

FormulaId eq(EqBackend& b, int i, int j) {
  return b.formulas().equation(b.terms().numeral(i), b.terms().numeral(j));
}
FormulaId neq(EqBackend& b, int i, int j) {
  return b.formulas().disequation(b.terms().numeral(i), b.terms().numeral(j));
}

}  // namespace

TEST_CASE("sharp of the even presentation under the completion preset") {
  auto b = make_backend("completion", 9, 9);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  CHECK(sharp(b, a) == Pres{eq(b, 2, 0)});
}

TEST_CASE("sharp under congruence closure keeps one equation per merge") {
  auto b = make_backend("congruence_closure", 9, 9);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  CHECK(sharp(b, a) == Pres{eq(b, 2, 0), eq(b, 4, 0), eq(b, 6, 0), eq(b, 8, 0)});
}

TEST_CASE("sharp under deductive closure is the whole bounded theory") {
  auto b = make_backend("deductive_closure", 5, 4);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  Pres expect;
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= i; ++j) {
      if ((i - j) % 2 == 0) expect.insert(eq(b, i, j));
    }
  }
  CHECK(sharp(b, a) == expect);
  // the whole theory is irredundant here
  CHECK(redundant(b, expect).empty());
  Verdict v = classify(b, expect);
  CHECK(v.saturated);
  CHECK(v.contracted);
}

TEST_CASE("ground superposition coincides with completion on the even presentation") {
  auto b = make_backend("superposition", 9, 9);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  CHECK(sharp(b, a) == Pres{eq(b, 2, 0)});
}

TEST_CASE("sharp of an inconsistent set under refutation is the least trivial disequation") {
  auto b = make_backend("refutation", 5, 6);
  Pres a{neq(b, 1, 1), neq(b, 1, 0)};
  CHECK(sharp(b, a) == Pres{neq(b, 0, 0)});
}

TEST_CASE("minimal proof goldens under the example ordering") {
  auto b = make_backend("example_rpo", 8, 6);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  const MinProofs& mp = b.min_proofs_of(a);

  auto it = mp.by_conclusion.find(eq(b, 2, 0));
  REQUIRE(it != mp.by_conclusion.end());
  ProofId expected =
      b.proofs().all_t(b.proofs().leaf(eq(b, 4, 0)), b.proofs().leaf(eq(b, 4, 2)))[0];
  CHECK(it->second == std::vector<ProofId>{expected});

  // a lifted premise leaf: 6=2 comes from 4=0 under two successors
  auto s2 = *b.terms().sig().find("s");
  ProofId lifted = b.proofs().leaf(eq(b, 4, 0));
  lifted = b.proofs().all_s(s2, std::vector<ProofId>{lifted})[0];
  lifted = b.proofs().all_s(s2, std::vector<ProofId>{lifted})[0];
  auto it62 = mp.by_conclusion.find(eq(b, 6, 2));
  REQUIRE(it62 != mp.by_conclusion.end());
  CHECK(it62->second == std::vector<ProofId>{lifted});

  // reflexive theorems from nothing: S^i(Z)
  auto& mp0 = b.min_proofs_of({});
  auto s = *b.terms().sig().find("s");
  ProofId tower = b.proofs().z();
  for (int i = 0; i <= 4; ++i) {
    auto jt = mp0.by_conclusion.find(eq(b, i, i));
    REQUIRE(jt != mp0.by_conclusion.end());
    CHECK(jt->second == std::vector<ProofId>{tower});
    tower = b.proofs().all_s(s, std::vector<ProofId>{tower})[0];
  }
}

TEST_CASE("minimal of an explicit justification") {
  auto b = make_backend("completion", 8, 6);
  ProofId i42 = b.proofs().leaf(eq(b, 4, 2));
  ProofId t = b.proofs().all_t(b.proofs().leaf(eq(b, 4, 0)), i42)[0];
  auto s = *b.terms().sig().find("s");
  ProofId deep = t;
  for (int i = 0; i < 2; ++i) deep = b.proofs().all_s(s, std::vector<ProofId>{deep})[0];
  // both prove 4 = 2
  REQUIRE(b.conclusion(deep) == b.conclusion(i42));
  CHECK(minimal_just(b, {i42, deep}) == std::vector<ProofId>{i42});
  CHECK(minimal_just(b, {i42}) == std::vector<ProofId>{i42});
}

TEST_CASE("simpler and redundancy on the even presentation") {
  auto b = make_backend("completion", 7, 6);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  Pres canon_basis{eq(b, 2, 0)};
  Pres all3{eq(b, 4, 2), eq(b, 4, 0), eq(b, 2, 0)};

  CHECK(simpler(b, a, a));
  CHECK(simpler(b, a, canon_basis));
  CHECK_FALSE(simpler(b, canon_basis, a));  // the basis provides better proofs

  CHECK(redundant(b, Pres{}).empty());
  CHECK(redundant(b, all3) == Pres{eq(b, 4, 2), eq(b, 4, 0)});
  CHECK(redundant(b, canon_basis).empty());
  CHECK(contract(b, all3) == canon_basis);

  // removing all redundancies at once keeps the presentation similar
  CHECK(similar_pres(b, all3, canon_basis));
}

TEST_CASE("classify flags on tally presentations") {
  auto b = make_backend("completion", 7, 7);
  Pres basis{eq(b, 2, 0)};
  Verdict v = classify(b, basis);
  CHECK(v.contracted);
  CHECK(v.saturated);
  CHECK(v.complete);
  CHECK(v.canonical);

  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  Verdict va = classify(b, a);
  CHECK_FALSE(va.saturated);
  CHECK_FALSE(va.canonical);
  CHECK(va.saturated_witness.has_value());
}

TEST_CASE("framework invariants at property-suite bounds") {
  std::mt19937 rng(3);
  for (const char* name : {"completion", "congruence_closure", "ground_completion_total",
                           "example_rpo", "refutation", "deductive_closure",
                           "superposition"}) {
    auto b = make_backend(name, 6, 5);
    for (int round = 0; round < 4; ++round) {
      Pres a;
      int n = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < n; ++k) {
        int i = static_cast<int>(rng() % 4), j = static_cast<int>(rng() % 4);
        a.insert(eq(b, i, j));
      }
      CAPTURE(name);
      CAPTURE(show_presentation(b.formulas(), a));

      Pres sh = sharp(b, a);
      // idempotence and monotonicity
      CHECK(sharp(b, sh) == sh);
      CHECK(b.theorems(a) == b.theorems(sh));
      // the canonical presentation is the simplest
      CHECK(simpler(b, a, sh));
      // removing the redundant part keeps proofs similar
      CHECK(similar_pres(b, a, contract(b, a)));
      // saturated iff the canonical basis is contained
      Verdict v = classify(b, a);
      bool contains_sharp = true;
      for (FormulaId f : sh) {
        if (!a.count(f)) contains_sharp = false;
      }
      CHECK(v.saturated == contains_sharp);
      if (v.saturated) CHECK(v.complete);
      // contracted iff irredundant
      CHECK(v.contracted == redundant(b, a).empty());
      // the canonical basis classifies canonical
      Verdict vs = classify(b, sh);
      CHECK(vs.canonical);
    }
  }
}

TEST_CASE("minimal_proof checks theoremhood first") {
  auto b = make_backend("example_rpo", 7, 6);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  ProofId chain =
      b.proofs().all_t(b.proofs().leaf(eq(b, 4, 0)), b.proofs().leaf(eq(b, 4, 2)))[0];
  CHECK(b.minimal_proof(a, eq(b, 2, 0)) == std::vector<ProofId>{chain});
  CHECK_THROWS_AS(b.minimal_proof(a, eq(b, 1, 0)), CanonError);
}

TEST_CASE("sharp depends only on the theory") {
  auto b = make_backend("completion", 7, 7);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  Pres a2{eq(b, 2, 0), eq(b, 4, 0)};
  REQUIRE(b.theorems(a) == b.theorems(a2));
  CHECK(sharp(b, a) == sharp(b, a2));
}

TEST_CASE("with a total ordering, complete and saturated coincide") {
  std::mt19937 rng(17);
  auto b = make_backend("ground_completion_total", 6, 6);
  for (int round = 0; round < 8; ++round) {
    Pres a;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) {
      a.insert(eq(b, static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)));
    }
    Verdict v = classify(b, a);
    CAPTURE(show_presentation(b.formulas(), a));
    CHECK(v.saturated == v.complete);
  }
}

TEST_CASE("minimal proofs are closed under subproofs and cover the rest") {
  auto b = make_backend("completion", 7, 7);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  const MinProofs& mp = b.min_proofs_of(a);

  // subproofs of minimal proofs are minimal
  for (const auto& [c, proofs] : mp.by_conclusion) {
    for (ProofId p : proofs) {
      for (ProofId q : b.proper_subproofs(p)) {
        CHECK(mp.contains(b.conclusion(q), q));
      }
    }
  }

  // any justification is covered by its minimal members
  ProofId i42 = b.proofs().leaf(eq(b, 4, 2));
  auto s = *b.terms().sig().find("s");
  ProofId deep = b.proofs().all_s(s, std::vector<ProofId>{
                                         b.proofs().all_t(b.proofs().leaf(eq(b, 4, 0)),
                                                          i42)[0]})[0];
  std::vector<ProofId> just{i42, deep, b.proofs().z()};
  auto mu = minimal_just(b, just);
  CHECK(compare_justifications(b, just, mu, JustMode::BetterEq));

  // a larger presentation provides proofs at least as good
  Pres bigger = a;
  bigger.insert(eq(b, 2, 0));
  const MinProofs& mp_big = b.min_proofs_of(bigger);
  for (const auto& [c, proofs] : mp.by_conclusion) {
    for (ProofId p : proofs) {
      bool covered = false;
      auto it = mp_big.by_conclusion.find(c);
      if (it != mp_big.by_conclusion.end()) {
        for (ProofId q : it->second) {
          Cmp r = b.compare_free(p, q);
          if (r == Cmp::Greater || r == Cmp::Equal) covered = true;
        }
      }
      CHECK(covered);
    }
  }
}

TEST_CASE("good derivations keep the union similar to the limit") {
  auto b = make_backend("completion", 7, 7);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  Trace t = run_completion(b, a, Mechanism::Mass);
  DerivationVerdict v = check_derivation(b, t);
  REQUIRE(v.good);
  CHECK(similar_pres(b, t.union_of(), t.limit()));
}

TEST_CASE("postulates hold on bounded enumerations") {
  auto b = make_backend("completion", 6, 3);
  Pres a{eq(b, 4, 2), eq(b, 4, 0)};
  auto sample = enumerate_proofs(b.proofs(), a, b.bounds());
  PostulateReport rep = check_postulates(b, sample);
  CHECK(rep.ok());
  CHECK(rep.proofs_checked > 0);
  CHECK(rep.cut_pairs_checked > 0);
}
