#include "doctest.h"

#include "canon/ordering.hpp"
#include "canon/trace.hpp"

using namespace canon;

TEST_CASE("ordering config files parse into working configs") {
  TermPool tp{Signature{}};
  tp.sig_mut().add("s", 1);
  tp.sig_mut().add("a", 0);
  tp.sig_mut().add("b", 0);
  OrderingConfig cfg = parse_ordering_config(
      "# comment\n"
      "precedence Z < S < T < I < P\n"
      "precedence F < Z\n"
      "leaf_mode value_measure\n"
      "term_order s > a > b\n"
      "t_weight_rule true\n",
      tp.sig());
  CHECK(cfg.leaf_mode == LeafMode::ValueMeasure);
  CHECK(cfg.t_weight_rule);
  CHECK(cfg.precedence.compare(Comb::I, Comb::Z) == Cmp::Greater);
  CHECK(cfg.precedence.compare(Comb::F, Comb::P) == Cmp::Less);
  CHECK(cfg.term_order.mode == TermOrdering::Mode::Lpo);
  CHECK(cfg.term_order.prec.compare(*tp.sig().find("a"), *tp.sig().find("b")) ==
        Cmp::Greater);

  CHECK_THROWS_AS(parse_ordering_config("precedence Z < Q\n", tp.sig()), CanonError);
  CHECK_THROWS_AS(parse_ordering_config("leaf_mode sideways\n", tp.sig()), CanonError);
  CHECK_THROWS_AS(parse_ordering_config("term_order s > ghost\n", tp.sig()), CanonError);
  CHECK_THROWS_AS(parse_ordering_config("precedence Z < S < Z\n", tp.sig()), CanonError);
  CHECK_THROWS_AS(parse_ordering_config("wibble on\n", tp.sig()), CanonError);

  OrderingConfig from_preset = parse_ordering_config("preset refutation\n", tp.sig());
  CHECK(from_preset.name == "refutation");
}

TEST_CASE("broken trace files are rejected") {
  auto id = [](const std::string&) { return 0; };
  CHECK_THROWS_AS(parse_trace("not json", id), CanonError);
  CHECK_THROWS_AS(parse_trace(R"({"steps": []})", id), CanonError);
  // step payload does not match the states
  CHECK_THROWS_AS(parse_trace(R"({
    "states": [["a"], ["a"]],
    "steps": [{"kind": "expand", "added": ["b"], "removed": []}]
  })",
                              [](const std::string& s) { return s == "a" ? 0 : 1; }),
                  CanonError);
  // step count must be one less than state count
  Trace t;
  t.states = {{0}, {0}};
  CHECK_THROWS_AS(t.validate(), CanonError);
}
