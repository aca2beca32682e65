#include <doctest.h>

#include "helpers.hpp"

using namespace spslab;
using namespace spslab::testing;

TEST_CASE("poset construction validates its covers") {
  CHECK_THROWS_AS(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_AS(Poset({"a"}, {{"a", "a"}}), Error);
  CHECK_THROWS_AS(Poset({"a", "b"}, {{"a", "c"}}), Error);
  CHECK_THROWS_AS(Poset({"a", "a"}, {}), Error);
  // transitively implied cover
  try {
    Poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::NotTransitivelyReduced);
  }
}

TEST_CASE("canonical element order is by height then id") {
  Poset p({"z", "y", "x"}, {{"z", "y"}, {"z", "x"}});
  CHECK(p.id(0) == "z");
  CHECK(p.id(1) == "x");
  CHECK(p.id(2) == "y");
  CHECK(p.height(0) == 0);
  CHECK(p.height(2) == 1);
}

TEST_CASE("order, covers, extremes") {
  Poset p({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  CHECK(p.leq(p.index("0"), p.index("1")));
  CHECK(!p.leq(p.index("a"), p.index("b")));
  CHECK(p.covers(p.index("0"), p.index("a")));
  CHECK(!p.covers(p.index("0"), p.index("1")));
  CHECK(p.maximal().size() == 1);
  CHECK(p.minimal().size() == 1);
  CHECK(p.max_height() == 2);
}

TEST_CASE("ordinal and cardinal sums") {
  Poset a2 = cardinal_sum(antichain({"u"}), antichain({"v"}));
  CHECK(a2.size() == 2);
  CHECK(a2.cover_pairs().empty());

  // {w} + antichain{u,v} is the jir-con order of the seven-element fixture
  Poset wuv = ordinal_sum(antichain({"w"}), a2);
  CHECK(wuv.size() == 3);
  CHECK(wuv.cover_pairs().size() == 2);
  CHECK(wuv.covers(wuv.index("w"), wuv.index("u")));
  CHECK(wuv.covers(wuv.index("w"), wuv.index("v")));

  // id collision gets a deterministic rename
  Poset twice = cardinal_sum(antichain({"u"}), antichain({"u"}));
  CHECK(twice.size() == 2);
  CHECK(twice.has("u'"));
}

TEST_CASE("downsets") {
  Poset wuv = ordinal_sum(antichain({"w"}), cardinal_sum(antichain({"u"}), antichain({"v"})));
  CHECK(wuv.downset_count() == 5);
  CHECK(antichain({"a", "b"}).downset_count() == 4);
  Poset c3 = chain({"a", "b", "c"});
  CHECK(c3.downset_count() == 4);
  CHECK(c3.downset_masks().size() == 4);
}

TEST_CASE("three-antichain detection") {
  CHECK(antichain({"a", "b", "c"}).has_three_antichain());
  CHECK(!antichain({"a", "b"}).has_three_antichain());
  CHECK(!chain({"a", "b", "c"}).has_three_antichain());
}

TEST_CASE("subposet recomputes covers inside the subposet") {
  Poset p = chain({"a", "b", "c"});
  Poset s = p.subposet({p.index("a"), p.index("c")});
  CHECK(s.size() == 2);
  CHECK(s.covers(s.index("a"), s.index("c")));
}
