#include <doctest.h>

#include "spslab/corpus.hpp"
#include "spslab/iso.hpp"

#include "helpers.hpp"

using namespace spslab;
using namespace spslab::testing;

TEST_CASE("corpus contents at small bounds") {
  Corpus c6 = enumerate_corpus(6);
  // only grids fit below seven elements: no internal lamps anywhere
  for (const auto& item : c6.items)
    CHECK(LampSet::compute(item.diagram).internal_count() == 0);

  Corpus c7 = enumerate_corpus(7);
  CHECK(c7.items.size() == c6.items.size() + 1);
  bool has_s7 = false;
  for (const auto& item : c7.items)
    if (lattice_isomorphism(item.diagram.lattice(), s7()).has_value()) has_s7 = true;
  CHECK(has_s7);
}

TEST_CASE("corpus counts are monotone in the size bound") {
  size_t prev = 0;
  for (int bound : {6, 8, 10, 12}) {
    Corpus c = enumerate_corpus(bound);
    CHECK(c.items.size() >= prev);
    prev = c.items.size();
    for (const auto& item : c.items) CHECK(item.diagram.size() <= bound);
  }
}

TEST_CASE("corpus items are pairwise non-isomorphic at bound 12") {
  Corpus c = enumerate_corpus(12);
  for (size_t i = 0; i < c.items.size(); ++i)
    for (size_t j = i + 1; j < c.items.size(); ++j)
      CHECK(!lattice_isomorphism(c.items[i].diagram.lattice(), c.items[j].diagram.lattice())
                 .has_value());
}

TEST_CASE("corpus generator outputs satisfy the closure invariants") {
  Corpus c = enumerate_corpus(12);
  for (const auto& item : c.items) {
    CHECK(item.diagram.lattice().is_semimodular());
    CHECK(item.diagram.lattice().is_slim());
    CHECK(item.diagram.validate_c1().ok());
  }
}

TEST_CASE("verification reports are deterministic and worker-independent") {
  Corpus c = enumerate_corpus(10);
  std::vector<std::string> checks = {"c1", "lamp-iso", "rho-equality", "key-lemma"};
  VerificationReport a = verify_corpus(c, checks, 1);
  VerificationReport b = verify_corpus(c, checks, 2);
  VerificationReport c2 = verify_corpus(c, checks, 2);
  CHECK(a.text() == b.text());
  CHECK(b.text() == c2.text());
  CHECK(a.violations() == 0);
}

TEST_CASE("fault injection: a corrupted diagram is reported with a witness") {
  Corpus c = enumerate_corpus(7);
  // corrupt the seven-element item by sliding one coordinate
  for (auto& item : c.items) {
    if (item.diagram.size() != 7) continue;
    std::vector<Point> pos;
    for (Index i = 0; i < item.diagram.size(); ++i) pos.push_back(item.diagram.pos(i));
    pos[3] = Point{pos[3].x + 1, pos[3].y};
    item.diagram = RectDiagram::make_unchecked(item.diagram.lattice(),
                                               item.diagram.corners(), pos);
  }
  VerificationReport rep = verify_corpus(c, {"c1"}, 1);
  CHECK(rep.violations() > 0);
  bool witnessed = false;
  for (const auto& row : rep.rows)
    if (!row.pass && !row.detail.empty()) witnessed = true;
  CHECK(witnessed);
}
