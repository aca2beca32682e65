#include <doctest.h>

#include "helpers.hpp"

using namespace spslab;
using namespace spslab::testing;

TEST_CASE("corner recognition") {
  Lattice b2 = Lattice::validate(
      Poset({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
  Corners c = recognize_rectangular(b2);
  CHECK(b2.id(c.cl) == "a"); // lexicographically smaller lower chain goes left
  CHECK(b2.id(c.cr) == "b");

  Lattice L = s7();
  Corners c7 = recognize_rectangular(L);
  CHECK(L.id(c7.cl) == "a");
  CHECK(L.id(c7.cr) == "b");
  CHECK(c7.lower_left.size() == 3);

  CHECK_THROWS_AS(recognize_rectangular(chain_lattice(3)), Error);
  try {
    recognize_rectangular(chain_lattice(3));
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::NotRectangular);
  }
}

TEST_CASE("join-coordinate layout of the seven-element fixture") {
  RectDiagram d = layout(s7());
  auto at = [&](const std::string& id) { return d.pos(d.index(id)); };
  CHECK(at("0") == Point{0, 0});
  CHECK(at("l") == Point{-1, 1});
  CHECK(at("r") == Point{1, 1});
  CHECK(at("m") == Point{0, 2});
  CHECK(at("a") == Point{-2, 2});
  CHECK(at("b") == Point{2, 2});
  CHECK(at("1") == Point{0, 4});
}

TEST_CASE("layout of B2") {
  RectDiagram d = grid(1, 1);
  CHECK(d.pos(d.lattice().bottom()) == Point{0, 0});
  CHECK(d.pos(d.lattice().top()) == Point{0, 2});
  CHECK(d.pos(d.corners().cl).x == -1);
  CHECK(d.pos(d.corners().cr).x == 1);
}

TEST_CASE("edge slope classification") {
  RectDiagram d = layout(s7());
  CHECK(d.classify_edge(d.index("m"), d.index("1")) == Slope::Steep);
  CHECK(d.classify_edge(d.index("a"), d.index("1")) == Slope::Normal);
  CHECK(d.classify_edge(d.index("0"), d.index("l")) == Slope::Normal);

  RectDiagram g = grid(2, 3);
  for (auto [a, b] : g.lattice().poset().cover_pairs())
    CHECK(g.classify_edge(a, b) == Slope::Normal);
}

TEST_CASE("validate_c1 passes on constructed diagrams") {
  CHECK(layout(s7()).validate_c1().ok());
  CHECK(grid(2, 3).validate_c1().ok());
  CHECK(s_lattice(3).validate_c1().ok());
}

TEST_CASE("a perturbed diagram is rejected with slope violations") {
  RectDiagram good = layout(s7());
  std::vector<Point> pos;
  for (Index i = 0; i < good.size(); ++i) pos.push_back(good.pos(i));
  pos[good.index("m")] = Point{1, 2}; // slide m one unit right
  RectDiagram bad = RectDiagram::make_unchecked(good.lattice(), good.corners(), pos);
  C1Report rep = bad.validate_c1();
  CHECK(!rep.ok());
  bool slope_at_rm = false, comparability_hit = false;
  for (const auto& v : rep.violations) {
    if (v.what == "slope" && v.detail.find("(r,m)") != std::string::npos) slope_at_rm = true;
    if (v.what == "comparability") comparability_hit = true;
  }
  CHECK(slope_at_rm);
  CHECK(comparability_hit);
}

TEST_CASE("comparability-geometry law holds on fixtures") {
  for (const RectDiagram& d : {layout(s7()), grid(2, 2), s_lattice(2)}) {
    const Lattice& L = d.lattice();
    for (Index u = 0; u < L.size(); ++u)
      for (Index v = 0; v < L.size(); ++v) {
        if (u == v) continue;
        bool dominance = d.lambda(v) <= d.lambda(u) && d.mu(u) <= d.mu(v);
        CHECK(L.lt(u, v) == (dominance && !(d.lambda(v) == d.lambda(u) && d.mu(u) == d.mu(v))));
      }
  }
}

TEST_CASE("cells") {
  RectDiagram b2 = grid(1, 1);
  auto cells = b2.cells();
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].distributive);

  RectDiagram d = layout(s7());
  auto c7 = d.cells();
  REQUIRE(c7.size() == 3);
  int distributive = 0;
  for (const auto& cell : c7) {
    if (cell.distributive) {
      ++distributive;
      CHECK(d.id(cell.top) == "m"); // only the bottom square is distributive
    }
  }
  CHECK(distributive == 1);

  CHECK(grid(2, 2).cells().size() == 4);
  for (const auto& cell : grid(2, 2).cells()) CHECK(cell.distributive);
  CHECK(grid(2, 3).cells().size() == 6);
  CHECK(grid(2, 3).lattice().size() == 12);
}

TEST_CASE("light coordinate boundaries") {
  RectDiagram d = s_lattice(2);
  for (Index i : d.corners().lower_left) CHECK(d.mu(i) == 0);
  for (Index i : d.corners().lower_right) CHECK(d.lambda(i) == 0);
  long long lam_min = -2LL * d.left_len();
  long long mu_max = 2LL * d.right_len();
  for (Index i = 0; i < d.size(); ++i) {
    CHECK(d.lambda(i) >= lam_min);
    CHECK(d.lambda(i) <= 0);
    CHECK(d.mu(i) >= 0);
    CHECK(d.mu(i) <= mu_max);
  }
}
