#include <doctest.h>

#include "spslab/iso.hpp"

#include "helpers.hpp"

using namespace spslab;
using namespace spslab::testing;

namespace {
std::vector<std::vector<std::string>> blocks_of(const Lattice& L, const Congruence& c) {
  std::vector<std::vector<std::string>> out;
  for (const auto& block : c.blocks()) {
    std::vector<std::string> ids;
    for (Index e : block) ids.push_back(L.id(e));
    std::sort(ids.begin(), ids.end());
    out.push_back(ids);
  }
  std::sort(out.begin(), out.end());
  return out;
}
} // namespace

TEST_CASE("principal congruences on chains and B2") {
  Lattice c3 = chain_lattice(3); // c0 < c1 < c2
  Congruence con = principal_congruence(c3, c3.index("c0"), c3.index("c1"));
  CHECK(con.block_count() == 2);
  CHECK(con.same(c3.index("c0"), c3.index("c1")));
  CHECK(!con.same(c3.index("c1"), c3.index("c2")));

  Lattice b2 = Lattice::validate(
      Poset({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
  Congruence cb = principal_congruence(b2, b2.index("0"), b2.index("a"));
  CHECK(blocks_of(b2, cb) ==
        std::vector<std::vector<std::string>>{{"0", "a"}, {"1", "b"}});
}

TEST_CASE("principal congruence con(m,1) on the seven-element fixture") {
  Lattice L = s7();
  Congruence c = principal_congruence(L, L.index("m"), L.index("1"));
  CHECK(c.block_count() == 4);
  CHECK(blocks_of(L, c) ==
        std::vector<std::vector<std::string>>{{"0"}, {"1", "m"}, {"a", "l"}, {"b", "r"}});
  CHECK(is_congruence(L, c));
}

TEST_CASE("con lattice sizes") {
  CHECK(con_size(chain_lattice(1)) == 1); // a single element has only the identity
  CHECK(con_size(chain_lattice(2)) == 2);
  CHECK(con_size(s7()) == 5);
  // cross-check: |Con S7| equals the downset count of {w < u, w < v}
  Poset wuv = ordinal_sum(antichain({"w"}), cardinal_sum(antichain({"u"}), antichain({"v"})));
  CHECK(con_size(s7()) == wuv.downset_count());

  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      CHECK(con_size(grid(m, n).lattice()) == (1LL << (m + n)));
}

TEST_CASE("jir con poset examples") {
  Poset j3 = jir_con_poset(chain_lattice(3));
  CHECK(j3.size() == 2);
  CHECK(j3.cover_pairs().empty());

  Poset j7 = jir_con_poset(s7());
  CHECK(j7.size() == 3);
  CHECK(j7.maximal().size() == 2);
  CHECK(j7.minimal().size() == 1);
  // the bottom congruence is covered by both maximal ones
  Index w = j7.minimal()[0];
  for (Index m : j7.maximal()) CHECK(j7.covers(w, m));

  Poset j22 = jir_con_poset(grid(2, 2).lattice());
  CHECK(j22.size() == 4);
  CHECK(j22.cover_pairs().empty());
}

TEST_CASE("materialized congruence lattice agrees with the jir route") {
  for (const Lattice& L : {s7(), grid(1, 2).lattice(), grid(2, 2).lattice(), n5(), m3()}) {
    ConLattice con = con_lattice(L);
    CHECK(con.lattice.is_distributive());
    CHECK(static_cast<long long>(con.lattice.size()) == con_size(L));
    CHECK(poset_isomorphism(jir_poset(con.lattice), jir_con_poset(L)).has_value());
  }
}

TEST_CASE("brute-force oracle equivalence for small lattices") {
  for (const Lattice& L :
       {chain_lattice(2), chain_lattice(4), s7(), n5(), m3(), grid(1, 2).lattice(), b3()}) {
    REQUIRE(L.size() <= 8);
    auto expected = brute_force_congruence_keys(L);
    ConLattice con = con_lattice(L);
    std::vector<std::string> got;
    for (const auto& c : con.congruences) got.push_back(c.key());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("every join-irreducible congruence is principal for an edge") {
  for (const Lattice& L : {s7(), grid(2, 2).lattice(), s_lattice(2).lattice()}) {
    JirCongruences jir = jir_congruences(L);
    for (size_t k = 0; k < jir.cons.size(); ++k) {
      auto [a, b] = jir.edges[k];
      CHECK(principal_congruence(L, a, b) == jir.cons[k]);
      CHECK(L.covers(a, b));
    }
    // surjectivity: the set of edge congruences join-generates everything
    CHECK(static_cast<long long>(jir.poset.downset_count()) == con_size(L));
  }
}

TEST_CASE("monotonicity: an edge inside a block forces its principal below") {
  Lattice L = s7();
  ConLattice con = con_lattice(L);
  for (int t = 0; t < con.lattice.size(); ++t) {
    const Congruence& theta = con.congruences[t];
    for (auto [a, b] : L.poset().cover_pairs())
      if (theta.same(a, b)) CHECK(principal_congruence(L, a, b).leq(theta));
  }
}

TEST_CASE("congruence blocks are convex sublattices") {
  for (const Lattice& L : {s7(), s_lattice(2).lattice(), grid(2, 2).lattice()}) {
    ConLattice con = con_lattice(L);
    for (const auto& theta : con.congruences)
      for (const auto& block : theta.blocks()) {
        for (Index x : block)
          for (Index y : block) {
            CHECK(theta.same(L.meet(x, y), x) == theta.same(L.meet(x, y), y));
            CHECK(theta.same(x, L.meet(x, y)));
            CHECK(theta.same(x, L.join(x, y)));
            // convexity: everything between two block members joins in
            for (Index z = 0; z < L.size(); ++z)
              if (L.leq(x, z) && L.leq(z, y)) CHECK(theta.same(x, z));
          }
      }
  }
}

TEST_CASE("con(a,b) equals the join of edge congruences along a maximal chain") {
  Lattice L = s_lattice(2).lattice();
  for (Index a = 0; a < L.size(); ++a)
    for (Index b = 0; b < L.size(); ++b) {
      if (!L.lt(a, b)) continue;
      // walk any maximal chain from a to b
      Congruence acc = Congruence::identity(L.size());
      Index cur = a;
      while (cur != b) {
        Index next = -1;
        for (Index u : L.poset().up_covers(cur))
          if (L.leq(u, b)) {
            next = u;
            break;
          }
        REQUIRE(next != -1);
        acc = acc.joined(principal_congruence(L, cur, next));
        cur = next;
      }
      CHECK(acc == principal_congruence(L, a, b));
    }
}
