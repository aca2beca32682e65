#include <doctest.h>

#include "spslab/iso.hpp"
#include "spslab/json_io.hpp"

#include "helpers.hpp"

using namespace spslab;
using namespace spslab::testing;

TEST_CASE("built-in three-pendant three-crown pattern") {
  PatternPoset r3 = three_pendant_three_crown();
  const Poset& p = r3.poset;
  CHECK(p.size() == 9);
  // every element has at most two upper covers
  for (Index i = 0; i < p.size(); ++i) CHECK(p.up_covers(i).size() <= 2);
  // maximal elements are the three crown tops
  auto maxs = p.maximal();
  REQUIRE(maxs.size() == 3);
  for (Index m : maxs) CHECK(p.id(m)[0] == 'a');
  // every pair of crown tops has a common lower cover
  for (size_t i = 0; i < maxs.size(); ++i)
    for (size_t j = i + 1; j < maxs.size(); ++j) {
      bool common = false;
      for (Index w = 0; w < p.size(); ++w)
        if (p.covers(w, maxs[i]) && p.covers(w, maxs[j])) common = true;
      CHECK(common);
    }
  // pendants sit below their own top/bottom pair
  for (int i = 0; i < 3; ++i) {
    Index c = p.index("c" + std::to_string(i));
    CHECK(p.covers(c, p.index("a" + std::to_string(i))));
    CHECK(p.covers(c, p.index("b" + std::to_string(i))));
  }
}

TEST_CASE("shipped four-crown pattern file matches the built-in") {
  PatternPoset file = load_pattern_file(fixture_dir() + "/pattern_r.json");
  PatternPoset builtin = two_pendant_four_crown();
  CHECK(poset_isomorphism(file.poset, builtin.poset).has_value());
  CHECK(file.max_tags.size() == 4);
}

TEST_CASE("embedding search examples") {
  PatternPoset c2("C2", chain({"x", "y"}));
  Poset wuv = ordinal_sum(antichain({"w"}), cardinal_sum(antichain({"u"}), antichain({"v"})));
  auto maps = cover_preserving_embeddings(c2, wuv, false);
  CHECK(maps.size() == 2);

  PatternPoset r3 = three_pendant_three_crown();
  auto self = cover_preserving_embeddings(r3, r3.poset, false);
  CHECK(self.size() == 6); // the symmetric group on the three crown columns
  bool has_identity = false;
  for (const auto& f : self) {
    bool ident = true;
    for (Index i = 0; i < r3.poset.size(); ++i)
      if (f[i] != i) ident = false;
    if (ident) has_identity = true;
  }
  CHECK(has_identity);

  auto none = cover_preserving_embeddings(r3, antichain({"a", "b", "c"}), false);
  CHECK(none.empty());
}

TEST_CASE("embedding search agrees with brute force") {
  PatternPoset r3 = three_pendant_three_crown();
  for (unsigned seed = 1; seed <= 8; ++seed) {
    Poset host = random_poset(9 + seed % 2, seed * 17);
    auto fast = cover_preserving_embeddings(r3, host, false);
    auto slow = brute_force_embeddings(r3.poset, host, {});
    CHECK(fast == slow);
  }
  PatternPoset c2("C2", chain({"x", "y"}));
  for (unsigned seed = 1; seed <= 8; ++seed) {
    Poset host = random_poset(6, seed * 31);
    CHECK(cover_preserving_embeddings(c2, host, false) ==
          brute_force_embeddings(c2.poset, host, {}));
  }
}

TEST_CASE("constrained embeddings respect maximal tags") {
  // pattern: one tagged maximal over one minimal
  PatternPoset tagged("T", chain({"x", "y"}), {"y"});
  Poset host = chain({"a", "b", "c"});
  auto all = cover_preserving_embeddings(tagged, host, false);
  CHECK(all.size() == 2);
  auto constrained = cover_preserving_embeddings(tagged, host, true);
  REQUIRE(constrained.size() == 1);
  CHECK(host.id(constrained[0][tagged.poset.index("y")]) == "c");
}

TEST_CASE("prior necessary conditions on fixtures") {
  Poset j7 = jir_con_poset(s7());
  for (const auto& v : check_thm3(j7)) CHECK(v.pass);
  for (const auto& v : check_thm4(j7, two_pendant_four_crown())) CHECK(v.pass);

  // a one-element order fails the two-maximal condition
  auto verdicts = check_thm3(antichain({"x"}));
  CHECK(!verdicts[0].pass);

  // an element with three covers fails the cover bound
  Poset wide({"u", "x", "y", "z"}, {{"u", "x"}, {"u", "y"}, {"u", "z"}});
  CHECK(!check_thm3(wide)[1].pass);
}

TEST_CASE("max two-coloring fails on the crown triangle") {
  PatternPoset r3 = three_pendant_three_crown();
  Poset host = jir_poset(downset_lattice(r3.poset));
  auto verdicts = check_thm4(host, two_pendant_four_crown());
  CHECK(!verdicts[0].pass); // the three tops conflict pairwise
}

TEST_CASE("diamond-under-maximal positive control") {
  Poset diamond({"u", "x", "y", "z"},
                {{"u", "x"}, {"u", "y"}, {"x", "z"}, {"y", "z"}});
  auto verdicts = check_thm4(diamond, two_pendant_four_crown());
  bool found = false;
  for (const auto& v : verdicts)
    if (v.check.find("(iv)") != std::string::npos) {
      CHECK(!v.pass);
      CHECK(!v.witness.empty());
      found = true;
    }
  CHECK(found);
}

TEST_CASE("three-pendant three-crown checker") {
  CHECK(check_3p3c(jir_con_poset(s7())).pass);

  PatternPoset r3 = three_pendant_three_crown();
  Poset self = jir_poset(downset_lattice(r3.poset));
  Verdict v = check_3p3c(self);
  CHECK(!v.pass);
  CHECK(!v.witness.empty()); // explicit embedding

  // deleting one crown cover destroys every embedding
  CoverList pruned;
  for (auto [a, b] : r3.poset.cover_pairs_ids())
    if (!(a == "b0" && b == "a1")) pruned.push_back({a, b});
  Poset host(r3.poset.ids(), pruned);
  CHECK(check_3p3c(host).pass);
}

TEST_CASE("patch characterization") {
  PatchReport s7rep = patch_characterize(s7());
  CHECK(s7rep.patch);
  CHECK(s7rep.max_jir == 2);
  CHECK(s7rep.top_boolean_split);
  CHECK(s7rep.d0_jir.size() == 1); // D0 = C2

  PatchReport grep = patch_characterize(grid(2, 2).lattice());
  CHECK(!grep.patch);
  CHECK(grep.max_jir == 4);

  RectDiagram L = theorem2_L({s7()});
  CHECK(patch_characterize(L.lattice(), &L).patch);
}

TEST_CASE("boolean-top split report for patch lattices") {
  auto verdicts = corollary62_report(s7());
  for (const auto& v : verdicts) CHECK(v.pass);
  CHECK(verdicts[0].witness.find("2 elements") != std::string::npos); // D0 = C2

  // grid input is rejected: not a patch lattice
  CHECK_THROWS_AS(corollary62_report(grid(2, 2).lattice()), Error);
}

TEST_CASE("boolean-top split on the constructed patch over the seven-element fixture") {
  // regression values from the first verified run: D0 is Con(S7) with a new
  // top (6 elements), its jir order has a single maximal element, and all
  // four inherited conditions pass
  RectDiagram L = theorem2_L({s7()});
  auto verdicts = corollary62_report(L.lattice());
  REQUIRE(verdicts.size() == 4);
  for (const auto& v : verdicts) CHECK(v.pass);
  CHECK(verdicts[0].witness.find("6 elements") != std::string::npos);

  PatchReport rep = patch_characterize(L.lattice(), &L);
  CHECK(rep.d0_jir.size() == 4);
  Poset jir = jir_con_poset(L.lattice());
  std::vector<Index> d0;
  for (const auto& id : rep.d0_jir) d0.push_back(jir.index(id));
  CHECK(jir.subposet(d0).maximal().size() == 1);
}
