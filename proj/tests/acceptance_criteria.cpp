// Acceptance suite: one pass/fail line per criterion, exact combinatorial
// checks throughout. Exit status is the number of failing criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "spslab/corpus.hpp"
#include "spslab/iso.hpp"
#include "spslab/json_io.hpp"
#include "spslab/render.hpp"

#include "helpers.hpp"

using namespace spslab;
using namespace spslab::testing;

namespace {

struct Criterion {
  std::string name;
  std::function<std::string()> run; // empty string = pass, otherwise detail
};

const int kCorpusBound = 24;

Corpus& corpus() {
  static Corpus c = enumerate_corpus(kCorpusBound);
  return c;
}

std::vector<Lattice> tuple_pool() {
  return {grid(1, 1).lattice(),
          grid(1, 2).lattice(),
          grid(2, 2).lattice(),
          s7(),
          s_lattice(2).lattice(),
          multifork_insert(grid(2, 2), "2,2", 2).lattice()};
}

std::vector<std::vector<int>> tuples_of(int arity, int pool) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(arity, 0);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == arity) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < pool; ++i) {
      cur[pos] = i;
      rec(pos + 1, i);
    }
  };
  rec(0, 0);
  return out;
}

std::string corpus_check(const std::string& check) {
  VerificationReport rep = verify_corpus(corpus(), {check}, 2);
  if (rep.violations() == 0)
    return "";
  std::ostringstream os;
  os << rep.violations() << " violations; first: ";
  for (const auto& row : rep.rows)
    if (!row.pass) {
      os << row.item << " " << row.detail;
      break;
    }
  return os.str();
}

} // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"1 lamp isomorphism oracle on the full corpus", [] {
    return corpus_check("lamp-iso");
  }});

  criteria.push_back({"2 rho_geom = rho_foot = rho_infoot = rho_alg corpus-wide", [] {
    return corpus_check("rho-equality");
  }});

  criteria.push_back({"3 key lemma: common lower cover forces left-of", [] {
    return corpus_check("key-lemma");
  }});

  criteria.push_back({"4 three-pendant three-crown property + negative control", [] {
    std::string bad = corpus_check("3p3c");
    if (!bad.empty()) return "corpus: " + bad;
    Poset host = jir_poset(downset_lattice(three_pendant_three_crown().poset));
    Verdict v = check_3p3c(host);
    if (v.pass) return std::string("negative control failed to fail");
    if (v.witness.empty()) return std::string("negative control lacks a witness embedding");
    return std::string();
  }});

  criteria.push_back({"5 prior necessary conditions (thm3 i-ii, thm4 i-iv)", [] {
    std::string a = corpus_check("thm3");
    if (!a.empty()) return "thm3: " + a;
    std::string b = corpus_check("thm4");
    if (!b.empty()) return "thm4: " + b;
    return std::string();
  }});

  criteria.push_back({"6 glued sums multiply congruence lattices (pairs and triples)", [] {
    auto pool = tuple_pool();
    // the pinned example first
    Lattice b2b2 = theorem2_H({pool[0], pool[0]});
    if (con_size(b2b2) != 16) return std::string("|Con(B2 glued B2)| != 16");
    {
      ConLattice left = con_lattice(b2b2);
      Lattice right = product(con_lattice(pool[0]).lattice, con_lattice(pool[0]).lattice);
      if (!lattice_isomorphism(left.lattice, right).has_value())
        return std::string("direct isomorphism failed for the B2 pair");
    }
    for (int arity : {2, 3}) {
      for (const auto& tuple : tuples_of(arity, static_cast<int>(pool.size()))) {
        std::vector<Lattice> parts;
        for (int i : tuple) parts.push_back(pool[i]);
        Lattice H = theorem2_H(parts); // construction verifies the jir factorization
        long long expect = 1;
        for (const auto& p : parts) expect *= con_size(p);
        if (con_size(H) != expect) {
          std::ostringstream os;
          os << "size mismatch on tuple arity " << arity;
          return os.str();
        }
        if (expect <= 1024) {
          ConLattice left = con_lattice(H);
          Lattice right = con_lattice(parts[0]).lattice;
          for (size_t i = 1; i < parts.size(); ++i)
            right = product(right, con_lattice(parts[i]).lattice);
          if (!lattice_isomorphism(left.lattice, right).has_value())
            return std::string("direct congruence isomorphism failed");
        }
      }
    }
    return std::string();
  }});

  criteria.push_back({"7 patch construction stacks a Boolean block on the product", [] {
    auto pool = tuple_pool();
    if (con_size(theorem2_L({pool[3]}).lattice()) != 9)
      return std::string("|Con L| != 9 for the seven-element input");
    for (int arity : {2, 3}) {
      for (const auto& tuple : tuples_of(arity, static_cast<int>(pool.size()))) {
        std::vector<Lattice> parts;
        for (int i : tuple) parts.push_back(pool[i]);
        RectDiagram L = theorem2_L(parts); // asserts the jir structure internally
        Poset expect = jir_con_poset(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i)
          expect = cardinal_sum(expect, jir_con_poset(parts[i]));
        expect = ordinal_sum(expect, Poset({"U", "V", "W"}, {{"W", "U"}, {"W", "V"}}));
        if (!poset_isomorphism(jir_con_poset(L.lattice()), expect).has_value())
          return std::string("jir structure mismatch");
        long long product_size = 1;
        for (const auto& p : parts) product_size *= con_size(p);
        if (con_size(L.lattice()) != product_size + 4)
          return std::string("congruence count mismatch");
      }
    }
    return std::string();
  }});

  criteria.push_back({"8 fixture pins: seven-element lattice, figure census, grids", [] {
    Lattice L = load_lattice_file(fixture_dir() + "/s7.json").lattice;
    if (L.size() != 7) return std::string("fixture size");
    if (!lattice_isomorphism(L, s7()).has_value()) return std::string("fixture shape");
    if (!patch_characterize(L).patch) return std::string("fixture not a patch lattice");
    if (con_size(L) != 5) return std::string("fixture |Con| != 5");
    Poset wuv = ordinal_sum(antichain({"w"}), cardinal_sum(antichain({"u"}), antichain({"v"})));
    if (!poset_isomorphism(jir_con_poset(L), wuv).has_value())
      return std::string("fixture jir order");

    RectDiagram fig = layout(load_lattice_file(fixture_dir() + "/figure2.json").lattice);
    LampSet ls = LampSet::compute(fig);
    int left = 0, right = 0, internal = 0;
    for (const auto& lamp : ls.lamps()) {
      if (lamp.kind == LampKind::LeftBoundary) ++left;
      if (lamp.kind == LampKind::RightBoundary) ++right;
      if (lamp.kind == LampKind::Internal) ++internal;
    }
    if (ls.count() != 16 || left != 5 || right != 6 || internal != 5)
      return std::string("figure census mismatch");

    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n)
        if (con_size(grid(m, n).lattice()) != (1LL << (m + n)))
          return std::string("grid congruence count");
    return std::string();
  }});

  criteria.push_back({"9 decomposition replay round trip on the full corpus", [] {
    return corpus_check("roundtrip");
  }});

  criteria.push_back({"10 diagram contracts and shield invariant corpus-wide", [] {
    std::string a = corpus_check("c1");
    if (!a.empty()) return "c1: " + a;
    std::string b = corpus_check("shields");
    if (!b.empty()) return "shields: " + b;
    return std::string();
  }});

  criteria.push_back({"11 micro-scale oracle equivalences", [] {
    for (const Lattice& L : {chain_lattice(2), chain_lattice(4), s7(), n5(), m3(),
                             grid(1, 2).lattice(), b3()}) {
      if (L.size() > 8) return std::string("oracle lattice too big");
      auto expected = brute_force_congruence_keys(L);
      ConLattice con = con_lattice(L);
      std::vector<std::string> got;
      for (const auto& c : con.congruences) got.push_back(c.key());
      std::sort(got.begin(), got.end());
      if (got != expected) return std::string("congruence enumeration mismatch");
    }
    PatternPoset r3 = three_pendant_three_crown();
    for (unsigned seed = 2; seed <= 10; seed += 2) {
      Poset host = random_poset(10, seed * 7);
      if (cover_preserving_embeddings(r3, host, false) !=
          brute_force_embeddings(r3.poset, host, {}))
        return std::string("embedding enumeration mismatch");
      PatternPoset c2("C2", chain({"x", "y"}));
      if (cover_preserving_embeddings(c2, host, false) !=
          brute_force_embeddings(c2.poset, host, {}))
        return std::string("chain embedding mismatch");
    }
    return std::string();
  }});

  int failures = 0;
  std::cout << "corpus bound: " << kCorpusBound << " elements, " << corpus().items.size()
            << " lattices\n";
  for (auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criterion.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    bool pass = detail.empty();
    failures += pass ? 0 : 1;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.name << " ("
              << ms << " ms)" << (pass ? "" : "  -- " + detail) << "\n";
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures;
}
