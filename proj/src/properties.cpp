#include "spslab/properties.hpp"

#include <algorithm>
#include <sstream>

#include "spslab/lamps.hpp"

namespace spslab {

PatternPoset three_pendant_three_crown() {
  std::vector<std::string> ids;
  CoverList covers;
  for (int i = 0; i < 3; ++i) {
    std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i),
                c = "c" + std::to_string(i);
    ids.insert(ids.end(), {a, b, c});
    covers.push_back({c, a});
    covers.push_back({c, b});
    for (int j = 0; j < 3; ++j)
      if (j != i) covers.push_back({b, "a" + std::to_string(j)});
  }
  return PatternPoset("R3", Poset(ids, covers));
}

PatternPoset two_pendant_four_crown() {
  std::vector<std::string> ids;
  CoverList covers;
  for (int i = 0; i < 4; ++i) {
    std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    ids.insert(ids.end(), {a, b});
    for (int j = 0; j < 4; ++j)
      if (j != i) covers.push_back({b, "a" + std::to_string(j)});
  }
  for (int i = 0; i < 2; ++i) {
    std::string c = "c" + std::to_string(i);
    ids.push_back(c);
    covers.push_back({c, "a" + std::to_string(i)});
    covers.push_back({c, "b" + std::to_string(i)});
  }
  return PatternPoset("R", Poset(ids, covers), {"a0", "a1", "a2", "a3"});
}

namespace {

struct EmbedSearch {
  const Poset& p;
  const Poset& h;
  std::vector<char> must_max;
  std::vector<char> host_max;
  std::vector<Index> order; // pattern elements, most constrained first
  std::vector<Index> map, inv;
  std::vector<std::vector<Index>>* out;
  std::size_t limit;

  bool feasible(Index v, Index w) const {
    if (must_max[v] && !host_max[w]) return false;
    if (p.up_covers(v).size() > h.up_covers(w).size()) return false;
    if (p.down_covers(v).size() > h.down_covers(w).size()) return false;
    for (Index u : order) {
      if (map[u] == -1) continue;
      if (u == v) continue;
      if (p.leq(u, v) != h.leq(map[u], w)) return false;
      if (p.leq(v, u) != h.leq(w, map[u])) return false;
      if (p.covers(u, v) && !h.covers(map[u], w)) return false;
      if (p.covers(v, u) && !h.covers(w, map[u])) return false;
    }
    return true;
  }

  bool dfs(std::size_t depth) {
    if (depth == order.size()) {
      out->push_back(map);
      return limit != 0 && out->size() >= limit;
    }
    Index v = order[depth];
    for (Index w = 0; w < h.size(); ++w) {
      if (inv[w] != -1 || !feasible(v, w)) continue;
      map[v] = w;
      inv[w] = v;
      if (dfs(depth + 1)) return true;
      map[v] = -1;
      inv[w] = -1;
    }
    return false;
  }
};

bool verify_embedding(const Poset& p, const Poset& h, const std::vector<Index>& f) {
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y) {
      if (x != y && f[x] == f[y]) return false;
      if (p.leq(x, y) != h.leq(f[x], f[y])) return false;
      if (p.covers(x, y) && !h.covers(f[x], f[y])) return false;
    }
  return true;
}

} // namespace

std::vector<std::vector<Index>> cover_preserving_embeddings(const PatternPoset& pattern,
                                                            const Poset& host,
                                                            bool constrain_max,
                                                            std::size_t limit) {
  const Poset& p = pattern.poset;
  std::vector<std::vector<Index>> out;
  if (p.size() > host.size()) return out;

  EmbedSearch s{p, host, {}, {}, {}, {}, {}, &out, limit};
  s.must_max.assign(p.size(), 0);
  if (constrain_max)
    for (const auto& id : pattern.max_tags) s.must_max[p.index(id)] = 1;
  s.host_max.assign(host.size(), 0);
  for (Index m : host.maximal()) s.host_max[m] = 1;
  s.order.resize(p.size());
  for (Index i = 0; i < p.size(); ++i) s.order[i] = i;
  std::sort(s.order.begin(), s.order.end(), [&](Index a, Index b) {
    auto key = [&](Index v) {
      return std::make_tuple(-static_cast<int>(p.up_covers(v).size() + p.down_covers(v).size()),
                             -p.height(v), p.id(v));
    };
    return key(a) < key(b);
  });
  s.map.assign(p.size(), -1);
  s.inv.assign(host.size(), -1);
  s.dfs(0);

  for (const auto& f : out)
    require(verify_embedding(p, host, f), ErrorKind::Internal, "embedding failed re-verification");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Verdict> check_thm3(const Poset& jir) {
  std::vector<Verdict> out;
  auto maxs = jir.maximal();
  out.push_back({"thm3(i):two-maximal", maxs.size() >= 2,
                 maxs.size() >= 2 ? "" : "only " + std::to_string(maxs.size()) + " maximal"});
  Verdict two{"thm3(ii):at-most-two-covers", true, ""};
  for (Index x = 0; x < jir.size(); ++x)
    if (jir.up_covers(x).size() > 2) {
      two.pass = false;
      two.witness = jir.id(x) + " has " + std::to_string(jir.up_covers(x).size()) + " covers";
      break;
    }
  out.push_back(two);
  return out;
}

namespace {
// two-coloring of the conflict graph on Max(jir): edge iff a common lower cover
bool bipartite_split(const Poset& jir, std::string* witness) {
  auto maxs = jir.maximal();
  const int m = static_cast<int>(maxs.size());
  if (m < 2) {
    *witness = "fewer than two maximal elements";
    return false;
  }
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool conflict = false;
      for (Index w = 0; w < jir.size() && !conflict; ++w)
        if (jir.covers(w, maxs[i]) && jir.covers(w, maxs[j])) conflict = true;
      if (conflict) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  std::vector<int> color(m, -1);
  for (int s = 0; s < m; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          *witness = "odd conflict cycle through " + jir.id(maxs[v]) + " and " + jir.id(maxs[w]);
          return false;
        }
      }
    }
  }
  return true; // both classes can be made nonempty whenever m >= 2
}
} // namespace

std::vector<Verdict> check_thm4(const Poset& jir, const PatternPoset& crown4) {
  std::vector<Verdict> out;

  std::string w1;
  bool p1 = bipartite_split(jir, &w1);
  out.push_back({"thm4(i):max-two-coloring", p1, w1});

  auto embeds = cover_preserving_embeddings(crown4, jir, true, 1);
  std::string w2;
  if (!embeds.empty()) {
    std::ostringstream os;
    for (Index x = 0; x < crown4.poset.size(); ++x)
      os << crown4.poset.id(x) << "->" << jir.id(embeds[0][x]) << " ";
    w2 = os.str();
  }
  out.push_back({"thm4(ii):no-constrained-" + crown4.name, embeds.empty(), w2});

  Verdict v3{"thm4(iii):no-sole-maximal-cover", true, ""};
  for (Index x = 0; x < jir.size() && v3.pass; ++x) {
    const auto& ups = jir.up_covers(x);
    if (ups.size() != 1) continue;
    if (jir.up_covers(ups[0]).empty()) {
      v3.pass = false;
      v3.witness = jir.id(ups[0]) + " is the only cover of " + jir.id(x);
    }
  }
  out.push_back(v3);

  Verdict v4{"thm4(iv):no-diamond-under-maximal", true, ""};
  for (Index z = 0; z < jir.size() && v4.pass; ++z) {
    if (!jir.up_covers(z).empty()) continue; // z maximal
    const auto& xs = jir.down_covers(z);
    for (size_t i = 0; i < xs.size() && v4.pass; ++i)
      for (size_t j = i + 1; j < xs.size() && v4.pass; ++j)
        for (Index u = 0; u < jir.size(); ++u)
          if (jir.covers(u, xs[i]) && jir.covers(u, xs[j])) {
            v4.pass = false;
            v4.witness = "(" + jir.id(u) + "," + jir.id(xs[i]) + "," + jir.id(xs[j]) + "," +
                         jir.id(z) + ")";
            break;
          }
  }
  out.push_back(v4);
  return out;
}

Verdict check_3p3c(const Poset& jir) {
  PatternPoset r3 = three_pendant_three_crown();
  auto embeds = cover_preserving_embeddings(r3, jir, false, 1);
  if (embeds.empty()) return {"3p3c", true, ""};
  std::ostringstream os;
  for (Index x = 0; x < r3.poset.size(); ++x)
    os << r3.poset.id(x) << "->" << jir.id(embeds[0][x]) << " ";
  return {"3p3c", false, os.str()};
}

PatchReport patch_characterize(const Lattice& L, const RectDiagram* d) {
  PatchReport rep;
  RectDiagram local = d ? *d : layout(L);
  const Corners& c = local.corners();
  rep.patch = L.covers(c.cl, L.top()) && L.covers(c.cr, L.top());

  JirCongruences jir = jir_congruences(L);
  rep.max_jir = static_cast<int>(jir.poset.maximal().size());

  // D0 with Con L = D0 glued under a Boolean top block exists iff Con L has
  // exactly two coatoms whose meet z bounds everything below the top
  {
    std::vector<int> coatoms;
    const int m = static_cast<int>(jir.cons.size());
    // work on Jir(Con L): the two coatoms of Con L correspond to the two
    // maximal jir congruences precisely in the patch case; do it directly
    // from the downset structure instead
    auto masks = jir.poset.downset_masks();
    uint64_t full = masks.back();
    std::vector<uint64_t> co;
    for (uint64_t s : masks)
      if (s != full && __builtin_popcountll(s) == __builtin_popcountll(full) - 1)
        co.push_back(s);
    if (co.size() == 2) {
      uint64_t z = co[0] & co[1];
      bool z_present = std::find(masks.begin(), masks.end(), z) != masks.end();
      bool boxed = true;
      for (uint64_t s : masks)
        if (s != full && s != co[0] && s != co[1] && (s & ~z) != 0) boxed = false;
      rep.top_boolean_split = z_present && boxed;
      if (rep.top_boolean_split)
        for (int i = 0; i < m; ++i)
          if ((z >> i) & 1u) rep.d0_jir.push_back(jir.poset.id(i));
    }
    (void)coatoms;
  }

  bool agree = (rep.patch == (rep.max_jir == 2)) && (rep.patch == rep.top_boolean_split);
  require(agree, ErrorKind::EquivalenceViolation,
          "patch characterizations disagree: corners=" + std::to_string(rep.patch) +
              " maxjir=" + std::to_string(rep.max_jir) +
              " split=" + std::to_string(rep.top_boolean_split));
  rep.verdicts.push_back({"patch:corners-coatoms", rep.patch, ""});
  rep.verdicts.push_back({"patch:two-maximal-jir", rep.max_jir == 2,
                          "max count " + std::to_string(rep.max_jir)});
  rep.verdicts.push_back({"patch:boolean-top-split", rep.top_boolean_split, ""});
  return rep;
}

std::vector<Verdict> corollary62_report(const Lattice& L) {
  PatchReport pr = patch_characterize(L);
  require(pr.patch, ErrorKind::InvalidInput, "not a patch lattice");

  JirCongruences jir = jir_congruences(L);
  std::vector<Index> d0_elems;
  for (const auto& id : pr.d0_jir) d0_elems.push_back(jir.poset.index(id));
  Poset d0_jir = jir.poset.subposet(d0_elems);

  std::vector<Verdict> out;
  out.push_back({"cor62(i):unique-d0", true,
                 "d0 has " + std::to_string(d0_jir.downset_count()) + " elements"});

  Verdict two{"cor62(ii):at-most-two-covers", true, ""};
  for (Index x = 0; x < d0_jir.size(); ++x)
    if (d0_jir.up_covers(x).size() > 2) {
      two.pass = false;
      two.witness = d0_jir.id(x);
    }
  out.push_back(two);

  Verdict nolc{"cor62(iii):maximal-no-common-lower-cover", true, ""};
  auto maxs = d0_jir.maximal();
  for (size_t i = 0; i < maxs.size() && nolc.pass; ++i)
    for (size_t j = i + 1; j < maxs.size() && nolc.pass; ++j)
      for (Index w = 0; w < d0_jir.size(); ++w)
        if (d0_jir.covers(w, maxs[i]) && d0_jir.covers(w, maxs[j])) {
          nolc.pass = false;
          nolc.witness = "(" + d0_jir.id(maxs[i]) + "," + d0_jir.id(maxs[j]) + ") share " +
                         d0_jir.id(w);
        }
  out.push_back(nolc);

  Verdict pc = check_3p3c(d0_jir);
  pc.check = "cor62(iv):3p3c-on-d0";
  out.push_back(pc);
  return out;
}

} // namespace spslab
