#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "spslab/congruence.hpp"
#include "spslab/constructions.hpp"
#include "spslab/json_io.hpp"

namespace spslab::testing {

inline Lattice s7() {
  return Lattice::validate(Poset({"0", "l", "r", "m", "a", "b", "1"},
                                 {{"0", "l"},
                                  {"0", "r"},
                                  {"l", "m"},
                                  {"r", "m"},
                                  {"l", "a"},
                                  {"r", "b"},
                                  {"m", "1"},
                                  {"a", "1"},
                                  {"b", "1"}}));
}

inline Lattice n5() {
  return Lattice::validate(Poset(
      {"0", "a", "c", "b", "1"},
      {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}}));
}

inline Lattice m3() {
  return Lattice::validate(Poset(
      {"0", "x", "y", "z", "1"},
      {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}}));
}

inline Lattice chain_lattice(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i));
  return Lattice::validate(chain(ids));
}

inline Lattice b3() { return product(product(chain_lattice(2), chain_lattice(2)), chain_lattice(2)); }

// Independent oracle: every pair has a unique least upper / greatest lower
// bound, computed directly from the reachability relation.
inline bool brute_force_is_lattice(const Poset& p) {
  const int n = p.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      for (bool upper : {true, false}) {
        std::vector<Index> bounds;
        for (Index z = 0; z < n; ++z)
          if (upper ? (p.leq(a, z) && p.leq(b, z)) : (p.leq(z, a) && p.leq(z, b)))
            bounds.push_back(z);
        int extremal = 0;
        Index cand = -1;
        for (Index z : bounds) {
          bool ok = true;
          for (Index w : bounds)
            if (upper ? p.lt(w, z) : p.lt(z, w)) ok = false;
          if (ok) {
            ++extremal;
            cand = z;
          }
        }
        if (extremal != 1) return false;
        for (Index z : bounds)
          if (!(upper ? p.leq(cand, z) : p.leq(z, cand))) return false;
      }
    }
  return true;
}

// Independent oracle: all partitions of the element set that are compatible
// with meet and join, enumerated by restricted growth strings. Returned in
// the same canonical key format Congruence::key uses (least block member
// per element, comma separated).
inline std::vector<std::string> brute_force_congruence_keys(const Lattice& L) {
  const int n = L.size();
  std::vector<std::string> out;
  std::vector<int> assign(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == n) {
      std::vector<Index> leader(n, -1);
      std::vector<Index> rep(n);
      for (Index e = 0; e < n; ++e) {
        if (leader[assign[e]] == -1) leader[assign[e]] = e;
        rep[e] = leader[assign[e]];
      }
      auto same = [&](Index x, Index y) { return rep[x] == rep[y]; };
      for (Index x = 0; x < n; ++x)
        for (Index z = 0; z < n; ++z) {
          Index y = rep[x];
          if (x == y) continue;
          if (!same(L.join(x, z), L.join(y, z))) return;
          if (!same(L.meet(x, z), L.meet(y, z))) return;
        }
      std::string key;
      for (Index e = 0; e < n; ++e) key += std::to_string(rep[e]) + ",";
      out.push_back(key);
      return;
    }
    for (int b = 0; b <= maxb + 1 && b < n; ++b) {
      assign[i] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  if (n == 1) {
    out.push_back("0,");
  } else {
    assign[0] = 0;
    rec(1, 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Independent oracle: all injective maps pattern -> host that are order
// embeddings carrying covers to covers, by plain enumeration.
inline std::vector<std::vector<Index>> brute_force_embeddings(const Poset& p, const Poset& h,
                                                              const std::vector<char>& must_max) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> f(p.size(), -1);
  std::vector<char> used(h.size(), 0);
  std::vector<char> hmax(h.size(), 0);
  for (Index m : h.maximal()) hmax[m] = 1;
  std::function<void(Index)> rec = [&](Index v) {
    if (v == p.size()) {
      for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y) {
          if (p.leq(x, y) != h.leq(f[x], f[y])) return;
          if (p.covers(x, y) && !h.covers(f[x], f[y])) return;
        }
      out.push_back(f);
      return;
    }
    for (Index w = 0; w < h.size(); ++w) {
      if (used[w]) continue;
      if (!must_max.empty() && must_max[v] && !hmax[w]) continue;
      f[v] = w;
      used[w] = 1;
      rec(v + 1);
      used[w] = 0;
    }
    f[v] = -1;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Deterministic pseudo-random posets for round-trip properties.
inline Poset random_poset(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  // random DAG on indices (edges i < j), then transitive-reduce
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) leq[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 3 == 0)
        for (int a = 0; a <= i; ++a)
          for (int b = j; b < n; ++b)
            if (leq[a][i] && leq[j][b]) leq[a][b] = 1;
  CoverList covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z)
        if (z != i && z != j && leq[i][z] && leq[z][j]) direct = false;
      if (direct) covers.push_back({ids[i], ids[j]});
    }
  return Poset(ids, covers);
}

} // namespace spslab::testing
