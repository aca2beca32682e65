#include "spslab/iso.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace spslab {

namespace {

// iterated color refinement on the cover digraph
std::vector<long long> refine_colors(const Poset& p) {
  const int n = p.size();
  std::vector<long long> color(n);
  for (Index i = 0; i < n; ++i)
    color[i] = ((long long)p.height(i) << 20) ^ ((long long)p.up_covers(i).size() << 10) ^
               (long long)p.down_covers(i).size();
  for (int round = 0; round < n; ++round) {
    std::vector<std::string> sig(n);
    for (Index i = 0; i < n; ++i) {
      std::vector<long long> up, down;
      for (Index j : p.up_covers(i)) up.push_back(color[j]);
      for (Index j : p.down_covers(i)) down.push_back(color[j]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      std::ostringstream os;
      os << color[i] << "|";
      for (auto c : up) os << c << ",";
      os << "|";
      for (auto c : down) os << c << ",";
      sig[i] = os.str();
    }
    std::vector<std::string> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<long long> next(n);
    for (Index i = 0; i < n; ++i)
      next[i] = std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin();
    if (next == color) break;
    color = next;
  }
  return color;
}

bool extend(const Poset& p, const Poset& q, const std::vector<long long>& cp,
            const std::vector<long long>& cq, std::vector<Index>& map,
            std::vector<char>& used, Index v) {
  const int n = p.size();
  if (v == n) return true;
  for (Index w = 0; w < n; ++w) {
    if (used[w] || cq[w] != cp[v]) continue;
    bool ok = true;
    for (Index u = 0; u < v && ok; ++u) {
      if (p.leq(u, v) != q.leq(map[u], w)) ok = false;
      if (ok && p.leq(v, u) != q.leq(w, map[u])) ok = false;
      if (ok && p.covers(u, v) != q.covers(map[u], w)) ok = false;
      if (ok && p.covers(v, u) != q.covers(w, map[u])) ok = false;
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (extend(p, q, cp, cq, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

} // namespace

std::string iso_invariant_key(const Poset& p) {
  auto colors = refine_colors(p);
  std::vector<long long> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << p.size() << ":" << p.cover_pairs().size() << ":";
  for (auto c : sorted) os << c << ",";
  return os.str();
}

std::optional<std::vector<Index>> poset_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.cover_pairs().size() != q.cover_pairs().size()) return std::nullopt;
  auto cp = refine_colors(p), cq = refine_colors(q);
  {
    auto sp = cp, sq = cq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }
  std::vector<Index> map(p.size(), -1);
  std::vector<char> used(p.size(), 0);
  if (extend(p, q, cp, cq, map, used, 0)) return map;
  return std::nullopt;
}

std::optional<std::vector<Index>> lattice_isomorphism(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.poset().cover_pairs().size() != b.poset().cover_pairs().size()) return std::nullopt;

  // distributive lattices are determined by their jir posets; the element
  // mapping is recovered by mapping joins of join-irreducibles
  if (a.size() > 24 && a.is_distributive() && b.is_distributive()) {
    Poset ja = jir_poset(a), jb = jir_poset(b);
    auto jmap = poset_isomorphism(ja, jb);
    if (!jmap) return std::nullopt;
    std::vector<Index> map(a.size(), -1);
    for (Index x = 0; x < a.size(); ++x) {
      Index img = b.bottom();
      for (Index k = 0; k < ja.size(); ++k) {
        Index j_in_a = a.index(ja.id(k));
        if (a.leq(j_in_a, x)) img = b.join(img, b.index(jb.id((*jmap)[k])));
      }
      map[x] = img;
    }
    // soundness check before returning
    std::vector<char> seen(b.size(), 0);
    for (Index x = 0; x < a.size(); ++x) {
      if (seen[map[x]]) return std::nullopt;
      seen[map[x]] = 1;
    }
    for (Index x = 0; x < a.size(); ++x)
      for (Index y = 0; y < a.size(); ++y)
        if (a.leq(x, y) != b.leq(map[x], map[y])) return std::nullopt;
    return map;
  }

  return poset_isomorphism(a.poset(), b.poset());
}

} // namespace spslab
