#include "spslab/lattice.hpp"

#include <algorithm>
#include <set>

namespace spslab {

Lattice Lattice::validate(const Poset& p) {
  Lattice L(p);
  const int n = p.size();
  const int words = (n + 63) / 64;

  // geq rows: bit z of geq[a] set iff z <= a
  std::vector<std::vector<uint64_t>> geq(n, std::vector<uint64_t>(words, 0));
  for (Index z = 0; z < n; ++z) {
    const auto& row = p.leq_row(z);
    for (Index a = 0; a < n; ++a)
      if ((row[a >> 6] >> (a & 63)) & 1u) geq[a][z >> 6] |= 1ull << (z & 63);
  }

  auto lowest_bit = [&](const std::vector<uint64_t>& set) -> Index {
    for (int w = 0; w < words; ++w)
      if (set[w]) return (w << 6) + __builtin_ctzll(set[w]);
    return -1;
  };
  auto highest_bit = [&](const std::vector<uint64_t>& set) -> Index {
    for (int w = words - 1; w >= 0; --w)
      if (set[w]) return (w << 6) + 63 - __builtin_clzll(set[w]);
    return -1;
  };
  auto subset_of = [&](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (int w = 0; w < words; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  };

  // elements are indexed by height, so the least/greatest element of a
  // bound set, when it exists, is the lowest/highest set bit
  L.join_.assign(n, std::vector<Index>(n, -1));
  L.meet_.assign(n, std::vector<Index>(n, -1));
  std::vector<uint64_t> inter(words);
  for (Index a = 0; a < n; ++a) {
    L.join_[a][a] = L.meet_[a][a] = a;
    for (Index b = a + 1; b < n; ++b) {
      for (int w = 0; w < words; ++w) inter[w] = p.leq_row(a)[w] & p.leq_row(b)[w];
      Index m = lowest_bit(inter);
      require(m != -1 && subset_of(inter, p.leq_row(m)), ErrorKind::NotALattice,
              "no unique supremum for (" + p.id(a) + "," + p.id(b) + ")");
      L.join_[a][b] = L.join_[b][a] = m;

      for (int w = 0; w < words; ++w) inter[w] = geq[a][w] & geq[b][w];
      m = highest_bit(inter);
      require(m != -1 && subset_of(inter, geq[m]), ErrorKind::NotALattice,
              "no unique infimum for (" + p.id(a) + "," + p.id(b) + ")");
      L.meet_[a][b] = L.meet_[b][a] = m;
    }
  }

  auto mins = p.minimal();
  auto maxs = p.maximal();
  require(mins.size() == 1, ErrorKind::NotALattice, "bottom element is not unique");
  require(maxs.size() == 1, ErrorKind::NotALattice, "top element is not unique");
  L.bottom_ = mins[0];
  L.top_ = maxs[0];
  return L;
}

IrreducibleSets Lattice::irreducibles() const {
  IrreducibleSets out;
  for (Index i = 0; i < size(); ++i) {
    if (poset_.down_covers(i).size() == 1) out.jir.push_back(i);
    if (poset_.up_covers(i).size() == 1) {
      out.mir.push_back(i);
      out.star[i] = poset_.up_covers(i)[0];
    }
  }
  return out;
}

bool Lattice::is_semimodular() const {
  for (Index x = 0; x < size(); ++x)
    for (Index y = 0; y < size(); ++y) {
      if (!covers(meet(x, y), x)) continue;
      if (!covers(y, join(x, y))) return false;
    }
  return true;
}

bool Lattice::is_slim() const {
  // no M3 sublattice: three pairwise-incomparable elements whose pairwise
  // meets coincide and pairwise joins coincide
  const int n = size();
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) {
      if (leq(x, y) || leq(y, x)) continue;
      Index m = meet(x, y), j = join(x, y);
      for (Index z = y + 1; z < n; ++z) {
        if (leq(x, z) || leq(z, x) || leq(y, z) || leq(z, y)) continue;
        if (meet(x, z) == m && meet(y, z) == m && join(x, z) == j && join(y, z) == j)
          return false;
      }
    }
  return true;
}

bool Lattice::is_distributive() const {
  const int n = size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = y; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
  return true;
}

bool Lattice::is_graded() const {
  for (auto [a, b] : poset_.cover_pairs())
    if (poset_.height(b) != poset_.height(a) + 1) return false;
  return true;
}

Lattice Lattice::sublattice(const std::vector<Index>& elems) const {
  for (Index a : elems)
    for (Index b : elems) {
      bool has_meet = std::find(elems.begin(), elems.end(), meet(a, b)) != elems.end();
      bool has_join = std::find(elems.begin(), elems.end(), join(a, b)) != elems.end();
      require(has_meet && has_join, ErrorKind::InvalidInput,
              "element set is not meet/join closed");
    }
  return Lattice::validate(poset_.subposet(elems));
}

Lattice downset_lattice(const Poset& p) {
  auto masks = p.downset_masks();
  auto name = [&](uint64_t m) {
    std::string s = "{";
    bool first = true;
    for (Index i = 0; i < p.size(); ++i)
      if ((m >> i) & 1u) {
        if (!first) s += ",";
        s += p.id(i);
        first = false;
      }
    return s + "}";
  };
  std::vector<std::string> ids;
  for (uint64_t m : masks) ids.push_back(name(m));
  CoverList covers;
  for (uint64_t m : masks)
    for (Index e = 0; e < p.size(); ++e) {
      if ((m >> e) & 1u) continue;
      uint64_t grown = m | (1ull << e);
      // down-sets cover each other exactly when they differ in one element
      if (std::binary_search(masks.begin(), masks.end(), grown,
                             [](uint64_t a, uint64_t b) {
                               int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
                               if (pa != pb) return pa < pb;
                               return a < b;
                             }))
        covers.push_back({name(m), name(grown)});
    }
  return Lattice::validate(Poset(ids, covers));
}

Poset jir_poset(const Lattice& d) {
  auto irr = d.irreducibles();
  return d.poset().subposet(irr.jir);
}

Lattice glued_sum(const Lattice& a, const Lattice& b) {
  // B is stacked on top of A; unit of A and zero of B are identified
  std::vector<std::string> ids = a.poset().ids();
  std::set<std::string> used(ids.begin(), ids.end());
  std::vector<std::string> b_names(b.size());
  for (Index i = 0; i < b.size(); ++i) {
    if (i == b.bottom()) {
      b_names[i] = a.id(a.top());
      continue;
    }
    std::string name = b.id(i);
    while (used.count(name)) name += "'";
    used.insert(name);
    b_names[i] = name;
    ids.push_back(name);
  }
  CoverList covers = a.poset().cover_pairs_ids();
  for (auto [lo, hi] : b.poset().cover_pairs()) covers.push_back({b_names[lo], b_names[hi]});
  return Lattice::validate(Poset(ids, covers));
}

Lattice product(const Lattice& a, const Lattice& b) {
  std::vector<std::string> ids;
  auto name = [&](Index x, Index y) { return a.id(x) + "|" + b.id(y); };
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < b.size(); ++y) ids.push_back(name(x, y));
  CoverList covers;
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < b.size(); ++y) {
      for (Index x2 : a.poset().up_covers(x)) covers.push_back({name(x, y), name(x2, y)});
      for (Index y2 : b.poset().up_covers(y)) covers.push_back({name(x, y), name(x, y2)});
    }
  return Lattice::validate(Poset(ids, covers));
}

} // namespace spslab
