#include "spslab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spslab {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CycleInCovers: return "CycleInCovers";
    case ErrorKind::NotTransitivelyReduced: return "NotTransitivelyReduced";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotRectangular: return "NotRectangular";
    case ErrorKind::LayoutContradiction: return "LayoutContradiction";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::IsoFailure: return "IsoFailure";
    case ErrorKind::MissingShield: return "MissingShield";
    case ErrorKind::NotACell: return "NotACell";
    case ErrorKind::NotDistributiveCell: return "NotDistributiveCell";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::GreyCellNotFound: return "GreyCellNotFound";
    case ErrorKind::ReplayMismatch: return "ReplayMismatch";
    case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Poset::Poset(std::vector<std::string> ids, const CoverList& covers) {
  {
    std::set<std::string> seen;
    for (const auto& id : ids)
      require(seen.insert(id).second, ErrorKind::InvalidInput, "duplicate element id '" + id + "'");
  }
  n_ = static_cast<int>(ids.size());

  std::map<std::string, Index> tmp_index;
  for (Index i = 0; i < n_; ++i) tmp_index[ids[i]] = i;

  std::vector<std::vector<Index>> up(n_), down(n_);
  std::set<std::pair<Index, Index>> cover_set;
  for (const auto& [lo, hi] : covers) {
    auto it_lo = tmp_index.find(lo), it_hi = tmp_index.find(hi);
    require(it_lo != tmp_index.end(), ErrorKind::InvalidInput, "unknown element '" + lo + "' in covers");
    require(it_hi != tmp_index.end(), ErrorKind::InvalidInput, "unknown element '" + hi + "' in covers");
    require(lo != hi, ErrorKind::InvalidInput, "reflexive cover at '" + lo + "'");
    if (cover_set.insert({it_lo->second, it_hi->second}).second) {
      up[it_lo->second].push_back(it_hi->second);
      down[it_hi->second].push_back(it_lo->second);
    }
  }

  // topological order; also computes heights (longest chain from a minimal element)
  std::vector<int> indeg(n_, 0), hgt(n_, 0);
  for (Index i = 0; i < n_; ++i) indeg[i] = static_cast<int>(down[i].size());
  std::vector<Index> order;
  order.reserve(n_);
  for (Index i = 0; i < n_; ++i)
    if (indeg[i] == 0) order.push_back(i);
  for (size_t head = 0; head < order.size(); ++head) {
    Index v = order[head];
    for (Index w : up[v]) {
      hgt[w] = std::max(hgt[w], hgt[v] + 1);
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  require(static_cast<int>(order.size()) == n_, ErrorKind::CycleInCovers,
          "cover relation has a directed cycle");

  // canonical element order: (height, id)
  std::vector<Index> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](Index a, Index b) {
    if (hgt[a] != hgt[b]) return hgt[a] < hgt[b];
    return ids[a] < ids[b];
  });
  std::vector<Index> pos(n_);
  for (Index i = 0; i < n_; ++i) pos[perm[i]] = i;

  ids_.resize(n_);
  height_.resize(n_);
  up_.assign(n_, {});
  down_.assign(n_, {});
  for (Index i = 0; i < n_; ++i) {
    ids_[i] = ids[perm[i]];
    height_[i] = hgt[perm[i]];
    for (Index w : up[perm[i]]) up_[i].push_back(pos[w]);
    for (Index w : down[perm[i]]) down_[i].push_back(pos[w]);
    std::sort(up_[i].begin(), up_[i].end());
    std::sort(down_[i].begin(), down_[i].end());
    index_[ids_[i]] = i;
  }

  // reflexive-transitive closure, by decreasing height
  const int words = (n_ + 63) / 64;
  leq_.assign(n_, std::vector<uint64_t>(words, 0));
  std::vector<Index> by_height(n_);
  std::iota(by_height.begin(), by_height.end(), 0);
  std::sort(by_height.begin(), by_height.end(),
            [&](Index a, Index b) { return height_[a] > height_[b]; });
  for (Index v : by_height) {
    leq_[v][v >> 6] |= 1ull << (v & 63);
    for (Index w : up_[v])
      for (int k = 0; k < words; ++k) leq_[v][k] |= leq_[w][k];
  }

  // covers must be transitively reduced
  for (Index a = 0; a < n_; ++a)
    for (Index b : up_[a])
      for (Index z : up_[a])
        require(z == b || !leq(z, b), ErrorKind::NotTransitivelyReduced,
                "cover (" + ids_[a] + "," + ids_[b] + ") is implied by (" + ids_[a] + "," +
                    ids_[z] + ")");
}

Index Poset::index(const std::string& id) const {
  auto it = index_.find(id);
  require(it != index_.end(), ErrorKind::InvalidInput, "unknown element '" + id + "'");
  return it->second;
}

bool Poset::covers(Index lo, Index hi) const {
  return std::binary_search(up_[lo].begin(), up_[lo].end(), hi);
}

int Poset::max_height() const {
  int h = 0;
  for (Index i = 0; i < n_; ++i) h = std::max(h, height_[i]);
  return h;
}

std::vector<std::pair<Index, Index>> Poset::cover_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < n_; ++a)
    for (Index b : up_[a]) out.push_back({a, b});
  return out;
}

CoverList Poset::cover_pairs_ids() const {
  CoverList out;
  for (auto [a, b] : cover_pairs()) out.push_back({ids_[a], ids_[b]});
  return out;
}

std::vector<Index> Poset::maximal() const {
  std::vector<Index> out;
  for (Index i = 0; i < n_; ++i)
    if (up_[i].empty()) out.push_back(i);
  return out;
}

std::vector<Index> Poset::minimal() const {
  std::vector<Index> out;
  for (Index i = 0; i < n_; ++i)
    if (down_[i].empty()) out.push_back(i);
  return out;
}

std::vector<Index> Poset::up_set(Index i) const {
  std::vector<Index> out;
  for (Index j = 0; j < n_; ++j)
    if (leq(i, j)) out.push_back(j);
  return out;
}

std::vector<Index> Poset::down_set(Index i) const {
  std::vector<Index> out;
  for (Index j = 0; j < n_; ++j)
    if (leq(j, i)) out.push_back(j);
  return out;
}

bool Poset::is_chain(const std::vector<Index>& subset) const {
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = i + 1; j < subset.size(); ++j)
      if (!leq(subset[i], subset[j]) && !leq(subset[j], subset[i])) return false;
  return true;
}

bool Poset::has_three_antichain() const {
  for (Index a = 0; a < n_; ++a)
    for (Index b = a + 1; b < n_; ++b) {
      if (leq(a, b) || leq(b, a)) continue;
      for (Index c = b + 1; c < n_; ++c) {
        if (leq(a, c) || leq(c, a) || leq(b, c) || leq(c, b)) continue;
        return true;
      }
    }
  return false;
}

Poset Poset::subposet(const std::vector<Index>& elems) const {
  std::vector<std::string> ids;
  ids.reserve(elems.size());
  for (Index e : elems) ids.push_back(ids_[e]);
  CoverList covers;
  // covers inside the subposet: a < b with nothing of the subposet strictly between
  for (Index a : elems)
    for (Index b : elems) {
      if (!lt(a, b)) continue;
      bool direct = true;
      for (Index z : elems)
        if (z != a && z != b && lt(a, z) && lt(z, b)) {
          direct = false;
          break;
        }
      if (direct) covers.push_back({ids_[a], ids_[b]});
    }
  return Poset(ids, covers);
}

std::vector<uint64_t> Poset::downset_masks() const {
  require(n_ <= 64, ErrorKind::InvalidInput, "downset_masks limited to 64 elements");
  // build along the canonical (height-sorted, hence linear-extension) order
  std::vector<uint64_t> sets = {0};
  for (Index e = 0; e < n_; ++e) {
    uint64_t need = 0;
    for (Index d : down_[e]) need |= 1ull << d;
    std::vector<uint64_t> grown;
    for (uint64_t s : sets)
      if ((s & need) == need) grown.push_back(s | (1ull << e));
    sets.insert(sets.end(), grown.begin(), grown.end());
  }
  std::sort(sets.begin(), sets.end(), [](uint64_t a, uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return sets;
}

long long Poset::downset_count() const {
  if (n_ <= 64) return static_cast<long long>(downset_masks().size());
  // word-based variant of the same incremental construction
  const int words = (n_ + 63) / 64;
  using Set = std::vector<uint64_t>;
  std::vector<Set> sets = {Set(words, 0)};
  for (Index e = 0; e < n_; ++e) {
    size_t old = sets.size();
    for (size_t s = 0; s < old; ++s) {
      bool ok = true;
      for (Index d : down_[e])
        if (!((sets[s][d >> 6] >> (d & 63)) & 1u)) {
          ok = false;
          break;
        }
      if (ok) {
        Set grown = sets[s];
        grown[e >> 6] |= 1ull << (e & 63);
        sets.push_back(std::move(grown));
      }
    }
  }
  return static_cast<long long>(sets.size());
}

namespace {
std::pair<std::vector<std::string>, CoverList> disjoint_parts(const Poset& a, const Poset& b,
                                                              std::vector<std::string>& b_ids) {
  std::vector<std::string> ids = a.ids();
  std::set<std::string> used(ids.begin(), ids.end());
  b_ids.clear();
  for (const auto& id : b.ids()) {
    std::string name = id;
    while (used.count(name)) name += "'";
    used.insert(name);
    b_ids.push_back(name);
    ids.push_back(name);
  }
  CoverList covers = a.cover_pairs_ids();
  for (auto [lo, hi] : b.cover_pairs()) covers.push_back({b_ids[lo], b_ids[hi]});
  return {ids, covers};
}
} // namespace

Poset cardinal_sum(const Poset& a, const Poset& b) {
  std::vector<std::string> b_ids;
  auto [ids, covers] = disjoint_parts(a, b, b_ids);
  return Poset(ids, covers);
}

Poset ordinal_sum(const Poset& a, const Poset& b) {
  std::vector<std::string> b_ids;
  auto [ids, covers] = disjoint_parts(a, b, b_ids);
  for (Index m : a.maximal())
    for (Index v : b.minimal()) covers.push_back({a.id(m), b_ids[v]});
  return Poset(ids, covers);
}

Poset antichain(const std::vector<std::string>& ids) { return Poset(ids, {}); }

Poset chain(const std::vector<std::string>& ids) {
  CoverList covers;
  for (size_t i = 0; i + 1 < ids.size(); ++i) covers.push_back({ids[i], ids[i + 1]});
  return Poset(ids, covers);
}

} // namespace spslab
