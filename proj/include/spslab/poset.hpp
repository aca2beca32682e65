#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spslab/error.hpp"

namespace spslab {

using Index = int;
using CoverList = std::vector<std::pair<std::string, std::string>>;

/// Finite poset given by its Hasse diagram (cover relation).
///
/// Construction validates that the covers are irreflexive, acyclic and
/// transitively reduced. Elements are reindexed canonically by
/// (height, identifier) so that all downstream output is deterministic.
class Poset {
 public:
  Poset(std::vector<std::string> ids, const CoverList& covers);

  int size() const { return n_; }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(Index i) const { return ids_[i]; }
  bool has(const std::string& id) const { return index_.count(id) != 0; }
  Index index(const std::string& id) const;

  bool leq(Index a, Index b) const { return (leq_[a][b >> 6] >> (b & 63)) & 1u; }
  bool lt(Index a, Index b) const { return a != b && leq(a, b); }
  const std::vector<uint64_t>& leq_row(Index a) const { return leq_[a]; } // bit b: a <= b
  bool covers(Index lo, Index hi) const; // lo is a lower cover of hi
  int height(Index i) const { return height_[i]; }
  int max_height() const;

  const std::vector<Index>& up_covers(Index i) const { return up_[i]; }
  const std::vector<Index>& down_covers(Index i) const { return down_[i]; }
  std::vector<std::pair<Index, Index>> cover_pairs() const;
  CoverList cover_pairs_ids() const;

  std::vector<Index> maximal() const;
  std::vector<Index> minimal() const;
  std::vector<Index> up_set(Index i) const;   // principal filter
  std::vector<Index> down_set(Index i) const; // principal ideal

  bool is_chain(const std::vector<Index>& subset) const;
  bool has_three_antichain() const;

  /// Induced subposet on the given elements; covers are recomputed inside
  /// the subposet (transitive reduction of the restricted order).
  Poset subposet(const std::vector<Index>& elems) const;

  /// All down-sets as element bitmasks (poset must have <= 64 elements when
  /// masks are requested). Deterministic order: by popcount, then mask value.
  std::vector<uint64_t> downset_masks() const;
  long long downset_count() const;

  bool operator==(const Poset& o) const {
    return ids_ == o.ids_ && cover_pairs() == o.cover_pairs();
  }

 private:
  int n_ = 0;
  std::vector<std::string> ids_;
  std::map<std::string, Index> index_;
  std::vector<std::vector<Index>> up_, down_;
  std::vector<std::vector<uint64_t>> leq_; // leq_[a] bit b set iff a <= b
  std::vector<int> height_;
};

Poset ordinal_sum(const Poset& a, const Poset& b);
Poset cardinal_sum(const Poset& a, const Poset& b);
Poset antichain(const std::vector<std::string>& ids);
Poset chain(const std::vector<std::string>& ids);

} // namespace spslab
