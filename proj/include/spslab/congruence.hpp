#pragma once

#include "spslab/lattice.hpp"

namespace spslab {

/// Lattice congruence represented as a partition of the element set.
/// Blocks are kept in canonical form: block_of[e] is the smallest element
/// index in e's block, so equal partitions compare equal directly.
class Congruence {
 public:
  static Congruence identity(int n);
  static Congruence all(int n);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return nblocks_; }
  Index rep(Index e) const { return block_of_[e]; }
  bool same(Index a, Index b) const { return block_of_[a] == block_of_[b]; }

  /// Refinement order: every block of *this lies inside a block of other.
  bool leq(const Congruence& other) const;

  Congruence joined(const Congruence& other) const; // transitive closure of union
  std::vector<std::vector<Index>> blocks() const;
  std::string key() const;

  bool operator==(const Congruence& o) const { return block_of_ == o.block_of_; }
  bool operator<(const Congruence& o) const { return block_of_ < o.block_of_; }

  friend Congruence principal_congruence(const Lattice&, Index, Index);

 private:
  explicit Congruence(int n) : block_of_(n), nblocks_(0) {}
  void canonicalize(std::vector<Index>& uf);
  std::vector<Index> block_of_;
  int nblocks_;
};

/// Smallest congruence collapsing a and b (fixed-point closure under
/// meet/join compatibility and transitivity).
Congruence principal_congruence(const Lattice& L, Index a, Index b);

/// Whether a partition (given as union-find style representative map)
/// is compatible with meets and joins.
bool is_congruence(const Lattice& L, const Congruence& c);

struct EdgeCon {
  std::pair<Index, Index> edge; // prime interval (a, b), a covered by b
  Congruence con;
};
std::vector<EdgeCon> edge_congruences(const Lattice& L);

struct JirCongruences {
  std::vector<Congruence> cons;                  // join-irreducible congruences
  std::vector<std::pair<Index, Index>> edges;    // canonical generating edge of each
  Poset poset;                                   // covers inside Jir(Con L)
};
JirCongruences jir_congruences(const Lattice& L);

/// The ordered set of join-irreducible congruences, with covering relations
/// computed inside that ordered set (not inside Con L).
Poset jir_con_poset(const Lattice& L);

/// |Con L| without materializing the congruence lattice.
long long con_size(const Lattice& L);

struct ConLattice {
  Lattice lattice;                         // congruences ordered by refinement
  std::vector<Congruence> congruences;     // congruences[i] is lattice element i
  std::map<std::pair<Index, Index>, Index> principal; // edge of L -> element of Con L
};

/// All congruences of L, materialized as a lattice. Asserts distributivity.
ConLattice con_lattice(const Lattice& L);

} // namespace spslab
